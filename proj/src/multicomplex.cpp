#include "bier/multicomplex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bier/error.hpp"

namespace bier {

namespace {

std::string render_tuple(const Exponent& a)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < a.size(); ++i)
        out << (i ? "," : "") << a[i];
    out << ')';
    return out.str();
}

}  // namespace

bool divides(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

int degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

Exponent diamond(const Exponent& a, std::size_t var, int level)
{
    Exponent out = a;
    out.at(var) = level;
    return out;
}

bool monomial_less(const Exponent& a, const Exponent& b)
{
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;
}

// ---------------------------------------------------------------------------

Cap::Cap(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_)
        if (e < 0) throw InvalidInput("cap entries must be non-negative");
}

int Cap::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

Cap Cap::bar() const
{
    std::vector<int> out = entries_;
    for (int& e : out) ++e;
    return Cap(std::move(out));
}

bool Cap::admits(const Exponent& a) const
{
    if (a.size() != entries_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] > entries_[i]) return false;
    return true;
}

std::size_t Cap::monomial_count() const
{
    std::size_t n = 1;
    for (int e : entries_) n *= static_cast<std::size_t>(e + 1);
    return n;
}

std::size_t Cap::index_of(const Exponent& a) const
{
    std::size_t idx = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        idx = idx * static_cast<std::size_t>(entries_[i] + 1) + static_cast<std::size_t>(a[i]);
    return idx;
}

Exponent Cap::monomial_at(std::size_t index) const
{
    Exponent a(entries_.size());
    for (std::size_t k = entries_.size(); k-- > 0;) {
        const auto radix = static_cast<std::size_t>(entries_[k] + 1);
        a[k] = static_cast<int>(index % radix);
        index /= radix;
    }
    return a;
}

std::vector<Exponent> Cap::monomials() const
{
    std::vector<Exponent> out;
    const std::size_t n = monomial_count();
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(monomial_at(k));
    return out;
}

// ---------------------------------------------------------------------------

Multicomplex::Multicomplex(Cap cap, std::vector<char> mask) : cap_(std::move(cap)), mask_(std::move(mask))
{
    for (std::size_t k = 0; k < mask_.size(); ++k)
        if (mask_[k]) members_.push_back(cap_.monomial_at(k));
}

Multicomplex Multicomplex::from_members(Cap cap, std::vector<Exponent> members)
{
    std::vector<char> mask(cap.monomial_count(), 0);
    for (const auto& a : members) {
        if (!cap.admits(a))
            throw InvalidInput("member " + render_tuple(a) + " is not a c-monomial");
        mask[cap.index_of(a)] = 1;
    }
    if (!mask[0]) throw InvalidInput("multicomplex must contain the monomial 1");
    for (std::size_t k = 0; k < mask.size(); ++k) {
        if (!mask[k]) continue;
        Exponent a = cap.monomial_at(k);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            --a[i];
            if (!mask[cap.index_of(a)])
                throw InvalidInput("member list is not divisor-closed: " + render_tuple(a) +
                                   " is missing");
            ++a[i];
        }
    }
    return Multicomplex(std::move(cap), std::move(mask));
}

bool Multicomplex::contains(const Exponent& a) const
{
    return cap_.admits(a) && mask_[cap_.index_of(a)];
}

Multicomplex closure_from_generators(const Cap& cap, const std::vector<Exponent>& gens)
{
    for (const auto& g : gens)
        if (!cap.admits(g))
            throw InvalidInput("generator " + render_tuple(g) + " exceeds the cap");
    std::vector<Exponent> members;
    for (const auto& a : cap.monomials())
        if (degree(a) == 0 ||
            std::any_of(gens.begin(), gens.end(), [&](const Exponent& g) { return divides(a, g); }))
            members.push_back(a);
    return Multicomplex::from_members(cap, std::move(members));
}

std::vector<std::int64_t> f_vector(const Multicomplex& m)
{
    std::vector<std::int64_t> f(static_cast<std::size_t>(m.cap().total()) + 1, 0);
    for (const auto& a : m.members()) ++f[static_cast<std::size_t>(degree(a))];
    return f;
}

Multicomplex alexander_dual(const Multicomplex& m)
{
    if (m.is_full()) throw Undefined("dual of full multicomplex undefined");
    const Cap& c = m.cap();
    std::vector<Exponent> members;
    for (const auto& a : c.monomials()) {
        if (m.contains(a)) continue;
        Exponent d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) d[i] = c[i] - a[i];
        members.push_back(std::move(d));
    }
    return Multicomplex::from_members(c, std::move(members));
}

Exponent lcm_of(const Multicomplex& m)
{
    Exponent out(m.nvars(), 0);
    for (const auto& a : m.members())
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(out[i], a[i]);
    return out;
}

Multicomplex restrict_to_cap(const Multicomplex& m, const Cap& smaller)
{
    if (smaller.size() != m.nvars()) throw InvalidInput("cap length mismatch");
    std::vector<Exponent> members;
    for (const auto& a : m.members())
        if (smaller.admits(a)) members.push_back(a);
    return Multicomplex::from_members(smaller, std::move(members));
}

void for_each_multicomplex(const Cap& cap, const std::function<void(const Multicomplex&)>& visit)
{
    const std::size_t total = cap.monomial_count();
    const auto monos = cap.monomials();
    std::vector<char> mask(total, 0);
    mask[0] = 1;

    // Monomials are visited in lex order, so every lower cover of position k
    // has already been decided when k is reached.
    std::function<void(std::size_t)> recurse = [&](std::size_t k) {
        if (k == total) {
            std::vector<Exponent> members;
            for (std::size_t t = 0; t < total; ++t)
                if (mask[t]) members.push_back(monos[t]);
            visit(Multicomplex::from_members(cap, std::move(members)));
            return;
        }
        bool allowed = true;
        Exponent a = monos[k];
        for (std::size_t i = 0; i < a.size() && allowed; ++i) {
            if (a[i] == 0) continue;
            --a[i];
            allowed = mask[cap.index_of(a)] != 0;
            ++a[i];
        }
        mask[k] = 0;
        recurse(k + 1);
        if (allowed) {
            mask[k] = 1;
            recurse(k + 1);
            mask[k] = 0;
        }
    };
    recurse(1);
}

Multicomplex random_multicomplex(const Cap& cap, std::mt19937_64& rng, double density)
{
    std::bernoulli_distribution pick(density);
    std::vector<Exponent> gens;
    for (const auto& a : cap.monomials())
        if (pick(rng)) gens.push_back(a);
    return closure_from_generators(cap, gens);
}

}  // namespace bier
