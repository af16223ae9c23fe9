#include <algorithm>

#include "bier/error.hpp"
#include "bier/multicomplex.hpp"

namespace bier {

Minimalized minimalize(std::vector<Exponent> gens)
{
    std::stable_sort(gens.begin(), gens.end(), monomial_less);
    Minimalized out;
    for (auto& g : gens) {
        const bool covered = std::any_of(out.gens.begin(), out.gens.end(),
                                         [&](const Exponent& h) { return divides(h, g); });
        (covered ? out.redundant : out.gens).push_back(std::move(g));
    }
    return out;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Exponent> gens) : nvars_(nvars)
{
    for (const auto& g : gens) {
        if (g.size() != nvars) throw InvalidInput("generator length does not match variable count");
        for (int e : g)
            if (e < 0) throw InvalidInput("negative exponent in generator");
    }
    gens_ = minimalize(std::move(gens)).gens;
}

bool MonomialIdeal::is_unit() const
{
    return gens_.size() == 1 && degree(gens_.front()) == 0;
}

bool MonomialIdeal::contains(const Exponent& m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return divides(g, m); });
}

bool MonomialIdeal::is_squarefree() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Exponent& g) {
        return std::all_of(g.begin(), g.end(), [](int e) { return e <= 1; });
    });
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.nvars() != b.nvars()) throw InvalidInput("ideals live in different polynomial rings");
}

Exponent lcm(const Exponent& a, const Exponent& b)
{
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

}  // namespace

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_ring(a, b);
    std::vector<Exponent> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b)
{
    require_same_ring(a, b);
    std::vector<Exponent> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& u : a.gens())
        for (const auto& v : b.gens()) gens.push_back(lcm(u, v));
    return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j)
{
    require_same_ring(i, j);
    if (j.is_zero()) throw Undefined("colon by the zero ideal is undefined");
    MonomialIdeal result;
    bool first = true;
    for (const auto& g : j.gens()) {
        std::vector<Exponent> quotient;
        quotient.reserve(i.gens().size());
        for (const auto& u : i.gens()) {
            Exponent q(u.size());
            for (std::size_t k = 0; k < u.size(); ++k) q[k] = std::max(u[k] - g[k], 0);
            quotient.push_back(std::move(q));
        }
        MonomialIdeal part(i.nvars(), std::move(quotient));
        result = first ? part : intersect(result, part);
        first = false;
    }
    return result;
}

MonomialIdeal complement_ideal(const Multicomplex& m, Capping mode)
{
    std::vector<Exponent> gens;
    for (const auto& a : m.cap().monomials())
        if (!m.contains(a)) gens.push_back(a);
    MonomialIdeal capped(m.nvars(), std::move(gens));
    if (mode == Capping::capped) return capped;
    return capped + cap_power_ideal(m.cap());
}

MonomialIdeal cap_power_ideal(const Cap& cap)
{
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < cap.size(); ++i) {
        Exponent g(cap.size(), 0);
        g[i] = cap[i] + 1;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(cap.size(), std::move(gens));
}

bool is_c_ideal(const MonomialIdeal& ideal, const Cap& cap)
{
    if (ideal.nvars() != cap.size()) return false;
    return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                       [&](const Exponent& g) { return cap.admits(g); });
}

MonomialIdeal ideal_alexander_dual(const MonomialIdeal& ideal, const Cap& cap)
{
    if (!is_c_ideal(ideal, cap)) throw InvalidInput("Alexander dual needs a c-ideal");
    if (ideal.is_zero()) throw Undefined("Alexander dual of the zero ideal is not supported");
    if (ideal.is_unit()) throw Undefined("Alexander dual of the unit ideal is not supported");
    std::vector<Exponent> gens;
    for (const auto& a : cap.monomials()) {
        if (ideal.contains(a)) continue;
        Exponent d(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) d[k] = cap[k] - a[k];
        gens.push_back(std::move(d));
    }
    return MonomialIdeal(cap.size(), std::move(gens));
}

}  // namespace bier
