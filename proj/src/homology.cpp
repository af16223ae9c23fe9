#include "bier/homology.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "bier/bier.hpp"
#include "bier/error.hpp"
#include "bier/polarization.hpp"

namespace bier {

using Mask = MaskedComplex::Mask;

Field Field::modulo(std::uint32_t p)
{
    if (p < 2) throw InvalidInput("field characteristic must be a prime");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
    return {Kind::prime, p};
}

std::string Field::str() const
{
    return kind == Kind::rational ? "QQ" : "ZZ/" + std::to_string(p);
}

std::int64_t HomologyProfile::at(int k) const
{
    const auto idx = static_cast<std::size_t>(k + 1);
    return k >= -1 && idx < dims.size() ? dims[idx] : 0;
}

// ---------------------------------------------------------------------------
// Rank computations

namespace {

// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor
// of the input, so the division by the previous pivot is exact.
template <class T, class Ops>
std::size_t bareiss_rank(std::vector<T>& a, std::size_t rows, std::size_t cols, Ops ops)
{
    std::size_t rank = 0;
    T prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
        const T pv = a[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const T lead = a[r * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j)
                a[r * cols + j] = ops(pv, a[r * cols + j], lead, a[rank * cols + j], prev);
            a[r * cols + c] = 0;
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

struct OverflowError {};

std::size_t rational_rank(const std::vector<std::int64_t>& entries, std::size_t rows, std::size_t cols)
{
    try {
        std::vector<std::int64_t> a = entries;
        return bareiss_rank(a, rows, cols,
                            [](std::int64_t pv, std::int64_t x, std::int64_t lead, std::int64_t y, std::int64_t prev) {
                                std::int64_t p1, p2, diff;
                                if (__builtin_mul_overflow(pv, x, &p1) || __builtin_mul_overflow(lead, y, &p2) ||
                                    __builtin_sub_overflow(p1, p2, &diff))
                                    throw OverflowError{};
                                return diff / prev;
                            });
    }
    catch (const OverflowError&) {
        using Big = boost::multiprecision::cpp_int;
        std::vector<Big> a(entries.begin(), entries.end());
        return bareiss_rank(a, rows, cols, [](const Big& pv, const Big& x, const Big& lead, const Big& y, const Big& prev) {
            return Big((pv * x - lead * y) / prev);
        });
    }
}

std::size_t prime_rank(const std::vector<std::int64_t>& entries, std::size_t rows, std::size_t cols, std::uint32_t p)
{
    const auto mod = static_cast<std::int64_t>(p);
    std::vector<std::int64_t> a(entries.size());
    std::transform(entries.begin(), entries.end(), a.begin(), [&](std::int64_t v) { return ((v % mod) + mod) % mod; });
    auto inverse = [&](std::int64_t v) {
        std::int64_t result = 1, base = v, e = mod - 2;
        while (e) {
            if (e & 1) result = result * base % mod;
            base = base * base % mod;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
        const std::int64_t inv = inverse(a[rank * cols + c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::int64_t factor = a[r * cols + c] * inv % mod;
            if (!factor) continue;
            for (std::size_t j = c; j < cols; ++j)
                a[r * cols + j] = ((a[r * cols + j] - factor * a[rank * cols + j]) % mod + mod) % mod;
        }
        ++rank;
    }
    return rank;
}

// Reduced homology of the complex whose faces are `faces` (ordered by
// cardinality, then value; the empty face included).
HomologyProfile homology_of_faces(const std::vector<Mask>& faces, Field field)
{
    HomologyProfile out;
    if (faces.empty()) return out;
    const int top = std::popcount(faces.back());
    std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(top) + 1);
    for (Mask f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    // ranks[s] = rank of the boundary map from faces of size s to size s-1.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (std::size_t s = 1; s <= static_cast<std::size_t>(top); ++s) {
        const auto& cols_faces = by_size[s];
        const auto& rows_faces = by_size[s - 1];
        if (cols_faces.empty() || rows_faces.empty()) continue;
        std::vector<std::int64_t> m(rows_faces.size() * cols_faces.size(), 0);
        for (std::size_t c = 0; c < cols_faces.size(); ++c) {
            int t = 0;
            for (Mask rest = cols_faces[c]; rest; rest &= rest - 1, ++t) {
                const Mask ridge = cols_faces[c] & ~(rest & -rest);
                const auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), ridge);
                const auto r = static_cast<std::size_t>(it - rows_faces.begin());
                m[r * cols_faces.size() + c] = (t % 2 == 0) ? 1 : -1;
            }
        }
        ranks[s] = matrix_rank(std::move(m), rows_faces.size(), cols_faces.size(), field);
    }
    out.dims.resize(static_cast<std::size_t>(top) + 1);
    for (std::size_t s = 0; s <= static_cast<std::size_t>(top); ++s)
        out.dims[s] = static_cast<std::int64_t>(by_size[s].size()) - static_cast<std::int64_t>(ranks[s]) -
                      static_cast<std::int64_t>(ranks[s + 1]);
    return out;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::int64_t> entries, std::size_t rows, std::size_t cols, Field field)
{
    if (rows == 0 || cols == 0) return 0;
    return field.kind == Field::Kind::rational ? rational_rank(entries, rows, cols)
                                               : prime_rank(entries, rows, cols, field.p);
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field)
{
    if (complex.is_void()) return {};
    return homology_of_faces(MaskedComplex(complex).faces(), field);
}

// ---------------------------------------------------------------------------
// Betti tables

std::int64_t BettiTable::at(int i, int j) const
{
    const auto it = graded.find({i, j});
    return it == graded.end() ? 0 : it->second;
}

std::int64_t BettiTable::at(int i, const Exponent& degree) const
{
    const auto it = multigraded.find({i, degree});
    return it == multigraded.end() ? 0 : it->second;
}

std::vector<std::int64_t> BettiTable::totals() const
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(projective_dimension() + 1), 0);
    for (const auto& [key, value] : graded) out[static_cast<std::size_t>(key.first)] += value;
    return out;
}

int BettiTable::projective_dimension() const
{
    int p = -1;
    for (const auto& [key, value] : graded)
        if (value) p = std::max(p, key.first);
    return p;
}

BettiTable hochster_betti(const SimplicialComplex& complex, std::vector<VertexLabel> ground, Field field,
                          std::size_t vertex_limit)
{
    if (ground.empty()) ground = complex.vertices();
    const MaskedComplex masked(complex, std::move(ground));
    const std::size_t n = masked.ground().size();
    if (n > vertex_limit)
        throw SizeLimit("Hochster formula refused: " + std::to_string(n) + " vertices exceed the limit of " +
                        std::to_string(vertex_limit));
    BettiTable table;
    table.nvars = n;
    table.field = field.str();
    if (complex.is_void()) return table;

    const auto faces = masked.faces();
    std::vector<Mask> restricted;
    for (Mask sigma = 0; sigma < (Mask{1} << n); ++sigma) {
        // A non-empty face restricts to a simplex, which is acyclic.
        if (sigma && masked.contains(sigma)) continue;
        restricted.clear();
        for (Mask f : faces)
            if ((f & ~sigma) == 0) restricted.push_back(f);
        const auto profile = homology_of_faces(restricted, field);
        const int size = std::popcount(sigma);
        for (std::size_t idx = 0; idx < profile.dims.size(); ++idx) {
            const auto dim = profile.dims[idx];
            if (!dim) continue;
            const int k = static_cast<int>(idx) - 1;
            const int i = size - k - 1;
            Exponent degree(n, 0);
            for (std::size_t p = 0; p < n; ++p) degree[p] = static_cast<int>(sigma >> p & 1);
            table.multigraded[{i, std::move(degree)}] += dim;
            table.graded[{i, size}] += dim;
        }
    }
    return table;
}

BettiTable betti_table(const MonomialIdeal& ideal, Field field, std::size_t vertex_limit)
{
    std::vector<int> cap_entries(ideal.nvars(), 0);
    for (const auto& g : ideal.gens())
        for (std::size_t i = 0; i < g.size(); ++i) cap_entries[i] = std::max(cap_entries[i], g[i] - 1);
    const Cap cap(cap_entries);
    const auto polarized = polarize_ideal(ideal, cap, Polarization::prefix);
    const auto complex = complex_from_ideal(polarized);
    const auto& vars = polarized.vars();
    if (vars.size() > vertex_limit)
        throw SizeLimit("polarization has " + std::to_string(vars.size()) + " variables, above the limit of " +
                        std::to_string(vertex_limit));
    const auto square = complex.is_void() ? BettiTable{vars.size(), field.str(), {{{0, 0}, 0}}, {}}
                                          : hochster_betti(complex, vars, field, vertex_limit);

    BettiTable table;
    table.nvars = ideal.nvars();
    table.field = square.field;
    for (const auto& [key, value] : square.graded)
        if (value) table.graded[key] += value;
    for (const auto& [key, value] : square.multigraded) {
        Exponent degree(ideal.nvars(), 0);
        for (std::size_t p = 0; p < vars.size(); ++p)
            degree[static_cast<std::size_t>(vars[p].index - 1)] += key.second[p];
        table.multigraded[{key.first, std::move(degree)}] += value;
    }
    return table;
}

bool verify_cone_formula(const SimplicialComplex& ball, Field field)
{
    if (!cone_apex(ball)) throw InvalidInput("cone formula needs a cone");
    const auto ground = ball.vertices();
    const auto sphere = boundary(ball);
    const auto b = hochster_betti(ball, ground, field);
    const auto s = hochster_betti(sphere, ground, field);
    const int n = static_cast<int>(ground.size());
    const int d = ball.rank();
    for (Mask f = 0; f < (Mask{1} << n); ++f) {
        Exponent deg(static_cast<std::size_t>(n)), co(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) {
            deg[static_cast<std::size_t>(p)] = static_cast<int>(f >> p & 1);
            co[static_cast<std::size_t>(p)] = 1 - deg[static_cast<std::size_t>(p)];
        }
        for (int i = 0; i <= n; ++i)
            if (s.at(i, deg) != b.at(i, deg) + b.at(n + 1 - d - i, co)) return false;
    }
    return true;
}

bool verify_bier_betti(const Multicomplex& m, Field field)
{
    if (lcm_of(m) == m.cap().entries())
        throw Undefined("Betti formula not applicable: lcm(M) equals x^c");
    const auto ground = level_vertices(m.cap());
    const auto sphere = hochster_betti(bier_sphere(m), ground, field);
    const auto quotient = betti_table(complement_ideal(m, Capping::uncapped), field);
    const int n = static_cast<int>(m.nvars());
    const int big = m.cap().bar().total();
    const int nv = static_cast<int>(ground.size());
    for (int i = 0; i <= nv; ++i)
        for (int j = 0; j <= nv; ++j)
            if (sphere.at(i, j) != quotient.at(i, j) + quotient.at(n + 1 - i, big - j)) return false;
    return true;
}

bool is_betti_symmetric(const BettiTable& table)
{
    const int p = table.projective_dimension();
    const int n = static_cast<int>(table.nvars);
    for (const auto& [key, value] : table.graded)
        if (value != table.at(p - key.first, n - key.second)) return false;
    return true;
}

std::string render_betti_table(const BettiTable& table)
{
    const int p = table.projective_dimension();
    if (p < 0) return "total:\n";
    int top_row = 0;
    for (const auto& [key, value] : table.graded)
        if (value) top_row = std::max(top_row, key.second - key.first);
    const auto totals = table.totals();

    auto cell = [](std::int64_t v) { return v ? std::to_string(v) : std::string("."); };
    std::vector<std::size_t> width(static_cast<std::size_t>(p) + 1, 1);
    for (int i = 0; i <= p; ++i) {
        width[static_cast<std::size_t>(i)] = cell(totals[static_cast<std::size_t>(i)]).size();
        for (int r = 0; r <= top_row; ++r)
            width[static_cast<std::size_t>(i)] = std::max(width[static_cast<std::size_t>(i)], cell(table.at(i, i + r)).size());
    }
    std::ostringstream out;
    auto emit_row = [&](const std::string& label, auto&& value_at) {
        out << std::string(label.size() < 6 ? 6 - label.size() : 0, ' ') << label;
        for (int i = 0; i <= p; ++i) {
            const auto text = cell(value_at(i));
            out << ' ' << std::string(width[static_cast<std::size_t>(i)] - text.size(), ' ') << text;
        }
        out << '\n';
    };
    emit_row("total:", [&](int i) { return totals[static_cast<std::size_t>(i)]; });
    for (int r = 0; r <= top_row; ++r) emit_row(std::to_string(r) + ":", [&](int i) { return table.at(i, i + r); });
    return out.str();
}

}  // namespace bier
