#include "bier/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "bier/error.hpp"

namespace bier {

std::string VertexLabel::str() const
{
    if (is_indexed()) return prefix + std::to_string(index) + "^(" + std::to_string(level) + ")";
    return index >= 0 ? prefix + std::to_string(index) : prefix;
}

Face make_face(std::vector<VertexLabel> labels)
{
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

// ---------------------------------------------------------------------------

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> sets)
{
    SimplicialComplex out;
    if (sets.empty()) {
        out.facets_.emplace_back();
        return out;
    }
    for (auto& s : sets) s = make_face(std::move(s));
    // Larger sets first so a candidate only has to be checked against kept
    // sets of at least its own size.
    std::sort(sets.begin(), sets.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    for (auto& s : sets) {
        const bool covered = std::any_of(out.facets_.begin(), out.facets_.end(), [&](const Face& f) {
            return std::includes(f.begin(), f.end(), s.begin(), s.end());
        });
        if (!covered) out.facets_.push_back(std::move(s));
    }
    std::sort(out.facets_.begin(), out.facets_.end());
    return out;
}

std::vector<VertexLabel> SimplicialComplex::vertices() const
{
    std::vector<VertexLabel> out;
    for (const auto& f : facets_) out.insert(out.end(), f.begin(), f.end());
    return make_face(std::move(out));
}

bool SimplicialComplex::contains(const Face& face) const
{
    const Face sorted = make_face(face);
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
        return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
    });
}

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.size() == facets_.front().size(); });
}

int SimplicialComplex::rank() const
{
    int r = -1;
    for (const auto& f : facets_) r = std::max(r, static_cast<int>(f.size()));
    return r;
}

SimplicialComplex simplex_boundary(const Face& vertices)
{
    const Face v = make_face(vertices);
    if (v.empty()) return SimplicialComplex::void_complex();
    std::vector<Face> sets;
    for (std::size_t k = 0; k < v.size(); ++k) {
        Face f = v;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
        sets.push_back(std::move(f));
    }
    return complex_from_facets(std::move(sets));
}

// ---------------------------------------------------------------------------

MaskedComplex::MaskedComplex(const SimplicialComplex& complex, std::vector<VertexLabel> ground)
    : ground_(ground.empty() ? complex.vertices() : make_face(std::move(ground)))
{
    if (ground_.size() > 64) throw SizeLimit("bitmask view supports at most 64 vertices");
    facets_.reserve(complex.facets().size());
    for (const auto& f : complex.facets()) facets_.push_back(mask_of(f));
}

int MaskedComplex::position(const VertexLabel& v) const
{
    const auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
    if (it == ground_.end() || *it != v) return -1;
    return static_cast<int>(it - ground_.begin());
}

MaskedComplex::Mask MaskedComplex::mask_of(const Face& face) const
{
    Mask m = 0;
    for (const auto& v : face) {
        const int p = position(v);
        if (p < 0) throw InvalidInput("vertex " + v.str() + " is not in the ground set");
        m |= Mask{1} << p;
    }
    return m;
}

Face MaskedComplex::face_of(Mask mask) const
{
    Face out;
    for (std::size_t p = 0; p < ground_.size(); ++p)
        if (mask >> p & 1) out.push_back(ground_[p]);
    return out;
}

bool MaskedComplex::contains(Mask face) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&](Mask f) { return (face & ~f) == 0; });
}

std::vector<MaskedComplex::Mask> MaskedComplex::faces() const
{
    std::vector<Mask> out;
    for (Mask f : facets_) {
        Mask sub = f;
        while (true) {
            out.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (std::int64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return static_cast<std::int64_t>(r);
}

}  // namespace

FaceVectors vectors_from_f(std::vector<std::int64_t> f)
{
    FaceVectors out;
    const auto d = static_cast<std::int64_t>(f.size()) - 1;
    out.h.assign(f.size(), 0);
    for (std::int64_t k = 0; k <= d; ++k) {
        std::int64_t s = 0;
        for (std::int64_t i = 0; i <= k; ++i) {
            const std::int64_t term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
            s += ((k - i) % 2 == 0) ? term : -term;
        }
        out.h[static_cast<std::size_t>(k)] = s;
    }
    for (std::int64_t i = 0; i <= d / 2; ++i)
        out.g.push_back(i == 0 ? out.h[0] : out.h[static_cast<std::size_t>(i)] - out.h[static_cast<std::size_t>(i - 1)]);
    out.f = std::move(f);
    return out;
}

FaceVectors face_vectors(const SimplicialComplex& complex)
{
    if (complex.is_void()) throw InvalidInput("face vectors of the void complex are undefined");
    const MaskedComplex masked(complex);
    std::vector<std::int64_t> f(static_cast<std::size_t>(complex.rank()) + 1, 0);
    for (auto face : masked.faces()) ++f[static_cast<std::size_t>(std::popcount(face))];
    return vectors_from_f(std::move(f));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    const auto va = a.vertices(), vb = b.vertices();
    std::vector<VertexLabel> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (!common.empty()) throw InvalidInput("join needs disjoint vertex sets; shared " + common.front().str());
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex();
    std::vector<Face> sets;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            Face u = f;
            u.insert(u.end(), g.begin(), g.end());
            sets.push_back(std::move(u));
        }
    return complex_from_facets(std::move(sets));
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face)
{
    const Face f = make_face(face);
    if (!complex.contains(f)) throw InvalidInput("link: the given set is not a face");
    std::vector<Face> sets;
    for (const auto& facet : complex.facets()) {
        if (!std::includes(facet.begin(), facet.end(), f.begin(), f.end())) continue;
        Face rest;
        std::set_difference(facet.begin(), facet.end(), f.begin(), f.end(), std::back_inserter(rest));
        sets.push_back(std::move(rest));
    }
    return complex_from_facets(std::move(sets));
}

SimplicialComplex contraction(const SimplicialComplex& complex, const VertexLabel& removed,
                              const VertexLabel& kept)
{
    if (removed == kept || !complex.contains({removed, kept}))
        throw InvalidInput("contraction: {" + removed.str() + ", " + kept.str() + "} is not an edge");
    std::vector<Face> sets;
    for (const auto& facet : complex.facets()) {
        Face image;
        for (const auto& v : facet) image.push_back(v == removed ? kept : v);
        sets.push_back(std::move(image));
    }
    return complex_from_facets(std::move(sets));
}

bool link_condition_by_links(const SimplicialComplex& complex, const VertexLabel& i, const VertexLabel& j)
{
    const MaskedComplex masked(complex);
    const int pi = masked.position(i), pj = masked.position(j);
    if (pi < 0 || pj < 0) throw InvalidInput("link condition: both labels must be vertices");
    const auto bi = MaskedComplex::Mask{1} << pi, bj = MaskedComplex::Mask{1} << pj;
    // lk({i,j}) is always inside lk(i) ∩ lk(j); equality fails exactly when
    // some G avoiding i and j extends by i and by j but not by both.
    for (auto g : masked.faces()) {
        if (g & (bi | bj)) continue;
        if (masked.contains(g | bi) && masked.contains(g | bj) && !masked.contains(g | bi | bj)) return false;
    }
    return true;
}

bool link_condition_by_ideal(const SimplicialComplex& complex, const VertexLabel& i, const VertexLabel& j)
{
    const auto ideal = stanley_reisner(complex);
    for (const auto& gen : ideal.generators()) {
        const bool has_i = std::binary_search(gen.begin(), gen.end(), i);
        const bool has_j = std::binary_search(gen.begin(), gen.end(), j);
        if (has_i && has_j) return false;
    }
    return true;
}

bool link_condition(const SimplicialComplex& complex, const VertexLabel& i, const VertexLabel& j)
{
    const bool by_links = link_condition_by_links(complex, i, j);
    const bool by_ideal = link_condition_by_ideal(complex, i, j);
    if (by_links != by_ideal)
        throw VerificationFailure("link condition: face and ideal criteria disagree on {" + i.str() + ", " +
                                  j.str() + "}");
    return by_links;
}

SimplicialComplex boundary(const SimplicialComplex& ball)
{
    if (ball.is_void()) return SimplicialComplex::void_complex();
    if (!ball.is_pure()) throw InvalidInput("boundary: complex is not pure");
    const MaskedComplex masked(ball);
    std::map<MaskedComplex::Mask, int> ridge_count;
    for (auto f : masked.facets())
        for (auto rest = f; rest; rest &= rest - 1) ++ridge_count[f & ~(rest & -rest)];
    std::vector<Face> sets;
    for (const auto& [ridge, count] : ridge_count) {
        if (count > 2) throw InvalidInput("boundary: a ridge lies in three or more facets");
        if (count == 1) sets.push_back(masked.face_of(ridge));
    }
    if (sets.empty()) return SimplicialComplex::void_complex();
    return complex_from_facets(std::move(sets));
}

ShellingCheck verify_shelling(const SimplicialComplex& complex, const std::vector<Face>& order)
{
    ShellingCheck out;
    if (complex.is_void() || !complex.is_pure()) return out;
    std::vector<Face> sorted;
    for (const auto& f : order) sorted.push_back(make_face(f));
    std::vector<Face> as_set = sorted;
    std::sort(as_set.begin(), as_set.end());
    if (as_set != complex.facets()) return out;

    const MaskedComplex masked(complex);
    const auto d = static_cast<std::size_t>(complex.rank());
    out.h.assign(d + 1, 0);
    std::vector<MaskedComplex::Mask> done;
    for (const auto& face : sorted) {
        const auto f = masked.mask_of(face);
        // Vertices v whose ridge f \ {v} already lies in an earlier facet.
        MaskedComplex::Mask restriction = 0;
        for (auto rest = f; rest; rest &= rest - 1) {
            const auto v = rest & -rest;
            const auto ridge = f & ~v;
            if (std::any_of(done.begin(), done.end(), [&](auto g) { return (ridge & ~g) == 0; }))
                restriction |= v;
        }
        // Each earlier intersection must sit inside one of those ridges.
        for (auto g : done)
            if (((f & ~g) & restriction) == 0) return ShellingCheck{};
        const int r = std::popcount(restriction);
        out.ridge_counts.push_back(r);
        ++out.h[static_cast<std::size_t>(r)];
        done.push_back(f);
    }
    out.valid = true;
    if (out.h != face_vectors(complex).h)
        throw VerificationFailure("shelling h-vector differs from the face-count h-vector");
    return out;
}

// ---------------------------------------------------------------------------

SquarefreeIdeal::SquarefreeIdeal(std::vector<VertexLabel> vars, const std::vector<Face>& gens)
    : vars_(make_face(std::move(vars)))
{
    std::vector<Exponent> exps;
    for (const auto& g : gens) {
        Exponent e(vars_.size(), 0);
        for (const auto& v : g) {
            const auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
            if (it == vars_.end() || *it != v) throw InvalidInput("generator uses unknown variable " + v.str());
            e[static_cast<std::size_t>(it - vars_.begin())] = 1;
        }
        exps.push_back(std::move(e));
    }
    ideal_ = MonomialIdeal(vars_.size(), std::move(exps));
}

SquarefreeIdeal::SquarefreeIdeal(std::vector<VertexLabel> vars, MonomialIdeal ideal)
    : vars_(std::move(vars)), ideal_(std::move(ideal))
{
    if (!std::is_sorted(vars_.begin(), vars_.end()) || ideal_.nvars() != vars_.size())
        throw InvalidInput("squarefree ideal: variable list must be sorted and match the ring");
    if (!ideal_.is_squarefree()) throw InvalidInput("ideal is not squarefree");
}

Face SquarefreeIdeal::support(const Exponent& e) const
{
    Face out;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] > 0) out.push_back(vars_[k]);
    return out;
}

std::vector<Face> SquarefreeIdeal::generators() const
{
    std::vector<Face> out;
    for (const auto& g : ideal_.gens()) out.push_back(support(g));
    return out;
}

SquarefreeIdeal operator+(const SquarefreeIdeal& a, const SquarefreeIdeal& b)
{
    if (a.vars() != b.vars()) throw InvalidInput("ideals live in different polynomial rings");
    return SquarefreeIdeal(a.vars(), a.ideal() + b.ideal());
}

SquarefreeIdeal colon(const SquarefreeIdeal& a, const SquarefreeIdeal& b)
{
    if (a.vars() != b.vars()) throw InvalidInput("ideals live in different polynomial rings");
    return SquarefreeIdeal(a.vars(), colon(a.ideal(), b.ideal()));
}

SquarefreeIdeal stanley_reisner(const SimplicialComplex& complex, std::vector<VertexLabel> ground)
{
    const MaskedComplex masked(complex, std::move(ground));
    const auto& vars = masked.ground();
    if (complex.is_void()) return SquarefreeIdeal(vars, std::vector<Face>{Face{}});
    std::set<MaskedComplex::Mask> minimal;
    const auto all = MaskedComplex::Mask{vars.size() == 64 ? ~0ULL : (1ULL << vars.size()) - 1};
    for (auto f : masked.faces()) {
        for (auto rest = all & ~f; rest; rest &= rest - 1) {
            const auto n = f | (rest & -rest);
            if (masked.contains(n)) continue;
            bool is_minimal = true;
            for (auto w = n; w && is_minimal; w &= w - 1)
                is_minimal = masked.contains(n & ~(w & -w));
            if (is_minimal) minimal.insert(n);
        }
    }
    std::vector<Face> gens;
    for (auto n : minimal) gens.push_back(masked.face_of(n));
    return SquarefreeIdeal(vars, gens);
}

SimplicialComplex complex_from_ideal(const SquarefreeIdeal& ideal)
{
    const auto& vars = ideal.vars();
    if (ideal.ideal().is_unit()) return SimplicialComplex::void_complex();
    // Facets are complements of minimal vertex covers of the generators,
    // i.e. of the minimal generators of the intersection of the primes
    // (x_v : v in g).
    MonomialIdeal covers(vars.size(), {Exponent(vars.size(), 0)});
    for (const auto& g : ideal.ideal().gens()) {
        std::vector<Exponent> prime;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g[k]) {
                Exponent e(vars.size(), 0);
                e[k] = 1;
                prime.push_back(std::move(e));
            }
        covers = intersect(covers, MonomialIdeal(vars.size(), std::move(prime)));
    }
    std::vector<Face> sets;
    for (const auto& cover : covers.gens()) {
        Face f;
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (!cover[k]) f.push_back(vars[k]);
        sets.push_back(std::move(f));
    }
    return complex_from_facets(std::move(sets));
}

SimplicialComplex alexander_dual_complex(const SimplicialComplex& complex, const std::vector<VertexLabel>& ground)
{
    const auto ideal = stanley_reisner(complex, ground);
    if (ideal.ideal().is_zero()) throw InvalidInput("Alexander dual of the full simplex is void");
    std::vector<Face> sets;
    for (const auto& gen : ideal.generators()) {
        Face rest;
        std::set_difference(ideal.vars().begin(), ideal.vars().end(), gen.begin(), gen.end(),
                            std::back_inserter(rest));
        sets.push_back(std::move(rest));
    }
    return complex_from_facets(std::move(sets));
}

std::vector<VertexLabel> numbered_ground(int n)
{
    std::vector<VertexLabel> out;
    for (int i = 1; i <= n; ++i) out.push_back(VertexLabel::atom("", i));
    return out;
}

SimplicialComplex deleted_join_bier(const SimplicialComplex& complex, int n)
{
    const auto ground = numbered_ground(n);
    const auto dual = alexander_dual_complex(complex, ground);
    const MaskedComplex left(complex, ground), right(dual, ground);
    const auto left_faces = left.faces(), right_faces = right.faces();
    std::vector<Face> sets;
    for (auto f : left_faces)
        for (auto g : right_faces) {
            if (f & g) continue;
            Face u;
            for (int p = 0; p < n; ++p) {
                if (f >> p & 1) u.push_back(VertexLabel::atom("x", p + 1));
                if (g >> p & 1) u.push_back(VertexLabel::atom("y", p + 1));
            }
            sets.push_back(std::move(u));
        }
    return complex_from_facets(std::move(sets));
}

SimplicialComplex relabel(const SimplicialComplex& complex, const std::map<VertexLabel, VertexLabel>& map)
{
    if (complex.is_void()) return complex;
    auto image = [&](const VertexLabel& v) {
        const auto it = map.find(v);
        return it == map.end() ? v : it->second;
    };
    std::set<VertexLabel> seen;
    for (const auto& v : complex.vertices())
        if (!seen.insert(image(v)).second) throw InvalidInput("relabel map is not injective on the vertices");
    std::vector<Face> sets;
    for (const auto& f : complex.facets()) {
        Face g;
        for (const auto& v : f) g.push_back(image(v));
        sets.push_back(std::move(g));
    }
    return complex_from_facets(std::move(sets));
}

std::optional<VertexLabel> cone_apex(const SimplicialComplex& complex)
{
    if (complex.is_void()) return std::nullopt;
    Face common = complex.facets().front();
    for (const auto& f : complex.facets()) {
        Face keep;
        std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(keep));
        common = std::move(keep);
    }
    if (common.empty()) return std::nullopt;
    return common.front();
}

namespace {

// Upper Macaulay bound a^{<i>}.
std::int64_t macaulay_bound(std::int64_t a, std::int64_t i)
{
    std::int64_t bound = 0;
    for (std::int64_t t = i; t >= 1 && a > 0; --t) {
        std::int64_t k = t;
        while (binomial(k + 1, t) <= a) ++k;
        a -= binomial(k, t);
        bound += binomial(k + 1, t + 1);
    }
    return bound;
}

}  // namespace

bool is_o_sequence(const std::vector<std::int64_t>& g)
{
    if (g.empty() || g[0] != 1) return false;
    for (auto v : g)
        if (v < 0) return false;
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        if (g[i + 1] > macaulay_bound(g[i], static_cast<std::int64_t>(i))) return false;
    return true;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex)
{
    if (complex.is_void()) return 0;
    const auto f = face_vectors(complex).f;
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 1) ? f[i] : -f[i];
    return chi;
}

bool is_sphere_surrogate(const SimplicialComplex& complex)
{
    if (complex.is_void() || !complex.is_pure()) return false;
    if (complex.is_empty_face_only()) return true;
    const MaskedComplex masked(complex);
    std::map<MaskedComplex::Mask, int> ridge_count;
    for (auto f : masked.facets())
        for (auto rest = f; rest; rest &= rest - 1) ++ridge_count[f & ~(rest & -rest)];
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) return false;
    const int d = complex.rank();
    return reduced_euler_characteristic(complex) == ((d - 1) % 2 == 0 ? 1 : -1);
}

}  // namespace bier
