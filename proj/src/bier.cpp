#include "bier/bier.hpp"

#include <algorithm>
#include <iostream>

#include "bier/error.hpp"

namespace bier {

std::vector<VertexLabel> level_vertices(const Cap& cap)
{
    std::vector<VertexLabel> out;
    for (std::size_t i = 0; i < cap.size(); ++i)
        for (int j = 0; j <= cap[i]; ++j) out.push_back(level_vertex(i, j));
    return out;
}

Face labeled_facet(const Exponent& a, const Cap& cap)
{
    if (!cap.admits(a)) throw InvalidInput("labeled facet: exponent is not a c-monomial");
    Face out;
    out.reserve(static_cast<std::size_t>(cap.total()));
    for (std::size_t i = 0; i < cap.size(); ++i)
        for (int j = 0; j <= cap[i]; ++j)
            if (j != a[i]) out.push_back(level_vertex(i, j));
    return out;
}

SimplicialComplex lambda(const Cap& cap)
{
    std::vector<Face> sets;
    for (const auto& a : cap.monomials()) sets.push_back(labeled_facet(a, cap));
    return complex_from_facets(std::move(sets));
}

SimplicialComplex bier_ball(const Multicomplex& m)
{
    std::vector<Face> sets;
    for (const auto& a : m.members()) sets.push_back(labeled_facet(a, m.cap()));
    return complex_from_facets(std::move(sets));
}

SimplicialComplex complementary_ball(const Multicomplex& m)
{
    if (m.is_full()) throw Undefined("complementary ball of a full multicomplex is void");
    std::vector<Face> sets;
    for (const auto& a : m.cap().monomials())
        if (!m.contains(a)) sets.push_back(labeled_facet(a, m.cap()));
    return complex_from_facets(std::move(sets));
}

Face BierFacet::vertices(const Cap& cap) const
{
    Face f = labeled_facet(base, cap);
    f.erase(std::remove(f.begin(), f.end(), level_vertex(var, level)), f.end());
    return f;
}

std::vector<BierFacet> bier_facets(const Multicomplex& m)
{
    const Cap& c = m.cap();
    std::vector<BierFacet> out;
    for (const auto& a : m.members())
        for (std::size_t i = 0; i < c.size(); ++i)
            for (int j = a[i] + 1; j <= c[i]; ++j)
                if (!m.contains(diamond(a, i, j))) out.push_back({a, i, j});
    return out;
}

SimplicialComplex bier_sphere(const Multicomplex& m, SphereMethod method, VerifyMode verify)
{
    if (m.is_full()) throw Undefined("Bier sphere needs a proper multicomplex");
    auto by_formula = [&] {
        std::vector<Face> sets;
        for (const auto& f : bier_facets(m)) sets.push_back(f.vertices(m.cap()));
        return complex_from_facets(std::move(sets));
    };
    auto by_boundary = [&] { return boundary(bier_ball(m)); };

    const bool cross_check = verify == VerifyMode::on ||
                             (verify == VerifyMode::automatic && m.cap().total() <= kVerifyTotalCapLimit);
    if (!cross_check) return method == SphereMethod::facet_formula ? by_formula() : by_boundary();
    auto formula = by_formula();
    if (formula != by_boundary())
        throw VerificationFailure("Bier sphere: facet formula and boundary of the ball disagree");
    return formula;
}

ShellKey shell_key(const BierFacet& facet)
{
    ShellKey k;
    k.var = facet.var;
    k.base_level = facet.base[facet.var];
    k.key.reserve(facet.base.size());
    for (std::size_t i = 0; i < facet.base.size(); ++i) {
        if (i < facet.var) k.key.push_back(facet.base[i]);
        else if (i == facet.var) k.key.push_back(facet.level);
        else k.key.push_back(-facet.base[i]);
    }
    return k;
}

bool shell_precedes(const BierFacet& a, const BierFacet& b)
{
    const auto ka = shell_key(a), kb = shell_key(b);
    if (ka.key != kb.key) return ka.key > kb.key;
    if (ka.var != kb.var) return ka.var < kb.var;
    return ka.base_level > kb.base_level;
}

std::vector<BierFacet> shelling_order(const Multicomplex& m)
{
    if (m.is_full()) throw Undefined("shelling order needs a proper multicomplex");
    auto facets = bier_facets(m);
    std::sort(facets.begin(), facets.end(), shell_precedes);
    for (std::size_t k = 1; k < facets.size(); ++k)
        if (!shell_precedes(facets[k - 1], facets[k]))
            std::clog << "bier: shelling order fails to separate two facets at position " << k << '\n';
    return facets;
}

std::vector<Face> ball_shelling_order(const Multicomplex& m)
{
    auto members = m.members();
    std::stable_sort(members.begin(), members.end(),
                     [](const Exponent& a, const Exponent& b) { return degree(a) < degree(b); });
    std::vector<Face> order;
    for (const auto& a : members) order.push_back(labeled_facet(a, m.cap()));
    return order;
}

HVectorFormulas theorem_hvector(const Multicomplex& m)
{
    HVectorFormulas out;
    const auto f = f_vector(m);
    out.ball_h = f;
    if (face_vectors(bier_ball(m)).h != out.ball_h)
        throw VerificationFailure("h(B_c(M)) differs from f(M)");
    if (m.is_full()) return out;

    const int total = m.cap().total();
    const int d = total - 1;
    for (int i = 0; i <= d / 2; ++i)
        out.sphere_g.push_back(f[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(total - i)]);
    if (face_vectors(bier_sphere(m)).g != out.sphere_g)
        throw VerificationFailure("g(Bier_c(M)) differs from f_i(M) - f_{|c|-i}(M)");
    return out;
}

std::map<VertexLabel, VertexLabel> dual_permutation(const Cap& cap)
{
    std::map<VertexLabel, VertexLabel> pi;
    for (std::size_t i = 0; i < cap.size(); ++i)
        for (int j = 0; j <= cap[i]; ++j) pi[level_vertex(i, j)] = level_vertex(i, cap[i] - j);
    return pi;
}

Multicomplex multicomplex_of_complex(const SimplicialComplex& complex, int n)
{
    const MaskedComplex masked(complex, numbered_ground(n));
    std::vector<Exponent> members;
    for (auto face : masked.faces()) {
        Exponent a(static_cast<std::size_t>(n), 0);
        for (int p = 0; p < n; ++p) a[static_cast<std::size_t>(p)] = static_cast<int>(face >> p & 1);
        members.push_back(std::move(a));
    }
    return Multicomplex::from_members(Cap(std::vector<int>(static_cast<std::size_t>(n), 1)), std::move(members));
}

bool classical_iso_check(const SimplicialComplex& complex, int n)
{
    const auto m = multicomplex_of_complex(complex, n);
    if (m.is_full()) throw InvalidInput("classical Bier sphere needs a proper subcomplex of the simplex");
    std::map<VertexLabel, VertexLabel> phi;
    for (int i = 1; i <= n; ++i) {
        phi[VertexLabel::atom("x", i)] = VertexLabel::indexed(i, 0);
        phi[VertexLabel::atom("y", i)] = VertexLabel::indexed(i, 1);
    }
    return relabel(deleted_join_bier(complex, n), phi) == bier_sphere(m);
}

bool dual_iso_check(const Multicomplex& m)
{
    return relabel(bier_sphere(m), dual_permutation(m.cap())) == bier_sphere(alexander_dual(m));
}

}  // namespace bier
