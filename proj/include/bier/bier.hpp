#pragma once

#include <map>
#include <string>
#include <vector>

#include "bier/multicomplex.hpp"
#include "bier/simplicial.hpp"

namespace bier {

/// All level vertices x_i^(j), 0 <= j <= c_i, in canonical order.
std::vector<VertexLabel> level_vertices(const Cap& cap);

/// F_c(x^a): every level vertex except x_i^(a_i) for each i.
Face labeled_facet(const Exponent& a, const Cap& cap);

/// Join of the simplex boundaries on each variable's levels.
SimplicialComplex lambda(const Cap& cap);

/// B_c(M) = < F_c(x^a) : a in M >.
SimplicialComplex bier_ball(const Multicomplex& m);

/// < F_c(x^a) : a a c-monomial outside M >. Proper M only.
SimplicialComplex complementary_ball(const Multicomplex& m);

/// Facet F_c(x^a) \ {x_i^(j)} of the Bier sphere, written G(x^a; x_i^j).
struct BierFacet {
    Exponent base;
    std::size_t var = 0;
    int level = 0;

    Face vertices(const Cap& cap) const;
    friend bool operator==(const BierFacet&, const BierFacet&) = default;
};

/// Every (a, i, j) with a in M, a <> x_i^j outside M and a_i < j <= c_i.
std::vector<BierFacet> bier_facets(const Multicomplex& m);

enum class SphereMethod { facet_formula, boundary };
enum class VerifyMode { automatic, on, off };

/// Below this |c| the automatic mode builds the sphere both ways.
inline constexpr int kVerifyTotalCapLimit = 12;

/// Bier_c(M), built from the facet formula or as the boundary of B_c(M).
/// With verification on, both constructions run and must agree.
SimplicialComplex bier_sphere(const Multicomplex& m, SphereMethod method = SphereMethod::facet_formula,
                              VerifyMode verify = VerifyMode::automatic);

/// Sort key of a facet G(x^a; x_p^s):
/// (a_1, ..., a_{p-1}, s, -a_{p+1}, ..., -a_n), ties broken on (p, a_p).
struct ShellKey {
    std::vector<int> key;
    std::size_t var = 0;
    int base_level = 0;
};

ShellKey shell_key(const BierFacet& facet);
/// True when `a` precedes `b` in the shelling (a is the larger one).
bool shell_precedes(const BierFacet& a, const BierFacet& b);

/// Facets of Bier_c(M) from largest to smallest.
std::vector<BierFacet> shelling_order(const Multicomplex& m);

/// Facets of B_c(M) added along increasing degree, so each member comes
/// after all of its divisors.
std::vector<Face> ball_shelling_order(const Multicomplex& m);

struct HVectorFormulas {
    std::vector<std::int64_t> ball_h;    ///< h_i(B_c(M)) = f_i(M)
    std::vector<std::int64_t> sphere_g;  ///< g_i = f_i(M) - f_{|c|-i}(M); empty for full M
};

/// Closed forms for h(B_c(M)) and g(Bier_c(M)), checked against the face
/// counts of the constructed complexes (VerificationFailure on mismatch).
HVectorFormulas theorem_hvector(const Multicomplex& m);

/// x_{i,j} -> x_{i,c_i - j}.
std::map<VertexLabel, VertexLabel> dual_permutation(const Cap& cap);

/// Multicomplex at c = (1, ..., 1) of the squarefree monomials whose
/// supports are faces of Delta (Delta on numbered_ground(n)).
Multicomplex multicomplex_of_complex(const SimplicialComplex& complex, int n);

/// deleted_join_bier(Delta) relabelled x_i -> x_i^(0), y_i -> x_i^(1)
/// equals bier_sphere at c = (1, ..., 1).
bool classical_iso_check(const SimplicialComplex& complex, int n);

/// Bier_c(M) relabelled by dual_permutation equals Bier_c(M^v).
bool dual_iso_check(const Multicomplex& m);

}  // namespace bier
