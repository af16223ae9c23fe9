#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bier/multicomplex.hpp"

namespace bier {

/// Vertex name. Two shapes are used:
///   indexed  x<i>^(<j>)  level j of variable i (index 1-based, level >= 0)
///   atom     <prefix><index>  or a bare token; level is -1
/// Ordering is (prefix, index, level), which sorts indexed labels by (i, j).
struct VertexLabel {
    std::string prefix;
    int index = -1;
    int level = -1;

    static VertexLabel indexed(int var, int level) { return {"x", var, level}; }
    static VertexLabel atom(std::string prefix, int index = -1) { return {std::move(prefix), index, -1}; }

    bool is_indexed() const { return level >= 0; }
    std::string str() const;

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// x_{var+1}^{(level)} for a 0-based variable position.
inline VertexLabel level_vertex(std::size_t var, int level)
{
    return VertexLabel::indexed(static_cast<int>(var) + 1, level);
}

/// Sorted, duplicate-free vertex set.
using Face = std::vector<VertexLabel>;

Face make_face(std::vector<VertexLabel> labels);

/// Finite simplicial complex stored by its facets. The void complex (no
/// faces at all) and {emptyset} are distinct values.
class SimplicialComplex {
public:
    /// The void complex.
    SimplicialComplex() = default;

    /// Keeps inclusion-maximal sets in canonical order. An empty input
    /// yields {emptyset}.
    static SimplicialComplex from_facets(std::vector<Face> sets);
    static SimplicialComplex void_complex() { return {}; }

    const std::vector<Face>& facets() const { return facets_; }
    /// Union of the facets, sorted.
    std::vector<VertexLabel> vertices() const;

    bool is_void() const { return facets_.empty(); }
    bool is_empty_face_only() const { return facets_.size() == 1 && facets_.front().empty(); }
    bool contains(const Face& face) const;
    bool is_pure() const;
    /// Largest facet cardinality (dim + 1); -1 for the void complex.
    int rank() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Face> facets_;
};

inline SimplicialComplex complex_from_facets(std::vector<Face> sets)
{
    return SimplicialComplex::from_facets(std::move(sets));
}

/// Boundary complex of the simplex on `vertices`; {emptyset} for one vertex.
SimplicialComplex simplex_boundary(const Face& vertices);

// ---------------------------------------------------------------------------
// Bitmask view used by the enumeration-heavy algorithms (<= 64 vertices).

class MaskedComplex {
public:
    using Mask = std::uint64_t;

    /// `ground` defaults to the vertex set; it must contain every vertex.
    explicit MaskedComplex(const SimplicialComplex& complex, std::vector<VertexLabel> ground = {});

    const std::vector<VertexLabel>& ground() const { return ground_; }
    const std::vector<Mask>& facets() const { return facets_; }

    Mask mask_of(const Face& face) const;
    Face face_of(Mask mask) const;
    int position(const VertexLabel& v) const;

    bool contains(Mask face) const;
    /// Every face, ordered by cardinality then value.
    std::vector<Mask> faces() const;

private:
    std::vector<VertexLabel> ground_;
    std::vector<Mask> facets_;
};

// ---------------------------------------------------------------------------

struct FaceVectors {
    std::vector<std::int64_t> f;  ///< f_0 = 1, ..., f_d
    std::vector<std::int64_t> h;  ///< h_0, ..., h_d
    std::vector<std::int64_t> g;  ///< g_0 = 1, ..., g_{floor(d/2)}
};

/// h and g from an f-vector (f_0..f_d).
FaceVectors vectors_from_f(std::vector<std::int64_t> f);
FaceVectors face_vectors(const SimplicialComplex& complex);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);
/// Identifies `removed` with `kept`; the result no longer has `removed`.
SimplicialComplex contraction(const SimplicialComplex& complex, const VertexLabel& removed,
                              const VertexLabel& kept);

/// lk(i) ∩ lk(j) == lk({i,j}), decided on faces.
bool link_condition_by_links(const SimplicialComplex& complex, const VertexLabel& i, const VertexLabel& j);
/// No minimal non-face contains both i and j.
bool link_condition_by_ideal(const SimplicialComplex& complex, const VertexLabel& i, const VertexLabel& j);
/// Both criteria; throws VerificationFailure if they disagree. False on a
/// non-edge.
bool link_condition(const SimplicialComplex& complex, const VertexLabel& i, const VertexLabel& j);

/// Generated by the ridges lying in exactly one facet. Requires a pure
/// complex whose ridges lie in at most two facets.
SimplicialComplex boundary(const SimplicialComplex& ball);

struct ShellingCheck {
    bool valid = false;
    std::vector<std::int64_t> h;
    /// Per step, the number of ridges generating the intersection with the
    /// earlier facets (0 for the first facet).
    std::vector<int> ridge_counts;
};

/// Checks that `order` is a shelling. For a valid order the h-vector read
/// off the restriction sizes is compared with face_vectors().
ShellingCheck verify_shelling(const SimplicialComplex& complex, const std::vector<Face>& order);

// ---------------------------------------------------------------------------
// Squarefree ideals in the polynomial ring on a labelled variable set.

class SquarefreeIdeal {
public:
    SquarefreeIdeal() = default;
    SquarefreeIdeal(std::vector<VertexLabel> vars, const std::vector<Face>& gens);
    SquarefreeIdeal(std::vector<VertexLabel> vars, MonomialIdeal ideal);

    const std::vector<VertexLabel>& vars() const { return vars_; }
    const MonomialIdeal& ideal() const { return ideal_; }
    /// Minimal generators as vertex sets, canonical order.
    std::vector<Face> generators() const;
    Face support(const Exponent& e) const;

    friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

private:
    std::vector<VertexLabel> vars_;
    MonomialIdeal ideal_;
};

SquarefreeIdeal operator+(const SquarefreeIdeal& a, const SquarefreeIdeal& b);
SquarefreeIdeal colon(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/// I_Delta over `ground` (defaults to the vertex set).
SquarefreeIdeal stanley_reisner(const SimplicialComplex& complex, std::vector<VertexLabel> ground = {});
SimplicialComplex complex_from_ideal(const SquarefreeIdeal& ideal);

/// { F subset ground : ground \ F not in Delta }. Rejects the full simplex.
SimplicialComplex alexander_dual_complex(const SimplicialComplex& complex, const std::vector<VertexLabel>& ground);

/// Ground set [n] as atoms "1".."n".
std::vector<VertexLabel> numbered_ground(int n);

/// Classical Bier sphere: deleted join of Delta and its Alexander dual on
/// vertices x1..xn, y1..yn. Delta lives on numbered_ground(n).
SimplicialComplex deleted_join_bier(const SimplicialComplex& complex, int n);

/// Facet-wise image; labels absent from `map` are kept. Throws InvalidInput
/// if the map is not injective on the vertices of the complex.
SimplicialComplex relabel(const SimplicialComplex& complex, const std::map<VertexLabel, VertexLabel>& map);
inline bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; }

/// A vertex lying in every facet, if any (smallest such label).
std::optional<VertexLabel> cone_apex(const SimplicialComplex& complex);

/// Macaulay's characterization of f-vectors of multicomplexes.
bool is_o_sequence(const std::vector<std::int64_t>& g);

/// Reduced Euler characteristic: sum (-1)^{i-1} f_i.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

/// Pure, every ridge in exactly two facets, and reduced Euler
/// characteristic (-1)^{d-1}. A combinatorial stand-in for "sphere".
bool is_sphere_surrogate(const SimplicialComplex& complex);

}  // namespace bier
