#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bier/multicomplex.hpp"
#include "bier/simplicial.hpp"

namespace bier {

using VertexMap = std::map<VertexLabel, VertexLabel>;

/// One node of an edge-decomposition certificate. Every node records the
/// complex it certifies.
///   simplex_boundary, empty  leaves
///   edge       children {link, contraction}; `edge` = (removed, kept)
///   join       children {first factor, second factor, expansion of the join}
///   reduction, dual, permutation, link_map, contraction_map
///              one child whose complex is relabel(complex, map)
struct CertificateNode {
    enum class Kind { simplex_boundary, empty, edge, join, reduction, dual, permutation, link_map, contraction_map };

    Kind kind = Kind::empty;
    SimplicialComplex complex;
    std::string note;
    std::optional<std::pair<VertexLabel, VertexLabel>> edge;
    VertexMap map;
    std::vector<CertificateNode> children;
};

std::string kind_name(CertificateNode::Kind kind);

/// True for {emptyset}-free boundaries of simplices on >= 2 vertices.
bool is_simplex_boundary(const SimplicialComplex& complex);

struct CertificateReport {
    bool ok = false;
    std::string failure;  ///< first failed check, empty when ok
    int nodes = 0;
    int edge_steps = 0;
};

/// Recomputes every step: links and contractions from the parent complex,
/// the Link condition by both criteria, relabelled images, join factors, and
/// the sphere surrogate at every node.
CertificateReport verify_certificate(const CertificateNode& root);

std::string certificate_text(const CertificateNode& root);
std::string certificate_json(const CertificateNode& root, int indent = 2);

// ---------------------------------------------------------------------------
// Generic search

enum class Outcome { yes, no, unknown };

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

struct SearchResult {
    Outcome outcome = Outcome::unknown;
    std::optional<CertificateNode> certificate;
    std::uint64_t steps = 0;
};

/// Depth-first search over edges satisfying the Link condition, in
/// lexicographic order, memoized on the exact facet set. A non-pure
/// subproblem is not decomposable. Throws InvalidInput on non-pure input.
SearchResult is_edge_decomposable(const SimplicialComplex& complex, std::uint64_t budget = kDefaultSearchBudget);

// ---------------------------------------------------------------------------
// Bier sphere steps

/// Bier_c(M) relabelled by `map` equals Bier_c'(result).
struct BierStep {
    Multicomplex result;
    VertexMap map;
};

/// Applies when x_n^(0) or x_n^(c_n) is not a vertex of Bier_c(M): the
/// returned step (optionally preceded by the dual permutation) drops x_n
/// with c' = (c_1 + c_n, c_2, ..., c_{n-1}) and x_n^(j) -> x_1^(c_1 + j).
struct Reduction {
    std::optional<BierStep> dual;
    BierStep reduce;
};
std::optional<Reduction> reduction_step(const Multicomplex& m);

struct KeyLink {
    Multicomplex restricted;  ///< M' at (c_1 - 1, c_2, ..., c_n)
    Multicomplex dual;        ///< (M')^v at the same cap
    BierStep step;            ///< link relabelled by the dual permutation
};

/// Link of {x_1^(c_1), x_n^(0)} as a Bier sphere at
/// (c_1 - 1, c_2, ..., c_{n-1}, c_n - 1). Both vertices must be present.
KeyLink keylemma_link(const Multicomplex& m);

/// Contraction of x_n^(0) into x_1^(c_1) as Bier_c'(sigma(M)) with
/// c' = (c_1 + c_n, c_2, ..., c_{n-1}); the map is rho.
BierStep keylemma_contraction(const Multicomplex& m);

/// Certificate following the recursive construction for Bier spheres.
/// Throws Undefined for full M and VerificationFailure if a step's
/// identification fails.
CertificateNode bier_decomposition(const Multicomplex& m, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace bier
