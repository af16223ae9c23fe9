#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bier/multicomplex.hpp"
#include "bier/simplicial.hpp"

namespace bier {

/// Coefficient field for homology: the rationals (exact fraction-free
/// elimination) or a prime field Z/p.
struct Field {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    std::uint32_t p = 0;

    static Field rationals() { return {}; }
    /// Throws InvalidInput unless p is prime.
    static Field modulo(std::uint32_t p);
    std::string str() const;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// dims[k + 1] = dim H~_k for k = -1, ..., dim Delta.
struct HomologyProfile {
    std::vector<std::int64_t> dims;

    std::int64_t at(int k) const;
};

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field = Field::rationals());

/// Rank of an integer matrix (row-major, rows x cols) over the field.
std::size_t matrix_rank(std::vector<std::int64_t> entries, std::size_t rows, std::size_t cols, Field field);

/// Graded and multigraded Betti numbers of a quotient S/I.
struct BettiTable {
    std::size_t nvars = 0;
    std::string field;
    std::map<std::pair<int, int>, std::int64_t> graded;
    std::map<std::pair<int, Exponent>, std::int64_t> multigraded;

    std::int64_t at(int i, int j) const;
    std::int64_t at(int i, const Exponent& degree) const;
    std::vector<std::int64_t> totals() const;
    int projective_dimension() const;
};

inline constexpr std::size_t kHochsterVertexLimit = 20;

/// Betti numbers of S/I_Delta over the polynomial ring on `ground` (defaults
/// to the vertex set): beta_{i,sigma} = dim H~_{|sigma|-i-1}(Delta|sigma).
/// Multidegrees are 0/1 vectors over the sorted ground set.
BettiTable hochster_betti(const SimplicialComplex& complex, std::vector<VertexLabel> ground = {},
                          Field field = Field::rationals(), std::size_t vertex_limit = kHochsterVertexLimit);

/// Betti numbers of S/I through the polarization of I; multidegrees are
/// reported in the original variables.
BettiTable betti_table(const MonomialIdeal& ideal, Field field = Field::rationals(),
                       std::size_t vertex_limit = kHochsterVertexLimit);

/// beta_{i,F}(S/I_{dB}) = beta_{i,F}(S/I_B) + beta_{n+1-d-i, V\F}(S/I_B) for
/// every i and every F within the vertex set V of the cone B.
bool verify_cone_formula(const SimplicialComplex& ball, Field field = Field::rationals());

/// Graded Betti numbers of the Bier sphere against those of S/I(M) and its
/// transpose. Throws Undefined when lcm(M) = x^c.
bool verify_bier_betti(const Multicomplex& m, Field field = Field::rationals());

/// beta_{i,j} = beta_{p-i, N-j} with p the projective dimension and N the
/// number of variables.
bool is_betti_symmetric(const BettiTable& table);

/// Grid with row j - i and column i, dots for zeros, headed by totals.
std::string render_betti_table(const BettiTable& table);

}  // namespace bier
