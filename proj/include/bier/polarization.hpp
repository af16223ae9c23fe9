#pragma once

#include <vector>

#include "bier/multicomplex.hpp"
#include "bier/simplicial.hpp"

namespace bier {

/// pol uses the level prefix x_{i,0} ... x_{i,a_i-1}; pol* the suffix
/// x_{i,c_i} ... x_{i,c_i-a_i+1}. Polarized variables are the level
/// vertices x_i^(j).
enum class Polarization { prefix, suffix };

/// Squarefree image of x^u. Entries may reach c_i + 1.
Face polarize(const Exponent& u, const Cap& cap, Polarization variant);

/// Generator-wise image in the ring on level_vertices(cap).
SquarefreeIdeal polarize_ideal(const MonomialIdeal& ideal, const Cap& cap, Polarization variant);

/// I_{B_c(M)} == pol(I(M)).
bool verify_jahan(const Multicomplex& m);

/// The three generator families of I_{Bier_c(M)}, kept as produced so that
/// redundancy stays visible.
struct GeneratorFormula {
    std::vector<Face> ideal_part;  ///< pol(I_c(M))
    std::vector<Face> dual_part;   ///< pol*(I_c(M^v))
    std::vector<Face> power_part;  ///< pol(x_1^{c_1+1}, ..., x_n^{c_n+1})
    SquarefreeIdeal ideal;         ///< their sum

    std::vector<Face> all() const;
    /// Generators the minimalizer drops.
    std::vector<Face> redundant() const;
};

GeneratorFormula generator_formula(const Multicomplex& m);

/// The generator formula equals I_{Bier_c(M)} as ideals.
bool verify_generator_formula(const Multicomplex& m);

struct LinkageCheck {
    bool monomial = false;   ///< P : (I + P) == I^v + P
    bool polarized = false;  ///< pol(P) : pol(I + P) == pol*(I^v + P)
    MonomialIdeal colon_ideal;
};

/// Both linkage identities for a c-ideal I (zero and unit ideals rejected).
LinkageCheck linkage_identities(const MonomialIdeal& ideal, const Cap& cap);

/// I_{Lambda_c} : I_{B_c(M)} == I_{B*_c(M)}.
bool verify_complement_colon(const Multicomplex& m);

}  // namespace bier
