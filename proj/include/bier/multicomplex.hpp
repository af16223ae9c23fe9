#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace bier {

/// Exponent vector (a_1, ..., a_n) of a monomial x^a. Variables are indexed
/// from 0 in the API; rendering uses 1-based names x1, x2, ...
using Exponent = std::vector<int>;

/// Entrywise a <= b, i.e. x^a divides x^b.
bool divides(const Exponent& a, const Exponent& b);
int degree(const Exponent& a);

/// Copy of `a` with entry `var` replaced by `level` (x^a <> x_i^j).
Exponent diamond(const Exponent& a, std::size_t var, int level);

/// Degree-then-reverse-lex comparison used for every canonical monomial
/// listing: lower degree first, then lexicographically larger first.
bool monomial_less(const Exponent& a, const Exponent& b);

/// Upper bound c on exponents. c-monomials are the x^a with a <= c.
class Cap {
public:
    Cap() = default;
    explicit Cap(std::vector<int> entries);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    /// |c| = sum of entries.
    int total() const;
    /// c + (1, ..., 1).
    Cap bar() const;
    bool admits(const Exponent& a) const;

    /// Number of c-monomials, prod (c_i + 1).
    std::size_t monomial_count() const;
    /// Mixed-radix position of a c-monomial; positions follow lex order.
    std::size_t index_of(const Exponent& a) const;
    Exponent monomial_at(std::size_t index) const;
    /// All c-monomials in lex order.
    std::vector<Exponent> monomials() const;

    friend bool operator==(const Cap&, const Cap&) = default;

private:
    std::vector<int> entries_;
};

class MonomialIdeal;

/// A finite, divisor-closed set of c-monomials containing 1.
class Multicomplex {
public:
    /// Validates that `members` is a non-empty divisor-closed set of
    /// c-monomials; throws InvalidInput otherwise.
    static Multicomplex from_members(Cap cap, std::vector<Exponent> members);

    const Cap& cap() const { return cap_; }
    std::size_t nvars() const { return cap_.size(); }
    /// Members in lex order.
    const std::vector<Exponent>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    /// False for anything that is not a c-monomial.
    bool contains(const Exponent& a) const;
    bool is_full() const { return members_.size() == cap_.monomial_count(); }
    bool is_proper() const { return !is_full(); }

    friend bool operator==(const Multicomplex& a, const Multicomplex& b)
    {
        return a.cap_ == b.cap_ && a.members_ == b.members_;
    }

private:
    Multicomplex(Cap cap, std::vector<char> mask);

    Cap cap_;
    std::vector<char> mask_;
    std::vector<Exponent> members_;
};

/// Smallest c-multicomplex containing `gens`.
Multicomplex closure_from_generators(const Cap& cap, const std::vector<Exponent>& gens);

/// f_i(M) = number of members of degree i, for i = 0..|c|.
std::vector<std::int64_t> f_vector(const Multicomplex& m);

/// M^v = { c - a : a a c-monomial, a not in M }. Throws Undefined for full M.
Multicomplex alexander_dual(const Multicomplex& m);

/// Entrywise maximum of the members.
Exponent lcm_of(const Multicomplex& m);

/// Members of M that are c'-monomials, as a c'-multicomplex.
Multicomplex restrict_to_cap(const Multicomplex& m, const Cap& smaller);

/// Calls `visit` once for every c-multicomplex (full ones included).
void for_each_multicomplex(const Cap& cap, const std::function<void(const Multicomplex&)>& visit);

/// Random c-multicomplex: closure of a random set of c-monomials.
/// Each monomial is picked as a generator with probability `density`.
Multicomplex random_multicomplex(const Cap& cap, std::mt19937_64& rng, double density = 0.3);

// ---------------------------------------------------------------------------
// Monomial ideals
// ---------------------------------------------------------------------------

struct Minimalized {
    std::vector<Exponent> gens;       ///< minimal generators, canonical order
    std::vector<Exponent> redundant;  ///< inputs dropped as duplicates or multiples
};

/// Removes every generator divisible by an earlier kept one, scanning in
/// canonical (monomial_less) order.
Minimalized minimalize(std::vector<Exponent> gens);

/// Monomial ideal in nvars variables, stored by its minimal generators.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(std::size_t nvars, std::vector<Exponent> gens);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Exponent>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool contains(const Exponent& m) const;
    bool is_squarefree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t nvars_ = 0;
    std::vector<Exponent> gens_;
};

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : J. Throws Undefined when J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j);

enum class Capping { capped, uncapped };

/// I_c(M) (capped) or I(M) = I_c(M) + P (uncapped).
MonomialIdeal complement_ideal(const Multicomplex& m, Capping mode);

/// P = (x_1^{c_1+1}, ..., x_n^{c_n+1}).
MonomialIdeal cap_power_ideal(const Cap& cap);

bool is_c_ideal(const MonomialIdeal& ideal, const Cap& cap);

/// Alexander dual of a c-ideal with respect to c. Rejects ideals with a
/// generator outside the cap, and the zero and unit ideals.
MonomialIdeal ideal_alexander_dual(const MonomialIdeal& ideal, const Cap& cap);

}  // namespace bier
