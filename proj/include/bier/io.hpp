#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bier/error.hpp"
#include "bier/multicomplex.hpp"
#include "bier/simplicial.hpp"

namespace bier {

/// Syntax error with a 1-based position.
class ParseError : public InvalidInput {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

using Input = std::variant<Multicomplex, MonomialIdeal, SimplicialComplex>;

/// Text grammar, '#' starts a comment:
///   cap c_1 ... c_n / members|generators / exponents
///   ideal n / exponents
/// where each exponent line holds one tuple (2 0 1) or a comma separated
/// list of monomials (x1^2*x3, x2).
///   otherwise a facet list, one facet per line ('{}' is the empty facet,
///   no lines at all is the void complex)
/// Text starting with '{' is read as JSON with the keys cap, members,
/// generators, ideal, facets.
Input parse_input(const std::string& text);

VertexLabel parse_label(const std::string& token);
/// x1^2*x3, or 1 for the zero exponent.
Exponent parse_monomial(const std::string& text, std::size_t nvars);

std::string render_monomial(const Exponent& a);
/// Comma separated minimal generators; "0" for the zero ideal.
std::string render_ideal(const MonomialIdeal& ideal);
/// Squarefree monomial in the level variables: x1_0*x1_1.
std::string render_polarized(const Face& face);
std::string render_polarized(const std::vector<Face>& gens);
std::string render_face(const Face& face);
/// One facet per line; "{}" for the empty facet, nothing for the void complex.
std::string render_complex(const SimplicialComplex& complex);
std::string render_vector(const std::vector<std::int64_t>& v);
std::string render_members(const Multicomplex& m);

}  // namespace bier
