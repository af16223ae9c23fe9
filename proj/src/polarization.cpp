#include "bier/polarization.hpp"

#include <algorithm>

#include "bier/bier.hpp"
#include "bier/error.hpp"

namespace bier {

Face polarize(const Exponent& u, const Cap& cap, Polarization variant)
{
    if (u.size() != cap.size()) throw InvalidInput("polarize: exponent length does not match the cap");
    Face out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] > cap[i] + 1)
            throw InvalidInput("polarize: exponent exceeds c_i + 1 in variable " + std::to_string(i + 1));
        for (int t = 0; t < u[i]; ++t)
            out.push_back(level_vertex(i, variant == Polarization::prefix ? t : cap[i] - t));
    }
    return make_face(std::move(out));
}

SquarefreeIdeal polarize_ideal(const MonomialIdeal& ideal, const Cap& cap, Polarization variant)
{
    if (ideal.nvars() != cap.size()) throw InvalidInput("polarize: ideal and cap have different lengths");
    std::vector<Face> gens;
    for (const auto& g : ideal.gens()) gens.push_back(polarize(g, cap, variant));
    return SquarefreeIdeal(level_vertices(cap), gens);
}

bool verify_jahan(const Multicomplex& m)
{
    const auto lhs = stanley_reisner(bier_ball(m), level_vertices(m.cap()));
    const auto rhs = polarize_ideal(complement_ideal(m, Capping::uncapped), m.cap(), Polarization::prefix);
    return lhs == rhs;
}

std::vector<Face> GeneratorFormula::all() const
{
    std::vector<Face> out = ideal_part;
    out.insert(out.end(), dual_part.begin(), dual_part.end());
    out.insert(out.end(), power_part.begin(), power_part.end());
    return out;
}

std::vector<Face> GeneratorFormula::redundant() const
{
    const auto kept = ideal.generators();
    std::vector<Face> out;
    for (const auto& g : all())
        if (std::find(kept.begin(), kept.end(), g) == kept.end() &&
            std::find(out.begin(), out.end(), g) == out.end())
            out.push_back(g);
    return out;
}

GeneratorFormula generator_formula(const Multicomplex& m)
{
    if (m.is_full()) throw Undefined("generator formula needs a proper multicomplex");
    const Cap& c = m.cap();
    GeneratorFormula out;
    const auto ideal = complement_ideal(m, Capping::capped);
    const auto dual = complement_ideal(alexander_dual(m), Capping::capped);
    const auto powers = cap_power_ideal(c);
    for (const auto& g : ideal.gens()) out.ideal_part.push_back(polarize(g, c, Polarization::prefix));
    for (const auto& g : dual.gens()) out.dual_part.push_back(polarize(g, c, Polarization::suffix));
    for (const auto& g : powers.gens()) out.power_part.push_back(polarize(g, c, Polarization::prefix));
    out.ideal = SquarefreeIdeal(level_vertices(c), out.all());
    return out;
}

bool verify_generator_formula(const Multicomplex& m)
{
    return generator_formula(m).ideal == stanley_reisner(bier_sphere(m), level_vertices(m.cap()));
}

LinkageCheck linkage_identities(const MonomialIdeal& ideal, const Cap& cap)
{
    if (!is_c_ideal(ideal, cap)) throw InvalidInput("linkage identities need a c-ideal");
    if (ideal.is_zero() || ideal.is_unit())
        throw Undefined("linkage identities are not evaluated for the zero or unit ideal");
    const auto p = cap_power_ideal(cap);
    const auto sum = ideal + p;
    const auto dual_plus_p = ideal_alexander_dual(ideal, cap) + p;

    LinkageCheck out;
    out.colon_ideal = colon(p, sum);
    out.monomial = out.colon_ideal == dual_plus_p;
    const auto lhs = colon(polarize_ideal(p, cap, Polarization::prefix), polarize_ideal(sum, cap, Polarization::prefix));
    out.polarized = lhs == polarize_ideal(dual_plus_p, cap, Polarization::suffix);
    return out;
}

bool verify_complement_colon(const Multicomplex& m)
{
    const auto ground = level_vertices(m.cap());
    const auto lambda_ideal = stanley_reisner(lambda(m.cap()), ground);
    const auto ball_ideal = stanley_reisner(bier_ball(m), ground);
    return colon(lambda_ideal, ball_ideal) == stanley_reisner(complementary_ball(m), ground);
}

}  // namespace bier
