#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bier/bier.hpp"
#include "bier/io.hpp"
#include "bier/multicomplex.hpp"
#include "bier/simplicial.hpp"

namespace testing {

using namespace bier;

inline Multicomplex mc(std::vector<int> cap, std::vector<Exponent> members)
{
    return Multicomplex::from_members(Cap(std::move(cap)), std::move(members));
}

/// Facet list in the text grammar, one facet per ';'.
inline SimplicialComplex cx(const std::string& facets)
{
    std::string text = facets;
    for (auto& ch : text)
        if (ch == ';') ch = '\n';
    return std::get<SimplicialComplex>(parse_input(text));
}

inline Face face(const std::string& labels)
{
    Face f;
    std::istringstream in(labels);
    std::string tok;
    while (in >> tok) f.push_back(parse_label(tok));
    return make_face(std::move(f));
}

/// Every face by brute force: all subsets of every facet.
inline std::set<Face> all_faces(const SimplicialComplex& c)
{
    std::set<Face> out;
    for (const auto& f : c.facets())
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.size()); ++s) {
            Face g;
            for (std::size_t k = 0; k < f.size(); ++k)
                if (s >> k & 1) g.push_back(f[k]);
            out.insert(g);
        }
    return out;
}

/// All simplicial complexes on numbered_ground(n) other than the full
/// simplex and the void complex, as down-closed families of subsets.
inline std::vector<SimplicialComplex> all_complexes(int n)
{
    const auto ground = numbered_ground(n);
    const std::uint32_t subsets = 1u << n;
    std::vector<SimplicialComplex> out;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        if (!(fam & 1)) continue;
        bool closed = true;
        for (std::uint32_t s = 0; s < subsets && closed; ++s)
            if (fam >> s & 1)
                for (int p = 0; p < n; ++p)
                    if ((s >> p & 1) && !(fam >> (s & ~(1u << p)) & 1)) closed = false;
        if (!closed || fam >> (subsets - 1) & 1) continue;
        std::vector<Face> sets;
        for (std::uint32_t s = 0; s < subsets; ++s)
            if (fam >> s & 1) {
                Face f;
                for (int p = 0; p < n; ++p)
                    if (s >> p & 1) f.push_back(ground[static_cast<std::size_t>(p)]);
                sets.push_back(f);
            }
        out.push_back(complex_from_facets(std::move(sets)));
    }
    return out;
}

inline SimplicialComplex random_complex(int n, std::mt19937_64& rng)
{
    const auto ground = numbered_ground(n);
    std::uniform_int_distribution<int> count(1, 5);
    std::bernoulli_distribution coin(0.45);
    while (true) {
        std::vector<Face> sets;
        const int k = count(rng);
        for (int t = 0; t < k; ++t) {
            Face f;
            for (int p = 0; p < n; ++p)
                if (coin(rng)) f.push_back(ground[static_cast<std::size_t>(p)]);
            sets.push_back(f);
        }
        auto c = complex_from_facets(std::move(sets));
        if (!(c.facets().size() == 1 && c.facets()[0].size() == static_cast<std::size_t>(n))) return c;
    }
}

/// Every proper multicomplex with the given number of variables and cap
/// entries 1..cmax.
template <class F>
void for_each_proper(std::size_t n, int cmax, F&& visit)
{
    std::vector<int> c(n, 1);
    while (true) {
        for_each_multicomplex(Cap(c), [&](const Multicomplex& m) {
            if (m.is_proper()) visit(m);
        });
        std::size_t k = 0;
        while (k < n && c[k] == cmax) c[k++] = 1;
        if (k == n) return;
        ++c[k];
    }
}

inline Multicomplex random_proper(std::size_t n, int cmax, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> entry(1, cmax);
    std::uniform_real_distribution<double> density(0.05, 0.5);
    while (true) {
        std::vector<int> c(n);
        for (auto& x : c) x = entry(rng);
        auto m = random_multicomplex(Cap(c), rng, density(rng));
        if (m.is_proper()) return m;
    }
}

}  // namespace testing
