#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bier/error.hpp"
#include "support.hpp"

using namespace bier;
using testing::mc;

namespace {

const Multicomplex& section3()
{
    static const auto m = closure_from_generators(Cap({2, 2, 2}), {{1, 0, 1}, {0, 1, 2}});
    return m;
}

MonomialIdeal ideal(std::size_t n, std::vector<Exponent> gens) { return MonomialIdeal(n, std::move(gens)); }

// Membership of m in I : J straight from the definition.
bool in_colon(const MonomialIdeal& i, const MonomialIdeal& j, const Exponent& m)
{
    for (const auto& g : j.gens()) {
        Exponent prod(m.size());
        for (std::size_t k = 0; k < m.size(); ++k) prod[k] = m[k] + g[k];
        if (!i.contains(prod)) return false;
    }
    return true;
}

MonomialIdeal random_ideal(std::size_t n, int top, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> e(0, top), count(1, 4);
    std::vector<Exponent> gens;
    const int k = count(rng);
    for (int t = 0; t < k; ++t) {
        Exponent a(n);
        for (auto& x : a) x = e(rng);
        gens.push_back(a);
    }
    return MonomialIdeal(n, gens);
}

}  // namespace

TEST_CASE("exponent helpers")
{
    CHECK(diamond({1, 0}, 0, 2) == Exponent{2, 0});
    CHECK(diamond({1, 2, 0}, 1, 0) == Exponent{1, 0, 0});
    CHECK(diamond({0, 1}, 1, 2) == Exponent{0, 2});
    CHECK(divides({1, 0}, {1, 1}));
    CHECK_FALSE(divides({2, 0}, {1, 1}));
    CHECK(degree({2, 0, 3}) == 5);
    CHECK(monomial_less({0, 1}, {2, 0}));
    CHECK(monomial_less({1, 0}, {0, 1}));
}

TEST_CASE("cap arithmetic")
{
    const Cap c({2, 1, 3});
    CHECK(c.total() == 6);
    CHECK(c.bar().entries() == std::vector<int>{3, 2, 4});
    CHECK(c.monomial_count() == 24);
    const auto all = c.monomials();
    REQUIRE(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (std::size_t k = 0; k < all.size(); ++k) {
        CHECK(c.index_of(all[k]) == k);
        CHECK(c.monomial_at(k) == all[k]);
    }
    CHECK(c.admits({2, 1, 3}));
    CHECK_FALSE(c.admits({3, 0, 0}));
    CHECK_FALSE(c.admits({0, 0}));
}

TEST_CASE("closure from generators")
{
    const auto two_powers = closure_from_generators(Cap({2, 2}), {{2, 0}, {0, 2}});
    CHECK(two_powers == mc({2, 2}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}}));

    const auto trivial = closure_from_generators(Cap({2, 2}), {});
    CHECK(trivial.members() == std::vector<Exponent>{{0, 0}});

    CHECK(section3() == mc({2, 2, 2}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}, {0, 1, 2}}));
    CHECK_THROWS_AS(closure_from_generators(Cap({2, 2}), {{3, 0}}), InvalidInput);
}

TEST_CASE("member lists are validated")
{
    CHECK_THROWS_AS(mc({2, 2}, {{1, 0}}), InvalidInput);                  // no 1
    CHECK_THROWS_AS(mc({2, 2}, {{0, 0}, {2, 0}}), InvalidInput);          // x without x^2's divisor x
    CHECK_THROWS_AS(mc({1, 1}, {{0, 0}, {2, 0}, {1, 0}}), InvalidInput);  // outside the cap
    CHECK_THROWS_AS(mc({1, 1}, {}), InvalidInput);
    CHECK_NOTHROW(mc({1, 1}, {{0, 0}, {0, 0}, {1, 0}}));
}

TEST_CASE("f-vectors")
{
    CHECK(f_vector(mc({2, 2}, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}})) == std::vector<std::int64_t>{1, 2, 2, 0, 0});
    CHECK(f_vector(mc({1, 2}, {{0, 0}})) == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(f_vector(section3()) == std::vector<std::int64_t>{1, 3, 3, 1, 0, 0, 0});
}

TEST_CASE("Alexander dual of a multicomplex")
{
    const auto d = alexander_dual(section3());
    CHECK(complement_ideal(d, Capping::capped) == ideal(3, {{1, 2, 1}, {2, 1, 0}}));
    CHECK_THROWS_AS(alexander_dual(mc({1}, {{0}, {1}})), Undefined);

    SUBCASE("squarefree caps give the simplicial dual")
    {
        for (const auto& delta : testing::all_complexes(3)) {
            const auto m = multicomplex_of_complex(delta, 3);
            const auto dual = alexander_dual_complex(delta, numbered_ground(3));
            CHECK(alexander_dual(m) == multicomplex_of_complex(dual, 3));
        }
    }

    SUBCASE("involution and ideal duality")
    {
        int checked = 0;
        for (std::size_t n = 1; n <= 3; ++n)
            testing::for_each_proper(n, n == 3 ? 2 : 3, [&](const Multicomplex& m) {
                CHECK(alexander_dual(alexander_dual(m)) == m);
                CHECK(ideal_alexander_dual(complement_ideal(m, Capping::capped), m.cap()) ==
                      complement_ideal(alexander_dual(m), Capping::capped));
                ++checked;
            });
        CHECK(checked > 1000);
    }
}

TEST_CASE("complement ideals")
{
    CHECK(complement_ideal(section3(), Capping::capped) == ideal(3, {{2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {1, 0, 2}}));
    CHECK(complement_ideal(section3(), Capping::uncapped) ==
          ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 3}, {1, 1, 0}, {1, 0, 2}}));
    CHECK(complement_ideal(mc({1}, {{0}}), Capping::capped) == ideal(1, {{1}}));
    CHECK(complement_ideal(mc({1}, {{0}, {1}}), Capping::capped).is_zero());

    testing::for_each_proper(2, 3, [&](const Multicomplex& m) {
        const auto capped = complement_ideal(m, Capping::capped);
        CHECK(complement_ideal(m, Capping::uncapped) == capped + cap_power_ideal(m.cap()));
        // a c-monomial lies in I_c(M) exactly when it is not a member
        for (const auto& a : m.cap().monomials()) CHECK(capped.contains(a) != m.contains(a));
    });
}

TEST_CASE("ideal Alexander dual")
{
    CHECK(ideal_alexander_dual(ideal(3, {{2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {1, 0, 2}}), Cap({2, 2, 2})) ==
          ideal(3, {{1, 2, 1}, {2, 1, 0}}));
    CHECK(ideal_alexander_dual(ideal(2, {{1, 0}}), Cap({1, 1})) == ideal(2, {{1, 0}}));
    const auto i = ideal(3, {{1, 1, 0}, {0, 0, 2}});
    CHECK(ideal_alexander_dual(ideal_alexander_dual(i, Cap({2, 2, 2})), Cap({2, 2, 2})) == i);
    CHECK_THROWS_AS(ideal_alexander_dual(ideal(2, {{3, 0}}), Cap({2, 2})), InvalidInput);
    CHECK_THROWS_AS(ideal_alexander_dual(ideal(2, {}), Cap({2, 2})), Undefined);
    CHECK_THROWS_AS(ideal_alexander_dual(ideal(2, {{0, 0}}), Cap({2, 2})), Undefined);
}

TEST_CASE("minimal generators")
{
    const auto r = minimalize({{1, 1}, {1, 0}, {2, 0}, {1, 0}, {0, 3}});
    CHECK(r.gens == std::vector<Exponent>{{1, 0}, {0, 3}});
    CHECK(r.redundant.size() == 3);
    const MonomialIdeal i(2, {{2, 1}, {1, 2}, {2, 2}});
    CHECK(i.gens().size() == 2);
    CHECK(i.contains({3, 1}));
    CHECK_FALSE(i.contains({1, 1}));
    CHECK(MonomialIdeal(2, {{0, 0}, {1, 0}}).is_unit());
    CHECK(MonomialIdeal(2, {{1, 1}}).is_squarefree());
    CHECK_FALSE(MonomialIdeal(2, {{2, 1}}).is_squarefree());
}

TEST_CASE("colon ideals")
{
    CHECK(colon(ideal(2, {{2, 1}}), ideal(2, {{0, 1}})) == ideal(2, {{2, 0}}));
    CHECK(colon(ideal(2, {{2, 0}, {0, 2}}), ideal(2, {{1, 1}})) == ideal(2, {{1, 0}, {0, 1}}));
    const auto p = cap_power_ideal(Cap({1, 1}));
    const auto i = ideal(2, {{1, 0}});
    CHECK(colon(p, i + p) == ideal(2, {{1, 0}, {0, 2}}));
    CHECK_THROWS_AS(colon(i, ideal(2, {})), Undefined);
    CHECK_THROWS_AS(colon(i, ideal(3, {{1, 0, 0}})), InvalidInput);

    SUBCASE("membership law on random ideals")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 1 + trial % 3;
            const auto a = random_ideal(n, 3, rng), b = random_ideal(n, 3, rng);
            const auto q = colon(a, b);
            for (const auto& m : Cap(std::vector<int>(n, 5)).monomials()) CHECK(q.contains(m) == in_colon(a, b, m));
        }
    }
}

TEST_CASE("intersection and sums")
{
    const auto a = ideal(2, {{2, 0}, {0, 1}}), b = ideal(2, {{1, 1}});
    CHECK(intersect(a, b) == ideal(2, {{1, 1}, {2, 1}}));
    CHECK((a + b) == ideal(2, {{2, 0}, {0, 1}}));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = random_ideal(2, 3, rng), y = random_ideal(2, 3, rng);
        const auto both = intersect(x, y);
        for (const auto& m : Cap({6, 6}).monomials()) CHECK(both.contains(m) == (x.contains(m) && y.contains(m)));
    }
}

TEST_CASE("lcm of members")
{
    CHECK(lcm_of(mc({2, 2}, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}})) == Exponent{2, 2});
    CHECK(lcm_of(mc({3, 3}, {{0, 0}})) == Exponent{0, 0});
    CHECK(lcm_of(section3()) == Exponent{1, 1, 2});
}

TEST_CASE("enumeration of multicomplexes")
{
    // {1}, {1,x}, {1,y}, {1,x,y} and the full one
    int count = 0;
    for_each_multicomplex(Cap({1, 1}), [&](const Multicomplex&) { ++count; });
    CHECK(count == 5);
    int chain = 0;
    for_each_multicomplex(Cap({4}), [&](const Multicomplex&) { ++chain; });
    CHECK(chain == 5);

    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto m = random_multicomplex(Cap({2, 3, 1}), rng, 0.3);
        for (const auto& a : m.members())
            for (const auto& b : m.cap().monomials())
                if (divides(b, a)) CHECK(m.contains(b));
    }
}

TEST_CASE("restriction to a smaller cap")
{
    const auto m = mc({2, 2}, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}});
    CHECK(restrict_to_cap(m, Cap({1, 2})) == mc({1, 2}, {{0, 0}, {1, 0}, {0, 1}, {0, 2}}));
    CHECK_THROWS_AS(restrict_to_cap(m, Cap({1})), InvalidInput);
}
