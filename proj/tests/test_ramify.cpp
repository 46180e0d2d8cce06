#include <catch2/catch_amalgamated.hpp>

#include <polya/polya.hpp>
#include <polya/ramify.hpp>

#include <random>
#include <set>

using namespace polya;

TEST_CASE("lcm rule applies exactly when one side is tame", "[ramify]")
{
    CHECK(abhyankar_index({2, 3, 5}) == 6);
    CHECK(abhyankar_index({4, 6, 5}) == 12);
    CHECK(abhyankar_index({1, 1, 2}) == 1);
    CHECK(abhyankar_index({2, 2, 2}) == std::nullopt);
    CHECK(abhyankar_index({6, 10, 2}) == std::nullopt);
    CHECK(abhyankar_index({6, 15, 3}) == std::nullopt);
    CHECK(abhyankar_index({2, 15, 3}) == 30);   // one wild side is fine
    CHECK_THROWS_AS(abhyankar_index({0, 3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(abhyankar_index({2, 3, 4}), std::invalid_argument);
}

TEST_CASE("predicted index is a common multiple dividing the product", "[ramify]")
{
    for (std::int64_t e1 = 1; e1 <= 40; ++e1)
        for (std::int64_t e2 = 1; e2 <= 40; ++e2)
            for (std::int64_t p : {2, 3, 5}) {
                auto m = abhyankar_index({e1, e2, p});
                if (!m) {
                    CHECK(e1 % p == 0);
                    CHECK(e2 % p == 0);
                    continue;
                }
                CHECK(*m % e1 == 0);
                CHECK(*m % e2 == 0);
                CHECK((e1 * e2) % *m == 0);
            }
}

TEST_CASE("bezout exponents pinned", "[ramify]")
{
    CHECK(bezout_exponents(2, 3, 6) == std::pair<std::int64_t, std::int64_t>(1, -1));
    CHECK(bezout_exponents(4, 6, 12) == std::pair<std::int64_t, std::int64_t>(1, -1));
    CHECK(bezout_exponents(1, 5, 5) == std::pair<std::int64_t, std::int64_t>(0, 1));
    CHECK(bezout_exponents(5, 1, 5) == std::pair<std::int64_t, std::int64_t>(1, 0));
    CHECK(bezout_exponents(1, 1, 1) == std::pair<std::int64_t, std::int64_t>(0, 1));
    CHECK(bezout_exponents(3, 5) == std::pair<std::int64_t, std::int64_t>(-1, 2));

    CHECK_THROWS_AS(bezout_exponents(2, 2, 4), NotCoprime);
    CHECK_THROWS_AS(bezout_exponents(4, 6, 24), NotCoprime);
    CHECK_THROWS_AS(bezout_exponents(2, 3, 5), std::invalid_argument);
}

TEST_CASE("bezout identity exact with minimal first exponent", "[ramify]")
{
    for (std::int64_t e1 = 1; e1 <= 1000; e1 += 7)
        for (std::int64_t e2 = 1; e2 <= 1000; e2 += 11) {
            std::int64_t m = std::lcm(e1, e2);
            std::int64_t a = m / e1, b = m / e2;
            if (std::gcd(a, b) != 1) {
                CHECK_THROWS_AS(bezout_exponents(e1, e2, m), NotCoprime);
                continue;
            }
            auto [u, v] = bezout_exponents(e1, e2, m);
            REQUIRE(u * a + v * b == 1);
            // no representation with strictly smaller |u| exists
            for (std::int64_t t = -2; t <= 2; ++t) {
                std::int64_t w = u + t * b;
                if (std::abs(w) < std::abs(u)) FAIL("smaller exponent " << w << " vs " << u);
            }
        }
}

TEST_CASE("order annihilation is the field degree", "[ramify]")
{
    CHECK(annihilation_exponent(1) == 1);
    CHECK(annihilation_exponent(2) == 2);
    CHECK(annihilation_exponent(6) == 6);
    CHECK_THROWS_AS(annihilation_exponent(0), std::invalid_argument);
}

TEST_CASE("ambiguous classes die at the quadratic degree", "[ramify]")
{
    // random fundamental discriminants; every ambiguous class has order
    // dividing annihilation_exponent(2)
    std::mt19937_64 rng(20240815);
    std::uniform_int_distribution<std::int64_t> draw(3, 200000);
    int tested = 0;
    std::int64_t e = annihilation_exponent(2);
    REQUIRE(e == 2);
    while (tested < 1000) {
        Int d = -draw(rng);
        if (!is_fundamental_discriminant(d)) continue;
        ++tested;
        auto F = make_field(d);
        Int s = detail::isqrt_any(Int(-d));
        for (const auto& amb : ambiguous_forms(F)) {
            QuadForm sq = detail::compose_reduced(amb.form, amb.form, d, s);
            CHECK(is_principal(sq));
        }
    }
}

TEST_CASE("coprime degrees force coprime orders", "[ramify]")
{
    CHECK(coprime_splitting_orders(2, 3, 2, 3));
    CHECK(coprime_splitting_orders(4, 9, 2, 3));
    CHECK(coprime_splitting_orders(8, 27, 4, 9));
    CHECK(coprime_splitting_orders(1, 1, 2, 3));
    CHECK_FALSE(coprime_splitting_orders(6, 3, 2, 3));
    CHECK_FALSE(coprime_splitting_orders(2, 5, 2, 3));
    CHECK_THROWS_AS(coprime_splitting_orders(0, 1, 1, 1), std::invalid_argument);

    // whenever the divisibility skeleton holds and the degrees are coprime,
    // the orders are forced coprime too
    for (int o1 = 1; o1 <= 40; ++o1)
        for (int o2 = 1; o2 <= 40; ++o2)
            for (int d1 : {2, 3, 4})
                for (int d2 : {3, 5}) {
                    if (std::gcd(d1, d2) != 1) continue;
                    if (coprime_splitting_orders(o1, o2, d1, d2))
                        CHECK(std::gcd(o1, o2) == 1);
                }
}
