#include <catch2/catch_amalgamated.hpp>

#include <polya/quadfield.hpp>

using namespace polya;

namespace {

// direct restatement of the fundamental-discriminant condition
bool oracle_fundamental(long long d)
{
    if (d == 1 || d == 0) return false;
    auto sqfree = [](long long v) {
        if (v < 0) v = -v;
        for (long long p = 2; p * p <= v; ++p)
            while (v % p == 0) {
                v /= p;
                if (v % p == 0) return false;
            }
        return true;
    };
    long long m = ((d % 4) + 4) % 4;
    if (m == 1) return sqfree(d);
    if (m != 0) return false;
    long long q = d / 4;
    long long qm = ((q % 4) + 4) % 4;
    return (qm == 2 || qm == 3) && sqfree(q);
}

} // namespace

TEST_CASE("fundamental discriminants recognized", "[quadfield]")
{
    for (Int d : {-3, -4, -7, -8, -20, -23, -84, 5, 8, 12, 13, 21, 28})
        CHECK(is_fundamental_discriminant(d));
    for (Int d : {0, 1, -1, -2, 2, 4, 9, 25, -12, -16, -28, 45, -45, 33 * 3})
        CHECK_FALSE(is_fundamental_discriminant(d));
}

TEST_CASE("fundamental discriminants match the restated condition", "[quadfield]")
{
    for (long long d = -300; d <= 300; ++d)
        CHECK(is_fundamental_discriminant(Int(d)) == oracle_fundamental(d));
}

TEST_CASE("make_field extracts ramified primes", "[quadfield]")
{
    auto F = make_field(Int(-84));
    REQUIRE(F.ramified == std::vector<Int>{2, 3, 7});
    CHECK(F.s() == 3);
    CHECK(F.radicand() == -21);

    auto G = make_field(Int(12));
    REQUIRE(G.ramified == std::vector<Int>{2, 3});
    CHECK(G.radicand() == 3);

    auto H = make_field(Int(5));
    REQUIRE(H.ramified == std::vector<Int>{5});
    CHECK(H.radicand() == 5);

    CHECK_THROWS_AS(make_field(Int(45)), NotFundamental);
    CHECK_THROWS_AS(make_field(Int(1)), NotFundamental);
    CHECK_THROWS_AS(make_field(Int(-12)), NotFundamental);
}

TEST_CASE("discriminant_of_radicand", "[quadfield]")
{
    CHECK(discriminant_of_radicand(Int(5)).d == 5);
    CHECK(discriminant_of_radicand(Int(-5)).d == -20);
    CHECK(discriminant_of_radicand(Int(3)).d == 12);
    CHECK(discriminant_of_radicand(Int(-21)).d == -84);
    CHECK(discriminant_of_radicand(Int(10)).d == 40);
    CHECK_THROWS_AS(discriminant_of_radicand(Int(12)), NotSquarefree);
    CHECK_THROWS_AS(discriminant_of_radicand(Int(-9)), NotSquarefree);
    CHECK_THROWS(discriminant_of_radicand(Int(0)));
    CHECK_THROWS(discriminant_of_radicand(Int(1)));
}

TEST_CASE("ambiguous forms pinned", "[quadfield]")
{
    auto F = make_field(Int(-20));
    CHECK(ambiguous_form(F, Int(2)).form == QuadForm{2, 2, 3});
    CHECK(ambiguous_form(F, Int(5)).form == QuadForm{5, 0, 1});
    CHECK_THROWS_AS(ambiguous_form(F, Int(3)), NotRamified);

    auto G = make_field(Int(-23));
    CHECK(ambiguous_form(G, Int(23)).form == QuadForm{23, 23, 6});

    auto H = make_field(Int(40));
    CHECK(ambiguous_form(H, Int(2)).form == QuadForm{2, 0, -5});
    CHECK(ambiguous_form(H, Int(5)).form == QuadForm{5, 0, -2});
}

TEST_CASE("ambiguous forms are primitive with the right discriminant", "[quadfield]")
{
    for (long long d = -500; d <= 500; ++d) {
        if (!is_fundamental_discriminant(Int(d))) continue;
        auto F = make_field(Int(d));
        auto forms = ambiguous_forms(F);
        REQUIRE(forms.size() == F.ramified.size());
        for (const auto& ap : forms) {
            INFO("d=" << d << " p=" << ap.p);
            CHECK(ap.form.discriminant() == Int(d));
            CHECK(ap.form.primitive());
            CHECK(ap.form.a == ap.p);
        }
    }
}
