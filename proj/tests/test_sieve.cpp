#include <catch2/catch_amalgamated.hpp>

#include <polya/sieve.hpp>

#include <map>
#include <set>

using namespace polya;

namespace {

// ground truth by full factorization of the family value
bool brute_squarefree(Family fam, std::int64_t n)
{
    return is_squarefree(family_value(fam, n));
}

} // namespace

TEST_CASE("residue roots match hand-checked congruences", "[sieve]")
{
    CHECK(residue_roots(Family::f4n2m1, 2).empty());
    CHECK(residue_roots(Family::f4n2m1, 3) == std::vector<std::int64_t>{4, 5});
    CHECK(residue_roots(Family::f4n2m1, 5) == std::vector<std::int64_t>{12, 13});

    CHECK(residue_roots(Family::n2p1, 2).empty());
    CHECK(residue_roots(Family::n2p1, 3).empty());
    CHECK(residue_roots(Family::n2p1, 7).empty());
    CHECK(residue_roots(Family::n2p1, 5) == std::vector<std::int64_t>{7, 18});
    CHECK(residue_roots(Family::n2p1, 13) == std::vector<std::int64_t>{70, 99});

    CHECK_THROWS_AS(residue_roots(Family::n2p1, 6), std::invalid_argument);
    CHECK_THROWS_AS(residue_roots(Family::n2p1, 1), std::invalid_argument);
}

TEST_CASE("residue roots really are all of them", "[sieve]")
{
    // brute scan of n in [0, p^2) against the closed-form roots
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
        for (Family fam : {Family::n2p1, Family::f4n2m1}) {
            std::set<std::int64_t> brute;
            std::int64_t p2 = p * p;
            for (std::int64_t x = 0; x < p2; ++x) {
                Int v = fam == Family::f4n2m1 ? Int(4) * x * x - 1 : Int(x) * x + 1;
                if (v % p2 == 0) brute.insert(x);
            }
            auto roots = residue_roots(fam, p);
            CHECK(std::set<std::int64_t>(roots.begin(), roots.end()) == brute);
        }
    }
}

TEST_CASE("sieve agrees with factorization", "[sieve]")
{
    const std::int64_t N = 2000;
    for (Family fam : {Family::n2p1, Family::f4n2m1}) {
        SieveReport rep = sieve_family(fam, N);
        std::set<std::int64_t> excluded;
        for (const auto& e : rep.excluded) excluded.insert(e.n);
        std::int64_t count = 0;
        for (std::int64_t n = 1; n <= N; ++n) {
            bool sf = brute_squarefree(fam, n);
            INFO("family " << family_name(fam) << " n " << n);
            CHECK(sf == !excluded.count(n));
            count += sf;
        }
        CHECK(rep.count == count);
    }
}

TEST_CASE("witnesses are least primes and verified", "[sieve]")
{
    SieveReport rep = sieve_family(Family::n2p1, 5000);
    for (const auto& e : rep.excluded) {
        Int v = family_value(Family::n2p1, e.n);
        Int p2 = Int(e.p) * e.p;
        REQUIRE(v % p2 == 0);
        // no smaller prime's square divides v
        for (std::int64_t q = 2; q < e.p; ++q)
            if (is_prime(Int(q))) CHECK(v % (Int(q) * q) != 0);
    }
    // exclusions come out ordered by n
    for (std::size_t i = 1; i < rep.excluded.size(); ++i)
        CHECK(rep.excluded[i - 1].n < rep.excluded[i].n);
}

TEST_CASE("small reports pinned", "[sieve]")
{
    SieveReport a = sieve_family(Family::f4n2m1, 3);
    CHECK(a.count == 3);                 // 3, 15, 35 are squarefree
    CHECK(a.excluded.empty());
    CHECK(a.density == 1.0);
    CHECK(a.floor_ok);

    SieveReport b = sieve_family(Family::n2p1, 7);
    CHECK(b.count == 6);                 // 7^2 + 1 = 50 = 2 * 5^2 drops out
    REQUIRE(b.excluded.size() == 1);
    CHECK(b.excluded[0].n == 7);
    CHECK(b.excluded[0].p == 5);
    CHECK(!b.excluded.empty());
    CHECK(b.density == 6.0 / 7.0);
}

TEST_CASE("per-prime exclusion counts stay within the residue bound", "[sieve]")
{
    const std::int64_t N = 10000;
    for (Family fam : {Family::n2p1, Family::f4n2m1}) {
        for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            auto roots = residue_roots(fam, p);
            std::int64_t p2 = p * p, hits = 0;
            for (std::int64_t n = 1; n <= N; ++n) {
                std::int64_t r = n % p2;
                for (std::int64_t x : roots) hits += (x == r);
            }
            CHECK(hits <= 2 + 2 * N / p2);
        }
    }
}

TEST_CASE("density floor holds at scale", "[sieve]")
{
    for (Family fam : {Family::n2p1, Family::f4n2m1}) {
        SieveReport rep = sieve_family(fam, 1000);
        CHECK(rep.floor_ok);
        CHECK(6 * rep.count >= rep.N);
    }
}

TEST_CASE("truncated density product tracks the observed density", "[sieve]")
{
    CHECK(density_limit_estimate(Family::n2p1, 2) == 1.0);
    CHECK(density_limit_estimate(Family::f4n2m1, 3) == 1.0);

    const std::int64_t N = 10000;
    for (Family fam : {Family::n2p1, Family::f4n2m1}) {
        double est = density_limit_estimate(fam, N);
        double obs = sieve_family(fam, N).density;
        INFO("family " << family_name(fam) << " est " << est << " obs " << obs);
        CHECK(std::abs(est - obs) < 0.01);
        CHECK(est > 1.0 / 6.0);
    }
}
