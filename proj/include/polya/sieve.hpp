#ifndef POLYA_SIEVE_HPP
#define POLYA_SIEVE_HPP

// Square-free sieves over the unit families n^2+1 and 4n^2-1. A value fails
// to be squarefree exactly when some p^2 divides it, so marking the residue
// classes of n mod p^2 that kill the family value classifies every n <= N
// exactly; each excluded n carries its smallest witness prime.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <polya/intarith.hpp>
#include <polya/units.hpp>

namespace polya {

struct SieveExclusion {
    std::int64_t n = 0;
    std::int64_t p = 0;   // least prime with p^2 dividing the family value
};

struct SieveReport {
    Family family = Family::n2p1;
    std::int64_t N = 0;
    std::int64_t count = 0;           // squarefree values among n = 1..N
    double density = 0.0;
    std::vector<SieveExclusion> excluded;
    bool floor_ok = false;            // density >= 1/6
};

// All x in [0, p^2) with family_value(x) = 0 mod p^2. For 4n^2-1 and odd p
// these are +-(inverse of 2) mod p^2; for n^2+1 they exist only when -1 is
// a square mod p, i.e. p = 1 mod 4, and lift uniquely mod p^2.
inline std::vector<std::int64_t> residue_roots(Family fam, std::int64_t p)
{
    std::vector<std::int64_t> roots;
    if (p < 2 || !is_prime(Int(p))) throw std::invalid_argument("residue_roots: p must be prime");
    std::int64_t p2 = p * p;
    if (fam == Family::f4n2m1) {
        if (p == 2) return roots;  // 4n^2 - 1 is odd
        // (2x)^2 = 1 mod p^2 forces 2x = +-1
        std::int64_t h = detail::inv_mod_u64(2, p2);
        roots.push_back(h);
        roots.push_back(p2 - h);
    } else {
        if (p == 2) return roots;  // n^2 + 1 is never 0 mod 4
        std::int64_t r = detail::sqrt_mod_u64(static_cast<std::uint64_t>(p - 1), static_cast<std::uint64_t>(p));
        if (r < 0) return roots;   // -1 is a non-residue
        // Hensel: refine x^2 + 1 = 0 from mod p to mod p^2
        using I128 = __int128;
        I128 fx = (I128)r * r + 1;
        std::int64_t fdash_inv = detail::inv_mod_u64(2 * r % p2, p2);
        std::int64_t x = static_cast<std::int64_t>(((I128)r - (I128)(fx % p2) * fdash_inv) % p2);
        if (x < 0) x += p2;
        roots.push_back(x);
        roots.push_back(p2 - x);
    }
    if (roots.size() == 2 && roots[0] > roots[1]) std::swap(roots[0], roots[1]);
    for (std::int64_t x : roots) {
        Int v = fam == Family::f4n2m1 ? Int(4) * x * x - 1 : Int(x) * x + 1;
        if (v % p2 != 0) throw std::logic_error("residue_roots: root fails its congruence");
    }
    return roots;
}

inline SieveReport sieve_family(Family fam, std::int64_t N)
{
    if (N < 1) throw std::invalid_argument("sieve_family: need N >= 1");
    SieveReport rep;
    rep.family = fam;
    rep.N = N;

    // primes with p^2 <= family_value(N); 2N + 1 always covers both families
    std::int64_t pmax = 2 * N + 1;
    std::vector<bool> is_comp(pmax + 1, false);
    std::vector<std::int64_t> witness(N + 1, 0);
    for (std::int64_t p = 2; p <= pmax; ++p) {
        if (is_comp[p]) continue;
        for (std::int64_t j = p * p; j <= pmax; j += p) is_comp[j] = true;
        if (Int(p) * p > family_value(fam, N)) break;
        for (std::int64_t r : residue_roots(fam, p)) {
            std::int64_t p2 = p * p;
            std::int64_t n0 = r == 0 ? p2 : r;
            for (std::int64_t n = n0; n <= N; n += p2)
                if (!witness[n]) witness[n] = p;
        }
    }
    for (std::int64_t n = 1; n <= N; ++n)
        if (witness[n]) rep.excluded.push_back({n, witness[n]});
    rep.count = N - static_cast<std::int64_t>(rep.excluded.size());
    rep.density = static_cast<double>(rep.count) / static_cast<double>(N);
    rep.floor_ok = 6 * rep.count >= N;
    return rep;
}

// Truncated heuristic density: product over p <= sqrt(N) of (1 - r_p / p^2),
// the local densities of the sieved residue classes.
inline double density_limit_estimate(Family fam, std::int64_t N)
{
    if (N < 1) throw std::invalid_argument("density_limit_estimate: need N >= 1");
    double prod = 1.0;
    std::int64_t pmax = isqrt_ll(N);
    std::vector<bool> is_comp(static_cast<std::size_t>(pmax) + 2, false);
    for (std::int64_t p = 2; p <= pmax; ++p) {
        if (is_comp[p]) continue;
        for (std::int64_t j = p * p; j <= pmax; j += p) is_comp[j] = true;
        double rp = static_cast<double>(residue_roots(fam, p).size());
        prod *= 1.0 - rp / (static_cast<double>(p) * static_cast<double>(p));
    }
    return prod;
}

} // namespace polya

#endif
