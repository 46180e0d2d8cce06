#ifndef POLYA_INTARITH_HPP
#define POLYA_INTARITH_HPP

// Exact integer arithmetic shared by every other header: primality,
// factorization, Kronecker symbol, square detection. Everything is pure;
// the shared prime table sits behind a function-local static, so concurrent
// use is safe.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polya {

using Int = boost::multiprecision::cpp_int;

struct PrimePower {
    Int p;
    unsigned e = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Factorization of |n|: prime powers with primes strictly ascending.
using Factorization = std::vector<PrimePower>;

// Primes below one million. Trial division against this table fully factors
// anything below 1e12 and strips small factors from everything else.
inline const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> table = [] {
        constexpr std::uint32_t limit = 1000000;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> primes;
        primes.reserve(78498);
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i)
                composite[static_cast<std::uint32_t>(j)] = true;
        }
        return primes;
    }();
    return table;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = (m > 1) ? 1 : 0;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t a)
{
    a %= n;
    if (a == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic below 3.3e24 with the first twelve primes as witnesses,
// far more than 64 bits need.
inline bool miller_rabin_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull})
        if (!strong_probable_prime_u64(n, a)) return false;
    return true;
}

inline bool strong_probable_prime(const Int& n, const Int& a)
{
    Int b = a % n;
    if (b == 0) return true;
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    Int x = boost::multiprecision::powm(b, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle variant of Pollard rho. n must be odd composite, not a
// prime power... actually prime powers are fine, only n prime loops forever,
// and callers test primality first.
inline std::uint64_t pollard_rho_u64(std::uint64_t n)
{
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            if (power == lam) { x = y; power <<= 1; lam = 0; }
            y = f(y);
            ++lam;
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

inline Int pollard_rho_big(const Int& n)
{
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1) {
            if (power == lam) { x = y; power <<= 1; lam = 0; }
            y = f(y);
            ++lam;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

inline void factor_u64_into(std::uint64_t m, std::vector<std::pair<std::uint64_t, unsigned>>& out)
{
    if (m == 1) return;
    if (miller_rabin_u64(m)) {
        out.emplace_back(m, 1u);
        return;
    }
    std::uint64_t d = pollard_rho_u64(m);
    factor_u64_into(d, out);
    factor_u64_into(m / d, out);
}

} // namespace detail

inline bool is_prime(const Int& n)
{
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return detail::miller_rabin_u64(n.convert_to<std::uint64_t>());
    if (n % 2 == 0) return false;
    // Strong tests with the first 25 primes as fixed bases: deterministic far
    // beyond 64 bits in practice and reproducible run to run.
    for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u,
                            41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u, 89u, 97u})
        if (!detail::strong_probable_prime(n, Int(a))) return false;
    return true;
}

inline Factorization factorize(const Int& n)
{
    if (n == 0) throw std::invalid_argument("factorize: argument must be nonzero");
    Int m = abs(n);
    Factorization out;
    if (m == 1) return out;

    if (m <= std::numeric_limits<std::uint64_t>::max()) {
        std::uint64_t v = m.convert_to<std::uint64_t>();
        for (std::uint32_t p : small_primes()) {
            if (std::uint64_t(p) * p > v) break;
            if (v % p == 0) {
                unsigned e = 0;
                while (v % p == 0) { v /= p; ++e; }
                out.push_back({Int(p), e});
            }
        }
        if (v > 1) {
            std::vector<std::pair<std::uint64_t, unsigned>> rest;
            detail::factor_u64_into(v, rest);
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size();) {
                std::size_t j = i;
                unsigned e = 0;
                while (j < rest.size() && rest[j].first == rest[i].first) { e += rest[j].second; ++j; }
                out.push_back({Int(rest[i].first), e});
                i = j;
            }
        }
        return out;
    }

    for (std::uint32_t p : small_primes()) {
        if (m == 1) break;
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) { m /= p; ++e; }
            out.push_back({Int(p), e});
        }
    }
    // Leftover cofactor: split recursively with rho until prime pieces remain.
    std::vector<Int> stack;
    std::vector<Int> primes;
    if (m > 1) stack.push_back(m);
    while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (is_prime(v)) { primes.push_back(v); continue; }
        Int d = detail::pollard_rho_big(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    return out;
}

// Kronecker symbol (a|n), total on all integer pairs with the usual
// conventions at 2, -1 and 0.
inline int kronecker(Int a, Int n)
{
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int v = 0;
    while (n % 2 == 0) { n >>= 1; ++v; }
    int k = 1;
    if (v % 2 == 1) {
        long r = static_cast<long>(a % 8);
        if (r < 0) r += 8;
        if (r == 3 || r == 5) k = -1;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n odd positive from here on.
    for (;;) {
        if (n == 1) return k;
        a %= n;
        if (a < 0) a += n;
        if (a == 0) return 0;
        v = 0;
        while (a % 2 == 0) { a >>= 1; ++v; }
        if (v % 2 == 1) {
            long r = static_cast<long>(n % 8);
            if (r == 3 || r == 5) k = -k;
        }
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        std::swap(a, n);
    }
}

// int64 fast path used by the survey sweeps; same conventions.
inline int kronecker_ll(std::int64_t a, std::int64_t n)
{
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int v = 0;
    while ((n & 1) == 0) { n >>= 1; ++v; }
    int k = 1;
    if (v & 1) {
        std::int64_t r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) k = -1;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    for (;;) {
        if (n == 1) return k;
        a %= n;
        if (a < 0) a += n;
        if (a == 0) return 0;
        v = 0;
        while ((a & 1) == 0) { a >>= 1; ++v; }
        if (v & 1) {
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) k = -k;
        }
        if ((a & 3) == 3 && (n & 3) == 3) k = -k;
        std::swap(a, n);
    }
}

inline bool is_squarefree(const Int& n)
{
    if (n == 0) throw std::invalid_argument("is_squarefree: argument must be nonzero");
    for (const auto& f : factorize(n))
        if (f.e > 1) return false;
    return true;
}

// Floor square root of a nonnegative integer.
inline Int isqrt(const Int& n)
{
    if (n < 0) throw std::domain_error("isqrt: argument must be nonnegative");
    return sqrt(n);
}

inline std::int64_t isqrt_ll(std::int64_t n)
{
    if (n < 0) throw std::domain_error("isqrt: argument must be nonnegative");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(const Int& n)
{
    if (n < 0) return false;
    Int r = sqrt(n);
    return r * r == n;
}

// Extended gcd: returns g = gcd(a, b) >= 0 with g = x*a + y*b.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y)
{
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
        t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Inverse of a mod m (m > 0), or a throw when gcd(a, m) != 1.
inline Int inv_mod(const Int& a, const Int& m)
{
    Int x, y;
    Int g = ext_gcd(a, m, x, y);
    if (g != 1) throw std::domain_error("inv_mod: arguments are not coprime");
    x %= m;
    if (x < 0) x += m;
    return x;
}

namespace detail {

// Square root of a mod an odd prime p (Tonelli-Shanks), or -1 when a is a
// non-residue. Deterministic: the auxiliary non-residue is found by scan.
inline std::int64_t sqrt_mod_u64(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (p == 2) return static_cast<std::int64_t>(a);
    if (a == 0) return 0;
    if (powmod_u64(a, (p - 1) / 2, p) != 1) return -1;
    if (p % 4 == 3) return static_cast<std::int64_t>(powmod_u64(a, (p + 1) / 4, p));

    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::uint64_t z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;

    std::uint64_t m = s;
    std::uint64_t c = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(a, q, p);
    std::uint64_t r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod_u64(tt, tt, p); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return static_cast<std::int64_t>(r);
}

inline std::int64_t inv_mod_u64(std::int64_t a, std::int64_t m)
{
    Int r = inv_mod(Int(a), Int(m));
    return r.convert_to<std::int64_t>();
}

} // namespace detail

} // namespace polya

#endif
