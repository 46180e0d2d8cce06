#ifndef POLYA_RAMIFY_HPP
#define POLYA_RAMIFY_HPP

// Ramification-index bookkeeping for composita: the lcm rule of Abhyankar's
// lemma (valid when at least one index is prime to the residue
// characteristic), the Bezout combination of ideal exponents it enables, and
// the order-annihilation exponent that bounds ambiguous classes.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include <polya/intarith.hpp>

namespace polya {

struct NotCoprime : std::domain_error {
    NotCoprime() : std::domain_error("bezout_exponents: cofactors share a prime") {}
};

struct RamificationScenario {
    std::int64_t e1 = 1;   // ramification index over p in the first field
    std::int64_t e2 = 1;   // and in the second
    std::int64_t p = 2;    // residue characteristic

    bool tame1() const { return e1 % p != 0; }
    bool tame2() const { return e2 % p != 0; }
};

// lcm(e1, e2) when the wild case is excluded on at least one side; otherwise
// the rule does not apply and there is no predicted index.
inline std::optional<std::int64_t> abhyankar_index(const RamificationScenario& sc)
{
    if (sc.e1 < 1 || sc.e2 < 1) throw std::invalid_argument("abhyankar_index: indices must be >= 1");
    if (sc.p < 2 || !is_prime(Int(sc.p))) throw std::invalid_argument("abhyankar_index: p must be prime");
    if (!sc.tame1() && !sc.tame2()) return std::nullopt;
    return std::lcm(sc.e1, sc.e2);
}

// With a = m/e1 and b = m/e2 coprime, returns (u, v) with u*a + v*b = 1 and
// |u| minimal (ties resolved to u > 0). This writes a uniformizer exponent 1
// as a combination of the two pulled-back ramified ideals.
inline std::pair<std::int64_t, std::int64_t> bezout_exponents(std::int64_t e1, std::int64_t e2,
                                                              std::int64_t m)
{
    if (e1 < 1 || e2 < 1 || m < 1 || m % e1 != 0 || m % e2 != 0)
        throw std::invalid_argument("bezout_exponents: m must be a common multiple of e1, e2");
    std::int64_t a = m / e1, b = m / e2;
    if (std::gcd(a, b) != 1) throw NotCoprime();
    Int u0, v0;
    Int g = ext_gcd(Int(a), Int(b), u0, v0);
    if (g != 1) throw NotCoprime();
    // general solution u = u0 + t*b; minimize |u| over t
    Int ur = u0 % b;
    std::int64_t u = ur.convert_to<std::int64_t>();
    std::int64_t cand = u > 0 ? u - b : u + b;
    if (std::abs(cand) < std::abs(u) || (std::abs(cand) == std::abs(u) && cand > u)) u = cand;
    std::int64_t v = (1 - u * a) / b;
    if (u * a + v * b != 1) throw std::logic_error("bezout_exponents: identity check failed");
    return {u, v};
}

inline std::pair<std::int64_t, std::int64_t> bezout_exponents(std::int64_t e1, std::int64_t e2)
{
    return bezout_exponents(e1, e2, std::lcm(e1, e2));
}

// Exponent that kills every ambiguous class: the field degree itself.
inline std::int64_t annihilation_exponent(std::int64_t degree)
{
    if (degree < 1) throw std::invalid_argument("annihilation_exponent: degree must be >= 1");
    return degree;
}

// Divisibility skeleton behind "coprime degrees give coprime Polya orders":
// each order may only use primes of its own degree.
inline bool coprime_splitting_orders(const Int& o1, const Int& o2, const Int& d1, const Int& d2)
{
    if (o1 < 1 || o2 < 1 || d1 < 1 || d2 < 1)
        throw std::invalid_argument("coprime_splitting_orders: arguments must be >= 1");
    auto supported = [](const Int& o, const Int& d) {
        for (const auto& [p, k] : factorize(o)) {
            (void)k;
            if (d % p != 0) return false;
        }
        return true;
    };
    return supported(o1, d1) && supported(o2, d2);
}

} // namespace polya

#endif
