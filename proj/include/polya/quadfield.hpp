#ifndef POLYA_QUADFIELD_HPP
#define POLYA_QUADFIELD_HPP

// Quadratic fields keyed by their fundamental discriminant, plus the
// canonical ambiguous form attached to each ramified prime.
//
// d is fundamental when d = 1 mod 4 and squarefree, or d = 4m with m
// squarefree and m = 2 or 3 mod 4. The ramified primes are exactly the
// primes dividing d.

#include <stdexcept>
#include <string>
#include <vector>

#include <polya/intarith.hpp>
#include <polya/quadform.hpp>

namespace polya {

struct NotFundamental : std::domain_error {
    explicit NotFundamental(const Int& d)
        : std::domain_error("not a fundamental discriminant: " + d.str()) {}
};

struct NotSquarefree : std::domain_error {
    explicit NotSquarefree(const Int& n)
        : std::domain_error("not squarefree: " + n.str()) {}
};

struct NotRamified : std::domain_error {
    NotRamified(const Int& p, const Int& d)
        : std::domain_error("prime " + p.str() + " is not ramified in discriminant " + d.str()) {}
};

namespace detail {

inline Int mod4(const Int& x)
{
    Int r = x % 4;
    return r < 0 ? r + 4 : r;
}

} // namespace detail

inline bool is_fundamental_discriminant(const Int& d)
{
    if (d == 0 || d == 1) return false;
    Int r = detail::mod4(d);
    if (r == 1) return is_squarefree(d);
    if (r != 0) return false;
    Int m = d / 4;
    Int rm = detail::mod4(m);
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

struct FundamentalDiscriminant {
    Int d;
    std::vector<Int> ramified;  // primes dividing d, ascending

    int s() const { return static_cast<int>(ramified.size()); }

    // Squarefree core: d itself when odd, d/4 otherwise.
    Int radicand() const { return detail::mod4(d) == 1 ? d : d / 4; }
};

inline FundamentalDiscriminant make_field(const Int& d)
{
    if (!is_fundamental_discriminant(d)) throw NotFundamental(d);
    FundamentalDiscriminant F;
    F.d = d;
    for (const auto& pp : factorize(d)) F.ramified.push_back(pp.p);
    return F;
}

// The field Q(sqrt n) for squarefree n: d = n when n = 1 mod 4, else 4n.
inline FundamentalDiscriminant discriminant_of_radicand(const Int& n)
{
    if (n == 0 || n == 1) throw std::invalid_argument("discriminant_of_radicand: need n != 0, 1");
    if (!is_squarefree(n)) throw NotSquarefree(n);
    return make_field(detail::mod4(n) == 1 ? n : Int(4 * n));
}

struct AmbiguousPrimeData {
    Int p;
    QuadForm form;  // primitive form of discriminant d whose class squares to the identity
};

// Canonical ambiguous form for a ramified prime p: the class of the prime
// ideal above p, which squares to the principal class.
inline AmbiguousPrimeData ambiguous_form(const FundamentalDiscriminant& F, const Int& p)
{
    bool ram = false;
    for (const auto& q : F.ramified) ram = ram || q == p;
    if (!ram) throw NotRamified(p, F.d);

    const Int& d = F.d;
    QuadForm f;
    if (detail::mod4(d) == 1) {
        f = {p, p, (p * p - d) / (4 * p)};
    } else if (p != 2) {
        f = {p, 0, -(d / 4) / p};
    } else {
        Int m = d / 4;
        if (detail::mod4(m) == 2)
            f = {2, 0, -d / 8};
        else
            f = {2, 2, (4 - d) / 8};
    }
    return {p, f};
}

inline std::vector<AmbiguousPrimeData> ambiguous_forms(const FundamentalDiscriminant& F)
{
    std::vector<AmbiguousPrimeData> out;
    out.reserve(F.ramified.size());
    for (const auto& p : F.ramified) out.push_back(ambiguous_form(F, p));
    return out;
}

} // namespace polya

#endif
