#ifndef POLYA_UNITS_HPP
#define POLYA_UNITS_HPP

// Units of real quadratic fields. Everything runs on the continued fraction
// of a quadratic irrational (P + sqrt n)/Q in exact integer arithmetic; the
// fundamental unit falls out of the convergents over one period of the
// purely periodic tail. Regulators are evaluated in software floats wide
// enough to make the printed digits trustworthy.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <polya/quadfield.hpp>

namespace polya {

template <unsigned Digits>
using FloatOf = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>>;

using Float50 = FloatOf<50>;
using Float100 = FloatOf<100>;

struct PerfectSquare : std::domain_error {
    explicit PerfectSquare(const Int& n)
        : std::domain_error("perfect square radicand: " + n.str()) {}
};

// Continued fraction of sqrt(n) = [a0; period repeating].
struct ContinuedFraction {
    Int a0;
    std::vector<Int> period;
};

inline ContinuedFraction cf_sqrt(const Int& n)
{
    if (n < 2) throw std::invalid_argument("cf_sqrt: need n >= 2");
    if (is_square(n)) throw PerfectSquare(n);
    ContinuedFraction cf;
    cf.a0 = isqrt(n);
    // State (P, Q) describes (P + sqrt n)/Q; the expansion of sqrt(n) is
    // periodic from the second term on, so the period closes when the state
    // after the first step recurs.
    Int P = cf.a0, Q = n - cf.a0 * cf.a0;
    const Int P1 = P, Q1 = Q;
    do {
        Int a = (cf.a0 + P) / Q;
        cf.period.push_back(a);
        P = a * Q - P;
        Q = (n - P * P) / Q;
    } while (!(P == P1 && Q == Q1));
    return cf;
}

// Fundamental unit (x + y sqrt n)/sigma written over the radicand n of the
// field, sigma in {1, 2}, with x, y > 0 and x^2 - n y^2 = norm * sigma^2.
struct UnitData {
    Int d;       // field discriminant
    Int n;       // radicand
    Int x, y;
    int sigma = 1;
    int norm = 1;
    Float50 regulator;  // log of the unit
};

template <unsigned Digits>
FloatOf<Digits> regulator_at(const UnitData& u)
{
    using F = FloatOf<Digits>;
    F val = (F(u.x) + F(u.y) * sqrt(F(u.n))) / u.sigma;
    return log(val);
}

inline UnitData fundamental_unit(const FundamentalDiscriminant& F)
{
    if (F.d <= 0) throw std::invalid_argument("fundamental_unit: discriminant must be positive");
    const Int n = F.radicand();
    const Int a0 = isqrt(n);
    const bool odd_disc = detail::mod4(F.d) == 1;

    // Expand omega = (P + sqrt n)/Q, omega = sqrt n for even discriminants
    // and (1 + sqrt n)/2 for odd ones, until the state recurs.
    Int P = odd_disc ? 1 : 0;
    Int Q = odd_disc ? 2 : 1;

    // v < sqrt(n), exact; n is never a square here since it is squarefree.
    auto below_sqrt = [&](const Int& v) { return v < 0 || v * v < n; };
    auto partial_quotient = [&](const Int& Pk, const Int& Qk) {
        Int t = detail::floor_div(Int(Pk + a0), Qk);
        auto ok = [&](const Int& u) {
            Int lo = u * Qk - Pk, hi = (u + 1) * Qk - Pk;
            return Qk > 0 ? (below_sqrt(lo) && !below_sqrt(hi))
                          : (!below_sqrt(lo) && below_sqrt(hi));
        };
        while (!ok(t)) {
            bool too_big = Qk > 0 ? !below_sqrt(t * Qk - Pk) : below_sqrt(t * Qk - Pk);
            t += too_big ? -1 : 1;
        }
        return t;
    };

    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::vector<Int> quotients;
    std::vector<std::pair<Int, Int>> states;
    std::size_t start;
    for (;;) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) { start = it->second; break; }
        seen.emplace(state, states.size());
        states.push_back(state);
        Int a = partial_quotient(P, Q);
        quotients.push_back(a);
        P = a * Q - P;
        Q = (n - P * P) / Q;
        if (states.size() > 10000000) throw std::logic_error("fundamental_unit: expansion failed to close");
    }

    // Convergent matrix of one full period of the purely periodic tail
    // omega_s: the unit is q * omega_s + q' where (q, q') is the bottom row.
    Int p = 1, pp = 0, q = 0, qq = 1;
    for (std::size_t k = start; k < quotients.size(); ++k) {
        const Int& a = quotients[k];
        Int np = a * p + pp, nq = a * q + qq;
        pp = p; p = np;
        qq = q; q = nq;
    }
    const Int Ps = states[start].first, Qs = states[start].second;
    Int X = q * Ps + qq * Qs;
    Int Y = q;
    const Int den = Qs;

    UnitData u;
    u.d = F.d;
    u.n = n;
    if (odd_disc) {
        Int x2 = 2 * X, y2 = 2 * Y;
        if (x2 % den != 0 || y2 % den != 0)
            throw std::logic_error("fundamental_unit: unit not in the maximal order");
        u.x = x2 / den;
        u.y = y2 / den;
        u.sigma = 2;
        if (u.x % 2 == 0 && u.y % 2 == 0) { u.x /= 2; u.y /= 2; u.sigma = 1; }
    } else {
        if (X % den != 0 || Y % den != 0)
            throw std::logic_error("fundamental_unit: unit not in the maximal order");
        u.x = X / den;
        u.y = Y / den;
        u.sigma = 1;
    }

    Int nrm = u.x * u.x - n * u.y * u.y;
    Int ss = Int(u.sigma) * u.sigma;
    if (nrm == ss) u.norm = 1;
    else if (nrm == -ss) u.norm = -1;
    else throw std::logic_error("fundamental_unit: norm is not a unit");
    std::size_t period_len = quotients.size() - start;
    if (u.norm != (period_len % 2 == 0 ? 1 : -1))
        throw std::logic_error("fundamental_unit: norm disagrees with period parity");
    if (u.x <= 0 || u.y <= 0) throw std::logic_error("fundamental_unit: unit not > 1");

    u.regulator = regulator_at<50>(u);
    return u;
}

enum class Family { n2p1, f4n2m1 };

inline const char* family_name(Family f)
{
    return f == Family::n2p1 ? "n2p1" : "4n2m1";
}

inline Int family_value(Family fam, std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("family_value: need n >= 1");
    Int m = n;
    return fam == Family::n2p1 ? Int(m * m + 1) : Int(4 * m * m - 1);
}

enum class FamilyCheck { holds, fails, skipped };

// Does the closed-form candidate unit (n + sqrt(n^2+1), resp.
// 2n + sqrt(4n^2-1)) equal the fundamental unit of its field? Skipped when
// the radicand is not squarefree, since then it generates the wrong field.
inline FamilyCheck check_family(Family fam, std::int64_t n)
{
    Int r = family_value(fam, n);
    if (r < 2 || !is_squarefree(r)) return FamilyCheck::skipped;
    UnitData u = fundamental_unit(discriminant_of_radicand(r));
    Int want_x = fam == Family::n2p1 ? Int(n) : Int(2 * n);
    bool holds = u.sigma == 1 && u.y == 1 && u.x == want_x;
    return holds ? FamilyCheck::holds : FamilyCheck::fails;
}

inline FamilyCheck check_family_n2p1(std::int64_t n) { return check_family(Family::n2p1, n); }
inline FamilyCheck check_family_4n2m1(std::int64_t n) { return check_family(Family::f4n2m1, n); }

// log R / log sqrt(d) for the family field at n; the slow regulator growth
// of these families shows up as this ratio sinking with n.
inline double regulator_ratio(std::int64_t n, Family fam)
{
    Int r = family_value(fam, n);
    if (r < 2) throw NotSquarefree(r);
    if (!is_squarefree(r)) throw NotSquarefree(r);
    FundamentalDiscriminant F = discriminant_of_radicand(r);
    UnitData u = fundamental_unit(F);
    Float50 ratio = log(u.regulator) / (log(Float50(F.d)) / 2);
    return static_cast<double>(ratio);
}

} // namespace polya

#endif
