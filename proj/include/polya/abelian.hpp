#ifndef POLYA_ABELIAN_HPP
#define POLYA_ABELIAN_HPP

// Abelian number fields presented as subgroups H of (Z/mZ)*: degree and
// conductor by kernel arithmetic, Dirichlet characters as exponent vectors
// over a cyclic decomposition, an exact per-prime discriminant breakdown, and
// an independent conductor-product oracle it must match. Relative class
// numbers h^- of prime cyclotomic fields come from the classical product over
// odd characters, evaluated in high-precision floating point and rounded.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <polya/intarith.hpp>
#include <polya/units.hpp>

namespace polya {

using Rat = boost::multiprecision::cpp_rational;

struct NotAUnit : std::domain_error {
    NotAUnit() : std::domain_error("make_abelian: generator is not a unit mod m") {}
};
struct PrimeNotInConductor : std::domain_error {
    PrimeNotInConductor() : std::domain_error("u_exponent: prime does not divide the conductor") {}
};
struct NonIntegralDiscriminant : std::logic_error {
    NonIntegralDiscriminant() : std::logic_error("discriminant_breakdown: non-integral exponent") {}
};
struct DiscriminantOne : std::domain_error {
    DiscriminantOne() : std::domain_error("degree_over_logdisc: |d| = 1 has no log scale") {}
};
struct PrecisionLoss : std::runtime_error {
    explicit PrecisionLoss(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::int64_t mul_mod_ll(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t pow_mod_ll(std::int64_t b, std::int64_t e, std::int64_t m)
{
    if (m == 1) return 0;
    std::int64_t r = 1;
    b %= m;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mul_mod_ll(r, b, m);
        b = mul_mod_ll(b, b, m);
    }
    return r;
}

inline std::vector<std::int64_t> divisors_ll(std::int64_t n)
{
    std::vector<std::int64_t> divs{1};
    for (const auto& [P, k] : factorize(Int(n))) {
        std::int64_t p = P.convert_to<std::int64_t>();
        std::size_t base = divs.size();
        std::int64_t pe = 1;
        for (std::int64_t e = 1; e <= k; ++e) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// smallest primitive root mod p^a for odd prime p (valid for every a >= 1)
inline std::int64_t primitive_root_odd(std::int64_t p, std::int64_t pa)
{
    std::vector<std::int64_t> qs;
    for (const auto& [q, k] : factorize(Int(p - 1))) {
        (void)k;
        qs.push_back(q.convert_to<std::int64_t>());
    }
    std::int64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (std::int64_t q : qs)
            if (pow_mod_ll(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) break;
    }
    if (pa > p && pow_mod_ll(g, p - 1, p * p) == 1) g += p;
    return g % pa;
}

// (Z/mZ)* with a fixed cyclic decomposition and per-element exponent vectors
struct UnitGroup {
    std::int64_t m = 1;
    std::vector<std::int64_t> gens, ords;
    std::vector<std::int64_t> elements;                       // ascending
    std::map<std::int64_t, std::vector<std::int64_t>> expo;   // element -> vector

    std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
    std::int64_t identity() const { return 1 % m; }
};

inline UnitGroup build_unit_group(std::int64_t m)
{
    if (m < 1) throw std::invalid_argument("build_unit_group: m must be >= 1");
    UnitGroup G;
    G.m = m;
    for (std::int64_t x = 0; x < m; ++x)
        if (std::gcd(x, m) == 1) G.elements.push_back(x);
    if (m == 1) G.elements = {0};

    // one or two cyclic factors per prime power, generators lifted by CRT
    for (const auto& [P, k] : factorize(Int(m))) {
        std::int64_t p = P.convert_to<std::int64_t>();
        std::int64_t pa = 1;
        for (std::int64_t e = 0; e < k; ++e) pa *= p;
        std::int64_t rest = m / pa;
        auto lift = [&](std::int64_t r) {     // x = r mod pa, x = 1 mod rest
            if (rest == 1) return r % m;
            Int inv = inv_mod(Int(rest % pa), Int(pa));
            std::int64_t x = mul_mod_ll(mul_mod_ll(rest % m, inv.convert_to<std::int64_t>(), m),
                                        r % m, m);
            std::int64_t fix = mul_mod_ll(pa % m, inv_mod(Int(pa % rest), Int(rest)).convert_to<std::int64_t>() % m, m);
            return (x + fix) % m;
        };
        if (p == 2) {
            if (k == 1) continue;             // (Z/2)* is trivial
            G.gens.push_back(lift(pa - 1));   // -1
            G.ords.push_back(2);
            if (k >= 3) {
                G.gens.push_back(lift(5));
                G.ords.push_back(pa / 4);
            }
        } else {
            G.gens.push_back(lift(primitive_root_odd(p, pa)));
            G.ords.push_back(pa / p * (p - 1));
        }
    }

    // fill the exponent table by walking the whole box of exponent tuples
    std::size_t r = G.gens.size();
    std::vector<std::int64_t> e(r, 0);
    for (;;) {
        std::int64_t x = G.identity();
        for (std::size_t j = 0; j < r; ++j)
            x = mul_mod_ll(x, pow_mod_ll(G.gens[j], e[j], m), m);
        if (!G.expo.emplace(x, e).second)
            throw std::logic_error("build_unit_group: decomposition is not direct");
        std::size_t j = 0;
        while (j < r && ++e[j] == G.ords[j]) e[j++] = 0;
        if (j == r) break;
    }
    if (G.expo.size() != G.elements.size())
        throw std::logic_error("build_unit_group: box does not cover the group");
    return G;
}

inline std::vector<std::int64_t> closure_mod(std::int64_t m, std::vector<std::int64_t> gens)
{
    std::set<std::int64_t> H{1 % m};
    std::vector<std::int64_t> queue(H.begin(), H.end());
    while (!queue.empty()) {
        std::int64_t x = queue.back();
        queue.pop_back();
        for (std::int64_t g : gens) {
            std::int64_t y = mul_mod_ll(x, ((g % m) + m) % m, m);
            if (H.insert(y).second) queue.push_back(y);
        }
    }
    return {H.begin(), H.end()};
}

} // namespace detail

struct AbelianField {
    std::int64_t conductor = 1;        // construction normalizes m down to it
    std::vector<std::int64_t> H;       // sorted subgroup of (Z/conductor)*
    std::int64_t degree = 1;
    detail::UnitGroup units;           // group data for m = conductor
};

inline AbelianField make_abelian(std::int64_t m, const std::vector<std::int64_t>& gens)
{
    if (m < 1) throw std::invalid_argument("make_abelian: m must be >= 1");
    for (std::int64_t g : gens)
        if (std::gcd(((g % m) + m) % m, m) != 1) throw NotAUnit();

    std::vector<std::int64_t> H = detail::closure_mod(m, gens);
    for (int pass = 0;; ++pass) {
        detail::UnitGroup G = detail::build_unit_group(m);
        // conductor: least f | m whose reduction kernel sits inside H
        std::int64_t f = m;
        for (std::int64_t d : detail::divisors_ll(m)) {
            bool inside = true;
            for (std::int64_t x : G.elements)
                if (x % d == 1 % d && !std::binary_search(H.begin(), H.end(), x)) {
                    inside = false;
                    break;
                }
            if (inside) { f = d; break; }
        }
        if (f == m) {
            AbelianField K;
            K.conductor = m;
            K.H = H;
            K.degree = G.order() / static_cast<std::int64_t>(H.size());
            K.units = std::move(G);
            return K;
        }
        if (pass > 0) throw std::logic_error("make_abelian: conductor failed to stabilize");
        std::set<std::int64_t> Hf;
        for (std::int64_t x : H) Hf.insert(x % f);
        H.assign(Hf.begin(), Hf.end());
        m = f;
    }
}

struct DirichletCharacter {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> expo;    // one exponent per cyclic factor
    std::int64_t conductor = 1;
    bool odd = false;                  // value at -1 is -1
};

namespace detail {

// character value as a numerator over lcm(orders): chi(x) = exp(2*pi*i*t/L)
inline std::int64_t char_exponent(const UnitGroup& G, const std::vector<std::int64_t>& c,
                                  std::int64_t L, std::int64_t x)
{
    const auto& e = G.expo.at(x);
    std::int64_t t = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
        t = (t + static_cast<__int128>(c[j]) * e[j] % L * (L / G.ords[j])) % L;
    return t;
}

} // namespace detail

// the degree-many characters trivial on H, in box order of exponent vectors
inline std::vector<DirichletCharacter> characters(const AbelianField& K)
{
    const auto& G = K.units;
    std::int64_t L = 1;
    for (std::int64_t o : G.ords) L = std::lcm(L, o);
    std::size_t r = G.gens.size();

    std::vector<DirichletCharacter> out;
    std::vector<std::int64_t> c(r, 0);
    for (;;) {
        bool trivial = true;
        for (std::int64_t h : K.H)
            if (detail::char_exponent(G, c, L, h) != 0) { trivial = false; break; }
        if (trivial) {
            DirichletCharacter chi;
            chi.modulus = K.conductor;
            chi.expo = c;
            chi.conductor = K.conductor;
            for (std::int64_t d : detail::divisors_ll(K.conductor)) {
                bool through = true;
                for (std::int64_t x : G.elements)
                    if (x % d == 1 % d && detail::char_exponent(G, c, L, x) != 0) {
                        through = false;
                        break;
                    }
                if (through) { chi.conductor = d; break; }
            }
            chi.odd = K.conductor > 2 &&
                      detail::char_exponent(G, c, L, K.conductor - 1) != 0;
            out.push_back(std::move(chi));
        }
        std::size_t j = 0;
        while (j < r && ++c[j] == G.ords[j]) c[j++] = 0;
        if (j == r) break;
    }
    if (static_cast<std::int64_t>(out.size()) != K.degree)
        throw std::logic_error("characters: dual count does not match the degree");
    return out;
}

// index of the compositum with the p-depleted cyclotomic field over that
// field, divided by p^(alpha-1)
inline Rat u_exponent(const AbelianField& K, std::int64_t p)
{
    if (p < 2 || K.conductor % p != 0) throw PrimeNotInConductor();
    std::int64_t mprime = K.conductor;
    std::int64_t alpha = 0;
    while (mprime % p == 0) {
        mprime /= p;
        ++alpha;
    }
    std::set<std::int64_t> HK;
    for (std::int64_t x : K.units.elements)
        if (x % mprime == 1 % mprime)
            for (std::int64_t h : K.H) HK.insert(detail::mul_mod_ll(h, x, K.conductor));
    Int num(HK.size() / K.H.size());
    Int den = pow(Int(p), static_cast<unsigned>(alpha - 1));
    return Rat(num, den);
}

struct BreakdownEntry {
    std::int64_t p = 2;
    std::int64_t alpha = 1;
    Rat u;
    Rat lambda;
    Int exponent;      // of p in |d|, already multiplied by the degree
};

struct DiscriminantBreakdown {
    std::vector<BreakdownEntry> entries;
    Int disc_abs = 1;
};

// exact per-prime exponents of |d|; the result must be an integer, and the
// independent character-conductor oracle below must agree with it
inline DiscriminantBreakdown discriminant_breakdown(const AbelianField& K)
{
    DiscriminantBreakdown out;
    for (const auto& [P, alpha] : factorize(Int(K.conductor))) {
        BreakdownEntry ent;
        ent.p = P.convert_to<std::int64_t>();
        ent.alpha = alpha;
        ent.u = u_exponent(K, ent.p);
        std::int64_t g = ent.p == 2 ? 2 : 1;
        Int Pg = pow(Int(ent.p), static_cast<unsigned>(ent.alpha - g));
        Int Pg1 = Pg - 1;
        ent.lambda = (Rat(Pg1) + Rat(ent.p - 1) / ent.u) / (Rat(Pg) * (ent.p - 1));
        Rat e = Rat(K.degree) * (Rat(ent.alpha) - ent.lambda);
        if (denominator(e) != 1 || e < 0) throw NonIntegralDiscriminant();
        ent.exponent = numerator(e);
        out.disc_abs *= pow(Int(ent.p), ent.exponent.convert_to<unsigned>());
        out.entries.push_back(std::move(ent));
    }
    return out;
}

// conductor-discriminant: |d| as the product of the conductors of all
// characters of the field
inline Int discriminant_oracle(const AbelianField& K)
{
    Int prod = 1;
    for (const auto& chi : characters(K)) prod *= chi.conductor;
    return prod;
}

inline bool lambda_bound_check(const AbelianField& K)
{
    for (const auto& ent : discriminant_breakdown(K).entries)
        if (ent.lambda > 2) return false;
    return true;
}

inline double degree_over_logdisc(const AbelianField& K)
{
    Int d = discriminant_breakdown(K).disc_abs;
    if (d == 1) throw DiscriminantOne();
    Float50 ld = log(Float50(d));
    return (Float50(K.degree) / ld).convert_to<double>();
}

namespace detail {

// h^- product over odd characters mod p, paired with conjugates so only the
// possible real character contributes a sign
template <unsigned Digits>
FloatOf<Digits> hminus_value(std::int64_t p)
{
    using F = FloatOf<Digits>;
    UnitGroup G = build_unit_group(p);
    std::int64_t n = p - 1;
    std::vector<std::int64_t> ind(p, 0);
    for (std::int64_t a : G.elements) ind[a] = G.expo.at(a)[0];

    const F two_pi = 2 * acos(F(-1));
    F prod = F(2) * p;
    for (std::int64_t k = 1; 2 * k < n; k += 2) {
        F re = 0, im = 0;
        for (std::int64_t a = 1; a < p; ++a) {
            F ang = two_pi * F(k * ind[a] % n) / n;
            re += a * cos(ang);
            im += a * sin(ang);
        }
        prod *= (re * re + im * im) / (F(4) * p * p);
    }
    if (p % 4 == 3) {   // self-conjugate odd character: values are just +-1
        F s = 0;
        for (std::int64_t a = 1; a < p; ++a)
            s += ind[a] % 2 == 0 ? F(a) : F(-a);
        prod *= -s / (F(2) * p);
    }
    return prod;
}

template <unsigned Digits>
bool hminus_round(std::int64_t p, Int& out)
{
    using F = FloatOf<Digits>;
    F v = hminus_value<Digits>(p);
    F r = round(v);
    if (r < 1 || abs(v - r) >= F(1) / 1000000) return false;
    out = r.template convert_to<Int>();
    return true;
}

} // namespace detail

// relative class number of the p-th cyclotomic field, p an odd prime <= 100
inline Int hminus_cyclotomic(std::int64_t p)
{
    if (p < 3 || p > 100 || !is_prime(Int(p)))
        throw std::invalid_argument("hminus_cyclotomic: need an odd prime <= 100");
    Int h;
    if (detail::hminus_round<50>(p, h)) return h;
    if (detail::hminus_round<100>(p, h)) return h;
    throw PrecisionLoss("hminus_cyclotomic: residue above 1e-6 even at 100 digits");
}

struct HMinusRow {
    std::int64_t p = 3;
    Int hminus = 1;
    double ratio = 0.0;        // log h^- over log sqrt(|d|), |d| = p^(p-2)
    Int reg_ratio = 1;         // 2^((p-1)/2 - 1), quoted constant, not computed
};

inline std::vector<HMinusRow> hminus_ratio_table(const std::vector<std::int64_t>& ps)
{
    std::vector<HMinusRow> rows;
    for (std::int64_t p : ps) {
        HMinusRow row;
        row.p = p;
        row.hminus = hminus_cyclotomic(p);
        Float50 lh = log(Float50(row.hminus));
        Float50 ld = Float50(p - 2) / 2 * log(Float50(p));
        row.ratio = (lh / ld).convert_to<double>();
        row.reg_ratio = Int(1) << static_cast<unsigned>((p - 1) / 2 - 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace polya

#endif
