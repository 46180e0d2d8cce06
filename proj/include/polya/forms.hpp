#ifndef POLYA_FORMS_HPP
#define POLYA_FORMS_HPP

// Form class groups of quadratic fields, both signs of the discriminant.
//
// Conventions:
//   * definite (d < 0): forms have a > 0; (a, b, c) is reduced when
//     |b| <= a <= c and b >= 0 whenever |b| = a or a = c. One reduced form
//     per class.
//   * indefinite (d > 0, nonsquare): (a, b, c) is reduced when
//     sqrt(d) - b < 2|a| < sqrt(d) + b, equivalently 0 < b < sqrt(d) and the
//     window condition on |a|. Classes are the rho-cycles of reduced forms;
//     the narrow group has one cycle per class, the wide group folds each
//     class with its negated-principal translate when the fundamental unit
//     has norm +1.
//
// Composition follows the ideal product: the class of
// [a1, (-b1+sqrt d)/2] * [a2, (-b2+sqrt d)/2] is read off a Z-basis of the
// product module, with content e = gcd(a1, a2, (b1+b2)/2).

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <polya/quadfield.hpp>
#include <polya/quadform.hpp>
#include <polya/units.hpp>

namespace polya {

struct NotPrimitive : std::domain_error {
    NotPrimitive() : std::domain_error("form is not primitive") {}
};

struct WrongSign : std::domain_error {
    explicit WrongSign(const std::string& what) : std::domain_error(what) {}
};

struct DiscriminantMismatch : std::domain_error {
    DiscriminantMismatch(const Int& d1, const Int& d2)
        : std::domain_error("discriminants differ: " + d1.str() + " vs " + d2.str()) {}
};

struct OutOfRange : std::domain_error {
    explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

// ---- reduction -------------------------------------------------------------

namespace detail {

template <class I>
I isqrt_any(const I& x)
{
    if constexpr (std::is_integral_v<I>)
        return isqrt_ll(x);
    else
        return isqrt(x);
}

// b shifted into (-a, a] mod 2a, c fixed up through the discriminant.
template <class I>
void normalize_definite(basic_quad_form<I>& f)
{
    I m2 = 2 * f.a;
    I r = f.b % m2;
    if (r < 0) r += m2;
    if (r > f.a) r -= m2;
    if (r != f.b) {
        I d = f.discriminant();
        f.b = r;
        f.c = (r * r - d) / (4 * f.a);
    }
}

template <class I>
basic_quad_form<I> reduce_definite_t(basic_quad_form<I> f)
{
    for (;;) {
        normalize_definite(f);
        if (f.a > f.c)
            f = {f.c, -f.b, f.a};
        else
            break;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

template <class I>
bool is_reduced_indefinite(const basic_quad_form<I>& f, const I& s)
{
    I aa = 2 * abs_any(f.a);
    return f.b >= 1 && f.b <= s && f.b + aa > s && aa <= s + f.b;
}

// One reduction step: the new leading coefficient is the old trailing one,
// the new middle coefficient is -b shifted into the reduction window of c.
template <class I>
basic_quad_form<I> rho_step(const basic_quad_form<I>& f, const I& d, const I& s)
{
    I cc = f.c;
    I m2 = 2 * abs_any(cc);
    I bound = abs_any(cc) > s ? abs_any(cc) : s;
    I r = (-f.b) % m2;
    if (r < 0) r += m2;
    r += floor_div(I(bound - r), m2) * m2;
    I cn = (r * r - d) / (4 * cc);
    return {cc, r, cn};
}

template <class I>
basic_quad_form<I> reduce_indefinite_t(basic_quad_form<I> f, const I& d, const I& s)
{
    for (int i = 0; i < 1000000; ++i) {
        if (is_reduced_indefinite(f, s)) return f;
        f = rho_step(f, d, s);
    }
    throw std::logic_error("reduce_indefinite: no reduced form reached");
}

// The rho-orbit of a reduced form, starting at f.
template <class I>
std::vector<basic_quad_form<I>> cycle_of(const basic_quad_form<I>& f, const I& d, const I& s)
{
    std::vector<basic_quad_form<I>> cyc;
    basic_quad_form<I> cur = f;
    do {
        cyc.push_back(cur);
        cur = rho_step(cur, d, s);
    } while (!(cur == f));
    return cyc;
}

template <class I>
basic_quad_form<I> principal_form_t(const I& d)
{
    if (d < 0) {
        I b0 = ((d % 2) != 0) ? I(1) : I(0);
        return {I(1), b0, (b0 * b0 - d) / 4};
    }
    I s = isqrt_any(d);
    I b0 = s;
    if ((b0 % 2 != 0) != (d % 2 != 0)) b0 -= 1;
    return {I(1), b0, (b0 * b0 - d) / 4};
}

} // namespace detail

inline QuadForm principal_form(const Int& d) { return detail::principal_form_t(d); }

// Reduction of a positive definite form.
inline QuadForm reduce_definite(const QuadForm& f)
{
    if (f.discriminant() >= 0) throw WrongSign("reduce_definite: discriminant must be negative");
    if (f.a <= 0) throw WrongSign("reduce_definite: form must be positive definite");
    if (!f.primitive()) throw NotPrimitive();
    return detail::reduce_definite_t(f);
}

// Reduction dispatching on the sign; rejects square discriminants.
inline QuadForm reduce(const QuadForm& f)
{
    Int d = f.discriminant();
    if (d < 0) {
        if (f.a <= 0) throw WrongSign("reduce: form must be positive definite");
        return detail::reduce_definite_t(f);
    }
    if (d == 0 || is_square(d)) throw std::invalid_argument("reduce: degenerate discriminant");
    Int s = isqrt(d);
    return detail::reduce_indefinite_t(f, d, s);
}

// ---- composition -----------------------------------------------------------

namespace detail {

template <class I>
I ext_gcd_t(const I& a, const I& b, I& x, I& y)
{
    I old_r = a, r = b;
    I old_x = 1, cur_x = 0;
    I old_y = 0, cur_y = 1;
    while (r != 0) {
        I q = old_r / r;
        I t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
        t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Composition of primitive forms of equal discriminant d. Inputs must have
// positive leading coefficients; the int64 instantiation overflows past
// |d| ~ 1e7, callers on machine words stay well below that.
template <class I>
basic_quad_form<I> compose_raw(const basic_quad_form<I>& f, const basic_quad_form<I>& g, const I& d)
{
    I beta = (f.b + g.b) / 2;
    I u0, v0, t, w;
    I g0 = ext_gcd_t(f.a, g.a, u0, v0);
    I e = ext_gcd_t(g0, beta, t, w);
    I u = u0 * t, v = v0 * t;
    I a3 = (f.a / e) * (g.a / e);
    I num = u * f.a * g.b + v * g.a * f.b + w * ((f.b * g.b + d) / 2);
    I m2 = 2 * a3;
    I b3 = (num / e) % m2;
    if (b3 < 0) b3 += m2;
    if (b3 > a3) b3 -= m2;
    I c3 = (b3 * b3 - d) / (4 * a3);
    return {a3, b3, c3};
}

template <class I>
basic_quad_form<I> compose_reduced(basic_quad_form<I> f, basic_quad_form<I> g, const I& d, const I& s)
{
    if (d > 0) {
        if (f.a < 0) f = rho_step(f, d, s);
        if (g.a < 0) g = rho_step(g, d, s);
        return reduce_indefinite_t(compose_raw(f, g, d), d, s);
    }
    return reduce_definite_t(compose_raw(f, g, d));
}

} // namespace detail

// Gauss composition; returns a reduced representative of the product class.
inline QuadForm compose(const QuadForm& f, const QuadForm& g)
{
    Int d = f.discriminant();
    if (g.discriminant() != d) throw DiscriminantMismatch(d, g.discriminant());
    if (!f.primitive() || !g.primitive()) throw NotPrimitive();
    QuadForm fr = reduce(f), gr = reduce(g);
    Int s = d > 0 ? isqrt(d) : Int(0);
    return detail::compose_reduced(fr, gr, d, s);
}

inline bool is_principal(const QuadForm& f)
{
    if (!f.primitive()) throw NotPrimitive();
    Int d = f.discriminant();
    if (d < 0) {
        if (f.a <= 0) throw WrongSign("is_principal: form must be positive definite");
        return detail::reduce_definite_t(f) == principal_form(d);
    }
    if (d == 0 || is_square(d)) throw std::invalid_argument("is_principal: degenerate discriminant");
    Int s = isqrt(d);
    QuadForm r = detail::reduce_indefinite_t(f, d, s);
    QuadForm p0 = principal_form(d);
    QuadForm cur = p0;
    do {
        if (cur == r) return true;
        cur = detail::rho_step(cur, d, s);
    } while (!(cur == p0));
    return false;
}

// ---- enumeration of reduced forms ------------------------------------------

namespace detail {

template <class I>
std::vector<basic_quad_form<I>> reduced_forms_definite(const I& d)
{
    std::vector<basic_quad_form<I>> out;
    I D = -d;
    I bmax = isqrt_any(I(D / 3));
    for (I b = (D % 2 == 0) ? I(0) : I(1); b <= bmax; b += 2) {
        I ac = (b * b + D) / 4;
        I amax = isqrt_any(ac);
        for (I a = (b > 1 ? b : I(1)); a <= amax; ++a) {
            if (ac % a != 0) continue;
            I c = ac / a;
            basic_quad_form<I> f{a, b, c};
            if (!f.primitive()) continue;
            out.push_back(f);
            if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
        }
    }
    return out;
}

template <class I>
std::int64_t count_reduced_definite(const I& d)
{
    std::int64_t h = 0;
    I D = -d;
    I bmax = isqrt_any(I(D / 3));
    for (I b = (D % 2 == 0) ? I(0) : I(1); b <= bmax; b += 2) {
        I ac = (b * b + D) / 4;
        I amax = isqrt_any(ac);
        for (I a = (b > 1 ? b : I(1)); a <= amax; ++a) {
            if (ac % a != 0) continue;
            I c = ac / a;
            if (!basic_quad_form<I>{a, b, c}.primitive()) continue;
            h += (b > 0 && b < a && a < c) ? 2 : 1;
        }
    }
    return h;
}

template <class I>
std::vector<basic_quad_form<I>> reduced_forms_indefinite(const I& d)
{
    std::vector<basic_quad_form<I>> out;
    I s = isqrt_any(d);
    for (I b = (d % 2 == 0) ? I(2) : I(1); b <= s; b += 2) {
        I m = (d - b * b) / 4;
        I lo = (s - b) / 2 + 1;
        if (lo < 1) lo = 1;
        I hi = (s + b) / 2;
        for (I av = lo; av <= hi; ++av) {
            if (m % av != 0) continue;
            I cv = m / av;
            basic_quad_form<I> f{av, b, -cv};
            if (!f.primitive()) continue;
            out.push_back(f);
            out.push_back({-av, b, cv});
        }
    }
    return out;
}

} // namespace detail

// ---- abstract abelian group structure --------------------------------------

// Class group data: invariant factors d1 | d2 | ... | dk (each >= 2, product
// = order), one generator per factor, and exponent vectors for every class
// representative.
struct AbGroup {
    std::vector<QuadForm> generators;
    std::vector<std::int64_t> divisors;
    std::int64_t order = 1;
    std::map<QuadForm, std::vector<std::int64_t>> dlog;
};

inline std::string structure_string(const AbGroup& g)
{
    if (g.divisors.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < g.divisors.size(); ++i) {
        if (i) s += " x ";
        s += "C" + std::to_string(g.divisors[i]);
    }
    return s;
}

namespace detail {

using IndexMul = std::function<std::size_t(std::size_t, std::size_t)>;

inline std::size_t pow_idx(const IndexMul& mul, std::size_t g, std::int64_t e)
{
    std::size_t r = 0;
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, g);
    return r;
}

inline std::int64_t order_idx(const IndexMul& mul, std::size_t g)
{
    std::int64_t k = 1;
    std::size_t x = g;
    while (x != 0) { x = mul(x, g); ++k; }
    return k;
}

// Basis of a finite abelian group on indices 0..n-1 (0 = identity):
// independent generators with orders in a divisibility chain, largest first.
// A maximal-order element is split off, the quotient is handled recursively,
// and lifted quotient generators are corrected by a power of the split
// element so their order is preserved.
inline void abelian_basis(std::size_t n, const IndexMul& mul,
                          std::vector<std::size_t>& gens, std::vector<std::int64_t>& ords)
{
    gens.clear();
    ords.clear();
    if (n <= 1) return;

    std::int64_t emax = 1;
    std::size_t g = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::int64_t o = order_idx(mul, i);
        if (o > emax) { emax = o; g = i; }
    }
    gens.push_back(g);
    ords.push_back(emax);
    if (emax == static_cast<std::int64_t>(n)) return;

    // cosets modulo <g>, canonical element = smallest index in the coset
    std::vector<std::size_t> gpow(emax);
    gpow[0] = 0;
    for (std::int64_t i = 1; i < emax; ++i) gpow[i] = mul(gpow[i - 1], g);

    std::vector<std::size_t> coset_min(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t m = x;
        for (std::int64_t i = 1; i < emax; ++i) {
            std::size_t y = mul(x, gpow[i]);
            if (y < m) m = y;
        }
        coset_min[x] = m;
    }
    std::vector<std::size_t> coset_elems;   // canonical elements, identity's coset first
    std::map<std::size_t, std::size_t> coset_index;
    coset_elems.push_back(coset_min[0]);
    coset_index[coset_min[0]] = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (coset_index.emplace(coset_min[x], coset_elems.size()).second)
            coset_elems.push_back(coset_min[x]);
    }
    IndexMul qmul = [&, coset_elems](std::size_t i, std::size_t j) {
        return coset_index.at(coset_min[mul(coset_elems[i], coset_elems[j])]);
    };

    std::vector<std::size_t> qgens;
    std::vector<std::int64_t> qords;
    abelian_basis(coset_elems.size(), qmul, qgens, qords);

    for (std::size_t k = 0; k < qgens.size(); ++k) {
        std::size_t x = coset_elems[qgens[k]];
        std::int64_t m = qords[k];
        std::size_t xm = pow_idx(mul, x, m);
        // x^m lands in <g>; divide that power back out of x
        std::int64_t t = -1;
        for (std::int64_t i = 0; i < emax; ++i)
            if (gpow[i] == xm) { t = i; break; }
        if (t < 0 || t % m != 0)
            throw std::logic_error("abelian_basis: lifted generator misaligned");
        std::size_t adj = mul(x, gpow[(emax - t / m) % emax]);
        if (pow_idx(mul, adj, m) != 0)
            throw std::logic_error("abelian_basis: adjusted generator has wrong order");
        gens.push_back(adj);
        ords.push_back(m);
    }
}

// reps[0] must be the identity class.
inline AbGroup extract_structure(const std::vector<QuadForm>& reps, const IndexMul& mul)
{
    AbGroup out;
    out.order = static_cast<std::int64_t>(reps.size());
    std::vector<std::size_t> gens;
    std::vector<std::int64_t> ords;
    abelian_basis(reps.size(), mul, gens, ords);

    // ascending invariant factors
    std::vector<std::size_t> order_map(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) order_map[i] = gens.size() - 1 - i;
    out.divisors.resize(ords.size());
    out.generators.resize(ords.size());
    for (std::size_t i = 0; i < ords.size(); ++i) {
        out.divisors[order_map[i]] = ords[i];
        out.generators[order_map[i]] = reps[gens[i]];
    }
    for (std::size_t i = 1; i < out.divisors.size(); ++i)
        if (out.divisors[i] % out.divisors[i - 1] != 0)
            throw std::logic_error("extract_structure: invariant factors do not chain");

    // exponent table over the basis, ascending-divisor order
    std::vector<std::size_t> elem{0};
    std::vector<std::vector<std::int64_t>> expo{{}};
    for (std::size_t k = 0; k < out.divisors.size(); ++k) expo[0].push_back(0);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t pos = order_map[k];
        std::size_t gk = gens[k];
        std::size_t prev_count = elem.size();
        std::size_t run = 0;
        for (std::int64_t e = 1; e < ords[k]; ++e) {
            for (std::size_t i = 0; i < prev_count; ++i) {
                std::size_t idx = mul(elem[run * prev_count + i], gk);
                elem.push_back(idx);
                auto v = expo[run * prev_count + i];
                v[pos] += 1;
                expo.push_back(v);
            }
            ++run;
        }
    }
    if (elem.size() != reps.size())
        throw std::logic_error("extract_structure: exponent table size mismatch");
    for (std::size_t i = 0; i < elem.size(); ++i) {
        if (!out.dlog.emplace(reps[elem[i]], expo[i]).second)
            throw std::logic_error("extract_structure: exponent table collision");
    }
    return out;
}

} // namespace detail

// ---- class groups ----------------------------------------------------------

inline AbGroup class_group_definite(const FundamentalDiscriminant& F)
{
    if (F.d >= 0) throw WrongSign("class_group_definite: imaginary fields only");
    auto forms = detail::reduced_forms_definite<Int>(F.d);
    std::sort(forms.begin(), forms.end());
    QuadForm id = principal_form(F.d);
    std::vector<QuadForm> reps;
    reps.push_back(id);
    for (auto& f : forms)
        if (!(f == id)) reps.push_back(f);
    std::map<QuadForm, std::size_t> index;
    for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = i;
    Int d = F.d;
    detail::IndexMul mul = [reps, index, d](std::size_t i, std::size_t j) {
        return index.at(detail::compose_reduced(reps[i], reps[j], d, Int(0)));
    };
    return detail::extract_structure(reps, mul);
}

inline std::int64_t class_number_definite(const Int& d)
{
    if (d >= 0) throw WrongSign("class_number_definite: imaginary fields only");
    return detail::count_reduced_definite<Int>(d);
}

// Dirichlet's finite sum: for fundamental d < -4,
// h = |sum_{a=1}^{|d|-1} (d|a) a| / |d|; the two unit-rich discriminants
// -3 and -4 are tabulated.
inline std::int64_t class_number_analytic(const FundamentalDiscriminant& F)
{
    const Int& d = F.d;
    if (d >= 0) throw WrongSign("class_number_analytic: imaginary fields only");
    if (d == -3 || d == -4) return 1;

    constexpr std::int64_t sieve_limit = 1 << 21;
    if (d >= -sieve_limit) {
        Int Dbig = -d;
        std::int64_t D = Dbig.convert_to<std::int64_t>();
        std::int64_t dd = d.convert_to<std::int64_t>();
        // smallest prime factors up to the shared ceiling, built once
        static const std::vector<std::int32_t> spf = [] {
            std::vector<std::int32_t> t(sieve_limit + 1, 0);
            for (std::int64_t i = 2; i <= sieve_limit; ++i) {
                if (t[i]) continue;
                for (std::int64_t j = i; j <= sieve_limit; j += i)
                    if (!t[j]) t[j] = static_cast<std::int32_t>(i);
            }
            return t;
        }();
        if (D < 7) throw std::logic_error("class_number_analytic: fundamental d below -4 expected");
        std::vector<std::int8_t> chi(D, 0);
        chi[1] = 1;
        std::int64_t sum = 0;
        for (std::int64_t a = 1; a < D; ++a) {
            if (a > 1) {
                std::int64_t p = spf[a];
                chi[a] = (a == p) ? static_cast<std::int8_t>(kronecker_ll(dd, p))
                                  : static_cast<std::int8_t>(chi[p] * chi[a / p]);
            }
            sum += a * chi[a];
        }
        if (sum % D != 0) throw std::logic_error("class_number_analytic: sum not divisible by |d|");
        std::int64_t h = sum / D;
        return h < 0 ? -h : h;
    }

    Int D = -d;
    Int sum = 0;
    for (Int a = 1; a < D; ++a) sum += a * kronecker(d, a);
    if (sum % D != 0) throw std::logic_error("class_number_analytic: sum not divisible by |d|");
    Int h = abs(sum) / D;
    return h.convert_to<std::int64_t>();
}

// ---- real quadratic: cycles, narrow and wide groups ------------------------

namespace detail {

struct RealClassSpace {
    Int d, s;
    std::vector<QuadForm> forms;          // all reduced forms, sorted
    std::map<QuadForm, int> cycle_id;
    std::vector<QuadForm> cycle_rep;      // canonical (minimal) form per cycle
    std::vector<QuadForm> cycle_pos;      // an a > 0 member per cycle
    int principal = -1;
    int neg_principal = -1;
    int unit_norm = 0;
    // wide classes: cycles folded with their negated-principal translate
    std::vector<int> wide_of;             // cycle id -> wide id
    std::vector<int> wide_cycle;          // wide id -> a representing cycle
    std::vector<QuadForm> wide_rep;       // canonical form per wide class

    int ncycles() const { return static_cast<int>(cycle_rep.size()); }
    int nwide() const { return static_cast<int>(wide_cycle.size()); }

    int mul_cycles(int i, int j) const
    {
        QuadForm h = compose_reduced(cycle_pos[i], cycle_pos[j], d, s);
        return cycle_id.at(h);
    }
    int mul_wide(int i, int j) const
    {
        return wide_of[mul_cycles(wide_cycle[i], wide_cycle[j])];
    }
    int wide_class_of(const QuadForm& f) const
    {
        return wide_of[cycle_id.at(reduce_indefinite_t(f, d, s))];
    }
};

inline RealClassSpace build_real_space(const FundamentalDiscriminant& F)
{
    RealClassSpace rs;
    rs.d = F.d;
    rs.s = isqrt(F.d);
    rs.forms = reduced_forms_indefinite<Int>(F.d);
    std::sort(rs.forms.begin(), rs.forms.end());

    for (const auto& f : rs.forms) {
        if (rs.cycle_id.count(f)) continue;
        int id = rs.ncycles();
        QuadForm mn = f, pos = f;
        bool have_pos = f.a > 0;
        for (const auto& g : cycle_of(f, rs.d, rs.s)) {
            rs.cycle_id[g] = id;
            if (g < mn) mn = g;
            if (g.a > 0 && (!have_pos || g < pos)) { pos = g; have_pos = true; }
        }
        if (!have_pos) throw std::logic_error("real cycle with no positive lead");
        rs.cycle_rep.push_back(mn);
        rs.cycle_pos.push_back(pos);
    }

    rs.principal = rs.cycle_id.at(principal_form(F.d));
    QuadForm p0 = principal_form(F.d);
    QuadForm neg{Int(-1), p0.b, (p0.b * p0.b - F.d) / Int(-4)};
    rs.neg_principal = rs.cycle_id.at(neg);

    rs.unit_norm = fundamental_unit(F).norm;
    if ((rs.unit_norm == -1) != (rs.neg_principal == rs.principal))
        throw std::logic_error("unit norm disagrees with the negated principal cycle");

    rs.wide_of.assign(rs.ncycles(), -1);
    for (int i = 0; i < rs.ncycles(); ++i) {
        if (rs.wide_of[i] >= 0) continue;
        int j = rs.unit_norm == -1 ? i : rs.mul_cycles(i, rs.neg_principal);
        int w = rs.nwide();
        rs.wide_of[i] = w;
        rs.wide_of[j] = w;
        int rc = (rs.cycle_rep[i] < rs.cycle_rep[j]) ? i : j;
        rs.wide_cycle.push_back(rc);
        rs.wide_rep.push_back(rs.cycle_rep[rc]);
    }
    return rs;
}

// reps with the identity first, the rest in canonical order
inline std::vector<std::size_t> identity_first(std::size_t n, std::size_t id)
{
    std::vector<std::size_t> order;
    order.push_back(id);
    for (std::size_t i = 0; i < n; ++i)
        if (i != id) order.push_back(i);
    return order;
}

} // namespace detail

struct RealClassGroups {
    AbGroup narrow;
    AbGroup wide;
    int unit_norm = 0;
};

inline RealClassGroups class_group_real(const FundamentalDiscriminant& F)
{
    if (F.d <= 0) throw WrongSign("class_group_real: real fields only");
    auto rs = detail::build_real_space(F);

    RealClassGroups out;
    out.unit_norm = rs.unit_norm;

    {
        auto order = detail::identity_first(rs.ncycles(), rs.principal);
        std::vector<std::size_t> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        std::vector<QuadForm> reps;
        for (auto idx : order) reps.push_back(rs.cycle_rep[idx]);
        detail::IndexMul mul = [&rs, order, pos](std::size_t i, std::size_t j) {
            return pos[rs.mul_cycles(static_cast<int>(order[i]), static_cast<int>(order[j]))];
        };
        out.narrow = detail::extract_structure(reps, mul);
    }
    {
        auto order = detail::identity_first(rs.nwide(), rs.wide_of[rs.principal]);
        std::vector<std::size_t> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        std::vector<QuadForm> reps;
        for (auto idx : order) reps.push_back(rs.wide_rep[idx]);
        detail::IndexMul mul = [&rs, order, pos](std::size_t i, std::size_t j) {
            return pos[rs.mul_wide(static_cast<int>(order[i]), static_cast<int>(order[j]))];
        };
        out.wide = detail::extract_structure(reps, mul);
    }
    return out;
}

} // namespace polya

#endif
