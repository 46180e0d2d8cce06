#ifndef POLYA_POLYA_HPP
#define POLYA_POLYA_HPP

// The Polya group of a quadratic field: the subgroup of the class group
// generated by the classes of the ramified prime ideals (equivalently, by
// the ambiguous forms attached to them). For imaginary fields its order is
// 2^(s-1) where s counts ramified primes; the quotient of the class group
// by the Polya group measures how far the field is from having a Polya
// basis of integer-valued polynomials in every degree.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <polya/forms.hpp>
#include <polya/polyagrp_detail.hpp>

namespace polya {

enum class RealClassKind { wide, narrow };

struct PolyaGroup {
    FundamentalDiscriminant field;
    std::vector<QuadForm> generators;   // reduced ambiguous forms, one per ramified prime
    AbGroup group;
    std::int64_t order = 1;
};

// 2^(s-1): the order of the Polya group of an imaginary quadratic field
// with s ramified primes.
inline Int hilbert_order(const FundamentalDiscriminant& F)
{
    if (F.d >= 0) throw WrongSign("hilbert_order: imaginary fields only");
    return Int(1) << (F.s() - 1);
}

inline PolyaGroup polya_group(const FundamentalDiscriminant& F,
                              RealClassKind kind = RealClassKind::wide)
{
    PolyaGroup out;
    out.field = F;

    if (F.d < 0) {
        std::vector<QuadForm> gens;
        for (const auto& ap : ambiguous_forms(F))
            gens.push_back(detail::reduce_definite_t(ap.form));
        out.generators = gens;

        QuadForm id = principal_form(F.d);
        Int d = F.d;
        auto mul = [d](const QuadForm& x, const QuadForm& y) {
            return detail::compose_reduced(x, y, d, Int(0));
        };
        auto closure = detail::subgroup_closure(id, gens, mul);
        out.order = static_cast<std::int64_t>(closure.size());
        detail::IndexMul imul = [&closure, &mul](std::size_t i, std::size_t j) {
            return detail::position_of(closure, mul(closure[i], closure[j]));
        };
        out.group = detail::extract_structure(closure, imul);
        return out;
    }

    auto rs = detail::build_real_space(F);
    std::vector<QuadForm> gens;
    std::vector<int> gen_ids;
    for (const auto& ap : ambiguous_forms(F)) {
        QuadForm r = detail::reduce_indefinite_t(ap.form, rs.d, rs.s);
        gens.push_back(r);
        int cyc = rs.cycle_id.at(r);
        gen_ids.push_back(kind == RealClassKind::wide ? rs.wide_of[cyc] : cyc);
    }
    out.generators = gens;

    int id0;
    std::function<int(int, int)> mul;
    std::function<QuadForm(int)> rep;
    if (kind == RealClassKind::wide) {
        id0 = rs.wide_of[rs.principal];
        mul = [&rs](int i, int j) { return rs.mul_wide(i, j); };
        rep = [&rs](int i) { return rs.wide_rep[i]; };
    } else {
        id0 = rs.principal;
        mul = [&rs](int i, int j) { return rs.mul_cycles(i, j); };
        rep = [&rs](int i) { return rs.cycle_rep[i]; };
    }
    auto closure = detail::subgroup_closure(id0, gen_ids, mul);
    out.order = static_cast<std::int64_t>(closure.size());
    std::vector<QuadForm> reps;
    for (int idx : closure) reps.push_back(rep(idx));
    detail::IndexMul imul = [&closure, &mul](std::size_t i, std::size_t j) {
        return detail::position_of(closure, mul(closure[i], closure[j]));
    };
    out.group = detail::extract_structure(reps, imul);
    return out;
}

// Class group modulo the Polya group.
inline AbGroup relative_class_group(const FundamentalDiscriminant& F,
                                    RealClassKind kind = RealClassKind::wide)
{
    if (F.d < 0) {
        auto forms = detail::reduced_forms_definite<Int>(F.d);
        std::sort(forms.begin(), forms.end());
        QuadForm id = principal_form(F.d);
        Int d = F.d;
        auto mul = [d](const QuadForm& x, const QuadForm& y) {
            return detail::compose_reduced(x, y, d, Int(0));
        };
        std::vector<QuadForm> gens;
        for (const auto& ap : ambiguous_forms(F))
            gens.push_back(detail::reduce_definite_t(ap.form));
        auto sub = detail::subgroup_closure(id, gens, mul);
        return detail::quotient_structure(forms, id, sub, mul);
    }

    auto rs = detail::build_real_space(F);
    std::vector<int> all, gen_ids;
    int id0;
    std::function<int(int, int)> mul;
    std::function<QuadForm(int)> rep;
    if (kind == RealClassKind::wide) {
        for (int i = 0; i < rs.nwide(); ++i) all.push_back(i);
        id0 = rs.wide_of[rs.principal];
        mul = [&rs](int i, int j) { return rs.mul_wide(i, j); };
        rep = [&rs](int i) { return rs.wide_rep[i]; };
        for (const auto& ap : ambiguous_forms(F))
            gen_ids.push_back(rs.wide_class_of(ap.form));
    } else {
        for (int i = 0; i < rs.ncycles(); ++i) all.push_back(i);
        id0 = rs.principal;
        mul = [&rs](int i, int j) { return rs.mul_cycles(i, j); };
        rep = [&rs](int i) { return rs.cycle_rep[i]; };
        for (const auto& ap : ambiguous_forms(F))
            gen_ids.push_back(rs.cycle_id.at(detail::reduce_indefinite_t(ap.form, rs.d, rs.s)));
    }
    auto sub = detail::subgroup_closure(id0, gen_ids, mul);
    return detail::quotient_structure_idx(all, id0, sub, mul, rep);
}

// |Po(K)| / sqrt(|d|) for imaginary fields, using the 2^(s-1) order.
inline double polya_ratio(const FundamentalDiscriminant& F)
{
    if (F.d >= 0) throw WrongSign("polya_ratio: imaginary fields only");
    double num = std::ldexp(1.0, F.s() - 1);
    return num / std::sqrt((-F.d).convert_to<double>());
}

} // namespace polya

#endif
