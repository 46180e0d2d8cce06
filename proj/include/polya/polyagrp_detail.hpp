#ifndef POLYA_POLYAGRP_DETAIL_HPP
#define POLYA_POLYAGRP_DETAIL_HPP

// Subgroup closures and quotient structures over an abstract class-group
// multiplication. Shared by the Polya group construction and the relative
// class group.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <polya/forms.hpp>

namespace polya {
namespace detail {

// Closure of the generators under mul; identity first, the rest ascending.
template <class E, class Mul>
std::vector<E> subgroup_closure(const E& id, const std::vector<E>& gens, Mul&& mul)
{
    std::set<E> seen{id};
    std::vector<E> queue{id};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& g : gens) {
            E h = mul(queue[qi], g);
            if (seen.insert(h).second) queue.push_back(h);
        }
    }
    std::vector<E> out{id};
    for (const auto& e : seen)
        if (!(e == id)) out.push_back(e);
    return out;
}

template <class E>
std::size_t position_of(const std::vector<E>& v, const E& x)
{
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw std::logic_error("element escaped its subgroup");
    return static_cast<std::size_t>(it - v.begin());
}

// Quotient of the group on `all` by the subgroup `sub`, cosets canonicalized
// by their minimal member.
inline AbGroup quotient_structure(const std::vector<QuadForm>& all, const QuadForm& id,
                                  const std::vector<QuadForm>& sub,
                                  const std::function<QuadForm(const QuadForm&, const QuadForm&)>& mul)
{
    auto canon = [&](const QuadForm& x) {
        QuadForm best = mul(x, sub[0]);
        for (std::size_t k = 1; k < sub.size(); ++k) {
            QuadForm y = mul(x, sub[k]);
            if (y < best) best = y;
        }
        return best;
    };
    std::map<QuadForm, std::size_t> coset_of;
    std::vector<QuadForm> reps;
    QuadForm c0 = canon(id);
    coset_of[c0] = 0;
    reps.push_back(c0);
    for (const auto& x : all) {
        QuadForm c = canon(x);
        if (coset_of.emplace(c, reps.size()).second) reps.push_back(c);
    }
    IndexMul qmul = [&](std::size_t i, std::size_t j) {
        return coset_of.at(canon(mul(reps[i], reps[j])));
    };
    return extract_structure(reps, qmul);
}

// Same construction when classes live behind integer ids; cosets are
// canonicalized by the minimal representative form.
inline AbGroup quotient_structure_idx(const std::vector<int>& all, int id0,
                                      const std::vector<int>& sub,
                                      const std::function<int(int, int)>& mul,
                                      const std::function<QuadForm(int)>& rep)
{
    auto canon = [&](int x) {
        int best = mul(x, sub[0]);
        QuadForm bf = rep(best);
        for (std::size_t k = 1; k < sub.size(); ++k) {
            int y = mul(x, sub[k]);
            QuadForm f = rep(y);
            if (f < bf) { best = y; bf = f; }
        }
        return std::pair<int, QuadForm>(best, bf);
    };
    std::map<int, std::size_t> coset_of;
    std::vector<int> coset_idx;
    std::vector<QuadForm> coset_rep;
    auto c0 = canon(id0);
    coset_of[c0.first] = 0;
    coset_idx.push_back(c0.first);
    coset_rep.push_back(c0.second);
    for (int x : all) {
        auto c = canon(x);
        if (coset_of.emplace(c.first, coset_idx.size()).second) {
            coset_idx.push_back(c.first);
            coset_rep.push_back(c.second);
        }
    }
    IndexMul qmul = [&](std::size_t i, std::size_t j) {
        return coset_of.at(canon(mul(coset_idx[i], coset_idx[j])).first);
    };
    return extract_structure(coset_rep, qmul);
}

} // namespace detail
} // namespace polya

#endif
