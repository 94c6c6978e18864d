#pragma once

#include "ea/hf.hpp"
#include "ea/linord.hpp"

#include <optional>
#include <vector>

namespace ea {

inline Nat card(const Hf& s) { return Nat(s.size()); }

// --- local cardinal, exact path ----------------------------------------------

// Equivalence classes of the proper subsets of S under equinumerosity,
// ordered by increasing size into an ordering L; the result is InSeg(L).
// |result| = |S| and member j has exactly j elements.
inline Hf card_exact(const Hf& s, const Limits& lim = default_limits()) {
    if (s.size() > lim.card_exact_max) throw too_large_error("card_exact: set too large");
    std::size_t n = s.size();
    if (n == 0) return empty_set();
    std::vector<std::vector<Hf>> classes(n);
    Hf ps = power_set(s, lim);
    for (const Hf& sub : ps.members())
        if (sub != s) classes[sub.size()].push_back(sub);
    std::vector<Hf> class_sets;
    class_sets.reserve(n);
    for (auto& c : classes) class_sets.push_back(make_set(std::move(c)));
    return LinOrd::from_terms(std::move(class_sets)).inseg();
}

// The members of card_exact(S) arranged in order of increasing cardinality.
inline LinOrd ord_exact(const Hf& s, const Limits& lim = default_limits()) {
    Hf c = card_exact(s, lim);
    std::vector<Hf> ms(c.members().begin(), c.members().end());
    std::sort(ms.begin(), ms.end(), [](const Hf& a, const Hf& b) { return a.size() < b.size(); });
    return LinOrd::from_terms(std::move(ms));
}

// --- rank, exact path --------------------------------------------------------

// Chains of the epsilon fan grouped into equinumerosity classes and ordered
// by length. Its length equals rank_fast(S); that agreement is the
// cross-validation contract between the two paths.
inline LinOrd rank_exact(const Hf& s, const Limits& lim = default_limits()) {
    Hf fan = epsilon_fan(s, lim);
    std::vector<std::vector<Hf>> by_len;
    for (const Hf& chain : fan.members()) {
        std::size_t len = chain.size();
        if (by_len.size() < len) by_len.resize(len);
        by_len[len - 1].push_back(chain);
    }
    std::vector<Hf> classes;
    classes.reserve(by_len.size());
    for (auto& c : by_len) classes.push_back(make_set(std::move(c)));
    return LinOrd::from_terms(std::move(classes));
}

// --- set-level arithmetical functions ----------------------------------------

// {{a},{a,b}}
inline Hf ordered_pair(const Hf& a, const Hf& b) {
    return pair_set(singleton(a), pair_set(a, b));
}

inline Hf cartesian(const Hf& a, const Hf& b) {
    std::vector<Hf> ms;
    ms.reserve(a.size() * b.size());
    for (const Hf& x : a.members())
        for (const Hf& y : b.members()) ms.push_back(ordered_pair(x, y));
    return make_set(std::move(ms));
}

inline Hf succ_c(const Hf& a) { return adjoin(a, a); }

// (a × {0}) ∪ (b × {1}) with 0 = ∅, 1 = {∅}.
inline Hf add_c(const Hf& a, const Hf& b) {
    Hf zero = empty_set();
    Hf one = singleton(zero);
    return binary_union(cartesian(a, singleton(zero)), cartesian(b, singleton(one)));
}

inline Hf mul_c(const Hf& a, const Hf& b) { return cartesian(a, b); }

// The set of local functions b → a (each a set of ordered pairs).
inline Hf exp_c(const Hf& a, const Hf& b, const Limits& lim = default_limits()) {
    Nat count = nat_pow(Nat(a.size()), Nat(b.size()));
    if (count > lim.set_exp_max_elems) throw too_large_error("exp_c: function space too large");
    std::vector<Hf> funcs;
    std::vector<std::vector<Hf>> partial{{}};
    for (const Hf& x : b.members()) {
        std::vector<std::vector<Hf>> next;
        for (const auto& p : partial)
            for (const Hf& y : a.members()) {
                auto q = p;
                q.push_back(ordered_pair(x, y));
                next.push_back(std::move(q));
            }
        partial = std::move(next);
    }
    if (!a.is_empty() || b.is_empty())
        for (auto& p : partial) funcs.push_back(make_set(std::move(p)));
    return make_set(std::move(funcs));
}

// --- size-level twins --------------------------------------------------------

inline Nat succ_size(const Nat& a) { return a + 1; }
inline Nat add_size(const Nat& a, const Nat& b) { return a + b; }
inline Nat mul_size(const Nat& a, const Nat& b) { return a * b; }
inline Nat exp_size(const Nat& a, const Nat& b) { return nat_pow(a, b); }

// Least x with a ≤ x^n.
inline Nat nth_root(const Nat& n, const Nat& a) {
    if (n < 1) throw domain_error("nth_root: n must be >= 1");
    if (a <= 1) return a;
    Nat lo = 1, hi = 1;
    while (nat_pow(hi, n) < a) hi <<= 1;
    while (lo < hi) {
        Nat mid = (lo + hi) / 2;
        if (nat_pow(mid, n) < a)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

// Least x with a ≤ S^x (ceiling logarithm).
inline Nat log_base(const Nat& s, const Nat& a) {
    if (s < 2) throw domain_error("log_base: base must be >= 2");
    Nat v = 1, x = 0;
    while (v < a) {
        v *= s;
        ++x;
    }
    return x;
}

// 2^a_b: b-fold iterated exponential starting at a (2^a_0 = a).
inline Nat tower(const Nat& a, const Nat& b, const Nat& budget) {
    Nat v = a;
    if (v > budget) throw budget_error("tower: budget exceeded");
    for (Nat i = 0; i < b; ++i) {
        if (v > (1u << 26)) throw budget_error("tower: exponent too large to materialize");
        v = pow2(v);
        if (v > budget) throw budget_error("tower: budget exceeded");
    }
    return v;
}

// Least x with a ≤ 2_x (2_0 = 1, 2_{k+1} = 2^{2_k}).
inline Nat suplog2(const Nat& a) {
    Nat v = 1, x = 0;
    while (v < a) {
        if (v > (1u << 26)) throw budget_error("suplog2: tower value too large to materialize");
        v = pow2(v);
        ++x;
    }
    return x;
}

// Canonical set of a given small size: {decode(0), ..., decode(k-1)}.
inline Hf canonical_of_size(const Nat& k) {
    if (k > (1u << 20)) throw too_large_error("canonical_of_size: too large");
    std::vector<Hf> ms;
    for (Nat i = 0; i < k; ++i) ms.push_back(decode(i));
    return make_set(std::move(ms));
}

// Witness ordering for 2^a_b = c: terms of sizes a, 2^a, ..., 2^a_b = c,
// all values ≤ bound. Absent when the tower misses c or leaves the bound.
inline std::optional<LinOrd> iterexp_witness(const Nat& a, const Nat& b, const Nat& c,
                                             const Nat& bound) {
    std::vector<Nat> sizes{a};
    if (a > bound) return std::nullopt;
    for (Nat i = 0; i < b; ++i) {
        if (sizes.back() > (1u << 26)) return std::nullopt;
        Nat nxt = pow2(sizes.back());
        if (nxt > bound) return std::nullopt;
        sizes.push_back(nxt);
    }
    if (sizes.back() != c) return std::nullopt;
    std::vector<Hf> reps;
    reps.reserve(sizes.size());
    for (const Nat& s : sizes) reps.push_back(canonical_of_size(s));
    return LinOrd::from_terms(std::move(reps));
}

template <typename Fn>
Nat bounded_sum(Fn&& phi, const Nat& s) {
    Nat acc = 0;
    for (Nat x = 0; x < s; ++x) acc += phi(x);
    return acc;
}

template <typename Fn>
Nat bounded_product(Fn&& phi, const Nat& s) {
    Nat acc = 1;
    for (Nat x = 0; x < s; ++x) acc *= phi(x);
    return acc;
}

}  // namespace ea
