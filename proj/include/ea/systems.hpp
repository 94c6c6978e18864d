#pragma once

#include "ea/cardarith.hpp"
#include "ea/hf.hpp"
#include "ea/linord.hpp"
#include "ea/numerals.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ea {

// --- iteration systems over HF terms -----------------------------------------

// Iteration system whose terms are HF sets: an initial term and a successor.
// recover maps a term back to the generated number ending at it; absent for
// systems where recovery is not available.
struct HfSystem {
    std::string name;
    Hf initial;
    std::function<Hf(const Hf&)> succ;
    std::function<LinOrd(const Hf&)> recover;  // may be empty

    Hf nth_term(std::size_t k) const {
        Hf t = initial;
        for (std::size_t i = 0; i < k; ++i) t = succ(t);
        return t;
    }

    // The generated number [0_N, ..., k_N] (k+1 terms).
    LinOrd nth_number(std::size_t k) const {
        std::vector<Hf> ts;
        ts.reserve(k + 1);
        Hf t = initial;
        ts.push_back(t);
        for (std::size_t i = 0; i < k; ++i) {
            t = succ(t);
            ts.push_back(t);
        }
        return LinOrd::from_terms(std::move(ts));
    }

    // Gen clauses: empty ordering qualifies; otherwise First = initial and
    // each non-last term steps to the next by the successor.
    bool gen_check(const LinOrd& l) const {
        if (l.empty()) return true;
        if (l.first() != initial) return false;
        const auto& ts = l.terms();
        for (std::size_t i = 0; i + 1 < ts.size(); ++i)
            if (succ(ts[i]) != ts[i + 1]) return false;
        return true;
    }

    // Natural number system probe: generation never revisits a term.
    bool natural_at(const LinOrd& l) const {
        if (l.empty()) return true;
        return !l.in_field(succ(l.last()));
    }

    LinOrd recover_number(const Hf& t) const {
        if (!recover) throw domain_error(name + ": recovery unsupported");
        LinOrd l = recover(t);
        if (l.empty() || l.last() != t || !gen_check(l))
            throw domain_error(name + ": not a term of the system");
        return l;
    }
};

// --- Lex and the subset-ordering systems -------------------------------------

// Subset of Field(L) picked by mask bits over term positions.
inline Hf mask_subset(const LinOrd& l, const Nat& mask) {
    std::vector<Hf> ms;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (bit_test(mask, static_cast<unsigned>(i))) ms.push_back(l.terms()[i]);
    return make_set(std::move(ms));
}

// X ≤_{Lex(L)} Y: X = Y, or the L-greatest element of X △ Y lies in Y.
inline bool lex_less_eq(const LinOrd& l, const Hf& x, const Hf& y) {
    Hf diff = binary_union(difference(x, y), difference(y, x));
    if (diff.is_empty()) return true;
    std::size_t best = 0;
    bool found = false;
    for (const Hf& d : diff.members()) {
        std::size_t p = l.position(d);
        if (!found || p > best) best = p;
        found = true;
    }
    return y.contains(l.terms()[best]);
}

// Lex(L): the 2^|L| subsets of Field(L) in ≤_Lex order. Position-mask order
// realizes the △ rule: the greatest differing position belongs to the larger
// mask. The agreement is re-verified against lex_less_eq in the test suites.
inline LinOrd lex_step(const LinOrd& l, const Limits& lim = default_limits()) {
    if (l.size() >= 8 * sizeof(std::size_t) ||
        (std::size_t(1) << l.size()) > lim.power_set_max_elems)
        throw too_large_error("lex_step: subset ordering too large");
    std::vector<Hf> ts;
    std::size_t n = std::size_t(1) << l.size();
    ts.reserve(n);
    for (std::size_t m = 0; m < n; ++m) ts.push_back(mask_subset(l, Nat(m)));
    return LinOrd::from_terms(std::move(ts));
}

// j-th term of the subset-tower system: T_0 = [ ], T_{j+1} = Lex(T_j).
inline LinOrd lex_term(std::size_t j, const Limits& lim = default_limits()) {
    LinOrd t;
    for (std::size_t i = 0; i < j; ++i) t = lex_step(t, lim);
    return t;
}

// [decode(0), ..., decode(k-1)]: the k-th term of the one-point-extension
// system over subset orderings.
inline LinOrd ack_term(std::size_t k) {
    std::vector<Hf> ts;
    ts.reserve(k);
    for (std::size_t i = 0; i < k; ++i) ts.push_back(decode(Nat(i)));
    return LinOrd::from_terms(std::move(ts));
}

struct AckStep {
    bool dont_care = false;
    LinOrd value;
};

// Successor on subset-tower terms: anchor the largest T with T ⊆_* l ⊊_* Lex(T)
// and extend l by the next entry of Lex(T). Outside the precondition the
// result is the tagged don't-care variant, never a silent ∅.
inline AckStep ack_successor(const LinOrd& l, const Limits& lim = default_limits()) {
    LinOrd anchor;
    LinOrd t;
    bool have = false;
    while (true) {
        if (t.size() > l.size()) break;
        bool prefix = true;
        for (std::size_t i = 0; i < t.size() && prefix; ++i)
            if (t.terms()[i] != l.terms()[i]) prefix = false;
        if (prefix) {
            anchor = t;
            have = true;
        }
        if (t.size() >= 26) break;  // 2^|T| would leave any sane budget
        if ((std::size_t(1) << t.size()) > l.size()) break;
        t = lex_step(t, lim);
    }
    if (!have) return {true, {}};
    // l must be a proper initial segment of Lex(anchor): term i = mask i.
    if (!(anchor.size() >= 26) && l.size() >= (std::size_t(1) << anchor.size()))
        return {true, {}};
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l.terms()[i] != mask_subset(anchor, Nat(i))) return {true, {}};
    std::vector<Hf> ts = l.terms();
    ts.push_back(mask_subset(anchor, Nat(l.size())));
    return {false, LinOrd::from_terms(std::move(ts))};
}

// Code-order successor on plain sets: strip the longest embedded term prefix
// {s_0,...,s_k} and adjoin the following element. Extensionally this is
// Ackermann-code +1; the code oracle is the cross-check, not the definition.
inline Hf ack0_successor(const Hf& s) {
    std::vector<Hf> prefix;
    Nat i = 0;
    while (s.contains(decode(i))) {
        prefix.push_back(decode(i));
        ++i;
    }
    return adjoin(difference(s, make_set(std::move(prefix))), decode(i));
}

// --- built-in systems --------------------------------------------------------

inline HfSystem vn_system() {
    HfSystem s;
    s.name = "vn";
    s.initial = empty_set();
    s.succ = [](const Hf& x) { return succ_c(x); };
    s.recover = [](const Hf& t) {
        std::vector<Hf> ts(adjoin(t, t).members().begin(), adjoin(t, t).members().end());
        std::sort(ts.begin(), ts.end(),
                  [](const Hf& a, const Hf& b) { return a.size() < b.size(); });
        return LinOrd::from_terms(std::move(ts));
    };
    return s;
}

inline HfSystem z_system() {
    HfSystem s;
    s.name = "z";
    s.initial = empty_set();
    s.succ = [](const Hf& x) { return singleton(x); };
    s.recover = [](const Hf& t) {
        Hf all = adjoin(transitive_closure(t), t);
        std::vector<Hf> ts(all.members().begin(), all.members().end());
        std::sort(ts.begin(), ts.end(),
                  [](const Hf& a, const Hf& b) { return rank_fast(a) < rank_fast(b); });
        return LinOrd::from_terms(std::move(ts));
    };
    return s;
}

inline HfSystem ch_system(const Limits& lim = default_limits()) {
    HfSystem s;
    s.name = "ch";
    s.initial = empty_set();
    s.succ = [lim](const Hf& x) { return power_set(x, lim); };
    s.recover = [](const Hf& t) {
        std::vector<Hf> down{t};
        while (!down.back().is_empty()) down.push_back(union_all(down.back()));
        return LinOrd::from_terms(std::vector<Hf>(down.rbegin(), down.rend()));
    };
    return s;
}

inline HfSystem lex_system(const Limits& lim = default_limits()) {
    HfSystem s;
    s.name = "lex";
    s.initial = empty_set();  // carrier of [ ]
    s.succ = [lim](const Hf& x) { return lex_step(LinOrd::from_carrier(x), lim).carrier(); };
    s.recover = [lim](const Hf& t) {
        std::vector<Hf> ts;
        LinOrd cur;
        for (std::size_t j = 0; j < 8; ++j) {
            ts.push_back(cur.carrier());
            if (cur.carrier() == t) return LinOrd::from_terms(std::move(ts));
            cur = lex_step(cur, lim);
        }
        throw domain_error("lex: not a term within budget");
    };
    return s;
}

inline HfSystem ack_system(const Limits& lim = default_limits()) {
    HfSystem s;
    s.name = "ack";
    s.initial = empty_set();  // carrier of [ ]
    s.succ = [lim](const Hf& x) {
        AckStep st = ack_successor(LinOrd::from_carrier(x), lim);
        if (st.dont_care) throw domain_error("ack: successor precondition fails");
        return st.value.carrier();
    };
    s.recover = [](const Hf& t) {
        LinOrd l = LinOrd::from_carrier(t);
        std::vector<Hf> ts;
        ts.reserve(l.size() + 1);
        for (std::size_t j = 0; j <= l.size(); ++j) ts.push_back(l.prefix(j).carrier());
        return LinOrd::from_terms(std::move(ts));
    };
    return s;
}

inline HfSystem ack0_system() {
    HfSystem s;
    s.name = "ack0";
    s.initial = empty_set();
    s.succ = [](const Hf& x) { return ack0_successor(x); };
    return s;  // no recovery rule
}

// --- fixed-base hierarchy N[S] -----------------------------------------------

// Digit set of canonical size m: one member of each cardinality below m.
inline NumerationBase canonical_base(std::size_t m) {
    std::vector<Hf> ds;
    ds.reserve(m);
    for (std::size_t k = 0; k < m; ++k) ds.push_back(canonical_of_size(Nat(k)));
    return NumerationBase::from_set(make_set(std::move(ds)));
}

// N[S]: numerals over a fixed base S, lengths running along the numbers of N.
// The initial term is the improper one-digit zero; the successor is digit
// carry, appending a fresh length position on overflow.
class BaseSystem {
public:
    BaseSystem(HfSystem n, NumerationBase s) : n_(std::move(n)), s_(std::move(s)) {}

    const HfSystem& number_system() const { return n_; }
    const NumerationBase& base() const { return s_; }

    Numeral initial() const {
        return Numeral(s_, {s_.zero()}, LinOrd::from_terms({n_.initial}));
    }

    Numeral successor(const Numeral& x) const {
        std::vector<Hf> ds = x.digits();
        for (std::size_t i = 0; i < ds.size(); ++i) {
            std::size_t idx = s_.digit_index(ds[i]);
            if (idx + 1 < s_.size()) {
                ds[i] = s_.digit(idx + 1);
                return Numeral(s_, std::move(ds), x.length());
            }
            ds[i] = s_.zero();
        }
        std::vector<Hf> len = x.length().terms();
        len.push_back(len.empty() ? n_.initial : n_.succ(len.back()));
        ds.push_back(s_.digit(1));
        return Numeral(s_, std::move(ds), LinOrd::from_terms(std::move(len)));
    }

    Numeral nth_term(std::size_t k) const {
        Numeral t = initial();
        for (std::size_t i = 0; i < k; ++i) t = successor(t);
        return t;
    }

    std::vector<Numeral> first_terms(std::size_t count) const {
        std::vector<Numeral> out;
        out.reserve(count);
        if (count == 0) return out;
        out.push_back(initial());
        for (std::size_t i = 1; i < count; ++i) out.push_back(successor(out.back()));
        return out;
    }

    // The generated number ending at t, as the ordering of term values.
    LinOrd recover_number(const Numeral& t) const {
        Nat v = t.coded_value();
        if (v > (1u << 20)) throw budget_error("BaseSystem: recover budget");
        std::vector<Hf> ts;
        for (const Numeral& u : first_terms(static_cast<std::size_t>(v) + 1))
            ts.push_back(u.to_hf());
        return LinOrd::from_terms(std::move(ts));
    }

private:
    HfSystem n_;
    NumerationBase s_;
};

// --- fixed-length hierarchy N<L> ---------------------------------------------

// N<L>: numerals of fixed length L over growing bases InSeg(number of N).
// Successor increments digits in place; when every digit is maximal the base
// switches to the next InSeg and the term re-codes |S|^|L| in the new base.
class LengthSystem {
public:
    LengthSystem(HfSystem n, LinOrd l) : n_(std::move(n)), len_(std::move(l)) {
        if (len_.size() < 2) throw domain_error("LengthSystem: length must have >= 2 terms");
    }

    const HfSystem& number_system() const { return n_; }
    const LinOrd& length() const { return len_; }

    // InSeg of the m-term number of N (a numeration base of size m), built
    // from the segment carriers directly.
    NumerationBase nth_base(std::size_t m) const {
        LinOrd num = n_.nth_number(m - 1);
        std::vector<Hf> digits;
        digits.reserve(m);
        for (std::size_t j = 0; j < m; ++j) digits.push_back(num.prefix(j).carrier());
        return NumerationBase::from_digits(std::move(digits));
    }

    Numeral initial() const {
        NumerationBase b = nth_base(2);
        return Numeral(b, std::vector<Hf>(len_.size(), b.zero()), len_);
    }

    Numeral successor(const Numeral& x) const {
        std::vector<Hf> ds = x.digits();
        const NumerationBase& b = x.base();
        for (std::size_t i = 0; i < ds.size(); ++i) {
            std::size_t idx = b.digit_index(ds[i]);
            if (idx + 1 < b.size()) {
                ds[i] = b.digit(idx + 1);
                return Numeral(b, std::move(ds), len_);
            }
            ds[i] = b.zero();
        }
        // Every digit was maximal: move to the next base and code |S|^|L|.
        NumerationBase nb = nth_base(b.size() + 1);
        Nat v = nat_pow(Nat(b.size()), Nat(len_.size()));
        std::vector<Hf> nds;
        Nat rest = v;
        for (std::size_t i = 0; i < len_.size(); ++i) {
            nds.push_back(nb.digit(static_cast<std::size_t>(rest % nb.size())));
            rest /= nb.size();
        }
        if (rest != 0) throw domain_error("LengthSystem: value does not fit new base");
        return Numeral(nb, std::move(nds), len_);
    }

    Numeral nth_term(std::size_t k) const {
        Numeral t = initial();
        for (std::size_t i = 0; i < k; ++i) t = successor(t);
        return t;
    }

    std::vector<Numeral> first_terms(std::size_t count) const {
        std::vector<Numeral> out;
        out.reserve(count);
        if (count == 0) return out;
        out.push_back(initial());
        for (std::size_t i = 1; i < count; ++i) out.push_back(successor(out.back()));
        return out;
    }

private:
    HfSystem n_;
    LinOrd len_;
};

// --- regular functions and the staged tower system ---------------------------

using SizeMap = std::function<Nat(const Nat&)>;

// Clauses for K ≤ x ≤ y ≤ probe:
//  (i) x < φ(x); (ii) φ(x) − x ≤ 2^y − y; (iii) φ monotone.
inline bool is_regular(const SizeMap& phi, const Nat& K, const Nat& probe) {
    if (probe > (1u << 16)) throw budget_error("is_regular: probe too large");
    for (Nat x = K; x <= probe; ++x) {
        if (!(x < phi(x))) return false;
        if (x > K && phi(x - 1) > phi(x)) return false;
        for (Nat y = x; y <= probe; ++y)
            if (monus(phi(x), x) > monus(pow2(y), y)) return false;
    }
    return true;
}

struct StageRec {
    Nat n;
    Nat start_index;                 // l-index where the stage block begins
    std::optional<Nat> start_code;   // 2^start_index when materializable
    Nat k;                           // terms contributed by this stage
    Nat h;                           // total terms through this stage
};

// Staged enumeration of tower terms driven by a regular φ: stage 0 is the
// first 2_N terms; stage n ≥ 1 contributes k_n = φ^n(2_N) − φ^{n−1}(2_N)
// terms starting at index 2_{N+n−1}. Terms are handled by index only; the
// index gaps between stages are never enumerated.
class AckPhiSystem {
public:
    AckPhiSystem(std::string name, SizeMap phi, Nat K, Nat probe = 64)
        : name_(std::move(name)), phi_(std::move(phi)), K_(std::move(K)) {
        if (!is_regular(phi_, K_, probe))
            throw domain_error("AckPhiSystem: function is not regular above K");
        Nat maxphi = 0;
        for (Nat x = 0; x <= K_; ++x) maxphi = std::max(maxphi, phi_(x));
        N_ = 0;
        while (tower2(N_, Nat(1) << 24) <= maxphi) ++N_;
    }

    const std::string& name() const { return name_; }
    const Nat& K() const { return K_; }
    const Nat& N() const { return N_; }

    // h_n = φ^n(2_N)
    Nat h(const Nat& n) const {
        Nat v = tower2(N_, Nat(1) << 24);
        for (Nat i = 0; i < n; ++i) v = phi_(v);
        return v;
    }

    Nat stage_count_k(const Nat& n) const { return n == 0 ? h(0) : h(n) - h(n - 1); }

    Nat stage_start_index(const Nat& n) const {
        if (n == 0) return 0;
        return tower2(N_ + n - 1, pow2(Nat(1) << 24));
    }

    std::optional<Nat> stage_start_code(const Nat& n) const {
        Nat idx = stage_start_index(n);
        if (idx > (1u << 20)) return std::nullopt;
        return pow2(idx);
    }

    StageRec stage(const Nat& n) const {
        return {n, stage_start_index(n), stage_start_code(n), stage_count_k(n), h(n)};
    }

    // l-index of the m-th enumerated term.
    Nat nth_index(const Nat& m) const {
        if (m < h(0)) return m;
        Nat n = 1;
        while (m >= h(n)) ++n;
        return stage_start_index(n) + (m - h(n - 1));
    }

    // Index of the term following l_idx in the staged enumeration.
    std::optional<Nat> successor_index(const Nat& idx) const {
        for (Nat n = 0;; ++n) {
            Nat start = stage_start_index(n);
            if (idx < start) return std::nullopt;  // in a gap: not a term
            if (idx < start + stage_count_k(n)) {
                Nat m = (n == 0 ? Nat(0) : h(n - 1)) + (idx - start);
                return nth_index(m + 1);
            }
        }
    }

    // |γ(L)| for a number L of size m: the stage prefix guaranteed to
    // dominate φ(m).
    Nat gamma_size(const Nat& m) const {
        if (m <= K_) return h(0);
        Nat k = 0;
        while (m > h(k)) ++k;
        return h(k + 1);
    }

private:
    std::string name_;
    SizeMap phi_;
    Nat K_, N_;
};

// --- measure maps ------------------------------------------------------------

// CH-number -> VN-number of the same length: the terms of VN lying inside
// the power set of the CH-number's last term.
inline LinOrd ch_to_vn(const LinOrd& chnum) {
    if (chnum.empty()) return {};
    HfSystem vn = vn_system();
    Hf top = chnum.last();
    std::vector<Hf> ts;
    Hf t = vn.initial;
    while (t.subset_of(top)) {
        ts.push_back(t);
        t = vn.succ(t);
    }
    return LinOrd::from_terms(std::move(ts));
}

inline LinOrd ch_to_z(const LinOrd& chnum) {
    if (chnum.empty()) return {};
    HfSystem z = z_system();
    Hf top = chnum.last();
    std::vector<Hf> ts;
    Hf t = z.initial;
    while (t.subset_of(top)) {
        ts.push_back(t);
        t = z.succ(t);
    }
    return LinOrd::from_terms(std::move(ts));
}

// CH-number [V_0, ..., V_k] -> subset-tower number of the same length, by the
// recursion g(V_0) = [ ], g(V_{i+1}) = Lex(g(V_i)).
inline LinOrd ch_lex(const LinOrd& chnum, const Limits& lim = default_limits()) {
    std::vector<Hf> ts;
    LinOrd cur;
    for (std::size_t i = 0; i < chnum.size(); ++i) {
        ts.push_back(cur.carrier());
        if (i + 1 < chnum.size()) cur = lex_step(cur, lim);
    }
    return LinOrd::from_terms(std::move(ts));
}

inline LinOrd lex_ch(const LinOrd& lexnum, const Limits& lim = default_limits()) {
    std::vector<Hf> ts;
    Hf cur = empty_set();
    for (std::size_t i = 0; i < lexnum.size(); ++i) {
        ts.push_back(cur);
        cur = power_set(cur, lim);
    }
    return LinOrd::from_terms(std::move(ts));
}

// N-number of size k -> N[S]-number of size |S|^k.
inline std::vector<Numeral> base_up(const BaseSystem& bs, const LinOrd& nnum) {
    Nat count = nat_pow(Nat(bs.base().size()), Nat(nnum.size()));
    if (count > (1u << 20)) throw budget_error("base_up: result too large");
    return bs.first_terms(static_cast<std::size_t>(count));
}

// N[S]-number of size m -> N-number of size log_S(m).
inline LinOrd base_down(const BaseSystem& bs, std::size_t numeral_count) {
    Nat len = log_base(Nat(bs.base().size()), Nat(numeral_count));
    if (len == 0) return {};
    return bs.number_system().nth_number(static_cast<std::size_t>(len) - 1);
}

// N-number of size x -> N<L>-number of size x^|L|.
inline std::vector<Numeral> len_up(const LengthSystem& ls, const LinOrd& nnum) {
    Nat count = nat_pow(Nat(nnum.size()), Nat(ls.length().size()));
    if (count > (1u << 16)) throw budget_error("len_up: result too large");
    return ls.first_terms(static_cast<std::size_t>(count));
}

// N<L>-number of size m -> N-number of size the |L|-th root of m.
inline LinOrd len_down(const LengthSystem& ls, std::size_t numeral_count) {
    Nat len = nth_root(Nat(ls.length().size()), Nat(numeral_count));
    if (len == 0) return {};
    return ls.number_system().nth_number(static_cast<std::size_t>(len) - 1);
}

// ACK-number of size n -> CH-number [V_0, ..., V_k] with k = suplog2(n).
inline LinOrd ack_to_ch_suplog(std::size_t ack_number_size,
                               const Limits& lim = default_limits()) {
    Nat k = suplog2(Nat(ack_number_size));
    return ch_system(lim).nth_number(static_cast<std::size_t>(k));
}

}  // namespace ea
