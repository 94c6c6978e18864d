#pragma once

#include "ea/hf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ea {

// Kuratowski linear ordering: represented by the set of fields of its
// nonempty initial segments. [a, b, c] has carrier {{a},{a,b},{a,b,c}}.
// The term sequence determines the carrier; the carrier set is built on
// first request, because its code is doubly exponential in the term codes
// and orderings over large terms are useful as sequences even when the
// carrier itself exceeds the member-code cap.
class LinOrd {
public:
    LinOrd() = default;  // the empty ordering [ ]

    // Clauses on a candidate carrier S:
    //  (i)   ∅ ∉ S
    //  (ii)  S ≠ ∅ implies some singleton ∈ S
    //  (iii) every x ∈ S equals ⋃S or extends by one point to another element
    //  (iv)  elements of S are pairwise ⊆-comparable
    static bool validate(const Hf& s) {
        if (s.is_empty()) return true;
        bool has_singleton = false;
        for (const Hf& x : s.members()) {
            if (x.is_empty()) return false;
            if (x.size() == 1) has_singleton = true;
        }
        if (!has_singleton) return false;
        Hf field = union_all(s);
        for (const Hf& x : s.members()) {
            if (x == field) continue;
            bool extends = false;
            for (const Hf& y : field.members()) {
                if (!x.contains(y) && s.contains(adjoin(x, y))) {
                    extends = true;
                    break;
                }
            }
            if (!extends) return false;
        }
        for (const Hf& x : s.members())
            for (const Hf& y : s.members())
                if (!x.subset_of(y) && !y.subset_of(x)) return false;
        return true;
    }

    static LinOrd from_carrier(const Hf& s) {
        if (!validate(s)) throw domain_error("LinOrd: carrier is not a linear ordering");
        std::vector<Hf> segs(s.members().begin(), s.members().end());
        std::sort(segs.begin(), segs.end(),
                  [](const Hf& a, const Hf& b) { return a.size() < b.size(); });
        std::vector<Hf> ts;
        ts.reserve(segs.size());
        Hf prev = empty_set();
        for (const Hf& seg : segs) {
            Hf delta = difference(seg, prev);
            if (delta.size() != 1) throw domain_error("LinOrd: carrier segments not nested by one");
            ts.push_back(delta.members().front());
            prev = seg;
        }
        LinOrd l;
        l.carrier_ = s;
        l.terms_ = std::move(ts);
        return l;
    }

    static LinOrd from_terms(std::vector<Hf> ts) {
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j)
                if (ts[i] == ts[j]) throw domain_error("LinOrd: duplicate term");
        LinOrd l;
        l.terms_ = std::move(ts);
        return l;
    }

    const Hf& carrier() const {
        if (!carrier_) {
            std::vector<Hf> segs, sofar;
            segs.reserve(terms_.size());
            for (const Hf& t : terms_) {
                sofar.push_back(t);
                segs.push_back(make_set(sofar));
            }
            carrier_ = make_set(std::move(segs));
        }
        return *carrier_;
    }
    const std::vector<Hf>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Hf field() const { return make_set(std::vector<Hf>(terms_)); }

    bool in_field(const Hf& a) const {
        for (const Hf& t : terms_)
            if (t == a) return true;
        return false;
    }

    std::size_t position(const Hf& a) const {
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i] == a) return i;
        throw domain_error("LinOrd: not in field");
    }

    // a <_L b per the definition: some initial segment contains a but not b.
    // Positions realize that test without touching the carrier.
    bool less_than(const Hf& a, const Hf& b) const { return position(a) < position(b); }

    const Hf& first() const {
        if (empty()) throw domain_error("LinOrd: first of empty ordering");
        return terms_.front();
    }
    const Hf& last() const {
        if (empty()) throw domain_error("LinOrd: last of empty ordering");
        return terms_.back();
    }

    // Clamp convention: next(last) = last, prev(first) = first.
    const Hf& next(const Hf& a) const {
        std::size_t i = position(a);
        return terms_[i + 1 < terms_.size() ? i + 1 : i];
    }
    const Hf& prev(const Hf& a) const {
        std::size_t i = position(a);
        return terms_[i > 0 ? i - 1 : 0];
    }

    LinOrd prefix(std::size_t n) const {
        if (n > terms_.size()) throw domain_error("LinOrd: prefix longer than ordering");
        return from_terms(std::vector<Hf>(terms_.begin(), terms_.begin() + n));
    }

    // Set of carriers of the proper initial segments (lengths 0..size-1).
    Hf inseg() const {
        std::vector<Hf> segs;
        for (std::size_t j = 0; j < terms_.size(); ++j) segs.push_back(prefix(j).carrier());
        return make_set(std::move(segs));
    }

    friend bool operator==(const LinOrd& a, const LinOrd& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinOrd& a, const LinOrd& b) { return !(a == b); }

private:
    mutable std::optional<Hf> carrier_;
    std::vector<Hf> terms_;
};

// ⊆_* coincides with plain ⊆ on carriers.
inline bool is_initial_segment(const LinOrd& a, const LinOrd& b) {
    return a.carrier().subset_of(b.carrier());
}

inline bool proper_initial_segment(const LinOrd& a, const LinOrd& b) {
    return is_initial_segment(a, b) && a.size() < b.size();
}

// ≃_o reduces to equal length.
inline bool order_equiv(const LinOrd& a, const LinOrd& b) { return a.size() == b.size(); }

inline LinOrd concat(const std::vector<LinOrd>& ls) {
    std::vector<Hf> ts;
    for (const LinOrd& l : ls) ts.insert(ts.end(), l.terms().begin(), l.terms().end());
    std::size_t total = 0;
    for (const LinOrd& l : ls) total += l.size();
    LinOrd r = LinOrd::from_terms(std::move(ts));  // throws on duplicates
    if (r.size() != total) throw domain_error("concat: fields overlap");
    return r;
}

// f(first) = a, f(next(x)) = g(f(x)); the value sequence parallel to terms().
template <typename Fn>
std::vector<Hf> recursion_along(const LinOrd& l, const Hf& a, Fn&& g) {
    if (l.empty()) throw domain_error("recursion_along: empty ordering");
    std::vector<Hf> vals;
    vals.reserve(l.size());
    vals.push_back(a);
    for (std::size_t i = 1; i < l.size(); ++i) vals.push_back(g(vals.back()));
    return vals;
}

inline std::string to_text(const LinOrd& l) {
    std::string out = "[";
    bool first = true;
    for (const Hf& t : l.terms()) {
        if (!first) out += ", ";
        first = false;
        to_braces_into(t, out);
    }
    out += "]";
    return out;
}

}  // namespace ea
