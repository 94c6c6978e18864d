#pragma once

#include "ea/cardarith.hpp"
#include "ea/hf.hpp"
#include "ea/linord.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ea {

// A set with at least two members and exactly one member of each cardinality
// below its own. The member of size k plays the role of digit k; 0_S = ∅.
class NumerationBase {
public:
    static bool is_numeration_base(const Hf& s) {
        if (s.size() < 2) return false;
        std::vector<bool> seen(s.size(), false);
        for (const Hf& m : s.members()) {
            if (m.size() >= s.size() || seen[m.size()]) return false;
            seen[m.size()] = true;
        }
        return true;
    }

    static NumerationBase from_set(const Hf& s) {
        if (!is_numeration_base(s)) throw domain_error("NumerationBase: not a numeration base");
        NumerationBase b;
        b.carrier_ = s;
        b.digits_.resize(s.size());
        for (const Hf& m : s.members()) b.digits_[m.size()] = m;
        return b;
    }

    static NumerationBase from_digits(std::vector<Hf> digits) {
        if (digits.size() < 2) throw domain_error("NumerationBase: fewer than 2 digits");
        NumerationBase b;
        b.digits_.resize(digits.size());
        std::vector<bool> seen(digits.size(), false);
        for (Hf& d : digits) {
            if (d.size() >= digits.size() || seen[d.size()])
                throw domain_error("NumerationBase: digit sizes not 0..m-1");
            seen[d.size()] = true;
            b.digits_[d.size()] = std::move(d);
        }
        b.carrier_ = make_set(b.digits_);
        return b;
    }

    const Hf& carrier() const { return carrier_; }
    std::size_t size() const { return digits_.size(); }
    const Hf& digit(std::size_t k) const {
        if (k >= digits_.size()) throw domain_error("NumerationBase: digit index out of range");
        return digits_[k];
    }
    const Hf& zero() const { return digits_.front(); }
    const Hf& max_digit() const { return digits_.back(); }

    // Inverse of digit(); digits are keyed by their size.
    std::size_t digit_index(const Hf& d) const {
        if (d.size() < digits_.size() && digits_[d.size()] == d) return d.size();
        throw domain_error("NumerationBase: not a digit of this base");
    }

    friend bool operator==(const NumerationBase& a, const NumerationBase& b) {
        return a.digits_ == b.digits_;
    }

private:
    Hf carrier_;
    std::vector<Hf> digits_;  // digits_[k] has exactly k members
};

// Base plus a little-endian digit sequence: digit 0 is the units digit,
// exactly as the sequence is written in positional coding. Positions are
// the terms of a length ordering.
class Numeral {
public:
    Numeral(NumerationBase base, std::vector<Hf> digits, LinOrd length)
        : base_(std::move(base)), digits_(std::move(digits)), length_(std::move(length)) {
        if (digits_.size() != length_.size())
            throw domain_error("Numeral: digit count does not match length");
        for (const Hf& d : digits_) base_.digit_index(d);
    }

    const NumerationBase& base() const { return base_; }
    const std::vector<Hf>& digits() const { return digits_; }
    const LinOrd& length() const { return length_; }
    std::size_t digit_count() const { return digits_.size(); }

    // Σ |s_i| · |S|^i
    Nat coded_value() const {
        Nat v = 0, place = 1, b = base_.size();
        for (const Hf& d : digits_) {
            v += Nat(d.size()) * place;
            place *= b;
        }
        return v;
    }

    // Last digit nonzero; the empty-length numeral is the canonical zero
    // and counts as proper.
    bool is_proper() const { return digits_.empty() || digits_.back() != base_.zero(); }

    // The set-level value: the pair (S, s) with s the local function from
    // length terms to digits.
    Hf to_hf() const {
        std::vector<Hf> pairs;
        for (std::size_t i = 0; i < digits_.size(); ++i)
            pairs.push_back(ordered_pair(length_.terms()[i], digits_[i]));
        return ordered_pair(base_.carrier(), make_set(std::move(pairs)));
    }

    friend bool operator==(const Numeral& a, const Numeral& b) {
        return a.base_ == b.base_ && a.digits_ == b.digits_ && a.length_ == b.length_;
    }

private:
    NumerationBase base_;
    std::vector<Hf> digits_;
    LinOrd length_;
};

// The unique proper numeral with the given value whose length is an initial
// segment of max_len (plain base-|S| expansion, little-endian).
inline Numeral numeral_from_value(const NumerationBase& s, const Nat& v, const LinOrd& max_len) {
    if (v >= nat_pow(Nat(s.size()), Nat(max_len.size())))
        throw domain_error("numeral_from_value: value out of range for length");
    std::vector<Hf> digits;
    Nat rest = v;
    Nat b = s.size();
    while (rest > 0) {
        digits.push_back(s.digit(static_cast<std::size_t>(rest % b)));
        rest /= b;
    }
    LinOrd len = max_len.prefix(digits.size());
    return Numeral(s, std::move(digits), std::move(len));
}

// Num_S(L): one proper numeral per cardinality below |S|^|L|, ascending.
inline std::vector<Numeral> num_enumeration(const NumerationBase& s, const LinOrd& l,
                                            const Limits& lim = default_limits()) {
    Nat count = nat_pow(Nat(s.size()), Nat(l.size()));
    if (count > lim.power_set_max_elems) throw too_large_error("num_enumeration: too many numerals");
    std::vector<Numeral> out;
    for (Nat v = 0; v < count; ++v) out.push_back(numeral_from_value(s, v, l));
    return out;
}

inline std::string to_text(const Numeral& n) {
    std::string out = "base" + std::to_string(n.base().size()) + "<";
    bool first = true;
    for (const Hf& d : n.digits()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(d.size());
    }
    out += ">";
    return out;
}

}  // namespace ea
