#pragma once

#include "ea/nat.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ea {

// Materialization limits for operations whose results can blow up.
struct Limits {
    std::size_t power_set_max_elems = std::size_t(1) << 20;
    std::size_t epsilon_fan_tc_max = 12;
    std::size_t set_exp_max_elems = std::size_t(1) << 12;
    std::size_t card_exact_max = 4;
};

inline const Limits& default_limits() {
    static Limits l;
    return l;
}

class Hf;

namespace detail {

struct HfNode {
    std::vector<Hf> members;  // canonical: sorted by code order, no duplicates
    // Code when it fits a machine word; the fast path for comparisons.
    std::optional<std::uint64_t> small;
    // Full code, materialized on first request. Codes are doubly exponential
    // in depth, so a set can exist without a representable code.
    mutable std::optional<Nat> code;
    mutable std::int64_t rank = -1;
};

// Code order without materializing codes: compare the largest differing
// member. Codes are bitsets of member codes, so the set holding the larger
// top member is the larger code.
inline int hf_cmp(const HfNode* a, const HfNode* b);

}  // namespace detail

// Immutable hereditarily finite set, hash-consed on its canonical member
// list. Two Hf handles are equal iff they point at the same interned node.
// Codes (bit n set iff the set with code n is a member) are computed lazily:
// every set exists structurally, but code() throws too_large_error when a
// member's code exceeds the bit-position budget.
class Hf {
public:
    Hf() : node_(empty_node()) {}

    // Bit-position budget: member codes above this cannot index a bit.
    static constexpr unsigned code_bit_budget = 1u << 26;

    const Nat& code() const {
        if (!node_->code) {
            Nat c = 0;
            for (const Hf& m : node_->members) {
                const Nat& mc = m.code();
                if (mc > code_bit_budget)
                    throw too_large_error("code: member code exceeds the bit-position budget");
                bit_set(c, static_cast<unsigned>(mc));
            }
            node_->code = std::move(c);
        }
        return *node_->code;
    }

    bool code_fits_word() const { return node_->small.has_value(); }

    std::span<const Hf> members() const { return node_->members; }
    std::size_t size() const { return node_->members.size(); }
    bool is_empty() const { return node_->members.empty(); }

    bool contains(const Hf& x) const {
        const auto& m = node_->members;
        auto it = std::lower_bound(m.begin(), m.end(), x);
        return it != m.end() && *it == x;
    }

    bool subset_of(const Hf& other) const {
        for (const Hf& m : members())
            if (!other.contains(m)) return false;
        return true;
    }

    friend bool operator==(const Hf& a, const Hf& b) { return a.node_ == b.node_; }
    friend bool operator!=(const Hf& a, const Hf& b) { return a.node_ != b.node_; }
    // Code order, evaluated structurally; canonical member order everywhere.
    friend bool operator<(const Hf& a, const Hf& b) {
        return detail::hf_cmp(a.node_, b.node_) < 0;
    }
    friend bool operator<=(const Hf& a, const Hf& b) {
        return detail::hf_cmp(a.node_, b.node_) <= 0;
    }

    friend Hf make_set(std::vector<Hf> ms);
    friend Hf decode(const Nat& code);
    friend std::size_t rank_fast(const Hf& s);
    friend int detail::hf_cmp(const detail::HfNode* a, const detail::HfNode* b);
    friend struct hf_hash;

private:
    explicit Hf(const detail::HfNode* n) : node_(n) {}

    struct KeyHash {
        std::size_t operator()(const std::vector<const detail::HfNode*>& k) const {
            std::size_t h = 1469598103934665603ull;
            for (const detail::HfNode* p : k) {
                h ^= std::hash<const detail::HfNode*>{}(p);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    using Table = std::unordered_map<std::vector<const detail::HfNode*>,
                                     std::unique_ptr<detail::HfNode>, KeyHash>;
    using DecodeCache = std::unordered_map<Nat, const detail::HfNode*, nat_hash>;

    static Table& table() {
        static Table t;
        return t;
    }
    static DecodeCache& decode_cache() {
        static DecodeCache c;
        return c;
    }
    static std::mutex& table_mutex() {
        static std::mutex m;
        return m;
    }

    // ms must already be canonical (sorted, deduplicated).
    static const detail::HfNode* intern(std::vector<Hf> ms) {
        std::vector<const detail::HfNode*> key;
        key.reserve(ms.size());
        for (const Hf& m : ms) key.push_back(m.node_);
        std::lock_guard<std::mutex> lock(table_mutex());
        auto it = table().find(key);
        if (it != table().end()) return it->second.get();
        auto node = std::make_unique<detail::HfNode>();
        node->members = std::move(ms);
        std::uint64_t small = 0;
        bool have_small = true;
        for (const Hf& m : node->members) {
            if (!m.node_->small || *m.node_->small >= 64) {
                have_small = false;
                break;
            }
            small |= std::uint64_t(1) << *m.node_->small;
        }
        if (have_small) node->small = small;
        const detail::HfNode* raw = node.get();
        table().emplace(std::move(key), std::move(node));
        return raw;
    }

    static const detail::HfNode* empty_node() {
        static const detail::HfNode* n = intern({});
        return n;
    }

    const detail::HfNode* node_;
};

namespace detail {

inline int hf_cmp(const HfNode* a, const HfNode* b) {
    if (a == b) return 0;
    if (a->small && b->small) return *a->small < *b->small ? -1 : 1;
    if (a->small != b->small) return a->small ? -1 : 1;  // word-sized < oversized
    auto ai = a->members.rbegin(), ae = a->members.rend();
    auto bi = b->members.rbegin(), be = b->members.rend();
    for (; ai != ae && bi != be; ++ai, ++bi) {
        int c = hf_cmp(ai->node_, bi->node_);
        if (c != 0) return c;
    }
    if (ai != ae) return 1;
    if (bi != be) return -1;
    return 0;
}

}  // namespace detail

struct hf_hash {
    std::size_t operator()(const Hf& s) const {
        return std::hash<const detail::HfNode*>{}(s.node_);
    }
};

// Canonicalizes: sorts into code order, removes duplicates, interns.
inline Hf make_set(std::vector<Hf> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return Hf(Hf::intern(std::move(ms)));
}

inline const Nat& encode(const Hf& s) { return s.code(); }

inline Hf decode(const Nat& code) {
    if (code < 0) throw domain_error("decode: negative code");
    {
        std::lock_guard<std::mutex> lock(Hf::table_mutex());
        auto it = Hf::decode_cache().find(code);
        if (it != Hf::decode_cache().end()) return Hf(it->second);
    }
    std::vector<Hf> ms;
    Nat rest = code;
    while (rest != 0) {
        unsigned bit = static_cast<unsigned>(lsb(rest));
        bit_unset(rest, bit);
        ms.push_back(decode(Nat(bit)));
    }
    Hf r = make_set(std::move(ms));
    r.node_->code = code;  // known without recomputation
    {
        std::lock_guard<std::mutex> lock(Hf::table_mutex());
        Hf::decode_cache().emplace(code, r.node_);
    }
    return r;
}

inline Hf empty_set() { return Hf(); }

inline Hf singleton(const Hf& a) { return make_set({a}); }

// {a, b}; collapses to {a} when a = b.
inline Hf pair_set(const Hf& a, const Hf& b) { return make_set({a, b}); }

inline Hf binary_union(const Hf& a, const Hf& b) {
    std::vector<Hf> ms(a.members().begin(), a.members().end());
    ms.insert(ms.end(), b.members().begin(), b.members().end());
    return make_set(std::move(ms));
}

inline Hf intersection(const Hf& a, const Hf& b) {
    std::vector<Hf> ms;
    for (const Hf& m : a.members())
        if (b.contains(m)) ms.push_back(m);
    return make_set(std::move(ms));
}

inline Hf difference(const Hf& a, const Hf& b) {
    std::vector<Hf> ms;
    for (const Hf& m : a.members())
        if (!b.contains(m)) ms.push_back(m);
    return make_set(std::move(ms));
}

inline Hf adjoin(const Hf& s, const Hf& x) { return binary_union(s, singleton(x)); }

// U(s): union of the members of s.
inline Hf union_all(const Hf& s) {
    std::vector<Hf> ms;
    for (const Hf& m : s.members())
        ms.insert(ms.end(), m.members().begin(), m.members().end());
    return make_set(std::move(ms));
}

template <typename Pred>
Hf comprehension(const Hf& s, Pred&& keep) {
    std::vector<Hf> ms;
    for (const Hf& m : s.members())
        if (keep(m)) ms.push_back(m);
    return make_set(std::move(ms));
}

template <typename Fn>
Hf replacement(const Hf& s, Fn&& f) {
    std::vector<Hf> ms;
    ms.reserve(s.size());
    for (const Hf& m : s.members()) ms.push_back(f(m));
    return make_set(std::move(ms));
}

// P(s). Throws too_large_error when the result would exceed the limit.
inline Hf power_set(const Hf& s, const Limits& lim = default_limits()) {
    if (s.size() >= 8 * sizeof(std::size_t) ||
        (std::size_t(1) << s.size()) > lim.power_set_max_elems)
        throw too_large_error("power_set: result too large");
    std::vector<Hf> subsets{empty_set()};
    for (const Hf& m : s.members()) {
        std::size_t n = subsets.size();
        for (std::size_t i = 0; i < n; ++i) subsets.push_back(adjoin(subsets[i], m));
    }
    return make_set(std::move(subsets));
}

// Least member in code order; throws on the empty set.
inline Hf choose(const Hf& s) {
    if (s.is_empty()) throw domain_error("choose: empty set");
    return s.members().front();
}

// Smallest transitive superset of s (s itself is not a member unless reachable).
inline Hf transitive_closure(const Hf& s) {
    std::vector<Hf> acc;
    std::unordered_set<Hf, hf_hash> seen;
    std::vector<Hf> stack(s.members().begin(), s.members().end());
    while (!stack.empty()) {
        Hf x = stack.back();
        stack.pop_back();
        if (!seen.insert(x).second) continue;
        acc.push_back(x);
        stack.insert(stack.end(), x.members().begin(), x.members().end());
    }
    return make_set(std::move(acc));
}

inline bool is_transitive(const Hf& s) {
    for (const Hf& m : s.members())
        if (!m.subset_of(s)) return false;
    return true;
}

// rank(∅) = 0, rank(s) = 1 + max rank of members. Memoized in the node.
inline std::size_t rank_fast(const Hf& s) {
    if (s.node_->rank >= 0) return static_cast<std::size_t>(s.node_->rank);
    std::size_t r = 0;
    for (const Hf& m : s.members()) r = std::max(r, rank_fast(m) + 1);
    s.node_->rank = static_cast<std::int64_t>(r);
    return r;
}

// a ∈ P^n(T) for transitive T, without materializing P^n(T):
// a ∈ P^0(T) iff a ∈ T; a ∈ P^{n+1}(T) iff a ∈ T or every member of a
// is in P^n(T). Memoized per call on (node, level).
inline bool member_of_iterated_power(const Hf& a, std::size_t n, const Hf& t) {
    struct Key {
        const void* p;
        std::size_t n;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<const void*>{}(k.p) * 31 + k.n;
        }
    };
    std::unordered_map<Key, bool, KeyHash> memo;
    std::function<bool(const Hf&, std::size_t)> go = [&](const Hf& x, std::size_t lev) -> bool {
        if (t.contains(x)) return true;
        if (lev == 0) return false;
        Key k{x.members().data(), lev};
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        bool ok = true;
        for (const Hf& m : x.members())
            if (!go(m, lev - 1)) {
                ok = false;
                break;
            }
        memo.emplace(k, ok);
        return ok;
    };
    return go(a, n);
}

// ε(S): set of all ε-chains for S, each returned as the carrier of a
// linear ordering [x0, ..., xn] with x0 ∈ S and x_{i+1} ∈ x_i.
// Combinatorially explosive, so gated on |TC(S)|.
inline Hf epsilon_fan(const Hf& s, const Limits& lim = default_limits()) {
    if (transitive_closure(s).size() > lim.epsilon_fan_tc_max)
        throw too_large_error("epsilon_fan: transitive closure too large");
    std::vector<Hf> chains;
    std::vector<Hf> elems;
    std::vector<Hf> prefix_fields;
    std::function<void(const Hf&)> dfs = [&](const Hf& x) {
        elems.push_back(x);
        prefix_fields.push_back(make_set(elems));
        chains.push_back(make_set(prefix_fields));
        for (const Hf& m : x.members()) dfs(m);
        elems.pop_back();
        prefix_fields.pop_back();
    };
    for (const Hf& m : s.members()) dfs(m);
    return make_set(std::move(chains));
}

// --- rendering and parsing ---------------------------------------------------

inline void to_braces_into(const Hf& s, std::string& out) {
    out.push_back('{');
    bool first = true;
    for (const Hf& m : s.members()) {
        if (!first) out += ", ";
        first = false;
        to_braces_into(m, out);
    }
    out.push_back('}');
}

inline std::string to_braces(const Hf& s) {
    std::string out;
    to_braces_into(s, out);
    return out;
}

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
}

inline Hf parse_braces_at(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    if (i < s.size() && s[i] == '#') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        if (j == i) throw domain_error("parse_braces: expected digits after '#'");
        Nat code = nat_parse(std::string(s.substr(i, j - i)));
        i = j;
        return decode(code);
    }
    if (i >= s.size() || s[i] != '{') throw domain_error("parse_braces: expected '{'");
    ++i;
    std::vector<Hf> ms;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '}') {
        ++i;
        return make_set(std::move(ms));
    }
    while (true) {
        ms.push_back(parse_braces_at(s, i));
        skip_ws(s, i);
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == '}') {
            ++i;
            return make_set(std::move(ms));
        }
        throw domain_error("parse_braces: expected ',' or '}'");
    }
}

}  // namespace detail

// Accepts nested braces ("{{}, {{}}}") and code references ("#11").
inline Hf parse_braces(std::string_view s) {
    std::size_t i = 0;
    Hf r = detail::parse_braces_at(s, i);
    detail::skip_ws(s, i);
    if (i != s.size()) throw domain_error("parse_braces: trailing input");
    return r;
}

}  // namespace ea
