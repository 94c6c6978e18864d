#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <stdexcept>
#include <string>

namespace ea {

// Arbitrary-precision natural. Negative values never appear in valid states;
// monus() is the only subtraction offered.
using Nat = boost::multiprecision::cpp_int;

struct ea_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Materialization limit exceeded (power set, epsilon fan, set-level exp, ...).
struct too_large_error : ea_error {
    using ea_error::ea_error;
};

// Explicit budget exhausted (tower values, enumeration counts).
struct budget_error : ea_error {
    using ea_error::ea_error;
};

// Precondition violation on otherwise well-formed inputs.
struct domain_error : ea_error {
    using ea_error::ea_error;
};

struct nat_hash {
    std::size_t operator()(const Nat& n) const { return boost::hash<Nat>{}(n); }
};

inline Nat pow2(const Nat& e) {
    if (e < 0 || e > std::numeric_limits<unsigned>::max())
        throw budget_error("pow2: exponent out of range");
    return Nat(1) << static_cast<unsigned>(e);
}

inline Nat nat_pow(const Nat& base, const Nat& e) {
    if (e < 0) throw domain_error("nat_pow: negative exponent");
    Nat r = 1, b = base, k = e;
    while (k > 0) {
        if (bit_test(k, 0)) r *= b;
        k >>= 1;
        if (k > 0) b *= b;
    }
    return r;
}

// Truncated difference.
inline Nat monus(const Nat& a, const Nat& b) { return a > b ? a - b : Nat(0); }

// 2_k: 2_0 = 1, 2_{k+1} = 2^{2_k}. Throws budget_error once a value would
// exceed `budget`; wraparound is never an option here.
inline Nat tower2(const Nat& k, const Nat& budget) {
    Nat v = 1;
    for (Nat i = 0; i < k; ++i) {
        if (v > (1u << 26)) throw budget_error("tower2: exponent too large to materialize");
        v = pow2(v);
        if (v > budget) throw budget_error("tower2: budget exceeded");
    }
    return v;
}

inline std::string nat_str(const Nat& n) { return n.str(); }

inline Nat nat_parse(const std::string& s) {
    if (s.empty()) throw domain_error("nat_parse: empty string");
    for (char c : s)
        if (c < '0' || c > '9') throw domain_error("nat_parse: not a decimal natural: " + s);
    return Nat(s);
}

}  // namespace ea
