#include "ea/linord.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ea;

namespace {

std::vector<Hf> distinct_terms(std::mt19937_64& rng, std::size_t n) {
    std::vector<Hf> out;
    while (out.size() < n) {
        // codes stay below 12 so materialized carriers stay near 2^4096
        Hf x = decode(Nat(rng() % 12));
        bool dup = false;
        for (const Hf& y : out) dup = dup || y == x;
        if (!dup) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("carrier of a three-term ordering") {
    Hf a = decode(0), b = decode(1), c = decode(2);
    LinOrd l = LinOrd::from_terms({a, b, c});
    // segments {a}, {a,b}, {a,b,c} have codes 1, 3, 7
    REQUIRE(l.carrier().code() == (2 + 8 + 128));
    REQUIRE(l.size() == 3);
    REQUIRE(l.field().code() == 7);
    REQUIRE(LinOrd::validate(l.carrier()));
    REQUIRE(LinOrd::from_carrier(l.carrier()).terms() == l.terms());
}

TEST_CASE("empty ordering") {
    LinOrd l;
    REQUIRE(l.empty());
    REQUIRE(l.carrier().is_empty());
    REQUIRE(LinOrd::validate(empty_set()));
    REQUIRE(LinOrd::from_carrier(empty_set()).size() == 0);
    REQUIRE_THROWS_AS(l.first(), domain_error);
    REQUIRE_THROWS_AS(l.last(), domain_error);
}

TEST_CASE("validation clauses reject malformed carriers") {
    // contains the empty set
    REQUIRE_FALSE(LinOrd::validate(decode(1)));
    // {{a},{b}} with a != b: not subset-comparable
    Hf s = pair_set(singleton(decode(0)), singleton(decode(1)));
    REQUIRE_FALSE(LinOrd::validate(s));
    // no singleton: {{a,b}} skips a first term
    REQUIRE_FALSE(LinOrd::validate(singleton(pair_set(decode(0), decode(1)))));
    // gap: {{a},{a,b,c}} misses {a,b}
    Hf abc = make_set({decode(0), decode(1), decode(2)});
    REQUIRE_FALSE(LinOrd::validate(pair_set(singleton(decode(0)), abc)));
    // a genuine one-term carrier
    REQUIRE(LinOrd::validate(decode(2)));  // {{0}} = [0]
}

TEST_CASE("from_terms rejects duplicates") {
    REQUIRE_THROWS_AS(LinOrd::from_terms({decode(1), decode(1)}), domain_error);
}

TEST_CASE("positions, order relation, and neighbors") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 400; ++i) {
        std::size_t n = 1 + rng() % 7;
        std::vector<Hf> ts = distinct_terms(rng, n);
        LinOrd l = LinOrd::from_terms(ts);
        for (std::size_t p = 0; p < n; ++p) {
            REQUIRE(l.position(ts[p]) == p);
            REQUIRE(l.in_field(ts[p]));
            for (std::size_t q = 0; q < n; ++q)
                REQUIRE(l.less_than(ts[p], ts[q]) == (p < q));
        }
        REQUIRE(l.first() == ts.front());
        REQUIRE(l.last() == ts.back());
        REQUIRE(l.next(l.last()) == l.last());
        REQUIRE(l.prev(l.first()) == l.first());
        if (n >= 2) {
            REQUIRE(l.next(ts[0]) == ts[1]);
            REQUIRE(l.prev(ts[n - 1]) == ts[n - 2]);
        }
        REQUIRE_FALSE(l.in_field(decode(100)));
        REQUIRE_THROWS_AS(l.position(decode(100)), domain_error);
    }
}

TEST_CASE("initial segments coincide with carrier inclusion") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        std::vector<Hf> ts = distinct_terms(rng, 1 + rng() % 6);
        LinOrd l = LinOrd::from_terms(ts);
        std::size_t cut = rng() % (l.size() + 1);
        LinOrd p = l.prefix(cut);
        REQUIRE(is_initial_segment(p, l));
        REQUIRE(proper_initial_segment(p, l) == (cut < l.size()));
        // a reordering of the same field is not an initial segment
        if (ts.size() >= 2) {
            std::vector<Hf> rev(ts.rbegin(), ts.rend());
            LinOrd r = LinOrd::from_terms(rev);
            REQUIRE_FALSE(is_initial_segment(r, l));
        }
    }
    REQUIRE_THROWS_AS(LinOrd::from_terms({decode(0)}).prefix(2), domain_error);
}

TEST_CASE("order equivalence is equality of lengths") {
    LinOrd a = LinOrd::from_terms({decode(0), decode(4)});
    LinOrd b = LinOrd::from_terms({decode(9), decode(2)});
    REQUIRE(order_equiv(a, b));
    REQUIRE_FALSE(order_equiv(a, a.prefix(1)));
}

TEST_CASE("concatenation glues disjoint orderings in order") {
    LinOrd a = LinOrd::from_terms({decode(0), decode(1)});
    LinOrd b = LinOrd::from_terms({decode(5), decode(9)});
    LinOrd c = concat({a, b});
    REQUIRE(c.size() == 4);
    REQUIRE(c.terms()[2] == decode(5));
    REQUIRE(is_initial_segment(a, c));
    REQUIRE_THROWS_AS(concat({a, a}), domain_error);
    REQUIRE(concat({a, LinOrd{}}) == a);
}

TEST_CASE("inseg collects the proper initial segment carriers") {
    LinOrd l = LinOrd::from_terms({decode(0), decode(1), decode(2)});
    Hf segs = l.inseg();
    REQUIRE(segs.size() == 3);
    REQUIRE(segs.contains(empty_set()));
    REQUIRE(segs.contains(l.prefix(2).carrier()));
    REQUIRE_FALSE(segs.contains(l.carrier()));
}

TEST_CASE("recursion along an ordering is the iterated step") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        LinOrd l = LinOrd::from_terms(distinct_terms(rng, 1 + rng() % 6));
        Hf a = decode(Nat(rng() % 64));
        // step functions with bounded codes; iterated singletons overflow
        auto g = [](const Hf& x) { return adjoin(union_all(x), empty_set()); };
        std::vector<Hf> vals = recursion_along(l, a, g);
        REQUIRE(vals.size() == l.size());
        REQUIRE(vals[0] == a);
        for (std::size_t j = 1; j < vals.size(); ++j) REQUIRE(vals[j] == g(vals[j - 1]));
    }
    REQUIRE_THROWS_AS(recursion_along(LinOrd{}, empty_set(), [](const Hf& x) { return x; }),
                      domain_error);
}

TEST_CASE("text rendering") {
    REQUIRE(to_text(LinOrd{}) == "[]");
    REQUIRE(to_text(LinOrd::from_terms({decode(0), decode(1)})) == "[{}, {{}}]");
}

TEST_CASE("every valid small carrier round-trips") {
    for (unsigned n = 0; n < 4096; ++n) {
        Hf s = decode(Nat(n));
        if (!LinOrd::validate(s)) continue;
        LinOrd l = LinOrd::from_carrier(s);
        REQUIRE(l.carrier() == s);
        REQUIRE(LinOrd::from_terms(l.terms()).carrier() == s);
        REQUIRE(l.field().size() == l.size());
    }
}
