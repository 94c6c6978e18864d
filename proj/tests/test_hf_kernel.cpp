#include "ea/hf.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ea;

TEST_CASE("encode/decode round-trip on an initial segment of codes") {
    for (unsigned n = 0; n < (1u << 12); ++n) {
        Hf s = decode(Nat(n));
        REQUIRE(s.code() == Nat(n));
        // rebuild from members and compare
        std::vector<Hf> ms(s.members().begin(), s.members().end());
        REQUIRE(make_set(std::move(ms)) == s);
    }
}

TEST_CASE("frozen codes of small sets") {
    Hf e = empty_set();
    REQUIRE(e.code() == 0);
    REQUIRE(singleton(e).code() == 1);
    REQUIRE(singleton(singleton(e)).code() == 2);
    REQUIRE(pair_set(e, singleton(e)).code() == 3);
    // {0, {0}, {0,{0}}}: bits 0, 1, 3
    Hf three = make_set({e, singleton(e), pair_set(e, singleton(e))});
    REQUIRE(three.code() == 11);
    // code 4 = single bit 2: sole member has code 2
    Hf four = decode(4);
    REQUIRE(four.size() == 1);
    REQUIRE(four.members()[0].code() == 2);
}

TEST_CASE("single-bit bignum code decodes to a singleton") {
    Nat big = pow2(Nat(65536));
    Hf s = decode(big);
    REQUIRE(s.size() == 1);
    REQUIRE(s.members()[0].code() == 65536);
    REQUIRE(s.code() == big);
}

TEST_CASE("make_set canonicalizes order and duplicates") {
    Hf a = decode(5), b = decode(2), c = decode(9);
    Hf s1 = make_set({a, b, c, b, a});
    Hf s2 = make_set({c, a, b});
    REQUIRE(s1 == s2);
    REQUIRE(s1.size() == 3);
    REQUIRE(s1.members()[0].code() == 2);
    REQUIRE(s1.members()[2].code() == 9);
}

TEST_CASE("codes past the bit-position cap exist structurally but do not materialize") {
    Hf huge = decode(pow2(Nat(27)));  // code 2^27: fine as a value
    REQUIRE(huge.size() == 1);
    Hf wrapped = make_set({huge});  // the set exists...
    REQUIRE(wrapped.size() == 1);
    REQUIRE(wrapped.contains(huge));
    REQUIRE_THROWS_AS(wrapped.code(), too_large_error);  // ...its code does not
    Hf edge = decode(pow2(Nat(26)));
    REQUIRE(make_set({edge}).code() == pow2(pow2(Nat(26))));
}

TEST_CASE("boolean set algebra on random sets") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Hf a = decode(Nat(rng() % 4096)), b = decode(Nat(rng() % 4096));
        Hf u = binary_union(a, b), n = intersection(a, b), d = difference(a, b);
        REQUIRE(a.subset_of(u));
        REQUIRE(b.subset_of(u));
        REQUIRE(n.subset_of(a));
        REQUIRE(n.subset_of(b));
        REQUIRE(intersection(d, b).is_empty());
        REQUIRE(binary_union(d, n) == a);
        REQUIRE(u.size() + n.size() == a.size() + b.size());
        Hf x = decode(Nat(rng() % 64));
        REQUIRE(adjoin(a, x).contains(x));
        REQUIRE(adjoin(a, x).size() == a.size() + (a.contains(x) ? 0 : 1));
    }
}

TEST_CASE("union_all flattens one level") {
    // U({{0},{ {0} }}) = {0, {0}}
    Hf s = pair_set(singleton(empty_set()), singleton(singleton(empty_set())));
    REQUIRE(union_all(s).code() == 3);
    REQUIRE(union_all(empty_set()).is_empty());
}

TEST_CASE("power_set enumerates exactly the subsets") {
    Hf v2 = decode(3);  // {0, {0}}
    Hf p = power_set(v2);
    REQUIRE(p.size() == 4);
    REQUIRE(p.code() == 15);  // subsets have codes 0,1,2,3
    for (const Hf& sub : p.members()) REQUIRE(sub.subset_of(v2));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Hf a = decode(Nat(rng() % 256));
        REQUIRE(power_set(a).size() == (std::size_t(1) << a.size()));
    }
}

TEST_CASE("power_set refuses to materialize past the limit") {
    std::vector<Hf> ms;
    for (unsigned i = 0; i < 21; ++i) ms.push_back(decode(Nat(i)));
    REQUIRE_THROWS_AS(power_set(make_set(std::move(ms))), too_large_error);
}

TEST_CASE("comprehension and replacement") {
    Hf s = decode(255);  // {decode(0..7)}
    Hf evens = comprehension(s, [](const Hf& m) { return m.size() % 2 == 0; });
    for (const Hf& m : evens.members()) REQUIRE(m.size() % 2 == 0);
    Hf singles = replacement(s, [](const Hf& m) { return singleton(m); });
    REQUIRE(singles.size() == s.size());
    for (const Hf& m : singles.members()) REQUIRE(m.size() == 1);
}

TEST_CASE("transitive closure and transitivity") {
    Hf v = decode(11);  // {0,1,3}: transitive
    REQUIRE(is_transitive(v));
    REQUIRE(transitive_closure(v) == v);
    Hf z = decode(2);  // {{0}}: member {0} is not a subset
    REQUIRE_FALSE(is_transitive(z));
    REQUIRE(transitive_closure(z).code() == 3);
    // TC is transitive and contains the members
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Hf a = decode(Nat(rng() % 4096));
        Hf tc = transitive_closure(a);
        REQUIRE(is_transitive(tc));
        for (const Hf& m : a.members()) REQUIRE(tc.contains(m));
    }
}

TEST_CASE("rank is max member rank plus one") {
    REQUIRE(rank_fast(empty_set()) == 0);
    REQUIRE(rank_fast(decode(1)) == 1);
    REQUIRE(rank_fast(decode(2)) == 2);
    REQUIRE(rank_fast(decode(11)) == 3);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        Hf a = decode(Nat(rng() % 65536));
        std::size_t want = 0;
        for (const Hf& m : a.members()) want = std::max(want, rank_fast(m) + 1);
        REQUIRE(rank_fast(a) == want);
    }
}

TEST_CASE("iterated power membership tracks rank over the empty base") {
    Hf e = empty_set();
    for (unsigned n = 0; n < 64; ++n) {
        Hf a = decode(Nat(n));
        std::size_t r = rank_fast(a);
        // rank r sets first appear in P^{r+1}(0): P^1(0) = {0}, P^2 = {0,{0}}, ...
        REQUIRE(member_of_iterated_power(a, r + 1, e));
        REQUIRE_FALSE(member_of_iterated_power(a, r, e));
    }
}

TEST_CASE("iterated power membership over a transitive base") {
    Hf t = decode(11);  // transitive
    REQUIRE(member_of_iterated_power(decode(3), 0, t));
    REQUIRE_FALSE(member_of_iterated_power(decode(8), 0, t));
    REQUIRE(member_of_iterated_power(decode(8), 1, t));  // {decode(3)}
}

TEST_CASE("epsilon fan of a one-member set has the two evident chains") {
    Hf s = decode(2);  // {{0}}
    Hf fan = epsilon_fan(s);
    REQUIRE(fan.size() == 2);
    // chains [{0}] and [{0}, 0] as ordering carriers: codes 4 and 12
    REQUIRE(fan.code() == 4112);
    REQUIRE(epsilon_fan(empty_set()).is_empty());
}

TEST_CASE("epsilon fan is gated on the transitive closure size") {
    std::vector<Hf> ms;
    for (unsigned i = 0; i < 13; ++i) ms.push_back(decode(Nat(i)));
    REQUIRE_THROWS_AS(epsilon_fan(make_set(std::move(ms))), too_large_error);
}

TEST_CASE("choose picks the code-least member") {
    REQUIRE(choose(decode(12)).code() == 2);
    REQUIRE_THROWS_AS(choose(empty_set()), domain_error);
}

TEST_CASE("brace rendering and parsing round-trip") {
    REQUIRE(to_braces(empty_set()) == "{}");
    REQUIRE(to_braces(decode(3)) == "{{}, {{}}}");
    REQUIRE(parse_braces("{ {}, { {} } }").code() == 3);
    REQUIRE(parse_braces("#11") == decode(11));
    REQUIRE(parse_braces("{#1, #3}").code() == 10);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        Hf a = decode(Nat(rng() % 65536));
        REQUIRE(parse_braces(to_braces(a)) == a);
    }
    REQUIRE_THROWS_AS(parse_braces("{,}"), domain_error);
    REQUIRE_THROWS_AS(parse_braces("{} junk"), domain_error);
}
