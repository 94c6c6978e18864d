#include "ea/term_lang.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ea;

namespace {

Hf ev(const std::string& text, Env env = {}) { return eval_term(parse_term(text), env); }

}  // namespace

TEST_CASE("term evaluation of the primitive formers") {
    REQUIRE(ev("O").is_empty());
    REQUIRE(ev("P(O)").code() == 1);
    REQUIRE(ev("{O, P(O)}").code() == 3);
    REQUIRE(ev("U({O, P(O)})").code() == 1);
    REQUIRE(ev("a", {{"a", decode(42)}}).code() == 42);
    REQUIRE(ev("E({O, P(O)})") == epsilon_fan(decode(3)));
}

TEST_CASE("comprehension picks exactly the satisfying members") {
    Env env{{"a", decode(1)}};  // a = {O}
    // subsets of a containing O: just {O}
    REQUIRE(ev("{x in P(a) : O in x}", env).code() == 2);
    REQUIRE(ev("{x in a : x = O}", env).code() == 1);
    REQUIRE(ev("{x in a : ~(x = O)}", env).is_empty());
}

TEST_CASE("replacement maps the source through the body") {
    Env env{{"a", decode(11)}};
    Hf doubled = ev("{ {x, x} : x in a }", env);
    REQUIRE(doubled.size() == 3);
    for (const Hf& m : doubled.members()) REQUIRE(m.size() == 1);
    // constant body collapses to a singleton image
    REQUIRE(ev("{O : x in a}", env).code() == 1);
}

TEST_CASE("formula connectives and bounded quantifiers") {
    Env env{{"a", decode(11)}, {"b", decode(3)}};
    REQUIRE(eval_formula(parse_formula("b in a"), env));
    REQUIRE(eval_formula(parse_formula("b sub a"), env));
    REQUIRE_FALSE(eval_formula(parse_formula("a sub b"), env));
    REQUIRE(eval_formula(parse_formula("(all x in b) x in a"), env));
    REQUIRE(eval_formula(parse_formula("(some x in a) b = x"), env));
    REQUIRE(eval_formula(parse_formula("a = b -> b in b"), env));
    REQUIRE(eval_formula(parse_formula("b in a & ~(a in b)"), env));
    REQUIRE(eval_formula(parse_formula("a in b | b in a"), env));
}

TEST_CASE("direct and expansion quantifier semantics agree") {
    std::mt19937_64 rng(19);
    std::vector<const char*> fs = {
        "(all x in a) x sub a",
        "(some x in a) O in x",
        "(all x in a) (some y in b) x sub y",
        "(some x in b) (all y in x) y in a",
    };
    for (const char* text : fs) {
        FormulaPtr f = parse_formula(text);
        for (int i = 0; i < 50; ++i) {
            Env env{{"a", decode(Nat(rng() % 1024))}, {"b", decode(Nat(rng() % 1024))}};
            REQUIRE(eval_formula(f, env, default_limits(), QuantMode::Direct) ==
                    eval_formula(f, env, default_limits(), QuantMode::Expansion));
        }
    }
}

TEST_CASE("parse errors carry positions") {
    REQUIRE_THROWS_AS(parse_term("U("), parse_error);
    REQUIRE_THROWS_AS(parse_term("{x in a}"), parse_error);
    REQUIRE_THROWS_AS(parse_term("Q(a)"), parse_error);
    REQUIRE_THROWS_AS(parse_term("{a, b} junk"), parse_error);
    REQUIRE_THROWS_AS(parse_formula("a in"), parse_error);
    try {
        parse_term("U(");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.pos == 2);
    }
}

TEST_CASE("binder shadowing is rejected at parse time") {
    REQUIRE_THROWS_AS(parse_term("{x in a : (some x in a) x in x}"), parse_error);
    REQUIRE_THROWS_AS(parse_formula("(all x in a) (all x in a) x = x"), parse_error);
    // distinct binders are fine
    REQUIRE(parse_term("{x in a : (some y in x) y = O}") != nullptr);
}

TEST_CASE("unbound variables fail at evaluation") {
    REQUIRE_THROWS_AS(ev("a"), domain_error);
    REQUIRE_THROWS_AS(ev("{x : y in a}", {{"a", decode(3)}}), domain_error);
}

TEST_CASE("free variables in first-use order, binders excluded") {
    auto fv = free_vars(parse_term("{x in a : x in b | c in x}"));
    REQUIRE(fv == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(free_vars(parse_term("{ {x, x} : x in a }")) == std::vector<std::string>{"a"});
    REQUIRE(free_vars(parse_term("O")).empty());
}

TEST_CASE("syntax-directed bounds have the frozen structural values") {
    REQUIRE(bound_of(parse_term("a")) == 0);
    REQUIRE(bound_of(parse_term("O")) == 1);
    REQUIRE(bound_of(parse_term("{a, b}")) == 1);
    REQUIRE(bound_of(parse_term("P(a)")) == 2);
    REQUIRE(bound_of(parse_term("U(a)")) == 1);
    REQUIRE(bound_of(parse_term("E(a)")) == 3);
    REQUIRE(rank_bound_of(parse_term("E(a)")) == 4);
    REQUIRE(bound_of(parse_term("{x in a : x = x}")) == 1);
    REQUIRE(bound_of(parse_term("{P(x) : x in a}")) == 3);
    REQUIRE(bound_of(parse_term("{ {x, x} : x in a }")) == 2);
    REQUIRE(bound_of(parse_term("P(U({a, b}))")) == 4);
}

TEST_CASE("bound analyzer is sound on a spot sample") {
    std::mt19937_64 rng(29);
    std::vector<const char*> terms = {"P(a)", "U(a)", "{a, b}", "{x in a : x sub b}",
                                      "{U(x) : x in a}"};
    for (const char* text : terms) {
        TermPtr t = parse_term(text);
        std::size_t k = bound_of(t);
        std::size_t rk = rank_bound_of(t);
        for (int i = 0; i < 50; ++i) {
            Env env;
            std::vector<Hf> vals;
            for (const auto& v : free_vars(t)) {
                env[v] = decode(Nat(rng() % 1024));
                vals.push_back(env[v]);
            }
            Hf val = eval_term(t, env);
            Hf tc = transitive_closure(make_set(vals));
            REQUIRE(member_of_iterated_power(val, k, tc));
            std::size_t maxrank = 0;
            for (const Hf& v : vals) maxrank = std::max(maxrank, rank_fast(v));
            REQUIRE(rank_fast(val) < maxrank + rk);
        }
    }
}

TEST_CASE("rendering normalizes and re-parses to itself") {
    std::vector<const char*> terms = {
        "{x in P(a) : O in x}", "{ {x, b} : x in a }", "E(U(a))",
        "{x in a : x = b | x in b}", "{x in a : (all y in x) y in b}"};
    for (const char* text : terms) {
        std::string norm = render(parse_term(text));
        REQUIRE(render(parse_term(norm)) == norm);
    }
    REQUIRE(render(parse_term("{x in a:x in b&x in c}")) ==
            "{x in a : (x in b & x in c)}");
    REQUIRE(render(parse_formula("a in b -> b in a")) == "(a in b -> b in a)");
}

TEST_CASE("closure adapters drive the kernel set formers") {
    Env env{{"b", decode(3)}};
    auto pred = formula_predicate(parse_formula("x in b"), "x", env);
    REQUIRE(comprehension(decode(255), pred).code() == 3);
    auto fn = term_map(parse_term("{x, b}"), "x", env);
    Hf img = replacement(decode(3), fn);
    REQUIRE(img.size() == 2);
}

TEST_CASE("evaluation respects materialization limits") {
    Limits tight;
    tight.power_set_max_elems = 4;
    Env env{{"a", decode(255)}};
    REQUIRE_THROWS_AS(eval_term(parse_term("P(a)"), env, tight), too_large_error);
}
