#pragma once

#include "ea/hf.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ea {

struct parse_error : ea_error {
    parse_error(const std::string& msg, std::size_t pos)
        : ea_error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

// Term constructors: variable, empty set, pair, power, union, epsilon fan,
// comprehension {x in s : F}, replacement {t : x in s}.
struct Term {
    enum class Kind { Var, Empty, Pair, Power, Union, Epsilon, Compr, Repl };
    Kind kind;
    std::string var;  // variable name, or the binder for Compr/Repl
    TermPtr a;        // Pair lhs; unary child; Compr source; Repl body
    TermPtr b;        // Pair rhs; Repl source
    FormulaPtr body;  // Compr body
};

// Formulas are quantifier-free in the unbounded sense: only bounded
// quantifiers over a source term are available.
struct Formula {
    enum class Kind { In, Eq, Sub, Not, And, Or, Implies, All, Some };
    Kind kind;
    TermPtr t1, t2;  // atom operands; t1 is the source for All/Some
    FormulaPtr f1, f2;
    std::string var;  // binder for All/Some
};

using Env = std::unordered_map<std::string, Hf>;

// --- parser ------------------------------------------------------------------

namespace detail {

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;

    void skip() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' ||
                                    src[pos] == '\r'))
            ++pos;
    }

    bool at_end() {
        skip();
        return pos >= src.size();
    }

    // One token of lookahead; does not consume.
    std::string peek() {
        skip();
        if (pos >= src.size()) return "";
        char c = src[pos];
        if (c >= 'a' && c <= 'z') {
            std::size_t j = pos;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= '0' && src[j] <= '9') ||
                    src[j] == '_'))
                ++j;
            return std::string(src.substr(pos, j - pos));
        }
        if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') return "->";
        return std::string(1, c);
    }

    std::string next() {
        std::string t = peek();
        if (t.empty()) throw parse_error("unexpected end of input", pos);
        pos += t.size();
        return t;
    }

    void expect(const std::string& t) {
        std::size_t at = pos;
        if (peek() != t) throw parse_error("expected '" + t + "'", at);
        next();
    }

    std::string second() {  // token after the next one
        Lexer save = *this;
        save.next();
        return save.peek();
    }
};

inline bool is_reserved(const std::string& w) {
    return w == "in" || w == "sub" || w == "all" || w == "some";
}

inline bool is_ident(const std::string& w) {
    if (w.empty() || w[0] < 'a' || w[0] > 'z' || is_reserved(w)) return false;
    for (char c : w)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
    return true;
}

struct Parser {
    Lexer lex;
    std::vector<std::string> binders;

    void push_binder(const std::string& v, std::size_t at) {
        for (const auto& b : binders)
            if (b == v) throw parse_error("binder '" + v + "' shadows an enclosing binder", at);
        binders.push_back(v);
    }
    void pop_binder() { binders.pop_back(); }

    TermPtr term() {
        std::size_t at = lex.pos;
        std::string t = lex.peek();
        if (t == "O") {
            lex.next();
            return std::make_shared<Term>(Term{Term::Kind::Empty, "", {}, {}, {}});
        }
        if (t == "P" || t == "U" || t == "E") {
            lex.next();
            lex.expect("(");
            TermPtr a = term();
            lex.expect(")");
            Term::Kind k = t == "P"   ? Term::Kind::Power
                           : t == "U" ? Term::Kind::Union
                                      : Term::Kind::Epsilon;
            return std::make_shared<Term>(Term{k, "", a, {}, {}});
        }
        if (t == "{") return braces();
        if (is_ident(t)) {
            lex.next();
            return std::make_shared<Term>(Term{Term::Kind::Var, t, {}, {}, {}});
        }
        throw parse_error("expected a term", at);
    }

    TermPtr braces() {
        std::size_t at = lex.pos;
        lex.expect("{");
        std::string first = lex.peek();
        if (is_ident(first) && lex.second() == "in") {
            // {x in s : F}
            std::string binder = lex.next();
            lex.expect("in");
            TermPtr src = term();
            lex.expect(":");
            push_binder(binder, at);
            FormulaPtr body = formula();
            pop_binder();
            lex.expect("}");
            return std::make_shared<Term>(Term{Term::Kind::Compr, binder, src, {}, body});
        }
        TermPtr t1 = term();
        std::string sep = lex.peek();
        if (sep == ",") {
            lex.next();
            TermPtr t2 = term();
            lex.expect("}");
            return std::make_shared<Term>(Term{Term::Kind::Pair, "", t1, t2, {}});
        }
        if (sep == ":") {
            // {t : x in s} — the body was parsed before its binder is known;
            // the binder check happens at evaluation (unbound otherwise).
            lex.next();
            std::size_t vat = lex.pos;
            std::string binder = lex.next();
            if (!is_ident(binder)) throw parse_error("expected binder variable", vat);
            lex.expect("in");
            TermPtr src = term();
            lex.expect("}");
            return std::make_shared<Term>(Term{Term::Kind::Repl, binder, t1, src, {}});
        }
        throw parse_error("expected ',' or ':' in braces", lex.pos);
    }

    FormulaPtr formula() { return implies(); }

    FormulaPtr implies() {
        FormulaPtr l = disj();
        if (lex.peek() == "->") {
            lex.next();
            FormulaPtr r = implies();
            return std::make_shared<Formula>(Formula{Formula::Kind::Implies, {}, {}, l, r, ""});
        }
        return l;
    }

    FormulaPtr disj() {
        FormulaPtr l = conj();
        while (lex.peek() == "|") {
            lex.next();
            FormulaPtr r = conj();
            l = std::make_shared<Formula>(Formula{Formula::Kind::Or, {}, {}, l, r, ""});
        }
        return l;
    }

    FormulaPtr conj() {
        FormulaPtr l = unary();
        while (lex.peek() == "&") {
            lex.next();
            FormulaPtr r = unary();
            l = std::make_shared<Formula>(Formula{Formula::Kind::And, {}, {}, l, r, ""});
        }
        return l;
    }

    FormulaPtr unary() {
        std::size_t at = lex.pos;
        std::string t = lex.peek();
        if (t == "~") {
            lex.next();
            FormulaPtr f = unary();
            return std::make_shared<Formula>(Formula{Formula::Kind::Not, {}, {}, f, {}, ""});
        }
        if (t == "(") {
            std::string q = lex.second();
            if (q == "all" || q == "some") {
                lex.next();  // (
                lex.next();  // quantifier
                std::size_t vat = lex.pos;
                std::string binder = lex.next();
                if (!is_ident(binder)) throw parse_error("expected binder variable", vat);
                lex.expect("in");
                TermPtr src = term();
                lex.expect(")");
                push_binder(binder, at);
                FormulaPtr body = unary();
                pop_binder();
                Formula::Kind k = q == "all" ? Formula::Kind::All : Formula::Kind::Some;
                return std::make_shared<Formula>(Formula{k, src, {}, body, {}, binder});
            }
            lex.next();
            FormulaPtr f = formula();
            lex.expect(")");
            return f;
        }
        return atom();
    }

    FormulaPtr atom() {
        TermPtr t1 = term();
        std::size_t at = lex.pos;
        std::string op = lex.peek();
        if (op != "in" && op != "=" && op != "sub")
            throw parse_error("expected 'in', '=' or 'sub'", at);
        lex.next();
        TermPtr t2 = term();
        Formula::Kind k = op == "in"  ? Formula::Kind::In
                          : op == "=" ? Formula::Kind::Eq
                                      : Formula::Kind::Sub;
        return std::make_shared<Formula>(Formula{k, t1, t2, {}, {}, ""});
    }
};

}  // namespace detail

inline TermPtr parse_term(std::string_view text) {
    detail::Parser p{{text}, {}};
    TermPtr t = p.term();
    if (!p.lex.at_end()) throw parse_error("trailing input", p.lex.pos);
    return t;
}

inline FormulaPtr parse_formula(std::string_view text) {
    detail::Parser p{{text}, {}};
    FormulaPtr f = p.formula();
    if (!p.lex.at_end()) throw parse_error("trailing input", p.lex.pos);
    return f;
}

// --- evaluation --------------------------------------------------------------

// Direct evaluates bounded quantifiers by looping over the source; Expansion
// evaluates them through their definitions (∀: S ⊆ {x ∈ S : A}, ∃ dually).
// The two must agree; the conformance suite checks it.
enum class QuantMode { Direct, Expansion };

inline Hf eval_term(const TermPtr& t, const Env& env, const Limits& lim = default_limits(),
                    QuantMode qm = QuantMode::Direct);

inline bool eval_formula(const FormulaPtr& f, const Env& env,
                         const Limits& lim = default_limits(), QuantMode qm = QuantMode::Direct) {
    switch (f->kind) {
        case Formula::Kind::In:
            return eval_term(f->t2, env, lim, qm).contains(eval_term(f->t1, env, lim, qm));
        case Formula::Kind::Eq:
            return eval_term(f->t1, env, lim, qm) == eval_term(f->t2, env, lim, qm);
        case Formula::Kind::Sub:
            return eval_term(f->t1, env, lim, qm).subset_of(eval_term(f->t2, env, lim, qm));
        case Formula::Kind::Not:
            return !eval_formula(f->f1, env, lim, qm);
        case Formula::Kind::And:
            return eval_formula(f->f1, env, lim, qm) && eval_formula(f->f2, env, lim, qm);
        case Formula::Kind::Or:
            return eval_formula(f->f1, env, lim, qm) || eval_formula(f->f2, env, lim, qm);
        case Formula::Kind::Implies:
            return !eval_formula(f->f1, env, lim, qm) || eval_formula(f->f2, env, lim, qm);
        case Formula::Kind::All: {
            Hf src = eval_term(f->t1, env, lim, qm);
            if (qm == QuantMode::Expansion) {
                Hf kept = comprehension(src, [&](const Hf& m) {
                    Env e2 = env;
                    e2[f->var] = m;
                    return eval_formula(f->f1, e2, lim, qm);
                });
                return src.subset_of(kept);
            }
            for (const Hf& m : src.members()) {
                Env e2 = env;
                e2[f->var] = m;
                if (!eval_formula(f->f1, e2, lim, qm)) return false;
            }
            return true;
        }
        case Formula::Kind::Some: {
            Hf src = eval_term(f->t1, env, lim, qm);
            if (qm == QuantMode::Expansion) {
                Hf kept = comprehension(src, [&](const Hf& m) {
                    Env e2 = env;
                    e2[f->var] = m;
                    return eval_formula(f->f1, e2, lim, qm);
                });
                return !kept.is_empty();
            }
            for (const Hf& m : src.members()) {
                Env e2 = env;
                e2[f->var] = m;
                if (eval_formula(f->f1, e2, lim, qm)) return true;
            }
            return false;
        }
    }
    throw domain_error("eval_formula: bad node");
}

inline Hf eval_term(const TermPtr& t, const Env& env, const Limits& lim, QuantMode qm) {
    switch (t->kind) {
        case Term::Kind::Var: {
            auto it = env.find(t->var);
            if (it == env.end()) throw domain_error("unbound variable: " + t->var);
            return it->second;
        }
        case Term::Kind::Empty:
            return empty_set();
        case Term::Kind::Pair:
            return pair_set(eval_term(t->a, env, lim, qm), eval_term(t->b, env, lim, qm));
        case Term::Kind::Power:
            return power_set(eval_term(t->a, env, lim, qm), lim);
        case Term::Kind::Union:
            return union_all(eval_term(t->a, env, lim, qm));
        case Term::Kind::Epsilon:
            return epsilon_fan(eval_term(t->a, env, lim, qm), lim);
        case Term::Kind::Compr: {
            Hf src = eval_term(t->a, env, lim, qm);
            return comprehension(src, [&](const Hf& m) {
                Env e2 = env;
                e2[t->var] = m;
                return eval_formula(t->body, e2, lim, qm);
            });
        }
        case Term::Kind::Repl: {
            Hf src = eval_term(t->b, env, lim, qm);
            return replacement(src, [&](const Hf& m) {
                Env e2 = env;
                e2[t->var] = m;
                return eval_term(t->a, e2, lim, qm);
            });
        }
    }
    throw domain_error("eval_term: bad node");
}

// Adapters exposing term-language closures as host predicates/maps, so the
// kernel's comprehension/replacement can consume either form.
inline std::function<bool(const Hf&)> formula_predicate(FormulaPtr f, std::string binder, Env env,
                                                        Limits lim = default_limits()) {
    return [f = std::move(f), binder = std::move(binder), env = std::move(env),
            lim](const Hf& m) {
        Env e2 = env;
        e2[binder] = m;
        return eval_formula(f, e2, lim);
    };
}

inline std::function<Hf(const Hf&)> term_map(TermPtr t, std::string binder, Env env,
                                             Limits lim = default_limits()) {
    return [t = std::move(t), binder = std::move(binder), env = std::move(env), lim](const Hf& m) {
        Env e2 = env;
        e2[binder] = m;
        return eval_term(t, e2, lim);
    };
}

// --- syntax-directed bounds --------------------------------------------------

// k with eval(t, env) ∈ P^k(TC of env values), for every environment.
// Structural rules: variable 0; empty 1; pair max+1; comprehension k+1;
// replacement k_body + k_source + 1; epsilon k+3; power k+2; union k+1.
// Replacement needs the extra layer for the collecting set itself: the images
// land at k_body + k_source, the set of them one level higher.
// The power/union rules are derived from transitivity of P^k images and are
// validated empirically by the soundness suite.
inline std::size_t bound_of(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var:
            return 0;
        case Term::Kind::Empty:
            return 1;
        case Term::Kind::Pair:
            return std::max(bound_of(t->a), bound_of(t->b)) + 1;
        case Term::Kind::Power:
            return bound_of(t->a) + 2;
        case Term::Kind::Union:
            return bound_of(t->a) + 1;
        case Term::Kind::Epsilon:
            return bound_of(t->a) + 3;
        case Term::Kind::Compr:
            return bound_of(t->a) + 1;
        case Term::Kind::Repl:
            return bound_of(t->a) + bound_of(t->b) + 1;
    }
    throw domain_error("bound_of: bad node");
}

// k with rank(eval(t, env)) < max env rank + k. An element of P^k(TC(env))
// has rank below the transitive closure's rank plus k, which the membership
// bound shifts by one.
inline std::size_t rank_bound_of(const TermPtr& t) { return bound_of(t) + 1; }

// --- free variables ----------------------------------------------------------

namespace detail {
inline void free_vars_into(const TermPtr& t, std::vector<std::string>& bound,
                           std::vector<std::string>& out);

inline void free_vars_into(const FormulaPtr& f, std::vector<std::string>& bound,
                           std::vector<std::string>& out) {
    if (f->t1) free_vars_into(f->t1, bound, out);
    if (f->t2) free_vars_into(f->t2, bound, out);
    if (!f->var.empty()) bound.push_back(f->var);
    if (f->f1) free_vars_into(f->f1, bound, out);
    if (f->f2) free_vars_into(f->f2, bound, out);
    if (!f->var.empty()) bound.pop_back();
}

inline void free_vars_into(const TermPtr& t, std::vector<std::string>& bound,
                           std::vector<std::string>& out) {
    switch (t->kind) {
        case Term::Kind::Var:
            for (const auto& b : bound)
                if (b == t->var) return;
            for (const auto& v : out)
                if (v == t->var) return;
            out.push_back(t->var);
            return;
        case Term::Kind::Empty:
            return;
        case Term::Kind::Pair:
            free_vars_into(t->a, bound, out);
            free_vars_into(t->b, bound, out);
            return;
        case Term::Kind::Power:
        case Term::Kind::Union:
        case Term::Kind::Epsilon:
            free_vars_into(t->a, bound, out);
            return;
        case Term::Kind::Compr:
            free_vars_into(t->a, bound, out);
            bound.push_back(t->var);
            free_vars_into(t->body, bound, out);
            bound.pop_back();
            return;
        case Term::Kind::Repl:
            free_vars_into(t->b, bound, out);
            bound.push_back(t->var);
            free_vars_into(t->a, bound, out);
            bound.pop_back();
            return;
    }
}
}  // namespace detail

inline std::vector<std::string> free_vars(const TermPtr& t) {
    std::vector<std::string> bound, out;
    detail::free_vars_into(t, bound, out);
    return out;
}

// --- rendering ---------------------------------------------------------------

inline std::string render(const TermPtr& t);

inline std::string render(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::In:
            return render(f->t1) + " in " + render(f->t2);
        case Formula::Kind::Eq:
            return render(f->t1) + " = " + render(f->t2);
        case Formula::Kind::Sub:
            return render(f->t1) + " sub " + render(f->t2);
        case Formula::Kind::Not:
            return "~(" + render(f->f1) + ")";
        case Formula::Kind::And:
            return "(" + render(f->f1) + " & " + render(f->f2) + ")";
        case Formula::Kind::Or:
            return "(" + render(f->f1) + " | " + render(f->f2) + ")";
        case Formula::Kind::Implies:
            return "(" + render(f->f1) + " -> " + render(f->f2) + ")";
        case Formula::Kind::All:
            return "(all " + f->var + " in " + render(f->t1) + ") " + render(f->f1);
        case Formula::Kind::Some:
            return "(some " + f->var + " in " + render(f->t1) + ") " + render(f->f1);
    }
    throw domain_error("render: bad node");
}

inline std::string render(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var:
            return t->var;
        case Term::Kind::Empty:
            return "O";
        case Term::Kind::Pair:
            return "{" + render(t->a) + ", " + render(t->b) + "}";
        case Term::Kind::Power:
            return "P(" + render(t->a) + ")";
        case Term::Kind::Union:
            return "U(" + render(t->a) + ")";
        case Term::Kind::Epsilon:
            return "E(" + render(t->a) + ")";
        case Term::Kind::Compr:
            return "{" + t->var + " in " + render(t->a) + " : " + render(t->body) + "}";
        case Term::Kind::Repl:
            return "{" + render(t->a) + " : " + t->var + " in " + render(t->b) + "}";
    }
    throw domain_error("render: bad node");
}

}  // namespace ea
