// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion carries a wall-clock budget in seconds; exceeding it fails
// the criterion even when every check passes.

#include "ea/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace ea;

namespace {

struct Criterion {
    int id;
    const char* what;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool suite_ok(const std::string& name, const Budget& b, std::string& detail) {
    SuiteReport rep = run_suite(name, b);
    if (rep.passed()) {
        detail = std::to_string(rep.total_cases()) + " cases";
        return true;
    }
    detail = std::to_string(rep.total_failures()) + " failures, first: ";
    for (const auto& g : rep.groups)
        if (!g.failures.empty()) {
            detail += g.name + " / " + g.failures.front();
            break;
        }
    return false;
}

// 1. Coding bijection on an initial segment plus random structural round-trips.
bool crit_coding(std::string& detail) {
    for (unsigned n = 0; n < (1u << 16); ++n)
        if (decode(Nat(n)).code() != Nat(n)) {
            detail = "decode/encode mismatch at " + std::to_string(n);
            return false;
        }
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10000; ++i) {
        Hf s = decode(Nat(rng() % (1u << 18)));
        std::vector<Hf> ms(s.members().begin(), s.members().end());
        if (make_set(std::move(ms)) != s) {
            detail = "rebuild mismatch at code " + nat_str(s.code());
            return false;
        }
    }
    detail = "65536 codes + 10000 random sets";
    return true;
}

// 5. Code-order successor iterated from the empty set.
bool crit_code_order(std::string& detail) {
    Hf s = empty_set();
    for (unsigned k = 1; k <= 1024; ++k) {
        s = ack0_successor(s);
        if (s.code() != Nat(k)) {
            detail = "iterate " + std::to_string(k) + " has code " + nat_str(s.code());
            return false;
        }
    }
    detail = "1024 iterations";
    return true;
}

// 6. Successor theorem, exhaustive over enumeration prefixes whose anchor
// field has at most 4 elements, against every subset of that field.
bool crit_successor_theorem(std::string& detail) {
    std::size_t lens[] = {0, 1, 2, 4};
    std::uint64_t cases = 0;
    for (std::size_t m = 1; m <= 15; ++m) {
        std::size_t j = 0;
        for (std::size_t cand = 0; cand < 4; ++cand)
            if (lens[cand] <= m && m < (std::size_t(1) << lens[cand])) j = cand;
        LinOrd anchor = lex_term(j);
        Hf sn = decode(Nat(m - 1));
        Hf succ = ack0_successor(sn);
        if (!(lex_less_eq(anchor, sn, succ) && sn != succ)) {
            detail = "clause (i) fails at term count " + std::to_string(m);
            return false;
        }
        std::size_t nsubs = std::size_t(1) << anchor.size();
        for (std::size_t mask = 0; mask < nsubs; ++mask) {
            Hf a = mask_subset(anchor, Nat(mask));
            ++cases;
            if (lex_less_eq(anchor, sn, a) && a != sn && !lex_less_eq(anchor, succ, a)) {
                detail = "clause (ii) fails at term count " + std::to_string(m) + ", subset #" +
                         nat_str(a.code());
                return false;
            }
        }
    }
    detail = std::to_string(cases) + " subset comparisons";
    return true;
}

// 7. Numeral systems: fixed-base coding over three number systems, the
// counting law for the numeral enumeration, and fixed-length base growth.
bool crit_numerals(std::string& detail) {
    std::vector<HfSystem> systems = {vn_system(), z_system(), ch_system()};
    for (const HfSystem& n : systems)
        for (std::size_t m = 2; m <= 4; ++m) {
            BaseSystem bs(n, canonical_base(m));
            std::size_t count = std::min<std::size_t>(
                256, static_cast<std::size_t>(nat_pow(Nat(m), Nat(4))));
            std::vector<Numeral> ts = bs.first_terms(count);
            for (std::size_t k = 0; k < ts.size(); ++k)
                if (ts[k].coded_value() != Nat(k) || (k > 0 && !ts[k].is_proper())) {
                    detail = n.name + " base " + std::to_string(m) + " term " +
                             std::to_string(k);
                    return false;
                }
        }
    for (std::size_t m = 2; m <= 4; ++m)
        for (std::size_t l = 0; l <= 4; ++l) {
            std::vector<Numeral> e = num_enumeration(canonical_base(m), ack_term(l));
            if (Nat(e.size()) != nat_pow(Nat(m), Nat(l))) {
                detail = "enumeration count off at base " + std::to_string(m) + " length " +
                         std::to_string(l);
                return false;
            }
        }
    for (std::size_t llen : {std::size_t(2), std::size_t(3)}) {
        LengthSystem ls(ack0_system(), ack_term(llen));
        std::vector<Numeral> ts = ls.first_terms(64);
        for (std::size_t k = 0; k < 64; ++k) {
            std::size_t m = 2;
            while (nat_pow(Nat(m), Nat(llen)) <= Nat(k)) ++m;
            if (ts[k].coded_value() != Nat(k) || ts[k].base().size() != m) {
                detail = "fixed-length " + std::to_string(llen) + " term " + std::to_string(k);
                return false;
            }
        }
    }
    detail = "3 systems x 3 bases, counting law, 2 fixed-length hierarchies";
    return true;
}

// 8. Closure witness: the number ending three tower levels up dominates
// 2^{size} for every number anchored at the lower level.
bool crit_closure(std::string& detail) {
    std::vector<Nat> len{0, 1, 2, 4, 16, 65536};
    for (std::size_t k = 0; k <= 2; ++k)
        for (Nat n = len[k]; n < len[k + 1]; ++n)
            if (!(len[k + 3] + 1 > pow2(n + 1))) {
                detail = "k=" + std::to_string(k) + " n=" + nat_str(n);
                return false;
            }
    // materialize the k = 0 witness and recount
    HfSystem ack = ack_system();
    Hf t = ack.initial;
    for (std::size_t j = 1; j <= 4; ++j) t = ack.succ(t);
    if (t != ack_term(4).carrier()) {
        detail = "materialized walk diverges";
        return false;
    }
    detail = "k <= 2 plus materialized k = 0 witness";
    return true;
}

// 9. Staged tower plan for the doubling function.
bool crit_staged_tower(std::string& detail) {
    AckPhiSystem s("double", [](const Nat& x) { return Nat(2 * x); }, 1);
    if (s.N() != 2) {
        detail = "N = " + nat_str(s.N());
        return false;
    }
    Nat hs[] = {4, 8, 16, 32};
    for (unsigned n = 0; n <= 3; ++n)
        if (s.h(n) != hs[n]) {
            detail = "h" + std::to_string(n) + " = " + nat_str(s.h(n));
            return false;
        }
    if (s.stage_start_index(2) != 16 || s.stage_start_index(3) != 65536) {
        detail = "stage start indices off";
        return false;
    }
    auto code3 = s.stage_start_code(3);
    if (!code3 || *code3 != pow2(Nat(65536))) {
        detail = "stage-3 start code is not 2^65536";
        return false;
    }
    Hf t = decode(*code3);
    if (t.size() != 1 || t.members()[0].code() != 65536) {
        detail = "stage-3 start term is not the expected singleton";
        return false;
    }
    for (Nat m = 1; m <= s.h(2); ++m)
        if (!(2 * m <= s.gamma_size(m))) {
            detail = "gamma witness fails at m = " + nat_str(m);
            return false;
        }
    detail = "plan, stage-3 bignum code, gamma through stage 2";
    return true;
}

// 10. Exact/fast cross-validation for cardinals, ranks, and arithmetic.
bool crit_exact_fast(std::string& detail) {
    for (unsigned n = 0; n < 32; ++n) {
        Hf s = decode(Nat(n));
        if (s.size() > 4) continue;
        Hf c = card_exact(s);
        if (c.size() != s.size()) {  // property (a): one class per cardinality
            detail = "card_exact size off at code " + std::to_string(n);
            return false;
        }
        LinOrd o = ord_exact(s);  // property (b): classes ascend strictly in size
        for (std::size_t j = 0; j + 1 < o.size(); ++j)
            if (!(o.terms()[j].size() < o.terms()[j + 1].size())) {
                detail = "ord_exact order off at code " + std::to_string(n);
                return false;
            }
    }
    for (unsigned n = 0; n < 32; ++n) {
        Hf s = decode(Nat(n));
        if (rank_exact(s).size() != rank_fast(s)) {
            detail = "rank mismatch at code " + std::to_string(n);
            return false;
        }
    }
    for (unsigned ac = 0; ac < 8; ++ac)
        for (unsigned bc = 0; bc < 8; ++bc) {
            Hf a = decode(Nat(ac)), b = decode(Nat(bc));
            bool ok = card(add_c(a, b)) == add_size(card(a), card(b)) &&
                      card(mul_c(a, b)) == mul_size(card(a), card(b)) &&
                      card(exp_c(a, b)) == exp_size(card(a), card(b));
            if (!ok) {
                detail = "arithmetic mismatch at codes " + std::to_string(ac) + ", " +
                         std::to_string(bc);
                return false;
            }
        }
    detail = "cardinal classes, ranks to code 32, arithmetic on sizes <= 3";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> crits = {
        {1, "coding bijection", 5, crit_coding},
        {2, "ordering laws", 30,
         [](std::string& d) { return suite_ok("kuratowski", {}, d); }},
        {3, "splitting lemma", 60, [](std::string& d) { return suite_ok("splitting", {}, d); }},
        {4, "bound analyzer soundness", 60,
         [](std::string& d) { return suite_ok("bounding", {}, d); }},
        {5, "code-order successor", 5, crit_code_order},
        {6, "successor theorem", 30, crit_successor_theorem},
        {7, "numeral systems", 30, crit_numerals},
        {8, "closure witness", 10, crit_closure},
        {9, "staged tower plan", 10, crit_staged_tower},
        {10, "exact/fast cross-validation", 30, crit_exact_fast},
    };

    int failures = 0;
    for (const Criterion& c : crits) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs <= c.budget_seconds;
        if (ok && !in_budget) detail += " [over budget]";
        bool pass = ok && in_budget;
        std::printf("%s criterion %2d (%5.1fs / %4.0fs budget): %s -- %s\n",
                    pass ? "PASS" : "FAIL", c.id, secs, c.budget_seconds, c.what,
                    detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
