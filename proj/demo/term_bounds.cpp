// Evaluates a few set terms and compares the syntax-directed nesting bound
// against the observed rank of each result.

#include "ea/cardarith.hpp"
#include "ea/term_lang.hpp"

#include <cstdio>

using namespace ea;

int main() {
    const char* samples[] = {
        "P(O)",
        "P(P(O))",
        "U({a, b})",
        "E(a)",
        "{x in P(a) : O in x}",
        "{ {x, x} : x in a }",
        "P(U({a, b}))",
    };
    Env env;
    env["a"] = decode(11);  // {{}, {{}}, {{}, {{}}}}
    env["b"] = decode(6);

    std::printf("%-26s %6s %8s %6s %6s  %s\n", "term", "k", "rank_k", "rank", "code",
                "value");
    for (const char* text : samples) {
        TermPtr t = parse_term(text);
        Hf v = eval_term(t, env);
        std::printf("%-26s %6zu %8zu %6zu %6s  %s\n", render(t).c_str(), bound_of(t),
                    rank_bound_of(t), rank_fast(v), nat_str(v.code()).c_str(),
                    to_braces(v).c_str());
    }
    return 0;
}
