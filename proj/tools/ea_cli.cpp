// Command-line surface: evaluate terms, enumerate systems, run the analyzer
// and the verification suites, convert codes. Exit codes: 0 ok, 1 domain
// error, 2 usage error, 3 suite failure.

#include "ea/hf_json.hpp"
#include "ea/systems.hpp"
#include "ea/term_lang.hpp"
#include "ea/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using namespace ea;
using nlohmann::json;

namespace {

constexpr std::size_t brace_elision_threshold = 64;

std::string show_set(const Hf& s) {
    if (transitive_closure(s).size() > brace_elision_threshold)
        return "<" + std::to_string(s.size()) + " members>";
    return to_braces(s);
}

// Codes are doubly exponential in depth; elide them when not materializable.
std::string show_code(const Hf& s) {
    try {
        return nat_str(s.code());
    } catch (const too_large_error&) {
        return "(code too large)";
    }
}

json set_record(const Hf& s) {
    json j;
    try {
        j["code"] = nat_str(s.code());
    } catch (const too_large_error&) {
        j["code_too_large"] = true;
    }
    j["size"] = s.size();
    if (transitive_closure(s).size() <= brace_elision_threshold) j["braces"] = to_braces(s);
    return j;
}

Env parse_bindings(const std::vector<std::string>& lets) {
    Env env;
    for (const std::string& kv : lets) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--let expects name=braces, got '" + kv + "'");
        env[kv.substr(0, eq)] = parse_braces(kv.substr(eq + 1));
    }
    return env;
}

int cmd_eval(const std::string& text, const std::vector<std::string>& lets, bool as_json) {
    Env env = parse_bindings(lets);
    Hf val = eval_term(parse_term(text), env);
    if (as_json)
        std::cout << set_record(val).dump() << "\n";
    else
        std::cout << show_set(val) << "  #" << show_code(val) << "\n";
    return 0;
}

int cmd_analyze(const std::string& text, bool as_json) {
    TermPtr t = parse_term(text);
    std::size_t k = bound_of(t), rk = rank_bound_of(t);
    auto fv = free_vars(t);
    if (as_json) {
        json j;
        j["term"] = render(t);
        j["k"] = k;
        j["rank_k"] = rk;
        j["free_vars"] = fv;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "k=" << k << ", rank_k=" << rk << "\n";
    }
    return 0;
}

int cmd_code(const std::string& dir, const std::string& value, bool as_json) {
    if (dir == "decode") {
        Hf s = decode(nat_parse(value));
        if (as_json)
            std::cout << to_json(s).dump() << "\n";
        else
            std::cout << show_set(s) << "\n";
        return 0;
    }
    if (dir == "encode") {
        Hf s = parse_braces(value);
        if (as_json)
            std::cout << set_record(s).dump() << "\n";
        else
            std::cout << show_code(s) << "\n";
        return 0;
    }
    throw CLI::ValidationError("code expects 'encode' or 'decode', got '" + dir + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (true) {
        std::size_t j = s.find(sep, i);
        parts.push_back(s.substr(i, j - i));
        if (j == std::string::npos) return parts;
        i = j + 1;
    }
}

HfSystem named_system(const std::string& name) {
    if (name == "vn") return vn_system();
    if (name == "z") return z_system();
    if (name == "ch") return ch_system();
    if (name == "lex") return lex_system();
    if (name == "ack") return ack_system();
    if (name == "ack0") return ack0_system();
    throw CLI::ValidationError("unknown system '" + name + "'");
}

void print_hf_line(std::size_t k, const Hf& t, bool as_json) {
    if (as_json) {
        json j = set_record(t);
        j["index"] = k;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << k << "\t#" << show_code(t) << "\t" << show_set(t) << "\n";
    }
}

void print_numeral_line(std::size_t k, const Numeral& n, bool as_json) {
    if (as_json) {
        json j;
        j["index"] = k;
        j["value"] = nat_str(n.coded_value());
        j["digits"] = to_text(n);
        j["base_size"] = n.base().size();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << k << "\t" << to_text(n) << "\n";
    }
}

int cmd_enumerate(const std::string& spec, std::size_t count, bool as_json) {
    std::vector<std::string> parts = split(spec, ':');
    const std::string& kind = parts[0];
    if (parts.size() == 1 && kind != "") {
        HfSystem sys = named_system(kind);
        Hf t = sys.initial;
        for (std::size_t k = 0; k < count; ++k) {
            print_hf_line(k, t, as_json);
            if (k + 1 < count) t = sys.succ(t);
        }
        return 0;
    }
    if (kind == "base" && parts.size() == 3) {
        BaseSystem bs(named_system(parts[1]),
                      canonical_base(static_cast<std::size_t>(nat_parse(parts[2]))));
        std::size_t k = 0;
        for (const Numeral& n : bs.first_terms(count)) print_numeral_line(k++, n, as_json);
        return 0;
    }
    if (kind == "len" && parts.size() == 3) {
        LengthSystem ls(named_system(parts[1]),
                        ack_term(static_cast<std::size_t>(nat_parse(parts[2]))));
        std::size_t k = 0;
        for (const Numeral& n : ls.first_terms(count)) print_numeral_line(k++, n, as_json);
        return 0;
    }
    if (kind == "ackphi" && parts.size() == 3) {
        const std::string& name = parts[1];
        Nat k_bound = nat_parse(parts[2]);
        SizeMap phi;
        if (name == "double")
            phi = [](const Nat& x) { return Nat(2 * x); };
        else if (name == "square")
            phi = [](const Nat& x) { return Nat(x * x); };
        else
            throw CLI::ValidationError("ackphi supports 'double' and 'square'");
        AckPhiSystem sys(name, phi, k_bound);
        for (Nat m = 0; m < count; ++m) {
            Nat idx = sys.nth_index(m);
            std::optional<Nat> code = idx <= (1u << 20) ? std::optional<Nat>(pow2(idx))
                                                        : std::nullopt;
            if (as_json) {
                json j;
                j["index"] = nat_str(m);
                j["term_index"] = nat_str(idx);
                if (code) j["start_code"] = nat_str(*code);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << nat_str(m) << "\tl_" << nat_str(idx) << "\n";
            }
        }
        return 0;
    }
    throw CLI::ValidationError("bad system spec '" + spec + "'");
}

int cmd_check(const std::string& which, const Budget& b, bool as_json) {
    std::vector<std::string> names;
    if (which == "all")
        names = suite_names();
    else
        names.push_back(which);
    std::uint64_t failures = 0;
    for (const std::string& name : names) {
        SuiteReport rep = run_suite(name, b);
        failures += rep.total_failures();
        if (as_json) {
            for (const auto& g : rep.groups) {
                json j;
                j["suite"] = rep.name;
                j["group"] = g.name;
                j["cases"] = g.cases;
                j["failures"] = g.failures;
                std::cout << j.dump() << "\n";
            }
            json summary;
            summary["suite"] = rep.name;
            summary["summary"] = true;
            summary["cases"] = rep.total_cases();
            summary["failures"] = rep.total_failures();
            summary["seconds"] = rep.seconds;
            summary["budget"] = rep.budget;
            std::cout << summary.dump() << "\n";
        } else {
            std::printf("%-22s %8llu cases %5llu failures  %6.2fs\n", rep.name.c_str(),
                        static_cast<unsigned long long>(rep.total_cases()),
                        static_cast<unsigned long long>(rep.total_failures()), rep.seconds);
            for (const auto& g : rep.groups)
                for (const auto& f : g.failures)
                    std::printf("  %s: %s\n", g.name.c_str(), f.c_str());
        }
    }
    return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hereditarily finite set calculator and verifier"};
    app.require_subcommand(1);

    bool as_json = false;
    std::uint64_t seed = 0;
    std::string budget_spec;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for randomized behavior");
    app.add_option("--budget", budget_spec, "budget overrides, k=v,k=v");

    std::string eval_text;
    std::vector<std::string> lets;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term");
    eval_cmd->add_option("term", eval_text, "term text")->required();
    eval_cmd->add_option("--let", lets, "bind a free variable, name=braces");

    std::string enum_spec;
    std::size_t enum_count = 10;
    auto* enum_cmd = app.add_subcommand("enumerate", "list the first terms of a system");
    enum_cmd->add_option("system", enum_spec,
                         "vn|z|ch|lex|ack|ack0|base:<sys>:<m>|len:<sys>:<l>|ackphi:<f>:<k>")
        ->required();
    enum_cmd->add_option("-n,--count", enum_count, "how many terms");

    std::string analyze_text;
    auto* analyze_cmd = app.add_subcommand("analyze", "syntax-directed bounds for a term");
    analyze_cmd->add_option("term", analyze_text, "term text")->required();

    std::string check_suite = "all";
    auto* check_cmd = app.add_subcommand("check", "run verification suites");
    check_cmd->add_option("suite", check_suite, "suite name or 'all'");

    std::string code_dir, code_value;
    auto* code_cmd = app.add_subcommand("code", "convert between codes and sets");
    code_cmd->add_option("direction", code_dir, "encode|decode")->required();
    code_cmd->add_option("value", code_value, "decimal code or braces")->required();

    // let --json/--seed/--budget appear after the subcommand too
    for (CLI::App* sc : {eval_cmd, enum_cmd, analyze_cmd, check_cmd, code_cmd})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Budget b;
        b.seed = seed;
        if (const char* env = std::getenv("EA_BUDGET"); env && *env) b.merge_spec(env);
        if (!budget_spec.empty()) b.merge_spec(budget_spec);

        if (*eval_cmd) return cmd_eval(eval_text, lets, as_json);
        if (*enum_cmd) return cmd_enumerate(enum_spec, enum_count, as_json);
        if (*analyze_cmd) return cmd_analyze(analyze_text, as_json);
        if (*check_cmd) return cmd_check(check_suite, b, as_json);
        if (*code_cmd) return cmd_code(code_dir, code_value, as_json);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ea_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
