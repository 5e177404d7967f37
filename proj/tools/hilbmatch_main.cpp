#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hilbmatch/json_io.hpp"
#include "hilbmatch/rangespec.hpp"
#include "hilbmatch/verify.hpp"

namespace {

using hilbmatch::Family;
using hilbmatch::PolarizedFamily;
using hilbmatch::Rational;
using nlohmann::json;

// The eight parameter flags shared by compute and eval. Each family consumes
// the subset named by its canonical parameter list.
struct ParamFlags {
    std::map<std::string, long long> values;

    void attach(CLI::App* sub) {
        for (const char* name : {"p", "k", "m", "r", "x", "y", "z", "deg"}) {
            std::string opt = std::string(name).size() == 1
                                  ? "-" + std::string(name)
                                  : "--" + std::string(name);
            sub->add_option(opt, values[name], "family parameter " + std::string(name));
        }
    }
};

PolarizedFamily build_family(const CLI::App* sub, const std::string& family_arg,
                             const ParamFlags& flags) {
    const auto fam = hilbmatch::family_from_name(family_arg);
    if (!fam) throw std::invalid_argument("unknown family '" + family_arg + "'");
    if (*fam == Family::Product)
        throw std::invalid_argument("product families are reachable through "
                                    "`match 'product[...]' ...`, not compute");

    const auto expected = hilbmatch::family_param_names(*fam);
    hilbmatch::FamilyDescriptor desc;
    desc.family = *fam;
    for (std::string_view pname : expected) {
        const std::string key(pname);
        const std::string opt = key.size() == 1 ? "-" + key : "--" + key;
        if (sub->count(opt) == 0) {
            std::string wanted;
            for (std::string_view w : expected) {
                if (!wanted.empty()) wanted += ", ";
                wanted += w;
            }
            throw std::invalid_argument(family_arg + " requires parameter '" + key +
                                        "' (takes: " + wanted + ")");
        }
        desc.params.emplace_back(key, flags.values.at(key));
    }
    for (const auto& [key, value] : flags.values) {
        const std::string opt = key.size() == 1 ? "-" + key : "--" + key;
        if (sub->count(opt) == 0) continue;
        if (std::find(expected.begin(), expected.end(), key) == expected.end())
            throw std::invalid_argument(family_arg + " does not take parameter '" + key + "'");
    }
    return hilbmatch::from_descriptor(desc);
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

int run_compute(const PolarizedFamily& fam, bool as_json) {
    if (as_json) {
        json out;
        out["descriptor"] = hilbmatch::descriptor_json(fam.descriptor);
        out["polynomial"] = fam.polynomial.key();
        out["coefficients"] = hilbmatch::coefficients_json(fam.polynomial);
        out["text"] = fam.polynomial.str();
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << fam.polynomial.str() << '\n';
        std::cout << "# " << hilbmatch::descriptor_str(fam.descriptor) << '\n';
        for (const auto& a : fam.descriptor.assumptions)
            std::cout << "# assumes: " << a << '\n';
    }
    return 0;
}

int run_eval(const PolarizedFamily& fam, const std::string& at, bool as_json) {
    const Rational t = parse_rational(at);
    const Rational value = fam.polynomial.eval(t);
    if (as_json) {
        json out;
        out["descriptor"] = hilbmatch::descriptor_json(fam.descriptor);
        out["at"] = t.get_str();
        out["value"] = value.get_str();
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << value.get_str() << '\n';
    }
    return 0;
}

int run_match(const std::string& left, const std::string& right, bool as_json) {
    const auto records =
        hilbmatch::match_sides(hilbmatch::parse_side_spec(left), hilbmatch::parse_side_spec(right));
    if (as_json) {
        json out;
        out["matches"] = json::array();
        for (const auto& m : records) out["matches"].push_back(hilbmatch::match_json(m));
        out["count"] = records.size();
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& m : records)
            std::cout << hilbmatch::descriptor_str(m.left) << " == "
                      << hilbmatch::descriptor_str(m.right) << " : " << m.polynomial.str()
                      << '\n';
        std::cout << records.size() << " match(es)\n";
    }
    return records.empty() ? 1 : 0;
}

int run_solve(bool reduced, long long x_max, long long p_max, long long r_max, long long xyz_max,
              bool as_json) {
    const auto sols = reduced ? hilbmatch::solve_cy4_reduced(x_max)
                              : hilbmatch::solve_cy4_system(p_max, r_max, xyz_max);
    if (as_json) {
        json out;
        out["solutions"] = json::array();
        for (const auto& s : sols) out["solutions"].push_back(hilbmatch::solution_json(s));
        out["count"] = sols.size();
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& s : sols)
            std::cout << "p=" << s.p << " r=" << s.r << " x=" << s.x << " y=" << s.y
                      << " z=" << s.z << '\n';
        if (sols.empty()) std::cout << "no solutions\n";
    }
    return 0;
}

int run_verify(bool self_test_fail, bool as_json) {
    const auto checks = self_test_fail ? hilbmatch::run_identity_checks_with_injected_failure()
                                       : hilbmatch::run_identity_checks();
    bool all_pass = true;
    std::string first_failure;
    for (const auto& c : checks) {
        if (!c.pass && all_pass) first_failure = c.name;
        all_pass = all_pass && c.pass;
    }
    if (as_json) {
        json out;
        out["checks"] = json::array();
        for (const auto& c : checks) out["checks"].push_back(hilbmatch::check_json(c));
        out["pass"] = all_pass;
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& c : checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
        std::cout << (all_pass ? "all checks passed\n" : "verification FAILED\n");
    }
    if (!all_pass) std::cerr << "verification failed at: " << first_failure << '\n';
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert polynomial calculator and coincidence search for a catalog "
                 "of polarized families"};
    app.require_subcommand(1);

    bool json_compute = false, json_eval = false, json_match = false, json_solve = false,
         json_verify = false;

    auto* compute = app.add_subcommand("compute", "Hilbert polynomial of one catalog family");
    std::string compute_family;
    compute->add_option("--family", compute_family, "family tag, e.g. blownup-plane")->required();
    ParamFlags compute_params;
    compute_params.attach(compute);
    compute->add_flag("--json", json_compute, "structured output");

    auto* eval = app.add_subcommand("eval", "evaluate a family's polynomial at a rational point");
    std::string eval_family, eval_at;
    eval->add_option("--family", eval_family, "family tag")->required();
    ParamFlags eval_params;
    eval_params.attach(eval);
    eval->add_option("--at", eval_at, "evaluation point, e.g. 3 or -5/2")->required();
    eval->add_flag("--json", json_eval, "structured output");

    auto* match = app.add_subcommand("match", "search two parameter boxes for equal polynomials");
    std::string left_spec, right_spec;
    match->add_option("left", left_spec, "range spec, e.g. enriques:m=1..10 or product[...]")
        ->required();
    match->add_option("right", right_spec, "range spec")->required();
    match->add_flag("--json", json_match, "structured output");

    auto* solve = app.add_subcommand("solve", "scan the degree-4 coincidence system");
    long long p_max = 10, r_max = 100, xyz_max = 5, x_max = 10;
    bool reduced = false;
    solve->add_option("--p-max", p_max, "upper bound for p (scan starts at 4)");
    solve->add_option("--r-max", r_max, "upper bound for r");
    solve->add_option("--xyz-max", xyz_max, "upper bound for x, y, z");
    solve->add_flag("--reduced", reduced, "one-parameter slice y=2x, z=x");
    solve->add_option("--x-max", x_max, "upper bound for x in --reduced mode");
    solve->add_flag("--json", json_solve, "structured output");

    auto* verify = app.add_subcommand("verify-paper", "run the built-in identity suite");
    verify->add_flag("--json", json_verify, "structured output");
    bool self_test_fail = false;
    verify->add_flag("--self-test-fail", self_test_fail)->group("");  // failure-path hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return run_compute(build_family(compute, compute_family, compute_params),
                               json_compute);
        if (eval->parsed())
            return run_eval(build_family(eval, eval_family, eval_params), eval_at, json_eval);
        if (match->parsed()) return run_match(left_spec, right_spec, json_match);
        if (solve->parsed())
            return run_solve(reduced, x_max, p_max, r_max, xyz_max, json_solve);
        if (verify->parsed()) return run_verify(self_test_fail, json_verify);
    } catch (const hilbmatch::InternalInconsistency& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
