#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fnom/coeffs.hpp"
#include "fnom/compositions.hpp"
#include "fnom/fseq.hpp"
#include "fnom/inversion.hpp"
#include "fnom/polybasis.hpp"
#include "fnom/polynomial.hpp"
#include "fnom/tiling.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes shared with the test harness.
constexpr int kExitVerificationFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNotAdmissible = 3;
constexpr int kExitMethodMismatch = 4;

fnom::FSequence parse_sequence(const std::string& selector) {
    if (selector == "natural") return fnom::FSequence::natural();
    if (selector == "fibonacci") return fnom::FSequence::fibonacci();
    if (selector.rfind("gaussian:", 0) == 0) {
        const std::string base = selector.substr(9);
        if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("gaussian base '" + base +
                                        "' is not a positive integer");
        int q = 0;
        try {
            q = std::stoi(base);
        } catch (const std::exception&) {
            throw std::invalid_argument("gaussian base '" + base + "' is out of range");
        }
        return fnom::FSequence::gaussian(q);
    }
    if (selector.rfind("file:", 0) == 0) return fnom::FSequence::from_file(selector.substr(5));
    throw std::invalid_argument("unknown sequence selector '" + selector +
                                "' (expected natural | fibonacci | gaussian:<q> | file:<path>)");
}

// Finite sequences must cover every index the command will touch; rejecting
// up front keeps partial output from ever reaching stdout.
void require_index(const fnom::FSequence& F, long long needed, const std::string& what) {
    if (needed < 0) throw std::invalid_argument(what + " must be >= 0");
    const auto last = F.max_index();
    if (last && needed > static_cast<long long>(*last))
        throw std::invalid_argument("sequence '" + F.name() + "' ends at index " +
                                    std::to_string(*last) + " but " + what + " = " +
                                    std::to_string(needed) + " needs more values");
}

ordered_json rows_json(const fnom::TriMatrix& M) {
    ordered_json rows = ordered_json::array();
    for (int n = 0; n < M.order(); ++n) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k <= n; ++k) row.push_back(M.at(n, k).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json coeffs_json(const fnom::Polynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return coeffs;
}

struct ScalarOptions {
    std::string selector;
    std::string format = "text";
    int n = 0;
};

int run_fnomial(const ScalarOptions& opt, int k) {
    const fnom::FSequence F = parse_sequence(opt.selector);
    require_index(F, opt.n, "n");
    const fnom::BigInt value = fnom::fnomial(F, opt.n, k);
    if (opt.format == "json") {
        ordered_json out{{"sequence", F.name()}, {"n", opt.n}, {"k", k}, {"value", value.str()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

int run_multinomial(const ScalarOptions& opt, const std::vector<int>& parts) {
    const fnom::FSequence F = parse_sequence(opt.selector);
    require_index(F, opt.n, "n");
    const fnom::BigInt value = fnom::multi_fnomial(F, opt.n, parts);
    if (opt.format == "json") {
        ordered_json out{
            {"sequence", F.name()}, {"n", opt.n}, {"parts", parts}, {"value", value.str()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

int run_invert(const std::string& selector, int N, const std::string& method,
               const std::string& format) {
    if (method == "both" && format == "csv")
        throw std::invalid_argument("--method both has no csv form (use text or json)");
    const fnom::FSequence F = parse_sequence(selector);
    require_index(F, N, "N");

    fnom::TriMatrix result(0);
    bool agree = true;
    if (method == "direct") {
        result = fnom::fnomial_inverse_matrix(F, N, fnom::InverseMethod::Direct);
    } else if (method == "oracle") {
        result = fnom::fnomial_inverse_matrix(F, N, fnom::InverseMethod::Oracle);
    } else {
        const fnom::TriMatrix direct = fnom::fnomial_inverse_matrix(F, N, fnom::InverseMethod::Direct);
        const fnom::TriMatrix oracle = fnom::fnomial_inverse_matrix(F, N, fnom::InverseMethod::Oracle);
        if (direct != oracle) {
            for (int n = 0; n <= N; ++n)
                for (int k = 0; k <= n; ++k)
                    if (direct.at(n, k) != oracle.at(n, k)) {
                        std::cerr << "error: direct and oracle inverses disagree at (" << n << ","
                                  << k << "): " << direct.at(n, k).str() << " vs "
                                  << oracle.at(n, k).str() << "\n";
                        return kExitMethodMismatch;
                    }
        }
        result = direct;
    }

    if (format == "json") {
        ordered_json out{{"sequence", F.name()}, {"order", result.order()}, {"method", method}};
        if (method == "both") out["agree"] = agree;
        out["rows"] = rows_json(result);
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << result.to_csv();
    } else {
        std::cout << result.to_text();
        if (method == "both") std::cout << "direct and oracle agree\n";
    }
    return 0;
}

int run_phi(const ScalarOptions& opt, const std::string& method) {
    const fnom::FSequence F = parse_sequence(opt.selector);
    require_index(F, opt.n, "n");
    const fnom::InverseMethod m =
        method == "direct" ? fnom::InverseMethod::Direct : fnom::InverseMethod::Oracle;
    const fnom::Polynomial phi = fnom::phi_polynomial(F, opt.n, m);
    if (opt.format == "json") std::cout << coeffs_json(phi).dump() << "\n";
    else std::cout << phi.to_string() << "\n";
    return 0;
}

struct CheckOutcome {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string detail;
};

int run_check(const std::string& selector, int N, const std::string& what,
              const std::string& format) {
    const fnom::FSequence F = parse_sequence(selector);
    require_index(F, N, "N");
    const bool all = what == "all";
    std::vector<CheckOutcome> outcomes;
    bool admissible_known_bad = false;

    if (all || what == "admissible") {
        const auto report = fnom::check_admissible(F, N);
        admissible_known_bad = !report.admissible;
        outcomes.push_back({"admissible", report.admissible ? "pass" : "fail", report.detail});
    }
    const std::string skip_reason = "sequence not admissible";
    if (all || what == "delta") {
        if (admissible_known_bad) {
            outcomes.push_back({"delta", "skipped", skip_reason});
        } else {
            const auto report = fnom::verify_delta_convolution(F, N);
            std::string detail;
            if (!report.passed) {
                const auto& f = *report.first_failure;
                detail = "sum " + f.sum.str() + " at (" + std::to_string(f.n) + "," +
                         std::to_string(f.k) + ")";
            }
            outcomes.push_back({"delta", report.passed ? "pass" : "fail", detail});
        }
    }
    if (all || what == "roundtrip") {
        if (admissible_known_bad) {
            outcomes.push_back({"roundtrip", "skipped", skip_reason});
        } else {
            const auto report = fnom::roundtrip_check(F, N);
            std::string detail;
            if (!report.passed) detail = "at n = " + std::to_string(*report.first_failure);
            outcomes.push_back({"roundtrip", report.passed ? "pass" : "fail", detail});
        }
    }
    if (all || what == "recurrence") {
        const bool has_rule = F.kind() == fnom::SequenceKind::Natural ||
                              F.kind() == fnom::SequenceKind::Fibonacci;
        if (!has_rule && !all)
            throw fnom::UnsupportedSequenceError(F.name());
        if (!has_rule) {
            outcomes.push_back({"recurrence", "skipped", "sequence has no lambda rule"});
        } else if (admissible_known_bad) {
            outcomes.push_back({"recurrence", "skipped", skip_reason});
        } else {
            CheckOutcome outcome{"recurrence", "pass", ""};
            for (int n = 1; n <= N && outcome.status == "pass"; ++n) {
                for (const auto& parts : fnom::AllCompositions(n)) {
                    const auto report = fnom::verify_weight_recurrence(F, n, parts);
                    if (!report.passed) {
                        std::string tuple;
                        for (int p : parts) tuple += (tuple.empty() ? "" : ",") + std::to_string(p);
                        outcome.status = "fail";
                        outcome.detail = "at (" + std::to_string(n) + "; " + tuple + ") lhs " +
                                         report.lhs.str() + " rhs " + report.rhs.str();
                        break;
                    }
                }
            }
            outcomes.push_back(std::move(outcome));
        }
    }

    bool passed = true;
    for (const auto& o : outcomes)
        if (o.status == "fail") passed = false;

    if (format == "json") {
        ordered_json checks = ordered_json::array();
        for (const auto& o : outcomes) {
            ordered_json entry{{"name", o.name}, {"status", o.status}};
            if (!o.detail.empty()) entry["detail"] = o.detail;
            checks.push_back(std::move(entry));
        }
        ordered_json out{
            {"sequence", F.name()}, {"order", N}, {"checks", std::move(checks)}, {"passed", passed}};
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& o : outcomes) {
            std::cout << o.name << ": " << (o.status == "fail" ? "FAIL" : o.status);
            if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
            std::cout << "\n";
        }
    }
    return passed ? 0 : kExitVerificationFailed;
}

int run_lambda(const std::string& selector, const std::vector<int>& parts, bool recurrence,
               const std::string& format) {
    const fnom::FSequence F = parse_sequence(selector);
    const long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    require_index(F, total, "the sum of the parts");
    const fnom::LambdaVector lv = fnom::lambda_decompose(F, parts);
    const bool identity = fnom::satisfies_lambda_identity(F, lv);
    bool passed = identity;

    std::optional<fnom::RecurrenceReport> rec;
    if (recurrence) {
        rec = fnom::verify_weight_recurrence(F, static_cast<int>(total), parts);
        passed = passed && rec->passed;
    }

    if (format == "json") {
        ordered_json lambdas = ordered_json::array();
        for (const auto& l : lv.lambdas) lambdas.push_back(l.str());
        ordered_json out{{"sequence", F.name()},
                         {"parts", lv.parts},
                         {"lambdas", std::move(lambdas)},
                         {"identity", identity}};
        if (rec) {
            out["recurrence"] = ordered_json{
                {"passed", rec->passed}, {"lhs", rec->lhs.str()}, {"rhs", rec->rhs.str()}};
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "parts:";
        for (int p : lv.parts) std::cout << " " << p;
        std::cout << "\nlambdas:";
        for (const auto& l : lv.lambdas) std::cout << " " << l.str();
        std::cout << "\nidentity: " << (identity ? "pass" : "FAIL") << "\n";
        if (rec) {
            if (rec->passed) std::cout << "recurrence: pass (value " << rec->lhs.str() << ")\n";
            else std::cout << "recurrence: FAIL (lhs " << rec->lhs.str() << " rhs "
                           << rec->rhs.str() << ")\n";
        }
    }
    return passed ? 0 : kExitVerificationFailed;
}

int run_bench(const std::string& selector, const std::vector<int>& orders) {
    using clock = std::chrono::steady_clock;
    const auto ms_since = [](clock::time_point start) {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    // A fresh sequence per timed run keeps one method's memo from feeding the
    // other; the selector is re-parsed so even file-backed caches start cold.
    ordered_json runs = ordered_json::array();
    std::ostringstream table;
    table << std::fixed << std::setprecision(3);
    table << std::setw(4) << "N" << std::setw(14) << "direct_ms" << std::setw(14) << "oracle_ms"
          << std::setw(16) << "compositions" << std::setw(10) << "entries" << "\n";
    for (int N : orders) {
        {
            const fnom::FSequence probe = parse_sequence(selector);
            require_index(probe, N, "N");
        }
        const fnom::FSequence direct_seq = parse_sequence(selector);
        const auto direct_start = clock::now();
        const fnom::TriMatrix direct =
            fnom::fnomial_inverse_matrix(direct_seq, N, fnom::InverseMethod::Direct);
        const double direct_ms = ms_since(direct_start);

        const fnom::FSequence oracle_seq = parse_sequence(selector);
        const auto oracle_start = clock::now();
        const fnom::TriMatrix oracle =
            fnom::fnomial_inverse_matrix(oracle_seq, N, fnom::InverseMethod::Oracle);
        const double oracle_ms = ms_since(oracle_start);

        if (direct != oracle) {
            std::cerr << "error: direct and oracle inverses disagree at N = " << N << "\n";
            return kExitMethodMismatch;
        }

        const fnom::BigInt compositions = N >= 1 ? fnom::composition_count(N) : fnom::BigInt(0);
        const int entries = N * (N + 1) / 2;
        table << std::setw(4) << N << std::setw(14) << direct_ms << std::setw(14) << oracle_ms
              << std::setw(16) << compositions.str() << std::setw(10) << entries << "\n";
        runs.push_back(ordered_json{{"N", N},
                                    {"direct_ms", direct_ms},
                                    {"oracle_ms", oracle_ms},
                                    {"compositions", compositions.str()},
                                    {"entries", entries}});
    }

    const std::string name = parse_sequence(selector).name();
    std::cout << "sequence: " << name << "\n" << table.str();
    std::cout << ordered_json{{"sequence", name}, {"runs", std::move(runs)}}.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for generalized binomial (F-nomial) coefficients,\n"
                 "their inverse matrices, and the associated polynomial basis."};
    app.require_subcommand(1);

    const std::string seq_help = "Sequence selector: natural | fibonacci | gaussian:<q> | file:<path>";

    ScalarOptions fnomial_opt;
    int fnomial_k = 0;
    auto* fnomial_cmd = app.add_subcommand("fnomial", "One F-nomial coefficient C(n,k)_F");
    fnomial_cmd->add_option("--seq", fnomial_opt.selector, seq_help)->required();
    fnomial_cmd->add_option("n", fnomial_opt.n, "Row index n")->required();
    fnomial_cmd->add_option("k", fnomial_k, "Column index k")->required();
    fnomial_cmd->add_option("--format", fnomial_opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    ScalarOptions multi_opt;
    std::vector<int> multi_parts;
    auto* multi_cmd = app.add_subcommand("multinomial", "One multi F-nomial coefficient C(n; k1..ks)_F");
    multi_cmd->add_option("--seq", multi_opt.selector, seq_help)->required();
    multi_cmd->add_option("n", multi_opt.n, "Total n")->required();
    multi_cmd->add_option("parts", multi_parts, "Parts k1 k2 ...")->required()->expected(-1);
    multi_cmd->add_option("--format", multi_opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string invert_selector;
    int invert_N = 0;
    std::string invert_method = "oracle";
    std::string invert_format = "text";
    auto* invert_cmd = app.add_subcommand("invert", "Inverse of the F-nomial matrix up to order N");
    invert_cmd->add_option("--seq", invert_selector, seq_help)->required();
    invert_cmd->add_option("-N,--order", invert_N, "Largest row index")->required();
    invert_cmd->add_option("--method", invert_method, "direct | oracle | both")
        ->check(CLI::IsMember({"direct", "oracle", "both"}));
    invert_cmd->add_option("--format", invert_format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    ScalarOptions phi_opt;
    std::string phi_method = "oracle";
    auto* phi_cmd = app.add_subcommand("phi", "Basis polynomial Phi_n with the inverse entries as coefficients");
    phi_cmd->add_option("--seq", phi_opt.selector, seq_help)->required();
    phi_cmd->add_option("n", phi_opt.n, "Degree n")->required();
    phi_cmd->add_option("--method", phi_method, "direct | oracle")
        ->check(CLI::IsMember({"direct", "oracle"}));
    phi_cmd->add_option("--format", phi_opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string check_selector;
    int check_N = 0;
    std::string check_what = "all";
    std::string check_format = "text";
    auto* check_cmd = app.add_subcommand("check", "Verify defining identities up to order N");
    check_cmd->add_option("--seq", check_selector, seq_help)->required();
    check_cmd->add_option("-N,--order", check_N, "Largest row index")->required();
    check_cmd->add_option("--what", check_what, "admissible | delta | roundtrip | recurrence | all")
        ->check(CLI::IsMember({"admissible", "delta", "roundtrip", "recurrence", "all"}));
    check_cmd->add_option("--format", check_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string lambda_selector;
    std::vector<int> lambda_parts;
    bool lambda_recurrence = false;
    std::string lambda_format = "text";
    auto* lambda_cmd = app.add_subcommand("lambda", "Additive decomposition weights for a part tuple");
    lambda_cmd->add_option("--seq", lambda_selector, seq_help)->required();
    lambda_cmd->add_option("parts", lambda_parts, "Parts k1 k2 ...")->required()->expected(-1);
    lambda_cmd->add_flag("--recurrence", lambda_recurrence,
                         "Also verify the first-order multinomial recurrence at n = sum of parts");
    lambda_cmd->add_option("--format", lambda_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string bench_selector = "fibonacci";
    std::vector<int> bench_orders{8, 12, 16, 20};
    auto* bench_cmd = app.add_subcommand("bench", "Time the direct and substitution inversion paths");
    bench_cmd->add_option("--seq", bench_selector, seq_help);
    bench_cmd->add_option("-N,--orders", bench_orders, "Comma-separated list of orders")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (*fnomial_cmd) return run_fnomial(fnomial_opt, fnomial_k);
        if (*multi_cmd) return run_multinomial(multi_opt, multi_parts);
        if (*invert_cmd) return run_invert(invert_selector, invert_N, invert_method, invert_format);
        if (*phi_cmd) return run_phi(phi_opt, phi_method);
        if (*check_cmd) return run_check(check_selector, check_N, check_what, check_format);
        if (*lambda_cmd) return run_lambda(lambda_selector, lambda_parts, lambda_recurrence,
                                           lambda_format);
        if (*bench_cmd) return run_bench(bench_selector, bench_orders);
    } catch (const fnom::InexactDivisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotAdmissible;
    } catch (const fnom::UnsupportedSequenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return 0;
}
