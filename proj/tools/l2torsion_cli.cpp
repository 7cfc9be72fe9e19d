// Command-line front end: exact alpha_d values, reference tables, log-det
// densities, torsion from volume, and the mechanical verification suites.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or
// precondition error, 3 verification indeterminate at the working precision.
// Data goes to stdout, diagnostics and summaries to stderr.

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <l2torsion/l2torsion.hpp>

namespace {

using nlohmann::ordered_json;
using namespace l2torsion;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIndeterminate = 3;

// "1/3 * pi^-1" -> "\frac{1}{3\pi}", "32204/945 * pi^-4" -> "\frac{32204}{945\pi^{4}}"
std::string latex_monomial(const PiMonomial& m) {
    if (m.is_zero()) return "0";
    const Rational q = m.coeff();
    const int p = -m.half_power() / 2;
    const std::string sign = q.sign() < 0 ? "-" : "";
    const Int num = q.num() < 0 ? Int(-q.num()) : q.num();
    std::string den;
    if (q.den() != 1) den = q.den().get_str();
    if (p > 0) {
        den += "\\pi";
        if (p > 1) den += "^{" + std::to_string(p) + "}";
    }
    if (den.empty()) return sign + num.get_str();
    return sign + "\\frac{" + num.get_str() + "}{" + den + "}";
}

struct AlphaRow {
    int d;
    std::string q;
    int pi_power;
    std::string exact;
    std::string decimal;
};

AlphaRow make_row(const AlphaRecord& rec) {
    return {rec.d, rec.exact.coeff().str(), -rec.n, rec.exact.exact_str(), rec.decimal};
}

void print_alpha_rows(const std::vector<AlphaRow>& rows, const std::string& format,
                      bool exact) {
    if (format == "csv") {
        std::cout << "d,q,pi_power,decimal\n";
        for (const auto& r : rows)
            std::cout << r.d << "," << r.q << "," << r.pi_power << "," << r.decimal << "\n";
    } else if (format == "json") {
        ordered_json out;
        out["rows"] = ordered_json::array();
        for (const auto& r : rows)
            out["rows"].push_back({{"d", r.d},
                                   {"q", r.q},
                                   {"pi_power", r.pi_power},
                                   {"decimal", r.decimal}});
        std::cout << out.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << "\\begin{tabular}{rll}\n";
        std::cout << "$d$ & $\\alpha_d$ & $\\approx$ \\\\\n";
        for (const auto& r : rows) {
            const PiMonomial m = PiMonomial::parse_exact(r.exact);
            std::cout << r.d << " & $" << latex_monomial(m) << "$ & " << r.decimal
                      << " \\\\\n";
        }
        std::cout << "\\end{tabular}\n";
    } else { // text
        for (const auto& r : rows) {
            std::cout.width(5);
            std::cout << r.d << "  ";
            if (exact) std::cout << r.exact << "  ";
            std::cout << r.decimal << "\n";
        }
    }
}

void print_report(const VerificationReport& report, const std::string& format) {
    if (format == "json") {
        ordered_json out;
        out["checks"] = ordered_json::array();
        for (const auto& c : report.checks()) {
            ordered_json row{{"id", c.id},
                             {"params", c.params},
                             {"status", to_string(c.status)}};
            if (!c.witness.empty()) row["witness"] = c.witness;
            out["checks"].push_back(std::move(row));
        }
        out["summary"] = {{"pass", report.count(CheckStatus::pass)},
                          {"fail", report.count(CheckStatus::fail)},
                          {"indeterminate", report.count(CheckStatus::indeterminate)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks()) {
            std::cout << to_string(c.status) << " " << c.id << " " << c.params;
            if (!c.witness.empty()) std::cout << " -- " << c.witness;
            std::cout << "\n";
        }
    }
    std::cerr << "checks: " << report.count(CheckStatus::pass) << " passed, "
              << report.count(CheckStatus::fail) << " failed, "
              << report.count(CheckStatus::indeterminate) << " indeterminate\n";
}

int report_exit_code(const VerificationReport& report) {
    if (report.any(CheckStatus::fail)) return kVerifyFailed;
    if (report.any(CheckStatus::indeterminate)) return kIndeterminate;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact L2-torsion proportionality constants for closed hyperbolic "
                 "manifolds of odd dimension"};
    app.require_subcommand(1);
    int exit_code = kOk;

    // ---- alpha <d> ----
    int alpha_d = 0;
    int alpha_digits = 6;
    bool alpha_exact_flag = false;
    std::string alpha_format = "text";
    auto* cmd_alpha = app.add_subcommand("alpha", "Print alpha_d for one odd dimension d");
    cmd_alpha->add_option("d", alpha_d, "odd dimension >= 3")->required();
    cmd_alpha->add_option("--digits", alpha_digits, "significant figures")
        ->check(CLI::Range(1, 50));
    cmd_alpha->add_flag("--exact", alpha_exact_flag, "print the exact value q * pi^-n");
    cmd_alpha->add_option("--format", alpha_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json", "latex"}));
    cmd_alpha->callback([&] {
        const AlphaRecord rec = alpha(alpha_d, alpha_digits);
        if (alpha_format == "text") {
            std::cout << (alpha_exact_flag ? rec.exact.exact_str() : rec.decimal) << "\n";
        } else {
            print_alpha_rows({make_row(rec)}, alpha_format, alpha_exact_flag);
        }
    });

    // ---- table <d_max> ----
    int table_dmax = 0;
    int table_digits = 6;
    bool table_exact_flag = false;
    std::string table_format = "text";
    auto* cmd_table = app.add_subcommand("table", "Print alpha_d for all odd 3 <= d <= d_max");
    cmd_table->add_option("d_max", table_dmax, "largest odd dimension")->required();
    cmd_table->add_option("--digits", table_digits, "significant figures")
        ->check(CLI::Range(1, 50));
    cmd_table->add_flag("--exact", table_exact_flag, "include exact values in text output");
    cmd_table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json", "latex"}));
    cmd_table->callback([&] {
        std::vector<AlphaRow> rows;
        for (const AlphaRecord& rec : alpha_table(table_dmax, table_digits))
            rows.push_back(make_row(rec));
        print_alpha_rows(rows, table_format, table_exact_flag);
    });

    // ---- logdet <d> <j> ----
    int logdet_d = 0;
    int logdet_j = 0;
    bool logdet_coeffs = false;
    std::string logdet_format = "text";
    auto* cmd_logdet =
        app.add_subcommand("logdet", "Print the degree-j log-det density L_j for dimension d");
    cmd_logdet->add_option("d", logdet_d, "odd dimension >= 3")->required();
    cmd_logdet->add_option("j", logdet_j, "degree, 0 <= j <= n = (d-1)/2")->required();
    cmd_logdet->add_flag("--coeffs", logdet_coeffs,
                         "also print the integer density coefficients K (requires j < n)");
    cmd_logdet->add_option("--format", logdet_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_logdet->callback([&] {
        validate_dimension("logdet", logdet_d);
        const int n = (logdet_d - 1) / 2;
        const LogDetDensity L = logdet_closed(n, logdet_j);
        if (logdet_coeffs && logdet_j == n)
            throw Error("logdet: K coefficients require j < n");
        if (logdet_format == "json") {
            ordered_json out{{"d", logdet_d}, {"j", logdet_j},   {"n", n},
                             {"a", L.a},      {"L", L.value.exact_str()}, {"sign", L.sign}};
            if (logdet_coeffs) {
                ordered_json ks = ordered_json::array();
                for (const Int& k : density_polynomial(n, logdet_j).K)
                    ks.push_back(k.get_str());
                out["K"] = std::move(ks);
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << L.value.exact_str() << "\n";
            if (logdet_coeffs) {
                const auto D = density_polynomial(n, logdet_j);
                std::cout << "K = [";
                for (std::size_t k = 0; k < D.K.size(); ++k)
                    std::cout << (k ? ", " : "") << D.K[k].get_str();
                std::cout << "]\n";
            }
        }
    });

    // ---- coeffs <d> <j> ----
    int coeffs_d = 0;
    int coeffs_j = 0;
    std::string coeffs_format = "text";
    auto* cmd_coeffs = app.add_subcommand(
        "coeffs", "Print the integer density coefficients K for dimension d, degree j < n");
    cmd_coeffs->add_option("d", coeffs_d, "odd dimension >= 3")->required();
    cmd_coeffs->add_option("j", coeffs_j, "degree, 0 <= j < n = (d-1)/2")->required();
    cmd_coeffs->add_option("--format", coeffs_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_coeffs->callback([&] {
        validate_dimension("coeffs", coeffs_d);
        const int n = (coeffs_d - 1) / 2;
        const DensityCoefficients D = density_polynomial(n, coeffs_j);
        if (coeffs_format == "json") {
            ordered_json ks = ordered_json::array();
            for (const Int& k : D.K) ks.push_back(k.get_str());
            ordered_json out{{"d", coeffs_d}, {"j", coeffs_j}, {"a", D.a}, {"K", std::move(ks)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "[";
            for (std::size_t k = 0; k < D.K.size(); ++k)
                std::cout << (k ? ", " : "") << D.K[k].get_str();
            std::cout << "]\n";
        }
    });

    // ---- torsion <d> <volume> ----
    int torsion_d = 0;
    double torsion_vol = 0.0;
    int torsion_digits = 6;
    bool torsion_exact_flag = false;
    std::string torsion_format = "text";
    auto* cmd_torsion = app.add_subcommand(
        "torsion", "Print the L2-torsion (-1)^n * alpha_d * volume for a given volume");
    cmd_torsion->add_option("d", torsion_d, "odd dimension >= 3")->required();
    cmd_torsion->add_option("volume", torsion_vol, "volume, finite and >= 0")->required();
    cmd_torsion->add_option("--digits", torsion_digits, "significant figures")
        ->check(CLI::Range(1, 50));
    cmd_torsion->add_flag("--exact", torsion_exact_flag,
                          "print the exact value at the volume's binary expansion");
    cmd_torsion->add_option("--format", torsion_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_torsion->callback([&] {
        const TorsionValue t = torsion(torsion_d, torsion_vol, torsion_digits);
        if (torsion_format == "json") {
            ordered_json out{{"d", t.d},
                             {"volume", t.volume},
                             {"exact", t.exact.exact_str()},
                             {"decimal", t.decimal},
                             {"value", t.value}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (torsion_exact_flag ? t.exact.exact_str() : t.decimal) << "\n";
        }
    });

    // ---- verify <suite> [d_max] ----
    std::string verify_suite;
    int verify_dmax = 0; // 0 = per-suite default
    unsigned long verify_pi_bits = 0;
    std::string verify_format = "text";
    auto* cmd_verify = app.add_subcommand(
        "verify", "Run a mechanical verification suite; one line per check");
    cmd_verify->add_option("suite", verify_suite, "signs | growth | table | oracle | all")
        ->required()
        ->check(CLI::IsMember({"signs", "growth", "table", "oracle", "all"}));
    cmd_verify->add_option("d_max", verify_dmax, "largest odd dimension to cover");
    auto* pi_bits_opt =
        cmd_verify->add_option("--pi-bits", verify_pi_bits,
                               "pi enclosure width 2^-bits for growth-strict; "
                               "fixed if given, else adaptive 128..4096")
            ->check(CLI::Range(4ul, 4000000ul));
    cmd_verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_verify->callback([&] {
        if (verify_dmax != 0) validate_dimension("verify", verify_dmax);
        const bool fixed_bits = pi_bits_opt->count() > 0;
        const auto run_signs = [&](int d_max) {
            VerificationReport rep;
            for (int n = 1; 2 * n + 1 <= d_max; ++n) rep.merge(verify_sign_lemma(n));
            return rep;
        };
        const auto run_growth = [&](int d_max) {
            if (fixed_bits) return verify_growth(d_max, verify_pi_bits);
            VerificationReport rep;
            for (unsigned long bits = 128; bits <= 4096; bits *= 2) {
                rep = verify_growth(d_max, bits);
                if (!rep.any(CheckStatus::indeterminate)) break;
                std::cerr << "growth-strict indeterminate at pi-bits=" << bits
                          << ", refining\n";
            }
            return rep;
        };
        VerificationReport report;
        if (verify_suite == "signs") {
            report = run_signs(verify_dmax > 0 ? verify_dmax : 21);
        } else if (verify_suite == "growth") {
            report = run_growth(verify_dmax > 0 ? verify_dmax : 251);
        } else if (verify_suite == "table") {
            report = verify_table(verify_dmax > 0 ? verify_dmax : 37);
        } else if (verify_suite == "oracle") {
            report = verify_heat_trace(verify_dmax > 0 ? verify_dmax : 21);
        } else { // all
            report = run_signs(verify_dmax > 0 ? verify_dmax : 21);
            report.merge(run_growth(verify_dmax > 0 ? verify_dmax : 251));
            report.merge(verify_table(verify_dmax > 0 ? std::min(verify_dmax, 37) : 37));
            report.merge(verify_heat_trace(verify_dmax > 0 ? std::min(verify_dmax, 21) : 21));
        }
        print_report(report, verify_format);
        exit_code = report_exit_code(report);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return exit_code;
}
