// Copyright 2026 the carlitzq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "carlitzq/classical.hpp"
#include "carlitzq/suites.hpp"

namespace {

using carlitzq::BernoulliTower;
using carlitzq::IntPoly;
using carlitzq::Rational;
using carlitzq::RatFunc;
using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json poly_json(const IntPoly& p) {
    json arr = json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json ratfunc_json(const RatFunc& f) {
    return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

json rational_json(const Rational& x) {
    return json{{"num", x.num().get_str()}, {"den", x.den().get_str()}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int cmd_table(long long r, long long n_max, const std::string& format) {
    if (r < 0 || n_max < 0) return usage_error("table: --r and --n must be nonnegative");
    BernoulliTower tower(static_cast<unsigned long>(r), static_cast<unsigned long>(n_max));
    if (format == "json") {
        json rows = json::array();
        for (unsigned long n = 0; n <= tower.n_max(); ++n) {
            json row = ratfunc_json(tower.number(static_cast<unsigned long>(r), n));
            row["n"] = n;
            rows.push_back(std::move(row));
        }
        emit(rows);
    } else {
        for (unsigned long n = 0; n <= tower.n_max(); ++n)
            std::cout << tower.number(static_cast<unsigned long>(r), n).str() << "\n";
    }
    return kExitPass;
}

int cmd_stirling(long long n, const std::string& format) {
    if (n < 0) return usage_error("stirling: --n must be nonnegative");
    carlitzq::StirlingRowQ row = carlitzq::q_stirling2_row(static_cast<unsigned long>(n));
    if (format == "json") {
        json entries = json::array();
        for (unsigned long k = 0; k < row.entries.size(); ++k) {
            json e = ratfunc_json(row.entries[k]);
            e["n"] = row.n;
            e["k"] = k;
            entries.push_back(std::move(e));
        }
        emit(entries);
    } else {
        for (const auto& entry : row.entries) std::cout << entry.str() << "\n";
    }
    return kExitPass;
}

int cmd_verify(const std::string& suite, long long n_max, long long r_max,
               const std::string& format) {
    if (!carlitzq::is_suite_name(suite)) return usage_error("verify: unknown suite '" + suite + "'");
    if (n_max < 0 || r_max < 0)
        return usage_error("verify: --n-max and --r-max must be nonnegative");
    carlitzq::SuiteParams params;
    params.n_max = static_cast<unsigned long>(n_max);
    params.r_max = static_cast<unsigned long>(r_max);
    carlitzq::Report report = carlitzq::run_suite(suite, params);

    if (format == "json") {
        json items = json::array();
        for (const auto& item : report.items)
            items.push_back(json{{"name", item.name},
                                 {"pass", item.pass},
                                 {"info", item.info},
                                 {"detail", item.detail}});
        emit(json{{"suite", suite},
                  {"checked", report.checked()},
                  {"failed", report.failed()},
                  {"pass", report.ok()},
                  {"items", std::move(items)}});
    } else {
        for (const auto& item : report.items) {
            const char* label = item.info ? "INFO" : (item.pass ? "PASS" : "FAIL");
            std::cout << label << " " << item.name;
            if (!item.detail.empty()) std::cout << " -- " << item.detail;
            std::cout << "\n";
        }
        std::cout << "suite " << suite << ": " << report.checked() << " checked, "
                  << report.failed() << " failed\n";
    }
    return report.ok() ? kExitPass : kExitFail;
}

int cmd_powersum(long long n, long long r, long long big_n,
                 const std::optional<std::string>& q_text, const std::string& format) {
    if (n < 0 || r < 1 || big_n < 1)
        return usage_error("powersum: need --n >= 0, --r >= 1, --N >= 1");
    auto un = static_cast<unsigned long>(n);
    auto ur = static_cast<unsigned long>(r);
    auto uN = static_cast<unsigned long>(big_n);
    RatFunc sum = carlitzq::power_sum_direct(un, ur, uN);
    if (!carlitzq::check_thm2(un, ur, uN).ok()) {
        std::cerr << "error: closed-form cross-check failed\n";
        return kExitFail;
    }
    if (q_text) {
        Rational q0 = Rational::parse(*q_text);
        Rational value = sum.eval(q0);
        if (format == "json") emit(rational_json(value));
        else std::cout << value.str() << "\n";
    } else {
        if (format == "json") emit(ratfunc_json(sum));
        else std::cout << sum.str() << "\n";
    }
    return kExitPass;
}

int cmd_series(long long n, long long r, const std::string& q_text, const std::string& tol_text,
               const std::string& format) {
    if (n < 1 || r < 0) return usage_error("series: need --n >= 1 and --r >= 0");
    Rational q0 = Rational::parse(q_text);
    Rational tol = Rational::parse(tol_text);
    if (!(abs(q0) < Rational(1))) return usage_error("series: |q| must be < 1");
    if (!(tol > Rational(0))) return usage_error("series: --tol must be positive");
    carlitzq::SeriesReport rep = carlitzq::series_beta(static_cast<unsigned long>(n),
                                                       static_cast<unsigned long>(r), q0, tol);
    if (format == "json") {
        emit(json{{"n", rep.n},
                  {"r", rep.r},
                  {"q0", rational_json(rep.q0)},
                  {"terms_used", rep.terms_used},
                  {"partial_sum", rational_json(rep.partial_sum)},
                  {"tail_bound", rational_json(rep.tail_bound)},
                  {"exact_value", rational_json(rep.exact_value)},
                  {"within_bound", rep.within_bound()}});
    } else {
        std::cout << "n = " << rep.n << "\n";
        std::cout << "r = " << rep.r << "\n";
        std::cout << "q0 = " << rep.q0.str() << "\n";
        std::cout << "terms_used = " << rep.terms_used << "\n";
        std::cout << "partial_sum = " << rep.partial_sum.str() << "\n";
        std::cout << "tail_bound = " << rep.tail_bound.str() << "\n";
        std::cout << "exact_value = " << rep.exact_value.str() << "\n";
        std::cout << "within_bound = " << (rep.within_bound() ? "yes" : "no") << "\n";
    }
    return rep.within_bound() ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables, power sums, series and identity checks for extended "
                 "Carlitz q-Bernoulli numbers"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* table = app.add_subcommand("table", "Print beta_0^(r) .. beta_n^(r)");
    long long table_r = 0, table_n = 0;
    table->add_option("--r", table_r, "Order r")->required();
    table->add_option("--n", table_n, "Largest index n")->required();
    add_format(table);

    auto* stirling = app.add_subcommand("stirling", "Print the q-Stirling row S_q(n, 0..n)");
    long long stirling_n = 0;
    stirling->add_option("--n", stirling_n, "Row index n")->required();
    add_format(stirling);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    long long verify_n_max = 8, verify_r_max = 3;
    verify->add_option("--suite", suite, "Suite name")->required();
    verify->add_option("--n-max", verify_n_max, "Largest index n");
    verify->add_option("--r-max", verify_r_max, "Largest order r");
    add_format(verify);

    auto* powersum = app.add_subcommand("powersum", "Evaluate sum_{k<N} q^{rk} [k]^n");
    long long ps_n = 0, ps_r = 0, ps_N = 0;
    std::optional<std::string> ps_q;
    powersum->add_option("--n", ps_n, "Exponent n")->required();
    powersum->add_option("--r", ps_r, "Twist r")->required();
    powersum->add_option("--N", ps_N, "Upper bound N")->required();
    powersum->add_option("--q", ps_q, "Evaluate at the exact rational q");
    add_format(powersum);

    auto* series = app.add_subcommand("series", "Sum the series for beta_n^(r) at |q| < 1");
    long long se_n = 0, se_r = 0;
    std::string se_q, se_tol;
    series->add_option("--n", se_n, "Index n")->required();
    series->add_option("--r", se_r, "Order r")->required();
    series->add_option("--q", se_q, "Rational q with |q| < 1")->required();
    series->add_option("--tol", se_tol, "Positive rational tail tolerance")->required();
    add_format(series);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(table_r, table_n, format);
        if (stirling->parsed()) return cmd_stirling(stirling_n, format);
        if (verify->parsed()) return cmd_verify(suite, verify_n_max, verify_r_max, format);
        if (powersum->parsed()) return cmd_powersum(ps_n, ps_r, ps_N, ps_q, format);
        if (series->parsed()) return cmd_series(se_n, se_r, se_q, se_tol, format);
    } catch (const carlitzq::InvalidQ& e) {
        return usage_error(e.what());
    } catch (const carlitzq::ZeroDenominator& e) {
        return usage_error(e.what());
    } catch (const carlitzq::ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const carlitzq::Error& e) {
        return usage_error(e.what());
    }
    return kExitUsage;
}
