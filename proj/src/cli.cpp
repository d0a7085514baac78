// Copyright 2026 The loancurve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy of
// the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations under
// the License.

#include "loancurve/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "loancurve/amortization.hpp"
#include "loancurve/curvature.hpp"
#include "loancurve/kernel.hpp"
#include "loancurve/scenarios.hpp"

namespace loancurve::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kMaxSweepPoints = 10001;

struct Options {
    double rate = 0.0;
    std::vector<double> rates;
    std::vector<double> probabilities;
    int term = 0;
    int stop = 0;
    double principal = 1.0;
    double tol = kDefaultInflectionTol;
    int steps = 0;
    double from = 0.0;
    double to = 0.0;
    bool log_spacing = false;
    std::string output;
    std::string vary = "rate";
    std::vector<std::string> columns{"P", "B"};
};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " is not finite");
    return v;
}

double require_principal(double principal) {
    if (!(principal > 0.0) || !std::isfinite(principal)) {
        throw DomainError("--principal must be positive and finite");
    }
    return principal;
}

Json curvature_json(LoanTerms terms, const CurvatureReport& report) {
    Json j;
    j["regime"] = std::string(to_string(report.regime));
    j["indicator"] = terms.regime_indicator();
    if (report.inflection_x) {
        j["inflection_x"] = finite(*report.inflection_x, "inflection point");
        j["inflection_rate"] = *report.inflection_x - 1.0;
        j["residual"] = finite(report.residual, "residual");
    }
    return j;
}

Json scenario_json(const ScenarioReport& r) {
    Json j;
    j["expected_value"] = finite(r.expected_value, "expected value");
    j["value_at_mean"] = finite(r.value_at_mean, "value at mean");
    j["jensen_gap"] = finite(r.jensen_gap, "Jensen gap");
    j["regime_note"] = std::string(to_string(r.regime_note));
    return j;
}

// Dense table destined for CSV or a JSON array of row objects.
struct Table {
    std::vector<std::string> header;
    std::vector<bool> integral;
    std::vector<std::vector<double>> rows;
};

void write_table(const Table& table, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& row : table.rows) {
            Json obj;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (table.integral[c]) {
                    obj[table.header[c]] = static_cast<long long>(row[c]);
                } else {
                    obj[table.header[c]] = finite(row[c], table.header[c].c_str());
                }
            }
            rows.push_back(std::move(obj));
        }
        out << rows.dump() << '\n';
        return;
    }
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        out << (c ? "," : "") << table.header[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            if (table.integral[c]) {
                out << static_cast<long long>(row[c]);
            } else {
                out << format_double(finite(row[c], table.header[c].c_str()));
            }
        }
        out << '\n';
    }
}

Table schedule_table(const Schedule& s) {
    Table t{{"period", "payment", "interest", "principal", "remaining"},
            {true, false, false, false, false},
            {}};
    for (const auto& row : s.rows) {
        t.rows.push_back({static_cast<double>(row.period), s.payment, row.interest,
                          row.principal_repaid, row.remaining});
    }
    return t;
}

// Sweep grid, kept as doubles; term/stop grids hold exact integers.
std::vector<double> sweep_grid(const Options& o) {
    if (!(o.from < o.to) || !std::isfinite(o.from) || !std::isfinite(o.to)) {
        throw DomainError("sweep needs finite --from < --to");
    }
    if (o.vary == "rate") {
        if (o.steps < 2 || o.steps > kMaxSweepPoints) {
            throw DomainError("rate sweep needs 2 <= --steps <= " + std::to_string(kMaxSweepPoints));
        }
        if (o.log_spacing && !(o.from > 0.0)) {
            throw DomainError("--log spacing needs --from > 0");
        }
        std::vector<double> grid(static_cast<std::size_t>(o.steps));
        const double last = o.steps - 1;
        for (int i = 0; i < o.steps; ++i) {
            const double u = i / last;
            grid[static_cast<std::size_t>(i)] =
                o.log_spacing ? o.from * std::pow(o.to / o.from, u) : o.from + u * (o.to - o.from);
        }
        grid.front() = o.from;
        grid.back() = o.to;
        return grid;
    }
    if (o.log_spacing) throw DomainError("--log applies to rate sweeps only");
    if (o.from != std::floor(o.from) || o.to != std::floor(o.to) || std::fabs(o.from) > 1e9 ||
        std::fabs(o.to) > 1e9) {
        throw DomainError("term/stop sweeps need integer --from and --to");
    }
    const long lo = static_cast<long>(o.from);
    const long hi = static_cast<long>(o.to);
    const long steps = o.steps == 0 ? hi - lo + 1 : o.steps;
    if (steps < 2 || (hi - lo) % (steps - 1) != 0) {
        throw DomainError("--steps must split [from, to] into whole periods");
    }
    if (steps > kMaxSweepPoints) {
        throw DomainError("sweep limited to " + std::to_string(kMaxSweepPoints) + " points");
    }
    const long stride = (hi - lo) / (steps - 1);
    std::vector<double> grid;
    for (long v = lo; v <= hi; v += stride) grid.push_back(static_cast<double>(v));
    return grid;
}

double sweep_value(const std::string& column, double x, int n, int k) {
    const GrowthFactor g(x);
    if (column == "P") return periodic_payment(g, n);
    const LoanTerms terms(n, k);
    if (column == "B") return outstanding_balance(g, terms);
    if (column == "B_dx") return balance_dx(g, terms);
    if (column == "B_dxx") return balance_dxx(g, terms);
    if (column == "B2") return cascade_eval(CascadeLevel::B2, g, terms);
    throw DomainError("unknown sweep column '" + column + "' (expected P, B, B_dx, B_dxx, B2)");
}

Table sweep_table(const Options& o) {
    const auto grid = sweep_grid(o);
    Table t;
    t.header.push_back(o.vary);
    t.integral.push_back(o.vary != "rate");
    for (const auto& c : o.columns) {
        t.header.push_back(c);
        t.integral.push_back(false);
    }
    for (double v : grid) {
        double rate = o.rate;
        int term = o.term;
        int stop = o.stop;
        if (o.vary == "rate") rate = v;
        if (o.vary == "term") term = static_cast<int>(v);
        if (o.vary == "stop") stop = static_cast<int>(v);
        std::vector<double> row{v};
        for (const auto& c : o.columns) row.push_back(sweep_value(c, 1.0 + rate, term, stop));
        t.rows.push_back(std::move(row));
    }
    return t;
}

RateDistribution scenario_distribution(const Options& o) {
    if (o.probabilities.empty()) return RateDistribution::equally_likely(o.rates);
    if (o.probabilities.size() != o.rates.size()) {
        throw DomainError("--prob must be given once per --rate");
    }
    std::vector<RatePoint> points;
    for (std::size_t i = 0; i < o.rates.size(); ++i) {
        points.push_back({o.rates[i], o.probabilities[i]});
    }
    return RateDistribution(std::move(points));
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Loan payment, balance and curvature analytics", "loancurve"};
    app.require_subcommand(1);

    auto* payment = app.add_subcommand("payment", "periodic payment (JSON)");
    payment->add_option("--rate", o.rate, "per-period rate r (x = 1 + r)")->required();
    payment->add_option("--term", o.term, "number of payments n")->required();
    payment->add_option("--principal", o.principal, "principal (default 1)");

    auto* balance = app.add_subcommand("balance", "outstanding balance after k payments (JSON)");
    balance->add_option("--rate", o.rate, "per-period rate r")->required();
    balance->add_option("--term", o.term, "number of payments n")->required();
    balance->add_option("--stop", o.stop, "payments made k")->required();
    balance->add_option("--principal", o.principal, "principal (default 1)");

    auto* schedule = app.add_subcommand("schedule", "amortization schedule (CSV)");
    schedule->add_option("--rate", o.rate, "per-period rate r")->required();
    schedule->add_option("--term", o.term, "number of payments n")->required();
    schedule->add_option("--principal", o.principal, "principal (default 1)");
    schedule->add_option("--output", o.output, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* curvature = app.add_subcommand("curvature", "concavity regime of the balance (JSON)");
    curvature->add_option("--term", o.term, "number of payments n")->required();
    curvature->add_option("--stop", o.stop, "payments made k")->required();
    curvature->add_option("--tol", o.tol, "relative bracket width for the inflection point");

    auto* inflection = app.add_subcommand("inflection", "inflection point of the balance (JSON)");
    inflection->add_option("--term", o.term, "number of payments n")->required();
    inflection->add_option("--stop", o.stop, "payments made k")->required();
    inflection->add_option("--tol", o.tol, "relative bracket width");

    auto* scenario = app.add_subcommand("scenario", "expected payment/balance over rates (JSON)");
    scenario->add_option("--rate", o.rates, "rate outcome (repeat)")->required();
    scenario->add_option("--prob", o.probabilities, "probability per --rate (default equal)");
    scenario->add_option("--term", o.term, "number of payments n")->required();
    auto* scenario_stop = scenario->add_option("--stop", o.stop, "payments made k; adds balance");

    auto* sweep = app.add_subcommand("sweep", "tabulate kernel values on a grid (CSV)");
    sweep->add_option("--vary", o.vary, "rate, term or stop")
        ->check(CLI::IsMember({"rate", "term", "stop"}));
    sweep->add_option("--from", o.from, "grid start")->required();
    sweep->add_option("--to", o.to, "grid end")->required();
    sweep->add_option("--steps", o.steps, "grid points");
    sweep->add_flag("--log", o.log_spacing, "geometric spacing (rate sweeps)");
    sweep->add_option("--rate", o.rate, "fixed rate");
    sweep->add_option("--term", o.term, "fixed term");
    sweep->add_option("--stop", o.stop, "fixed stop");
    sweep->add_option("--columns", o.columns, "subset of P,B,B_dx,B_dxx,B2")->delimiter(',');
    sweep->add_option("--output", o.output, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::vector<const char*> argv{"loancurve"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        if (what.empty()) what = e.get_name();
        err << "error: " << what.substr(0, what.find('\n')) << '\n';
        return kExitUsage;
    }

    try {
        std::ostringstream buffer;
        if (*payment) {
            const double p = periodic_payment(GrowthFactor::from_rate(o.rate), o.term);
            buffer << Json{{"payment", finite(require_principal(o.principal) * p, "payment")}}.dump()
                   << '\n';
        } else if (*balance) {
            const double b = outstanding_balance(GrowthFactor::from_rate(o.rate), LoanTerms(o.term, o.stop));
            buffer << Json{{"balance", finite(require_principal(o.principal) * b, "balance")}}.dump()
                   << '\n';
        } else if (*schedule) {
            const auto s = build_schedule(o.principal, GrowthFactor::from_rate(o.rate), o.term);
            write_table(schedule_table(s), o.output.empty() ? "csv" : o.output, buffer);
        } else if (*curvature) {
            const LoanTerms terms(o.term, o.stop);
            buffer << curvature_json(terms, analyze_curvature(terms, o.tol)).dump() << '\n';
        } else if (*inflection) {
            const LoanTerms terms(o.term, o.stop);
            buffer << curvature_json(terms, find_inflection(terms, o.tol)).dump() << '\n';
        } else if (*scenario) {
            const auto dist = scenario_distribution(o);
            Json j;
            j["mean_rate"] = dist.mean_rate();
            j["payment"] = scenario_json(expected_payment(dist, o.term));
            if (scenario_stop->count() > 0) {
                j["balance"] = scenario_json(expected_balance(dist, LoanTerms(o.term, o.stop)));
            }
            buffer << j.dump() << '\n';
        } else if (*sweep) {
            write_table(sweep_table(o), o.output.empty() ? "csv" : o.output, buffer);
        }
        out << buffer.str();
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace loancurve::cli
