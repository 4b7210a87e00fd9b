#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "koon/errors.hpp"
#include "koon/json_io.hpp"
#include "koon/lifetime.hpp"
#include "koon/oracle.hpp"
#include "koon/order_statistics.hpp"
#include "koon/residual.hpp"
#include "koon/stochastic_orders.hpp"
#include "koon/system.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw koon::SchemaError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

koon::SystemSpec load_spec(const std::string& path) {
    return koon::system_from_json_text(read_file(path));
}

std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Writes to --out when given, stdout otherwise.
struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw koon::SchemaError("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

koon::MrlKind parse_kind(const std::string& word) {
    if (word == "usual") return koon::MrlKind::Usual;
    if (word == "system") return koon::MrlKind::SystemLevel;
    if (word == "working") return koon::MrlKind::Working;
    throw koon::InvalidArgs("unknown mrl kind '" + word + "' (usual|system|working)");
}

void run_et(const std::string& spec_path, double d, bool as_json, Output& out) {
    const koon::SystemSpec sys = load_spec(spec_path);
    const koon::ExpectedLifetime r = koon::expected_T(sys, d);
    if (as_json) {
        nlohmann::json j{{"E_T", r.value},
                         {"d", r.budget.d},
                         {"t0", r.budget.t0},
                         {"rule", r.budget.bound_used},
                         {"certified_error", r.budget.certified_error}};
        out.stream() << j.dump(2) << "\n";
        return;
    }
    out.stream() << "E_T=" << fmt4(r.value) << "\n"
                 << "E_T_full=" << fmt10(r.value) << "\n"
                 << "d=" << fmt10(r.budget.d) << "\n"
                 << "t0=" << r.budget.t0 << "\n"
                 << "rule=" << r.budget.bound_used << "\n"
                 << "certified_error=" << fmt10(r.budget.certified_error) << "\n";
}

void run_reliability(const std::string& spec_path, long t_max, Output& out) {
    const koon::SystemSpec sys = load_spec(spec_path);
    if (t_max < 0) throw koon::InvalidArgs("--t-max must be >= 0");
    const std::vector<double> curve = koon::reliability_curve(sys, t_max);
    out.stream() << "t,P_T_gt_t\n";
    for (long t = 0; t <= t_max; ++t)
        out.stream() << t << "," << fmt10(curve[t]) << "\n";
}

void run_mrl(const std::string& spec_path, const std::string& kind_word, long t_max,
             double d, Output& out) {
    const koon::SystemSpec sys = load_spec(spec_path);
    if (t_max < 0) throw koon::InvalidArgs("--t-max must be >= 0");
    const koon::Curve curve = koon::mrl_curve(sys, parse_kind(kind_word), 0, t_max, d);
    out.stream() << "t,mrl,err,flag\n";
    for (const auto& p : curve.points) {
        if (p.gap)
            out.stream() << p.t << ",,,gap\n";
        else
            out.stream() << p.t << "," << fmt10(p.value) << ","
                         << fmt10(p.certified_error) << ",ok\n";
    }
}

struct TableRow {
    double a, b;  // the two distribution parameters of the row
    long n, k;
};

constexpr long kPairCount = 2, kShapeCount = 4;

std::vector<TableRow> table_rows(int table) {
    const double pairs14[kPairCount][2] = {{0.25, 0.25}, {0.25, 0.10}};
    const double pairs3[kPairCount][2] = {{0.75, 0.75}, {0.75, 0.90}};
    const double pairs4[kPairCount][2] = {{0.75, 0.25}, {0.75, 0.10}};
    const long shapes[kShapeCount][2] = {{3, 2}, {5, 2}, {5, 3}, {10, 3}};

    const auto& pairs = table == 3 ? pairs3 : table == 4 ? pairs4 : pairs14;
    std::vector<TableRow> rows;
    for (long i = 0; i < kPairCount; ++i)
        for (long j = 0; j < kShapeCount; ++j)
            rows.push_back({pairs[i][0], pairs[i][1], shapes[j][0], shapes[j][1]});
    return rows;
}

koon::SystemSpec table_system(int table, const TableRow& row) {
    using DL = koon::DiscreteLifetime;
    koon::SystemSpec sys;
    sys.n = row.n;
    sys.k = row.k;
    switch (table) {
        case 1:
            sys.active.assign(row.n, DL::geometric(row.a));
            sys.standby = DL::geometric(row.b);
            break;
        case 2:
            sys.active.assign(row.n, DL::neg_binomial(2, row.a));
            sys.standby = DL::neg_binomial(2, row.b);
            break;
        case 3:
            sys.active.assign(row.n, DL::discrete_weibull(row.a, 2.0));
            sys.standby = DL::discrete_weibull(row.b, 2.0);
            break;
        case 4:
            sys.active.assign(row.n, DL::discrete_weibull(row.a, 2.0));
            sys.standby = DL::geometric(row.b);
            break;
        default:
            throw koon::InvalidArgs("--table must be 1..4");
    }
    return sys;
}

koon::SystemSpec figure_system(int figure) {
    using DL = koon::DiscreteLifetime;
    koon::SystemSpec sys;
    sys.n = 4;
    sys.k = 2;
    switch (figure) {
        case 1:
            sys.active = {DL::geometric(1.0 / 2), DL::geometric(1.0 / 3),
                          DL::geometric(1.0 / 4), DL::geometric(1.0 / 5)};
            sys.standby = DL::geometric(1.0 / 10);
            break;
        case 2:
            sys.active = {DL::neg_binomial(2, 1.0 / 2), DL::neg_binomial(2, 1.0 / 3),
                          DL::neg_binomial(2, 1.0 / 4), DL::neg_binomial(2, 1.0 / 5)};
            sys.standby = DL::neg_binomial(2, 1.0 / 10);
            break;
        case 3:
            sys.active.assign(4, DL::discrete_weibull(std::exp(-0.01), 2.0));
            sys.standby = DL::discrete_weibull(std::exp(-0.01), 2.0);
            break;
        case 4:
            sys.active.assign(4, DL::discrete_weibull(std::exp(-2.0), 0.5));
            sys.standby = DL::discrete_weibull(std::exp(-2.0), 0.5);
            break;
        default:
            throw koon::InvalidArgs("--figure must be 1..4");
    }
    return sys;
}

void run_reproduce_table(int table, Output& out) {
    const double d = 1e-4;
    out.stream() << "p,g,n,k,E_T,E_X,E_T_full,E_X_full\n";
    for (const TableRow& row : table_rows(table)) {
        const koon::SystemSpec sys = table_system(table, row);
        const double et = koon::expected_T(sys, d).value;
        const double ex = koon::os_mean(sys.active, sys.k, d);
        out.stream() << fmt10(row.a) << "," << fmt10(row.b) << "," << row.n << ","
                     << row.k << "," << fmt4(et) << "," << fmt4(ex) << ","
                     << fmt10(et) << "," << fmt10(ex) << "\n";
    }
}

void run_reproduce_figure(int figure, Output& out) {
    const double d = 1e-3;
    const long t_max = 30;
    const koon::SystemSpec sys = figure_system(figure);
    const koon::Curve usual = koon::mrl_curve(sys, koon::MrlKind::Usual, 0, t_max, d);
    const koon::Curve syslevel =
        koon::mrl_curve(sys, koon::MrlKind::SystemLevel, 0, t_max, d);
    const koon::Curve working = koon::mrl_curve(sys, koon::MrlKind::Working, 0, t_max, d);

    auto cell = [](const koon::CurvePoint& p) {
        return p.gap ? std::string(",") : fmt10(p.value) + "," + fmt10(p.certified_error);
    };
    out.stream() << "t,usual,usual_err,system,system_err,working,working_err\n";
    for (long t = 0; t <= t_max; ++t)
        out.stream() << t << "," << cell(usual.points[t]) << ","
                     << cell(syslevel.points[t]) << "," << cell(working.points[t])
                     << "\n";
}

void run_simulate(const std::string& spec_path, const std::string& query_text,
                  long samples, std::uint64_t seed, Output& out) {
    const koon::SystemSpec sys = load_spec(spec_path);
    const koon::Query q = koon::Query::parse(query_text);
    const koon::SimResult r = koon::simulate(sys, q, samples, seed);
    out.stream() << "estimate,std_error,n_samples,seed\n"
                 << fmt10(r.estimate) << "," << fmt10(r.std_error) << ","
                 << r.n_samples << "," << r.seed << "\n";
}

void run_enumerate(const std::string& spec_path, const std::string& query_text,
                   Output& out) {
    const koon::SystemSpec sys = load_spec(spec_path);
    const koon::Query q = koon::Query::parse(query_text);
    const double value = koon::enumerate_exact(sys, q);
    out.stream() << "value\n" << fmt10(value) << "\n";
}

int run_compare(const std::string& path_a, const std::string& path_b, double eps,
                Output& out) {
    const koon::SystemSpec a = load_spec(path_a);
    const koon::SystemSpec b = load_spec(path_b);
    const koon::OrderVerdict v = koon::system_st_compare(a, b, eps);
    out.stream() << "holds,horizon,residual_mass,counterexample\n"
                 << (v.holds ? "true" : "false") << "," << v.horizon << ","
                 << fmt10(v.residual_mass) << ","
                 << (v.counterexample ? std::to_string(*v.counterexample) : "") << "\n";
    return v.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-out-of-n cold-standby reliability calculator"};
    app.require_subcommand(1);

    std::string spec_path, spec_b_path, out_path, kind_word = "usual", query_text;
    double d = 1e-4, eps = 1e-12;
    long t_max = 30, samples = 1000000;
    std::uint64_t seed = 1;
    int table = 0, figure = 0;
    bool as_json = false;

    auto* et = app.add_subcommand("et", "expected system lifetime with certificate");
    et->add_option("--spec", spec_path, "system spec JSON file")->required();
    et->add_option("--d", d, "error budget")->required();
    et->add_flag("--json", as_json, "emit JSON instead of key=value lines");
    et->add_option("--out", out_path, "write to file instead of stdout");

    auto* rel = app.add_subcommand("reliability", "reliability curve P(T>t) as CSV");
    rel->add_option("--spec", spec_path, "system spec JSON file")->required();
    rel->add_option("--t-max", t_max, "last t to print")->required();
    rel->add_option("--out", out_path, "write to file instead of stdout");

    auto* mrl = app.add_subcommand("mrl", "mean residual life curve as CSV");
    mrl->add_option("--spec", spec_path, "system spec JSON file")->required();
    mrl->add_option("--kind", kind_word, "usual|system|working")->required();
    mrl->add_option("--t-max", t_max, "last t to print")->required();
    mrl->add_option("--d", d, "per-point error budget")->required();
    mrl->add_option("--out", out_path, "write to file instead of stdout");

    auto* rep = app.add_subcommand("reproduce", "emit reference table or figure data");
    auto* topt = rep->add_option("--table", table, "table number 1..4");
    auto* fopt = rep->add_option("--figure", figure, "figure number 1..4");
    topt->excludes(fopt);
    rep->add_option("--out", out_path, "write to file instead of stdout");

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo estimate of a query");
    sim->add_option("--spec", spec_path, "system spec JSON file")->required();
    sim->add_option("--query", query_text, "et | rel@T | mrl:COND@T | sf:COND@T,S")
        ->required();
    sim->add_option("--samples", samples, "number of samples");
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--out", out_path, "write to file instead of stdout");

    auto* enu = app.add_subcommand("enumerate", "exact query value by joint enumeration");
    enu->add_option("--spec", spec_path, "system spec JSON file")->required();
    enu->add_option("--query", query_text, "et | rel@T | mrl:COND@T | sf:COND@T,S")
        ->required();
    enu->add_option("--out", out_path, "write to file instead of stdout");

    auto* cmp = app.add_subcommand("compare", "check T_a <=_st T_b on reliability curves");
    cmp->add_option("--spec-a", spec_path, "left system spec JSON file")->required();
    cmp->add_option("--spec-b", spec_b_path, "right system spec JSON file")->required();
    cmp->add_option("--eps", eps, "tail mass at which scanning stops");
    cmp->add_option("--out", out_path, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        Output out(out_path);
        if (et->parsed()) {
            run_et(spec_path, d, as_json, out);
        } else if (rel->parsed()) {
            run_reliability(spec_path, t_max, out);
        } else if (mrl->parsed()) {
            run_mrl(spec_path, kind_word, t_max, d, out);
        } else if (rep->parsed()) {
            if ((table != 0) == (figure != 0))
                throw koon::InvalidArgs("reproduce needs exactly one of --table/--figure");
            if (table != 0)
                run_reproduce_table(table, out);
            else
                run_reproduce_figure(figure, out);
        } else if (sim->parsed()) {
            run_simulate(spec_path, query_text, samples, seed, out);
        } else if (enu->parsed()) {
            run_enumerate(spec_path, query_text, out);
        } else if (cmp->parsed()) {
            return run_compare(spec_path, spec_b_path, eps, out);
        }
    } catch (const koon::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const koon::UnboundedTail& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const koon::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const koon::ConditioningTooRare& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const koon::ConditioningOnNullEvent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
