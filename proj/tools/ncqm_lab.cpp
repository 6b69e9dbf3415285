// ncqm-lab: orbit classification, verification sweeps, gauge scans and
// torus builds. Every command prints one JSON document on stdout.
//
// Exit codes: 0 pass, 1 property failure, 2 parse error, 3 precondition.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncqm/error.hpp"
#include "ncqm/lab.hpp"

namespace lab = ncqm::lab;
using lab::json;

namespace {

struct Overrides {
    std::string config;
    std::optional<double> alpha, beta, gamma;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol_assoc, tol_hom, tol_unit, tol_comm, tol_weyl, tol_fd;
    std::optional<double> l, m;
    std::string out;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lab::ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw lab::ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

lab::RunConfig build_config(const Overrides& o) {
    lab::RunConfig cfg;
    if (!o.config.empty()) cfg = lab::config_from_json(read_json_file(o.config), cfg);
    if (o.alpha) cfg.constants.alpha = *o.alpha;
    if (o.beta) cfg.constants.beta = *o.beta;
    if (o.gamma) cfg.constants.gamma = *o.gamma;
    if (o.alpha || o.beta || o.gamma) cfg.constants_explicit = true;
    if (o.seed) cfg.seed = *o.seed;
    if (o.tol_assoc) cfg.tol.associativity = *o.tol_assoc;
    if (o.tol_hom) cfg.tol.homomorphism = *o.tol_hom;
    if (o.tol_unit) cfg.tol.unitarity = *o.tol_unit;
    if (o.tol_comm) cfg.tol.commutator = *o.tol_comm;
    if (o.tol_weyl) cfg.tol.weyl_phase = *o.tol_weyl;
    if (o.tol_fd) cfg.tol.finite_diff = *o.tol_fd;
    if (o.l) cfg.gauge_l = *o.l;
    if (o.m) cfg.gauge_m = *o.m;
    if (!o.out.empty()) cfg.out = o.out;
    cfg.validate();
    return cfg;
}

ncqm::RepCase rep_case_from(const std::string& name, const std::vector<double>& v) {
    ncqm::CaseTag tag{};
    try {
        tag = ncqm::case_from_string(name);
    } catch (const ncqm::Error& e) {
        throw lab::ParseError(e.what());
    }
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (v.size() < lo || v.size() > hi)
            throw lab::ParseError("--params for " + name + " takes " + std::to_string(lo) +
                                  (lo == hi ? "" : "-" + std::to_string(hi)) + " numbers");
    };
    auto at = [&](std::size_t i) { return i < v.size() ? v[i] : 0.0; };
    namespace rep = ncqm::rep;
    switch (tag) {
        case ncqm::CaseTag::Generic4D: need(3, 3); return rep::Generic4D{v[0], v[1], v[2]};
        case ncqm::CaseTag::Cone2D: need(2, 4); return rep::Cone2D{v[0], v[1], at(2), at(3)};
        case ncqm::CaseTag::TauZero4D: need(2, 2); return rep::TauZero4D{v[0], v[1]};
        case ncqm::CaseTag::SigmaZero4D: need(2, 2); return rep::SigmaZero4D{v[0], v[1]};
        case ncqm::CaseTag::RhoZero4D: need(2, 2); return rep::RhoZero4D{v[0], v[1]};
        case ncqm::CaseTag::WeylHeisenberg4D: need(1, 1); return rep::WeylHeisenberg4D{v[0]};
        case ncqm::CaseTag::QPlane2D: need(1, 3); return rep::QPlane2D{v[0], at(1), at(2)};
        case ncqm::CaseTag::PPlane2D: need(1, 3); return rep::PPlane2D{v[0], at(1), at(2)};
        case ncqm::CaseTag::Point0D: need(4, 4); return rep::Point0D{v[0], v[1], v[2], v[3]};
    }
    throw lab::ParseError("unknown case '" + name + "'");
}

int emit(const lab::CommandResult& result, const std::string& out_path) {
    const std::string text = result.report.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "ncqm-lab: cannot write '" << out_path << "'\n";
            return lab::kExitParseError;
        }
        out << text;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification lab for the triply extended group of R^4 translations"};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides o;
    app.add_option("--config", o.config, "JSON run configuration");
    app.add_option("--alpha", o.alpha, "extension constant alpha");
    app.add_option("--beta", o.beta, "extension constant beta");
    app.add_option("--gamma", o.gamma, "extension constant gamma");
    app.add_option("--seed", o.seed, "master seed (default 42)");
    app.add_option("--tol-associativity", o.tol_assoc);
    app.add_option("--tol-homomorphism", o.tol_hom);
    app.add_option("--tol-unitarity", o.tol_unit);
    app.add_option("--tol-commutator", o.tol_comm);
    app.add_option("--tol-weyl-phase", o.tol_weyl);
    app.add_option("--tol-finite-diff", o.tol_fd);
    app.add_option("--l", o.l, "gauge family parameter l");
    app.add_option("--m", o.m, "gauge family parameter m");
    app.add_option("--out", o.out, "also write the report to this file");

    auto* classify = app.add_subcommand("classify", "classify the coadjoint orbit of a dual vector");
    std::string vector_text;
    classify->add_option("vector", vector_text, "seven coordinates x1..x7, comma separated")->required();

    auto* verify = app.add_subcommand("verify", "run property suites");
    std::string suite_name = "all";
    verify->add_option("suite,--suite", suite_name, "group|reps|gauge|torus|all");

    auto* scan = app.add_subcommand("gauge-scan", "curl and commutators across the gauge family");
    std::vector<double> m_values{-1.0, 0.0, 0.25, 0.5, 1.0, 2.0};
    double field = 1.0;
    scan->add_option("--m-values", m_values, "m values")->delimiter(',');
    scan->add_option("--B", field, "magnetic field strength");

    auto* torus = app.add_subcommand("torus", "build Weyl systems and measure their phases");
    std::string case_name;
    std::vector<double> case_params;
    auto* case_opt = torus->add_option("--case", case_name, "family name (all presets if omitted)");
    torus->add_option("--params", case_params, "family parameters")->delimiter(',')->needs(case_opt);

    auto* report = app.add_subcommand("report", "summarise a saved verify report");
    std::string report_path;
    report->add_option("file", report_path, "report JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lab::kExitParseError;
    }

    try {
        const lab::RunConfig cfg = build_config(o);
        lab::CommandResult result;
        if (*classify) {
            result = lab::run_classify(lab::parse_dual_vector(vector_text), cfg);
        } else if (*verify) {
            result = lab::run_verify(lab::suite_from_string(suite_name), cfg);
        } else if (*scan) {
            result = lab::run_gauge_scan(m_values, field, cfg);
        } else if (*torus) {
            std::optional<ncqm::RepCase> params;
            if (!case_name.empty()) params = rep_case_from(case_name, case_params);
            result = lab::run_torus(params, cfg);
        } else {
            result = lab::run_report(read_json_file(report_path));
        }
        return emit(result, cfg.out);
    } catch (const lab::ParseError& e) {
        std::cerr << "ncqm-lab: " << e.what() << "\n";
        return lab::kExitParseError;
    } catch (const ncqm::Error& e) {
        const json err{{"schema", lab::kSchema},
                       {"error", {{"kind", std::string(ncqm::to_string(e.kind()))}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "ncqm-lab: " << e.what() << "\n";
        return e.is_precondition() ? lab::kExitPrecondition : lab::kExitPropertyFailure;
    }
}
