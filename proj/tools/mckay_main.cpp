#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "mckay/errors.hpp"
#include "mckay/eta.hpp"
#include "mckay/group_spec.hpp"
#include "mckay/mckay_core.hpp"
#include "mckay/quiver_numerics.hpp"
#include "mckay/report.hpp"
#include "mckay/sphere_spectrum.hpp"

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using mckay::Rational;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mckay::semantic_error("cannot write '" + path.string() + "'");
    out << content;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_report(const std::string& spec_path, const std::string& out_dir) {
    mckay::GroupData g = mckay::build_group(mckay::parse_spec(spec_path));
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "report.json", mckay::report_json(g));
    write_file(fs::path(out_dir) / "quiver.dot", mckay::report_quiver_dot(g));
    std::cout << "wrote " << (fs::path(out_dir) / "report.json").string() << " and "
              << (fs::path(out_dir) / "quiver.dot").string() << "\n";
    return 0;
}

int run_quiver(const std::string& spec_path, const std::string& out_path) {
    mckay::GroupData g = mckay::build_group(mckay::parse_spec(spec_path));
    std::string dot = mckay::report_quiver_dot(g);
    if (out_path.empty())
        std::cout << dot;
    else
        write_file(out_path, dot);
    return 0;
}

int run_eta(const std::string& spec_path) {
    mckay::GroupData g = mckay::build_group(mckay::parse_spec(spec_path));
    std::cout << mckay::eta_json(g);
    return 0;
}

int run_cartan(const std::string& spec_path) {
    mckay::GroupData g = mckay::build_group(mckay::parse_spec(spec_path));
    std::cout << mckay::cartan_json(g);
    return 0;
}

int run_spectrum(int n, const std::string& cutoff_str, const std::string& out_dir) {
    Rational cutoff = mckay::rational_from_string(cutoff_str);
    auto entries = mckay::dirac_spectrum(n, cutoff);
    std::cout << "# Dirac spectrum on S^" << (2 * n - 1) << ", |eigenvalue| <= "
              << mckay::rational_to_string(cutoff) << "\n";
    std::cout << "# eigenvalue multiplicity\n";
    for (const auto& [lambda, mult] : mckay::aggregate_spectrum(entries))
        std::cout << mckay::rational_to_string(lambda) << " " << mult.get_str() << "\n";
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "spectrum.json", mckay::spectrum_json(n, cutoff));
    }
    return 0;
}

int run_flow(const std::string& spec_path, double target_scale, double tol, int max_iters,
             double initial_step, std::uint64_t seed, const std::string& out_dir) {
    mckay::GroupData g = mckay::build_group(mckay::parse_spec(spec_path));
    mckay::InvariantBasis basis = mckay::build_invariant_basis(g);

    // Orbit of the first coordinate axis; the free-triple check already
    // guarantees the orbit is free.
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(g.embedding_dim());
    x(0) = 1.0;
    mckay::QuiverPoint start = mckay::orbit_point(g, x);

    mckay::FlowConfig cfg;
    cfg.target = mckay::LieValue::Constant(static_cast<Eigen::Index>(g.order()), target_scale);
    cfg.tol = tol;
    cfg.max_iters = max_iters;
    cfg.initial_step = initial_step;
    cfg.seed = seed;

    std::vector<mckay::FlowTraceRow> trace;
    mckay::QuiverPoint end = mckay::kempf_ness_flow(start, cfg, &trace);
    mckay::QuotientDimResult qd = mckay::quotient_dim(end, cfg.target, basis);

    fs::create_directories(out_dir);
    std::string csv = "iter,moment_error,n_residual,step\n";
    for (const auto& row : trace)
        csv += std::to_string(row.iter) + "," + format_double(row.moment_error) + "," +
               format_double(row.n_residual) + "," + format_double(row.step) + "\n";
    write_file(fs::path(out_dir) / "flow.csv", csv);

    const double moment_error = (mckay::moment_map(end) - cfg.target).norm();
    nlohmann::ordered_json j;
    j["group"] = g.name();
    j["target_scale"] = target_scale;
    j["tol"] = tol;
    j["iterations"] = trace.empty() ? 0 : trace.back().iter + 1;
    j["moment_error"] = moment_error;
    j["n_residual"] = mckay::n_residual(end);
    j["quotient_dim"] = qd.dim;
    j["kernel_dim"] = qd.kernel_dim;
    j["gap_ratio"] = qd.gap_ratio;
    j["singular_values"] = qd.singular_values;
    write_file(fs::path(out_dir) / "flow.json", j.dump(2) + "\n");

    std::cout << "converged: ||mu - target|| = " << format_double(moment_error)
              << ", quotient dimension " << qd.dim << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"McKay correspondence toolkit: quivers, Cartan matrices, eta "
                 "invariants, Dirac sphere spectra, and moment-map flows"};
    app.require_subcommand(1);

    std::string spec_path, out_dir = ".", quiver_out, spectrum_out;
    int spectrum_n = 2;
    std::string cutoff = "21/2";
    double target_scale = 0.1, tol = 1e-8, initial_step = 0.1;
    int max_iters = 10000;
    std::uint64_t seed = 0;

    auto* rep = app.add_subcommand("report", "full JSON report plus quiver.dot");
    rep->add_option("spec", spec_path, "group spec file")->required();
    rep->add_option("-o,--output", out_dir, "output directory");

    auto* quiv = app.add_subcommand("quiver", "emit the McKay quiver in DOT form");
    quiv->add_option("spec", spec_path, "group spec file")->required();
    quiv->add_flag("--dot", "emit DOT (default and only format)");
    quiv->add_option("-o,--output", quiver_out, "output file (stdout if absent)");

    auto* eta_cmd = app.add_subcommand("eta", "eta table and chain identity as JSON");
    eta_cmd->add_option("spec", spec_path, "group spec file")->required();

    auto* car = app.add_subcommand("cartan", "Cartan matrices and C^-1 as JSON");
    car->add_option("spec", spec_path, "group spec file")->required();

    auto* spec_cmd = app.add_subcommand("spectrum", "Dirac spectrum on S^(2n-1)");
    spec_cmd->add_option("-n", spectrum_n, "complex dimension n >= 2")->required();
    spec_cmd->add_option("--cutoff", cutoff, "max |eigenvalue|, exact rational like 41/2");
    spec_cmd->add_option("-o,--output", spectrum_out, "directory for spectrum.json");

    auto* flow = app.add_subcommand("flow", "Kempf-Ness flow to a moment-map target");
    flow->add_option("spec", spec_path, "group spec file")->required();
    flow->add_option("--target", target_scale, "target scale s for s*(1,...,1)");
    flow->add_option("--tol", tol, "convergence tolerance");
    flow->add_option("--max-iters", max_iters, "iteration budget");
    flow->add_option("--step", initial_step, "initial step size");
    flow->add_option("--seed", seed, "rng seed (reserved for randomized starts)");
    flow->add_option("-o,--output", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // command-line usage problems are parse errors
    }

    try {
        if (rep->parsed()) return run_report(spec_path, out_dir);
        if (quiv->parsed()) return run_quiver(spec_path, quiver_out);
        if (eta_cmd->parsed()) return run_eta(spec_path);
        if (car->parsed()) return run_cartan(spec_path);
        if (spec_cmd->parsed()) return run_spectrum(spectrum_n, cutoff, spectrum_out);
        if (flow->parsed())
            return run_flow(spec_path, target_scale, tol, max_iters, initial_step, seed, out_dir);
    } catch (const mckay::McKayError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
