// Command-line front end for the directional depth toolkit.
//
// Exit codes: 0 success, 2 configuration error, 3 data error, 4 numerical
// failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirdepth/baselines.hpp"
#include "dirdepth/classify.hpp"
#include "dirdepth/deepest.hpp"
#include "dirdepth/depth.hpp"
#include "dirdepth/experiments.hpp"
#include "dirdepth/robustness.hpp"
#include "dirdepth/sampling.hpp"

namespace dd = dirdepth;

namespace {

std::vector<double> parse_reals_csv(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

dd::UnitVector parse_point(const std::string& s, bool normalize) {
    const std::vector<double> xs = parse_reals_csv(s);
    if (normalize) return dd::UnitVector::from_components(xs);
    return dd::UnitVector(xs);
}

std::vector<int> read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dd::IoError("cannot open '" + path + "'");
    std::vector<int> labels;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (line != "1" && line != "2") {
            throw dd::ParseError(lineno, "label must be 1 or 2, got '" + line + "'");
        }
        labels.push_back(line == "1" ? 1 : 2);
    }
    return labels;
}

void write_table(const dd::ResultTable& table, const std::string& out_path,
                 const std::string& svg_path) {
    if (out_path.empty()) {
        dd::emit_csv(table, std::cout);
    } else if (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".svg") {
        dd::emit(table, dd::EmitFormat::svg, out_path);
    } else {
        dd::emit(table, dd::EmitFormat::csv, out_path);
    }
    if (!svg_path.empty()) dd::emit(table, dd::EmitFormat::svg, svg_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-based depths for directional data"};
    app.require_subcommand(1);

    std::string delta = "arc";
    std::string theta_arg, input_path, out_path, svg_path;
    bool normalize = false;

    // depth
    auto* cmd_depth = app.add_subcommand("depth", "Evaluate the depth of a point w.r.t. a sample");
    cmd_depth->add_option("--delta", delta, "Distance kernel: arc|cos|chord")->default_val("arc");
    cmd_depth->add_option("--theta", theta_arg, "Evaluation point, comma-separated")->required();
    cmd_depth->add_option("--input", input_path, "Sample CSV")->required();
    cmd_depth->add_flag("--normalize", normalize, "Renormalize non-unit rows and theta");

    // deepest
    auto* cmd_deepest = app.add_subcommand("deepest", "Compute the deepest point of a sample");
    cmd_deepest->add_option("--delta", delta, "Distance kernel: arc|cos|chord")->default_val("arc");
    cmd_deepest->add_option("--input", input_path, "Sample CSV")->required();
    cmd_deepest->add_flag("--normalize", normalize, "Renormalize non-unit rows");

    // sample vmf
    auto* cmd_sample = app.add_subcommand("sample", "Draw reproducible samples");
    auto* cmd_vmf = cmd_sample->add_subcommand("vmf", "von Mises-Fisher sample");
    int s_q = 3, s_n = 100;
    double s_kappa = 5.0;
    std::uint64_t s_seed = 1;
    std::string s_mode;
    cmd_vmf->add_option("--q", s_q, "Ambient dimension")->default_val(3);
    cmd_vmf->add_option("--kappa", s_kappa, "Concentration (0 = uniform)")->default_val(5.0);
    cmd_vmf->add_option("--mode", s_mode, "Modal direction, comma-separated (default e_q)");
    cmd_vmf->add_option("--n", s_n, "Sample size")->default_val(100);
    cmd_vmf->add_option("--seed", s_seed, "Seed")->default_val(1);
    cmd_vmf->add_option("--out", out_path, "Output CSV (default stdout)");

    // bdp
    auto* cmd_bdp = app.add_subcommand("bdp", "Breakdown-point lower-bound curves");
    std::string b_qlist = "2,3,5,10", b_kappas, b_deltas = "arc,cos,chord";
    cmd_bdp->add_option("--q-list", b_qlist, "Dimensions, comma-separated")->default_val("2,3,5,10");
    cmd_bdp->add_option("--kappa-grid", b_kappas, "Concentrations, comma-separated increasing");
    cmd_bdp->add_option("--deltas", b_deltas, "Kernels, comma-separated")->default_val("arc,cos,chord");
    cmd_bdp->add_option("--out", out_path, "Output path (.svg renders a chart)");
    cmd_bdp->add_option("--svg", svg_path, "Additional SVG output path");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "Max-depth two-class classification");
    std::string c_train1, c_train2, c_query, c_test, c_labels;
    std::uint64_t c_tie_seed = 7;
    cmd_classify->add_option("--train1", c_train1, "Population 1 training CSV")->required();
    cmd_classify->add_option("--train2", c_train2, "Population 2 training CSV")->required();
    cmd_classify->add_option("--delta", delta, "arc|cos|chord|atd|asd")->default_val("arc");
    cmd_classify->add_option("--query", c_query, "Single query point, comma-separated");
    cmd_classify->add_option("--test", c_test, "Test sample CSV");
    cmd_classify->add_option("--labels", c_labels, "True labels (with --test, reports error rate)");
    cmd_classify->add_option("--tie-seed", c_tie_seed, "Tie-break coin seed")->default_val(7);
    cmd_classify->add_flag("--normalize", normalize, "Renormalize non-unit rows");

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "Run a full experiment");
    dd::ExperimentConfig cfg;
    std::string sim_kernels, sim_kappas, sim_eps, sim_qlist, sim_setups, sim_nlist;
    cmd_sim->add_option("experiment", cfg.experiment,
                        "curves|bdp|efficiency|robustness|classification")
        ->required();
    cmd_sim->add_option("--seed", cfg.seed, "Base seed");
    cmd_sim->add_option("--M", cfg.M, "Replications (0 = experiment default)");
    cmd_sim->add_option("--q", cfg.q, "Dimension (0 = default)");
    cmd_sim->add_option("--q-list", sim_qlist, "Dimensions (bdp, classification)");
    cmd_sim->add_option("--n", cfg.n, "Sample size (curves, robustness)");
    cmd_sim->add_option("--n-list", sim_nlist, "Sample sizes (efficiency)");
    cmd_sim->add_option("--n-train", cfg.n_train, "Training size (classification)");
    cmd_sim->add_option("--n-test", cfg.n_test, "Test size (classification)");
    cmd_sim->add_option("--kappas", sim_kappas, "Concentration grid");
    cmd_sim->add_option("--eps", sim_eps, "Contamination levels (robustness)");
    cmd_sim->add_option("--kernels", sim_kernels, "Kernel subset, comma-separated");
    cmd_sim->add_option("--setups", sim_setups, "Classification setups (A,B,C,control)");
    cmd_sim->add_option("--grid", cfg.grid, "Profile grid size");
    cmd_sim->add_flag("--paper-scale", cfg.paper_scale, "Paper-scale replication counts");
    cmd_sim->add_option("--out", out_path, "Output path (.svg renders a chart)");
    cmd_sim->add_option("--svg", svg_path, "Additional SVG output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_depth->parsed()) {
            const dd::DirectionalSample sample = dd::ingest_sample(input_path, normalize);
            const dd::UnitVector theta = parse_point(theta_arg, normalize);
            if (delta == "atd") {
                std::cout << dd::fmt_real(dd::atd_circle(theta, sample)) << '\n';
            } else if (delta == "asd") {
                std::cout << dd::fmt_real(dd::asd_circle(theta, sample)) << '\n';
            } else {
                const dd::DeltaSpec spec = dd::DeltaSpec::by_name(delta);
                std::cout << dd::fmt_real(dd::depth(spec, theta, sample).value) << '\n';
            }
        } else if (cmd_deepest->parsed()) {
            const dd::DirectionalSample sample = dd::ingest_sample(input_path, normalize);
            const dd::DeltaSpec spec = dd::DeltaSpec::by_name(delta);
            const dd::DeepestResult res = dd::deepest(spec, sample);
            for (int i = 0; i < res.point.dim(); ++i) {
                if (i) std::cout << ',';
                std::cout << dd::fmt_real(res.point[i]);
            }
            std::cout << '\n' << "depth=" << dd::fmt_real(res.depth) << '\n';
        } else if (cmd_vmf->parsed()) {
            const dd::UnitVector mode =
                s_mode.empty() ? dd::UnitVector::axis(s_q, s_q) : parse_point(s_mode, true);
            const dd::DirectionalSample sample =
                dd::sample_vmf(dd::VmfModel(s_q, mode, s_kappa), s_n, s_seed);
            if (out_path.empty()) {
                dd::write_sample(sample, std::cout);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw dd::IoError("cannot open '" + out_path + "'");
                dd::write_sample(sample, out);
            }
        } else if (cmd_bdp->parsed()) {
            dd::ExperimentConfig bc;
            bc.experiment = "bdp";
            for (const std::string& tok : CLI::detail::split(b_qlist, ','))
                bc.q_list.push_back(std::stoi(tok));
            if (!b_kappas.empty()) bc.kappas = parse_reals_csv(b_kappas);
            bc.kernels = CLI::detail::split(b_deltas, ',');
            write_table(dd::run_bdp(bc), out_path, svg_path);
        } else if (cmd_classify->parsed()) {
            const dd::DirectionalSample s1 = dd::ingest_sample(c_train1, normalize);
            const dd::DirectionalSample s2 = dd::ingest_sample(c_train2, normalize);
            dd::DepthClassifier clf =
                delta == "atd" ? dd::DepthClassifier::fit_baseline(dd::DepthKind::atd, s1, s2, c_tie_seed)
                : delta == "asd"
                    ? dd::DepthClassifier::fit_baseline(dd::DepthKind::asd, s1, s2, c_tie_seed)
                    : dd::DepthClassifier::fit(dd::DeltaSpec::by_name(delta), s1, s2, c_tie_seed);
            if (!c_query.empty()) {
                std::cout << clf.classify(parse_point(c_query, normalize)) << '\n';
            } else if (!c_test.empty()) {
                const dd::DirectionalSample test = dd::ingest_sample(c_test, normalize);
                if (!c_labels.empty()) {
                    std::cout << dd::fmt_real(clf.misclassification_rate(test, read_labels(c_labels)))
                              << '\n';
                } else {
                    for (int i = 0; i < test.n(); ++i) std::cout << clf.classify(test[i]) << '\n';
                }
            } else {
                throw dd::ConfigError("classify needs --query or --test");
            }
        } else if (cmd_sim->parsed()) {
            if (!sim_qlist.empty())
                for (const std::string& tok : CLI::detail::split(sim_qlist, ','))
                    cfg.q_list.push_back(std::stoi(tok));
            if (!sim_nlist.empty())
                for (const std::string& tok : CLI::detail::split(sim_nlist, ','))
                    cfg.n_list.push_back(std::stoi(tok));
            if (!sim_kappas.empty()) cfg.kappas = parse_reals_csv(sim_kappas);
            if (!sim_eps.empty()) cfg.eps_list = parse_reals_csv(sim_eps);
            if (!sim_kernels.empty()) cfg.kernels = CLI::detail::split(sim_kernels, ',');
            if (!sim_setups.empty()) cfg.setups = CLI::detail::split(sim_setups, ',');
            write_table(dd::run_experiment(cfg), out_path, svg_path);
        }
    } catch (const dd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const dd::BadKernel& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const dd::QuadratureFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    } catch (const dd::ConstantDepth& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    } catch (const dd::Error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
