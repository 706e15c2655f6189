#include "dirdepth/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "dirdepth/baselines.hpp"
#include "dirdepth/classify.hpp"
#include "dirdepth/deepest.hpp"
#include "dirdepth/depth.hpp"
#include "dirdepth/robustness.hpp"
#include "dirdepth/rng.hpp"

namespace dirdepth {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

const std::vector<std::string> kDistanceKernels = {"arc", "cos", "chord"};

bool is_distance_kernel(const std::string& k) {
    return k == "arc" || k == "cos" || k == "chord";
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += xs[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string join_ints(const std::vector<int>& xs) {
    std::vector<std::string> s;
    for (int x : xs) s.push_back(std::to_string(x));
    return join(s);
}

std::string join_reals(const std::vector<double>& xs) {
    std::vector<std::string> s;
    for (double x : xs) s.push_back(fmt_real(x));
    return join(s);
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const std::string& tok : split(s, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    if (s.empty()) return out;
    for (const std::string& tok : split(s, ',')) out.push_back(std::stod(tok));
    return out;
}

VmfModel circle_vmf(double alpha, double kappa) {
    return VmfModel(2, UnitVector::from_angle(alpha), kappa);
}

MixtureModel curves_distribution(int ell) {
    switch (ell) {
        case 1: return MixtureModel::single(circle_vmf(kPi, 2.0));
        case 2:
            return MixtureModel({circle_vmf(3.0 * kPi / 4.0, 5.0), circle_vmf(5.0 * kPi / 4.0, 5.0)},
                                {0.5, 0.5});
        case 3:
            return MixtureModel({circle_vmf(5.0 * kPi / 9.0, 7.0), circle_vmf(13.0 * kPi / 9.0, 17.0)},
                                {0.5, 0.5});
        default: throw ConfigError("curves distribution index must be 1, 2 or 3");
    }
}

double mixture_density(const MixtureModel& model, const UnitVector& x) {
    double d = 0.0;
    for (std::size_t i = 0; i < model.components.size(); ++i) {
        d += model.weights[i] * vmf_density(model.components[i], x);
    }
    return d;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw ConfigError(what);
}

} // namespace

std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void ExperimentConfig::finalize() {
    require(experiment == "curves" || experiment == "bdp" || experiment == "efficiency" ||
                experiment == "robustness" || experiment == "classification",
            "unknown experiment '" + experiment + "'");

    if (experiment == "curves") {
        if (q == 0) q = 2;
        require(q == 2, "curves runs on the circle only");
        if (n == 0) n = 500;
        if (kernels.empty()) kernels = {"arc", "cos", "chord", "asd", "atd"};
    } else if (experiment == "bdp") {
        if (q_list.empty()) q_list = {2, 3, 5, 10};
        if (kappas.empty()) kappas = {0.1, 0.25, 0.5, 1, 2, 5, 10, 20, 50, 100};
        if (kernels.empty()) kernels = kDistanceKernels;
        for (const std::string& k : kernels)
            require(is_distance_kernel(k), "bdp supports distance kernels only");
        for (double kap : kappas) require(kap > 0.0, "bdp kappa grid must be positive");
        require(std::is_sorted(kappas.begin(), kappas.end()), "kappa grid must be increasing");
    } else if (experiment == "efficiency") {
        if (q == 0) q = 3;
        if (n_list.empty()) n_list = {25, 50, 100};
        if (kappas.empty()) kappas = {5, 10};
        if (M == 0) M = paper_scale ? 500 : 50;
        if (kernels.empty()) kernels = kDistanceKernels;
        for (const std::string& k : kernels)
            require(is_distance_kernel(k), "efficiency supports distance kernels only");
    } else if (experiment == "robustness") {
        if (q == 0) q = 3;
        if (n == 0) n = 100;
        if (kappas.empty()) kappas = {5, 10};
        if (eps_list.empty()) eps_list = {0.0, 0.05, 0.10};
        if (M == 0) M = paper_scale ? 500 : 50;
        if (kernels.empty()) kernels = kDistanceKernels;
        for (const std::string& k : kernels)
            require(is_distance_kernel(k), "robustness supports distance kernels only");
        for (double e : eps_list) require(e >= 0.0 && e < 1.0, "eps must be in [0, 1)");
    } else if (experiment == "classification") {
        if (q_list.empty()) q_list = q != 0 ? std::vector<int>{q} : std::vector<int>{2, 10};
        if (setups.empty()) setups = {"A", "B", "C", "control"};
        if (M == 0) M = paper_scale ? 250 : 50;
        if (kernels.empty()) kernels = kDistanceKernels;
        for (const std::string& k : kernels) {
            require(is_distance_kernel(k) || k == "asd" || k == "atd",
                    "unknown kernel '" + k + "'");
            if (!is_distance_kernel(k)) {
                for (int qq : q_list)
                    require(qq == 2, "asd/atd baselines are available for q=2 only");
            }
        }
        require(n_train >= 1 && n_test >= 1, "training and test sizes must be positive");
    }
    require(!kernels.empty(), "kernel list must be nonempty");
    require(grid >= 4, "grid must be at least 4");
    for (int qq : q_list) require(qq >= 2, "q must be at least 2");
    if (q != 0) require(q >= 2, "q must be at least 2");
    require(M >= 0, "M must be nonnegative");
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::to_metadata() const {
    std::vector<std::pair<std::string, std::string>> md;
    md.emplace_back("version", kToolkitVersion);
    md.emplace_back("experiment", experiment);
    md.emplace_back("q", std::to_string(q));
    md.emplace_back("q_list", join_ints(q_list));
    md.emplace_back("n", std::to_string(n));
    md.emplace_back("n_list", join_ints(n_list));
    md.emplace_back("n_train", std::to_string(n_train));
    md.emplace_back("n_test", std::to_string(n_test));
    md.emplace_back("kappas", join_reals(kappas));
    md.emplace_back("eps_list", join_reals(eps_list));
    md.emplace_back("M", std::to_string(M));
    md.emplace_back("seed", std::to_string(seed));
    md.emplace_back("kernels", join(kernels));
    md.emplace_back("setups", join(setups));
    md.emplace_back("grid", std::to_string(grid));
    md.emplace_back("paper_scale", paper_scale ? "1" : "0");
    return md;
}

ExperimentConfig ExperimentConfig::from_metadata(
    const std::vector<std::pair<std::string, std::string>>& metadata) {
    ExperimentConfig c;
    for (const auto& [key, value] : metadata) {
        if (key == "experiment") c.experiment = value;
        else if (key == "q") c.q = std::stoi(value);
        else if (key == "q_list") c.q_list = parse_ints(value);
        else if (key == "n") c.n = std::stoi(value);
        else if (key == "n_list") c.n_list = parse_ints(value);
        else if (key == "n_train") c.n_train = std::stoi(value);
        else if (key == "n_test") c.n_test = std::stoi(value);
        else if (key == "kappas") c.kappas = parse_reals(value);
        else if (key == "eps_list") c.eps_list = parse_reals(value);
        else if (key == "M") c.M = std::stoi(value);
        else if (key == "seed") c.seed = std::stoull(value);
        else if (key == "kernels") c.kernels = value.empty() ? std::vector<std::string>{} : split(value, ',');
        else if (key == "setups") c.setups = value.empty() ? std::vector<std::string>{} : split(value, ',');
        else if (key == "grid") c.grid = std::stoi(value);
        else if (key == "paper_scale") c.paper_scale = value == "1";
    }
    return c;
}

ResultTable run_curves(const ExperimentConfig& config_in) {
    ExperimentConfig config = config_in;
    config.finalize();

    ResultTable table;
    table.metadata = config.to_metadata();
    // Figure display rescales depth curves (1.5 distance / 1 asd / 0.5 atd);
    // emitted depths are raw, the factors are recorded for plotting only.
    table.metadata.emplace_back("display_factors", "distance=1.5,asd=1,atd=0.5");
    table.columns = {"dist", "kernel", "angle", "depth", "is_max"};

    for (int ell = 1; ell <= 3; ++ell) {
        const MixtureModel parent = curves_distribution(ell);
        const DirectionalSample sample =
            sample_mixture(parent, config.n, substream(config.seed, static_cast<std::uint64_t>(ell)));

        for (const std::string& kernel : config.kernels) {
            std::vector<double> values(static_cast<std::size_t>(config.grid));
            for (int k = 0; k < config.grid; ++k) {
                const UnitVector theta = UnitVector::from_angle(kTwoPi * k / config.grid);
                if (kernel == "asd") values[static_cast<std::size_t>(k)] = asd_circle(theta, sample);
                else if (kernel == "atd") values[static_cast<std::size_t>(k)] = atd_circle(theta, sample);
                else values[static_cast<std::size_t>(k)] = depth(DeltaSpec::by_name(kernel), theta, sample).value;
            }
            const std::size_t argmax =
                static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
            for (int k = 0; k < config.grid; ++k) {
                table.rows.push_back({"H" + std::to_string(ell), kernel,
                                      fmt_real(kTwoPi * k / config.grid),
                                      fmt_real(values[static_cast<std::size_t>(k)]),
                                      static_cast<std::size_t>(k) == argmax ? "1" : "0"});
            }
        }

        for (int k = 0; k < config.grid; ++k) {
            const UnitVector theta = UnitVector::from_angle(kTwoPi * k / config.grid);
            table.rows.push_back({"H" + std::to_string(ell), "density",
                                  fmt_real(kTwoPi * k / config.grid),
                                  fmt_real(mixture_density(parent, theta)), "0"});
        }
    }
    return table;
}

ResultTable run_bdp(const ExperimentConfig& config_in) {
    ExperimentConfig config = config_in;
    config.finalize();

    ResultTable table;
    table.metadata = config.to_metadata();
    table.columns = {"q", "kernel", "kappa", "bound"};
    for (int q : config.q_list) {
        for (const std::string& kernel : config.kernels) {
            const DeltaSpec spec = DeltaSpec::by_name(kernel);
            for (double kappa : config.kappas) {
                double bound;
                try {
                    bound = bdp_lower_bound_vmf(spec, q, kappa);
                } catch (const QuadratureFailure& e) {
                    throw QuadratureFailure("bdp(q=" + std::to_string(q) + ", kappa=" +
                                            fmt_real(kappa) + "): " + e.what());
                }
                table.rows.push_back({std::to_string(q), kernel, fmt_real(kappa), fmt_real(bound)});
            }
        }
    }
    return table;
}

ResultTable run_efficiency(const ExperimentConfig& config_in) {
    ExperimentConfig config = config_in;
    config.finalize();

    ResultTable table;
    table.metadata = config.to_metadata();
    table.columns = {"q", "n", "kappa", "kernel", "rep", "stat", "value"};

    const int q = config.q;
    const UnitVector truth = UnitVector::axis(q, q);
    for (int n : config.n_list) {
        for (double kappa : config.kappas) {
            const VmfModel model(q, truth, kappa);
            std::map<std::string, double> se_sum;
            for (int m = 0; m < config.M; ++m) {
                const DirectionalSample sample =
                    sample_vmf(model, n, substream(config.seed, static_cast<std::uint64_t>(m)));
                for (const std::string& kernel : config.kernels) {
                    const DeepestResult est = deepest(DeltaSpec::by_name(kernel), sample);
                    const double se = squared_error(est.point, truth);
                    se_sum[kernel] += se;
                    table.rows.push_back({std::to_string(q), std::to_string(n), fmt_real(kappa),
                                          kernel, std::to_string(m), "SE", fmt_real(se)});
                }
            }
            for (const std::string& kernel : config.kernels) {
                table.rows.push_back({std::to_string(q), std::to_string(n), fmt_real(kappa), kernel,
                                      "", "MSE", fmt_real(se_sum[kernel] / config.M)});
            }
        }
    }
    return table;
}

ResultTable run_robustness(const ExperimentConfig& config_in) {
    ExperimentConfig config = config_in;
    config.finalize();

    ResultTable table;
    table.metadata = config.to_metadata();
    table.columns = {"q", "n", "kappa", "eps", "contam", "kernel", "rep", "stat", "value"};

    const int q = config.q;
    const int n = config.n;
    const UnitVector truth = UnitVector::axis(q, q);
    const UnitVector orthogonal = UnitVector::axis(q, q - 1);
    const UnitVector antipodal = truth.negated();

    for (double kappa : config.kappas) {
        const VmfModel base(q, truth, kappa);
        for (double eps : config.eps_list) {
            std::vector<std::pair<std::string, UnitVector>> variants;
            if (eps == 0.0) {
                variants.emplace_back("none", truth); // atom unused
            } else {
                variants.emplace_back("orthogonal", orthogonal);
                variants.emplace_back("antipodal", antipodal);
            }
            for (const auto& [contam, atom] : variants) {
                std::map<std::string, double> se_sum;
                for (int m = 0; m < config.M; ++m) {
                    const std::uint64_t rep_seed =
                        substream(config.seed, static_cast<std::uint64_t>(m));
                    // eps = 0 draws exactly the efficiency-run sample.
                    const DirectionalSample sample =
                        eps == 0.0 ? sample_vmf(base, n, rep_seed)
                                   : sample_contaminated(ContaminatedModel(base, eps, atom), n,
                                                         rep_seed);
                    for (const std::string& kernel : config.kernels) {
                        const DeepestResult est = deepest(DeltaSpec::by_name(kernel), sample);
                        const double se = squared_error(est.point, truth);
                        se_sum[kernel] += se;
                        table.rows.push_back({std::to_string(q), std::to_string(n), fmt_real(kappa),
                                              fmt_real(eps), contam, kernel, std::to_string(m),
                                              "SE", fmt_real(se)});
                    }
                }
                for (const std::string& kernel : config.kernels) {
                    table.rows.push_back({std::to_string(q), std::to_string(n), fmt_real(kappa),
                                          fmt_real(eps), contam, kernel, "", "MSE",
                                          fmt_real(se_sum[kernel] / config.M)});
                }
            }
        }
    }
    return table;
}

std::pair<MixtureModel, MixtureModel> classification_setup(const std::string& setup, int q) {
    if (q == 2) {
        if (setup == "A")
            return {MixtureModel::single(circle_vmf(kPi / 4.0, 5.0)),
                    MixtureModel::single(circle_vmf(3.0 * kPi / 4.0, 5.0))};
        if (setup == "B")
            return {MixtureModel::single(circle_vmf(kPi / 3.0, 2.0)),
                    MixtureModel::single(circle_vmf(2.0 * kPi / 3.0, 5.0))};
        if (setup == "C")
            return {MixtureModel::single(circle_vmf(3.0 * kPi / 4.0, 4.0)),
                    MixtureModel({circle_vmf(0.0, 4.0), circle_vmf(kPi / 2.0, 4.0)}, {0.5, 0.5})};
        if (setup == "control")
            return {MixtureModel::single(circle_vmf(kPi / 4.0, 5.0)),
                    MixtureModel::single(circle_vmf(kPi / 4.0, 5.0))};
        throw ConfigError("unknown classification setup '" + setup + "'");
    }

    const UnitVector e1 = UnitVector::axis(q, 1);
    const UnitVector eq = UnitVector::axis(q, q);
    const UnitVector eq1 = UnitVector::axis(q, q - 1);
    const auto tilted = [&](double angle) {
        std::vector<double> v(static_cast<std::size_t>(q), 0.0);
        v[static_cast<std::size_t>(q - 2)] = std::cos(angle);
        v[static_cast<std::size_t>(q - 1)] = std::sin(angle);
        return UnitVector::from_components(v);
    };

    if (setup == "A")
        return {MixtureModel::single(VmfModel(q, e1, 5.0)),
                MixtureModel::single(VmfModel(q, eq, 5.0))};
    if (setup == "B")
        return {MixtureModel::single(VmfModel(q, eq, 2.0)),
                MixtureModel::single(VmfModel(q, tilted(kPi / 6.0), 5.0))};
    if (setup == "C")
        return {MixtureModel::single(VmfModel(q, tilted(7.0 * kPi / 4.0), 4.0)),
                MixtureModel({VmfModel(q, eq1, 4.0), VmfModel(q, eq, 4.0)}, {0.5, 0.5})};
    if (setup == "control")
        return {MixtureModel::single(VmfModel(q, eq, 5.0)),
                MixtureModel::single(VmfModel(q, eq, 5.0))};
    throw ConfigError("unknown classification setup '" + setup + "'");
}

ResultTable run_classification(const ExperimentConfig& config_in) {
    ExperimentConfig config = config_in;
    config.finalize();

    ResultTable table;
    table.metadata = config.to_metadata();
    table.columns = {"q", "setup", "kernel", "rep", "stat", "value"};

    for (std::size_t qi = 0; qi < config.q_list.size(); ++qi) {
        const int q = config.q_list[qi];
        for (std::size_t si = 0; si < config.setups.size(); ++si) {
            const std::string& setup = config.setups[si];
            const auto [h1, h2] = classification_setup(setup, q);
            const std::uint64_t scope =
                substream(substream(config.seed, qi), si);

            std::map<std::string, double> rate_sum;
            for (int m = 0; m < config.M; ++m) {
                const std::uint64_t rep = substream(scope, static_cast<std::uint64_t>(m));
                auto [train, train_labels] =
                    sample_two_class(h1, h2, config.n_train, substream(rep, 0));
                auto [test, test_labels] =
                    sample_two_class(h1, h2, config.n_test, substream(rep, 1));

                std::vector<UnitVector> t1, t2;
                for (int i = 0; i < train.n(); ++i) {
                    (train_labels[static_cast<std::size_t>(i)] == 1 ? t1 : t2).push_back(train[i]);
                }
                // A one-sided training draw cannot fit the rule; retry streams
                // would bias replication independence, so reject the config.
                if (t1.empty() || t2.empty()) {
                    throw ConfigError("training draw produced an empty class; increase n_train");
                }
                const DirectionalSample s1{std::move(t1)}, s2{std::move(t2)};

                for (const std::string& kernel : config.kernels) {
                    const std::uint64_t tie_seed = substream(rep, 2);
                    DepthClassifier clf =
                        kernel == "atd"
                            ? DepthClassifier::fit_baseline(DepthKind::atd, s1, s2, tie_seed)
                        : kernel == "asd"
                            ? DepthClassifier::fit_baseline(DepthKind::asd, s1, s2, tie_seed)
                            : DepthClassifier::fit(DeltaSpec::by_name(kernel), s1, s2, tie_seed);
                    const double rate = clf.misclassification_rate(test, test_labels);
                    rate_sum[kernel] += rate;
                    table.rows.push_back({std::to_string(q), setup, kernel, std::to_string(m),
                                          "rate", fmt_real(rate)});
                }
            }
            for (const std::string& kernel : config.kernels) {
                table.rows.push_back({std::to_string(q), setup, kernel, "", "mean_rate",
                                      fmt_real(rate_sum[kernel] / config.M)});
            }
        }
    }
    return table;
}

ResultTable run_experiment(const ExperimentConfig& config) {
    if (config.experiment == "curves") return run_curves(config);
    if (config.experiment == "bdp") return run_bdp(config);
    if (config.experiment == "efficiency") return run_efficiency(config);
    if (config.experiment == "robustness") return run_robustness(config);
    if (config.experiment == "classification") return run_classification(config);
    throw ConfigError("unknown experiment '" + config.experiment + "'");
}

DirectionalSample ingest_sample_stream(std::istream& in, bool normalize) {
    std::vector<UnitVector> points;
    int dim = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed.front() == '#') continue;

        std::vector<double> xs;
        for (const std::string& tok : split(trimmed, ',')) {
            try {
                std::size_t pos = 0;
                xs.push_back(std::stod(tok, &pos));
                while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\t')) ++pos;
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(lineno, "cannot parse '" + tok + "' as a real number");
            }
        }
        if (dim == 0) {
            if (xs.size() < 2) throw ParseError(lineno, "rows need at least 2 coordinates");
            dim = static_cast<int>(xs.size());
        } else if (static_cast<int>(xs.size()) != dim) {
            throw DimInconsistent(lineno, dim, static_cast<int>(xs.size()));
        }
        if (normalize) {
            try {
                points.push_back(UnitVector::from_components(xs));
            } catch (const ZeroNorm&) {
                throw ParseError(lineno, "zero-norm row cannot be normalized");
            }
        } else {
            try {
                points.push_back(UnitVector(xs));
            } catch (const Error&) {
                throw NormError(lineno);
            }
        }
    }
    if (points.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "file holds no observations");
    return DirectionalSample(std::move(points));
}

DirectionalSample ingest_sample(const std::string& path, bool normalize) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return ingest_sample_stream(in, normalize);
}

void write_sample(const DirectionalSample& sample, std::ostream& out) {
    for (const UnitVector& p : sample) {
        for (int i = 0; i < p.dim(); ++i) {
            if (i) out << ',';
            out << fmt_real(p[i]);
        }
        out << '\n';
    }
}

namespace {

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void emit_csv(const ResultTable& table, std::ostream& out) {
    if (table.rows.empty()) throw IoError("refusing to emit an empty table");
    for (const auto& [key, value] : table.metadata) out << "# " << key << "=" << value << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_quote(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_quote(row[i]);
        }
        out << '\n';
    }
}

namespace {

std::string fmt_svg(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

int find_column(const ResultTable& table, const std::string& name) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (table.columns[i] == name) return static_cast<int>(i);
    }
    return -1;
}

} // namespace

void emit_svg(const ResultTable& table, std::ostream& out) {
    if (table.rows.empty()) throw IoError("refusing to emit an empty table");

    // Chart shape by column signature: depth profiles or bound curves.
    int xcol, ycol;
    std::vector<int> group_cols;
    std::string xlabel, ylabel;
    if (find_column(table, "angle") >= 0 && find_column(table, "depth") >= 0) {
        xcol = find_column(table, "angle");
        ycol = find_column(table, "depth");
        group_cols = {find_column(table, "dist"), find_column(table, "kernel")};
        xlabel = "angle";
        ylabel = "depth";
    } else if (find_column(table, "kappa") >= 0 && find_column(table, "bound") >= 0) {
        xcol = find_column(table, "kappa");
        ycol = find_column(table, "bound");
        group_cols = {find_column(table, "q"), find_column(table, "kernel")};
        xlabel = "kappa";
        ylabel = "bound";
    } else {
        throw IoError("table has no polyline chart form (expect angle/depth or kappa/bound)");
    }

    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& row : table.rows) {
        std::string key;
        for (int g : group_cols) {
            if (g >= 0) {
                if (!key.empty()) key += '/';
                key += row[static_cast<std::size_t>(g)];
            }
        }
        const double x = std::stod(row[static_cast<std::size_t>(xcol)]);
        const double y = std::stod(row[static_cast<std::size_t>(ycol)]);
        series[key].emplace_back(x, y);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;

    const double width = 800, height = 500, ml = 70, mr = 180, mt = 30, mb = 50;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const auto sx = [&](double x) { return ml + pw * (x - xmin) / (xmax - xmin); };
    const auto sy = [&](double y) { return mt + ph * (1.0 - (y - ymin) / (ymax - ymin)); };

    static const char* kPalette[] = {"#1b6ca8", "#c1403d", "#3c8c40", "#8452a1",
                                     "#b0742c", "#3aa6a6", "#92322e", "#5c5c5c"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
        << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"14\">" << xlabel << "</text>\n";
    out << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 " << mt + ph / 2
        << ")\">" << ylabel << "</text>\n";
    out << "<text x=\"" << ml << "\" y=\"" << mt + ph + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt_svg(xmin) << "</text>\n";
    out << "<text x=\"" << ml + pw << "\" y=\"" << mt + ph + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt_svg(xmax) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + ph
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt_svg(ymin) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 10
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt_svg(ymax) << "</text>\n";

    int idx = 0;
    for (const auto& [key, pts] : series) {
        const char* color = kPalette[idx % 8];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) out << ' ';
            out << fmt_svg(sx(pts[i].first)) << ',' << fmt_svg(sy(pts[i].second));
        }
        out << "\"/>\n";
        out << "<text x=\"" << ml + pw + 10 << "\" y=\"" << mt + 14 + 16 * idx
            << "\" font-size=\"12\" fill=\"" << color << "\">" << key << "</text>\n";
        ++idx;
    }
    out << "</svg>\n";
}

void emit(const ResultTable& table, EmitFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    if (format == EmitFormat::csv) emit_csv(table, out);
    else emit_svg(table, out);
    if (!out) throw IoError("write to '" + path + "' failed");
}

} // namespace dirdepth
