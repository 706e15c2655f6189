#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dirdepth/sampling.hpp"
#include "dirdepth/sphere.hpp"

namespace dirdepth {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct ExperimentConfig {
    std::string experiment; // curves | bdp | efficiency | robustness | classification
    int q = 0;              // 0 = experiment default
    std::vector<int> q_list;
    int n = 0;
    std::vector<int> n_list;
    int n_train = 200;
    int n_test = 100;
    std::vector<double> kappas;
    std::vector<double> eps_list;
    int M = 0;
    std::uint64_t seed = 20260824;
    std::vector<std::string> kernels;
    std::vector<std::string> setups; // classification: A, B, C, control
    int grid = 720;
    bool paper_scale = false;
    std::string output_path;

    // Fills experiment defaults for any field left at its zero value and
    // validates the result. Throws ConfigError.
    void finalize();

    std::vector<std::pair<std::string, std::string>> to_metadata() const;
    static ExperimentConfig from_metadata(
        const std::vector<std::pair<std::string, std::string>>& metadata);
};

struct ResultTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// 17-significant-digit decimal form; round-trips doubles exactly.
std::string fmt_real(double x);

ResultTable run_curves(const ExperimentConfig& config);
ResultTable run_bdp(const ExperimentConfig& config);
ResultTable run_efficiency(const ExperimentConfig& config);
ResultTable run_robustness(const ExperimentConfig& config);
ResultTable run_classification(const ExperimentConfig& config);
ResultTable run_experiment(const ExperimentConfig& config);

// The distributions behind the classification setups ("A", "B", "C",
// "control") for a given dimension.
std::pair<MixtureModel, MixtureModel> classification_setup(const std::string& setup, int q);

// Sample CSV reader: one observation per row, comma-separated reals, '#'
// comments. Rows violating unit norm are rejected unless normalize is set.
DirectionalSample ingest_sample(const std::string& path, bool normalize);
DirectionalSample ingest_sample_stream(std::istream& in, bool normalize);

// Sample CSV writer, 17 significant digits.
void write_sample(const DirectionalSample& sample, std::ostream& out);

enum class EmitFormat { csv, svg };

void emit_csv(const ResultTable& table, std::ostream& out);
void emit_svg(const ResultTable& table, std::ostream& out);
void emit(const ResultTable& table, EmitFormat format, const std::string& path);

} // namespace dirdepth
