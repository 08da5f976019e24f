#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabrank {

/// The four synthetic studies.
///  fig4: FR-i family, x = i, columns s_js, phi_spearman
///  fig5: FS-i family, x = i, columns s_js_topk, phi_kuncheva
///  fig6: overlap scenario, x = lambda, columns s_js_partial, s_js_topk, phi_kuncheva
///  fig7: rank-shuffle scenario, x = q, same columns as fig6
enum class Experiment { fig4, fig5, fig6, fig7 };

std::string_view to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view text);

struct ExperimentOptions {
  std::size_t t = 2000;
  std::size_t k = 600;
  std::size_t runs = 100;
  std::uint64_t seed = 0;
  /// Each point averages seeds seed, seed+1, ..., seed+repeats-1.
  std::size_t repeats = 1;
  /// Grid size along x; points are evenly spaced over [0, runs] (fig4/5,
  /// rounded to integers) or [0, 1] (fig6/7).
  std::size_t points = 11;
  std::size_t target_overlap = 350;
};

struct Curve {
  std::string x_name;
  std::vector<std::string> columns;
  std::vector<double> x;
  /// rows[p][c] is column c at x[p].
  std::vector<std::vector<double>> rows;

  std::vector<double> column(std::string_view name) const;
};

Curve run_experiment(Experiment which, const ExperimentOptions& options);

std::string curve_to_csv(const Curve& curve);
std::string curve_to_json(const Curve& curve, Experiment which, const ExperimentOptions& options);

}  // namespace stabrank
