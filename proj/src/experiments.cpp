#include "stabrank/experiments.hpp"

#include <cmath>

#include "json.hpp"
#include "stabrank/baselines.hpp"
#include "stabrank/divergence.hpp"
#include "stabrank/errors.hpp"
#include "stabrank/runset_io.hpp"
#include "stabrank/synth.hpp"

namespace stabrank {

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::fig4:
      return "fig4";
    case Experiment::fig5:
      return "fig5";
    case Experiment::fig6:
      return "fig6";
    case Experiment::fig7:
      return "fig7";
  }
  return "?";
}

std::optional<Experiment> parse_experiment(std::string_view text) {
  if (text == "fig4") return Experiment::fig4;
  if (text == "fig5") return Experiment::fig5;
  if (text == "fig6") return Experiment::fig6;
  if (text == "fig7") return Experiment::fig7;
  return std::nullopt;
}

std::vector<double> Curve::column(std::string_view name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) {
      std::vector<double> out;
      out.reserve(rows.size());
      for (const auto& row : rows) out.push_back(row[c]);
      return out;
    }
  }
  throw ContractError("curve has no column '" + std::string(name) + "'");
}

namespace {

std::vector<double> evaluate(Experiment which, const synth::ExperimentConfig& cfg) {
  switch (which) {
    case Experiment::fig4: {
      const RunSet runs = synth::gen_fr_family(cfg);
      return {s_js(runs).s_js, phi(runs, Similarity::spearman).phi};
    }
    case Experiment::fig5: {
      const RunSet runs = synth::gen_fs_family(cfg);
      return {s_js(runs).s_js, phi(runs, Similarity::kuncheva).phi};
    }
    case Experiment::fig6:
    case Experiment::fig7: {
      const RunSet partial = which == Experiment::fig6 ? synth::gen_overlap_scenarios(cfg)
                                                       : synth::gen_rank_shuffle_scenarios(cfg);
      const RunSet masks = partial.as_topk();
      return {s_js(partial).s_js, s_js(masks).s_js, phi(masks, Similarity::kuncheva).phi};
    }
  }
  throw ContractError("unknown experiment");
}

}  // namespace

Curve run_experiment(Experiment which, const ExperimentOptions& options) {
  if (options.points < 2) throw ContractError("an experiment curve needs at least 2 points");
  if (options.repeats < 1) throw ContractError("repeats must be at least 1");

  Curve curve;
  switch (which) {
    case Experiment::fig4:
      curve.x_name = "i";
      curve.columns = {"s_js", "phi_spearman"};
      break;
    case Experiment::fig5:
      curve.x_name = "i";
      curve.columns = {"s_js_topk", "phi_kuncheva"};
      break;
    case Experiment::fig6:
      curve.x_name = "lambda";
      curve.columns = {"s_js_partial", "s_js_topk", "phi_kuncheva"};
      break;
    case Experiment::fig7:
      curve.x_name = "q";
      curve.columns = {"s_js_partial", "s_js_topk", "phi_kuncheva"};
      break;
  }

  const bool by_runs = which == Experiment::fig4 || which == Experiment::fig5;
  for (std::size_t p = 0; p < options.points; ++p) {
    const double frac = static_cast<double>(p) / static_cast<double>(options.points - 1);
    synth::ExperimentConfig cfg;
    cfg.t = options.t;
    cfg.k = options.k;
    cfg.runs = options.runs;
    cfg.target_overlap = options.target_overlap;
    double x = frac;
    if (by_runs) {
      cfg.fixed_runs = static_cast<std::size_t>(std::llround(frac * static_cast<double>(options.runs)));
      x = static_cast<double>(cfg.fixed_runs);
    } else if (which == Experiment::fig6) {
      cfg.lambda = frac;
    } else {
      cfg.q = frac;
    }

    std::vector<double> mean(curve.columns.size(), 0.0);
    for (std::size_t r = 0; r < options.repeats; ++r) {
      cfg.seed = options.seed + r;
      const auto values = evaluate(which, cfg);
      for (std::size_t c = 0; c < mean.size(); ++c) mean[c] += values[c];
    }
    for (auto& m : mean) m /= static_cast<double>(options.repeats);
    curve.x.push_back(x);
    curve.rows.push_back(std::move(mean));
  }
  return curve;
}

std::string curve_to_csv(const Curve& curve) {
  std::string out = curve.x_name;
  for (const auto& c : curve.columns) out += "," + c;
  out += '\n';
  for (std::size_t p = 0; p < curve.x.size(); ++p) {
    out += io::format_number(curve.x[p]);
    for (double v : curve.rows[p]) out += "," + io::format_number(v);
    out += '\n';
  }
  return out;
}

std::string curve_to_json(const Curve& curve, Experiment which, const ExperimentOptions& options) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["experiment"] = std::string(to_string(which));
  doc["t"] = options.t;
  doc["k"] = options.k;
  doc["K"] = options.runs;
  doc["seed"] = options.seed;
  doc["repeats"] = options.repeats;
  if (which == Experiment::fig6) doc["target_overlap"] = options.target_overlap;
  doc["x_name"] = curve.x_name;
  doc["x"] = nlohmann::ordered_json::array();
  for (double x : curve.x) doc["x"].push_back(io::round12(x));
  auto& series = doc["series"] = nlohmann::ordered_json::object();
  for (const auto& name : curve.columns) {
    auto& arr = series[name] = nlohmann::ordered_json::array();
    for (double v : curve.column(name)) arr.push_back(io::round12(v));
  }
  return doc.dump(2) + "\n";
}

}  // namespace stabrank
