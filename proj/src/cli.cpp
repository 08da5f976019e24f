#include "stabrank/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabrank/baselines.hpp"
#include "stabrank/divergence.hpp"
#include "stabrank/errors.hpp"
#include "stabrank/runset_io.hpp"

namespace stabrank::cli {

namespace {

using Json = nlohmann::ordered_json;

// Runs `body`, mapping library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kContract;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error("cannot write '" + out_path + "'");
  file << text;
  return kOk;
}

OutputFormat infer_format(const std::string& out_path) {
  return std::filesystem::path(out_path).extension() == ".json" ? OutputFormat::json
                                                                 : OutputFormat::csv;
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto file = io::read_file(path);
    out << path << ": kind=" << to_string(file.kind) << " t=" << file.t << " k=" << file.k
        << " K=" << file.runs << '\n';
    bool all_ok = true;
    for (const auto& check : io::check_columns(file)) {
      if (check.violation) {
        all_ok = false;
        out << "column " << check.column << ": INVALID: " << check.violation->message << '\n';
      } else {
        out << "column " << check.column << ": ok\n";
      }
    }
    if (all_ok && file.runs < 2) {
      out << "run set: INVALID: a run set needs at least 2 lists\n";
      all_ok = false;
    }
    out << (all_ok ? "valid" : "invalid") << '\n';
    return all_ok ? kOk : kValidation;
  });
}

int cmd_stability(const std::string& path, const std::vector<std::string>& metrics, bool json,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (metrics.empty()) throw ContractError("no metrics requested");
    // Reject unknown names and incompatible kinds before computing anything.
    const RunSet runs = io::to_run_set(io::read_file(path));
    for (const auto& name : metrics) {
      if (name == "sjs") continue;
      const auto sim = parse_similarity(name);
      if (!sim) throw ContractError("unknown metric '" + name + "'");
      if (!is_compatible(*sim, runs.kind())) {
        throw ContractError("metric '" + name + "' does not apply to " +
                            std::string(to_string(runs.kind())) + " lists (" +
                            (*sim == Similarity::spearman ? "spearman needs full rankings"
                                                          : name + " needs top-k or partial lists") +
                            ")");
      }
    }

    Json doc;
    doc["schema"] = 1;
    doc["kind"] = std::string(to_string(runs.kind()));
    doc["t"] = runs.t();
    doc["k"] = runs.k();
    doc["K"] = runs.runs();
    doc["metrics"] = Json::object();
    std::ostringstream text;
    for (const auto& name : metrics) {
      if (name == "sjs") {
        const auto rep = s_js(runs);
        doc["metrics"]["sjs"] = {{"s_js", io::round12(rep.s_js)},
                                 {"d_js", io::round12(rep.d_js)},
                                 {"d_star", io::round12(rep.d_star)}};
        text << "sjs: s_js=" << io::format_number(rep.s_js)
             << " d_js=" << io::format_number(rep.d_js) << " nats ("
             << io::format_number(rep.d_js / std::log(2.0)) << " bits)"
             << " d_star=" << io::format_number(rep.d_star) << " nats\n";
      } else {
        const auto res = phi(runs, *parse_similarity(name));
        Json pairs = Json::array();
        for (double v : res.pair_values) pairs.push_back(io::round12(v));
        doc["metrics"][name] = {{"phi", io::round12(res.phi)}, {"pairs", std::move(pairs)}};
        text << name << ": phi=" << io::format_number(res.phi) << " over "
             << res.pair_values.size() << " pairs\n";
      }
    }
    if (json) {
      out << doc.dump(2) << '\n';
    } else {
      out << "kind=" << to_string(runs.kind()) << " t=" << runs.t() << " k=" << runs.k()
          << " K=" << runs.runs() << '\n'
          << text.str();
    }
    return kOk;
  });
}

int cmd_experiment(Experiment which, const ExperimentOptions& options, const std::string& out_path,
                   OutputFormat format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Curve curve = run_experiment(which, options);
    const std::string text = format == OutputFormat::json
                                 ? curve_to_json(curve, which, options)
                                 : curve_to_csv(curve);
    return emit(text, out_path, out);
  });
}

int cmd_mds(const std::vector<std::string>& paths, mds::DistanceSpec distance,
            const std::string& out_path, OutputFormat format, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    if (paths.empty()) throw ContractError("no input files");
    std::vector<mds::LabeledRunSet> inputs;
    for (const auto& p : paths) {
      inputs.push_back({std::filesystem::path(p).stem().string(), io::to_run_set(io::read_file(p))});
    }
    // Repeated file names would make the labels ambiguous.
    for (std::size_t a = 0; a < inputs.size(); ++a) {
      std::size_t dup = 0;
      for (std::size_t b = 0; b < a; ++b) dup += inputs[b].algorithm == inputs[a].algorithm ? 1 : 0;
      if (dup > 0) inputs[a].algorithm += "#" + std::to_string(dup + 1);
    }
    if (distance.kind == mds::DistanceSpec::Kind::one_minus_similarity) {
      err << "note: 1 - " << to_string(distance.similarity)
          << " may not be a metric; the embedding can be distorted\n";
    }
    const auto dm = mds::distance_matrix(inputs, distance);
    const auto emb = mds::classical_mds(dm);
    std::ostringstream text;
    if (format == OutputFormat::json) {
      io::write_embedding_json(text, dm, emb);
    } else {
      io::write_embedding_csv(text, dm, emb);
    }
    return emit(text.str(), out_path, out);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability of feature ranking and feature selection outputs", "stabrank"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a run set file");
  validate->add_option("file", validate_path, "Run set file")->required();

  std::string stability_path;
  std::vector<std::string> metrics{"sjs"};
  bool json = false;
  auto* stability = app.add_subcommand("stability", "Compute stability metrics of a run set");
  stability->add_option("file", stability_path, "Run set file")->required();
  stability->add_option("--metrics", metrics, "Comma-separated: sjs,spearman,kuncheva,jaccard")
      ->delimiter(',');
  stability->add_flag("--json", json, "Emit a JSON report");

  std::string experiment_name;
  ExperimentOptions options;
  std::string experiment_out = "-";
  std::string experiment_format;
  auto* experiment = app.add_subcommand("experiment", "Run a synthetic stability study");
  experiment->add_option("name", experiment_name, "fig4 | fig5 | fig6 | fig7")
      ->required()
      ->check(CLI::IsMember({"fig4", "fig5", "fig6", "fig7"}));
  experiment->add_option("--seed", options.seed, "Random seed")->required();
  experiment->add_option("--t", options.t, "Number of features")->capture_default_str();
  experiment->add_option("--k", options.k, "Sublist length")->capture_default_str();
  experiment->add_option("--runs", options.runs, "Runs per algorithm (K)")->capture_default_str();
  experiment->add_option("--repeats", options.repeats, "Seeds averaged per point")
      ->capture_default_str();
  experiment->add_option("--points", options.points, "Points along the x axis")
      ->capture_default_str();
  experiment->add_option("--overlap", options.target_overlap, "Expected overlap (fig6)")
      ->capture_default_str();
  experiment->add_option("--out", experiment_out, "Output path ('-' for stdout)");
  experiment->add_option("--format", experiment_format, "csv | json (default from --out)")
      ->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> mds_paths;
  std::string distance_name = "sqrt-js";
  std::string metric_name = "kuncheva";
  std::string mds_out = "-";
  std::string mds_format;
  auto* mds_cmd = app.add_subcommand("mds", "Project runs of one or more algorithms to 2D");
  mds_cmd->add_option("files", mds_paths, "Run set files, one per algorithm")->required();
  mds_cmd->add_option("--distance", distance_name, "sqrt-js | one-minus-metric")
      ->check(CLI::IsMember({"sqrt-js", "one-minus-metric"}))
      ->capture_default_str();
  mds_cmd->add_option("--metric", metric_name, "Similarity for one-minus-metric")
      ->check(CLI::IsMember({"spearman", "kuncheva", "jaccard"}))
      ->capture_default_str();
  mds_cmd->add_option("--out", mds_out, "Output path ('-' for stdout)");
  mds_cmd->add_option("--format", mds_format, "csv | json (default from --out)")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto pick_format = [](const std::string& explicit_format, const std::string& path) {
    if (explicit_format == "json") return OutputFormat::json;
    if (explicit_format == "csv") return OutputFormat::csv;
    return infer_format(path);
  };

  if (*validate) return cmd_validate(validate_path, out, err);
  if (*stability) return cmd_stability(stability_path, metrics, json, out, err);
  if (*experiment) {
    return cmd_experiment(*parse_experiment(experiment_name), options, experiment_out,
                          pick_format(experiment_format, experiment_out), out, err);
  }
  if (*mds_cmd) {
    mds::DistanceSpec spec;
    if (distance_name == "one-minus-metric") {
      spec.kind = mds::DistanceSpec::Kind::one_minus_similarity;
      spec.similarity = *parse_similarity(metric_name);
    }
    return cmd_mds(mds_paths, spec, mds_out, pick_format(mds_format, mds_out), out, err);
  }
  return kUsage;
}

}  // namespace stabrank::cli
