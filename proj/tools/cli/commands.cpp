// Copyright 2026 The QQW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qqw/coin.hpp"
#include "qqw/error.hpp"
#include "qqw/io.hpp"
#include "qqw/path_sum.hpp"
#include "qqw/spectral.hpp"
#include "qqw/verify.hpp"
#include "qqw/walk.hpp"

namespace qqw::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

/// "@path" reads a file; anything else is inline JSON.
json json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return parse_json_text(read_file(arg.substr(1)));
  return parse_json_text(arg);
}

/// Bare words are preset names; JSON and @path are parsed.
json coin_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '@' || arg.front() == '{' || arg.front() == '[' ||
                       arg.front() == '"')) {
    return json_arg(arg);
  }
  return json(arg);
}

CoinOperator load_coin(const std::string& arg, double tol) {
  return CoinOperator::make(coin_matrix_from_json(coin_arg(arg)), tol);
}

Quaternion quaternion_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '@')) return json_arg(arg).get<Quaternion>();
  return parse_quaternion(arg);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnitary: return kNotUnitary;
    case ErrorCode::CapExceeded: return kCapExceeded;
    default: return kConfigError;
  }
}

/// Applies the --config file, then the environment, underneath explicit flags.
class ConfigLayer {
 public:
  ConfigLayer(CLI::App& app, RunConfig& cfg) : app_(app), cfg_(cfg) {}

  void apply(const std::string& path) {
    if (!path.empty()) {
      const json file = parse_json_text(read_file(path));
      if (!file.is_object()) throw Error(ErrorCode::ParseError, "config file must be an object");
      try {
        take(file, "coin", "--coin", [&](const json& v) {
          cfg_.coin = v.is_string() ? v.get<std::string>() : v.dump();
        });
        take(file, "init", "--init", [&](const json& v) { cfg_.init = v.dump(); });
        take(file, "steps", "--steps", [&](const json& v) { cfg_.steps = v.get<int>(); });
        take(file, "format", "--format", [&](const json& v) { cfg_.format = v.get<std::string>(); });
        take(file, "seed", "--seed", [&](const json& v) { cfg_.seed = v.get<std::uint64_t>(); });
        take(file, "tolerance", "--tol", [&](const json& v) { cfg_.tolerance = v.get<double>(); });
      } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad config value: ") + e.what());
      }
    }
    if (!flag_given("--seed")) {
      if (const char* env = std::getenv("QQW_SEED")) {
        try {
          cfg_.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, std::string("QQW_SEED is not an integer: ") + env);
        }
      }
    }
  }

 private:
  bool flag_given(const std::string& flag) const {
    for (const CLI::App* sub : app_.get_subcommands()) {
      if (const CLI::Option* opt = sub->get_option_no_throw(flag); opt && opt->count() > 0) return true;
    }
    return false;
  }

  template <typename F>
  void take(const json& file, const char* key, const std::string& flag, F&& set) {
    if (file.contains(key) && !flag_given(flag)) set(file.at(key));
  }

  CLI::App& app_;
  RunConfig& cfg_;
};

void check_config(const RunConfig& cfg) {
  if (cfg.steps < 0) throw Error(ErrorCode::ParseError, "--steps must be >= 0");
  if (!(cfg.tolerance > 0.0)) throw Error(ErrorCode::ParseError, "--tol must be > 0");
  if (cfg.format != "csv" && cfg.format != "json") {
    throw Error(ErrorCode::ParseError, "--format must be csv or json");
  }
}

int cmd_distribution(const RunConfig& cfg, std::ostream& out) {
  const CoinOperator coin = load_coin(cfg.coin, cfg.tolerance);
  const WalkState initial = state_from_json(json_arg(cfg.init));

  std::vector<Distribution> series;
  if (!initial.is_periodic() && initial.size() == 1 && initial.offset() == 0) {
    series = distribution_series(coin, initial.at(0), cfg.steps);
  } else {
    WalkState state = initial;
    series.push_back(to_distribution(measure_of(state)));
    for (int n = 1; n <= cfg.steps; ++n) {
      state = evolve_step(state, coin);
      series.push_back(to_distribution(measure_of(state)));
    }
  }

  if (cfg.format == "json") {
    json arr = json::array();
    for (std::size_t n = 0; n < series.size(); ++n) {
      arr.push_back(distribution_to_json(static_cast<int>(n), series[n]));
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "n,x,probability\n";
    for (std::size_t n = 0; n < series.size(); ++n) {
      write_distribution_csv(out, static_cast<int>(n), series[n]);
    }
  }
  return kOk;
}

int cmd_xi(const RunConfig& cfg, int n, int l, int m, const std::string& mode, std::ostream& out) {
  const CoinOperator coin = load_coin(cfg.coin, cfg.tolerance);
  json result;
  if (mode == "brute") {
    result = xi_bruteforce(coin, n, l, m);
  } else if (mode == "reduced") {
    result = xi_reduced(coin, n, l, m);
  } else {
    result = decompose_pqrs(coin, xi_bruteforce(coin, n, l, m), cfg.tolerance);
  }
  out << result.dump() << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out) {
  const auto reports = run_suite(suite, cfg.seed, cfg.tolerance);
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  out << json(reports).dump(2) << '\n';
  return all_pass ? kOk : kCheckFailed;
}

json class_to_json(const MeasureClass& cls) {
  json j{{"class", to_string(cls.tag)}, {"symmetric", cls.symmetric}};
  if (cls.tag == MeasureClass::Tag::Uniform) j["c"] = cls.c;
  if (cls.tag == MeasureClass::Tag::ExponentialDecay) {
    j["c_plus"] = cls.c_plus;
    j["c0"] = cls.c0;
    j["c_minus"] = cls.c_minus;
    j["gamma"] = cls.gamma;
  }
  return j;
}

int cmd_classify(const RunConfig& cfg, const std::string& measure_arg, int window,
                 std::ostream& out) {
  std::optional<Measure> mu;
  if (!measure_arg.empty()) {
    mu = measure_from_json(json_arg(measure_arg));
  } else {
    WalkState state = state_from_json(json_arg(cfg.init));
    if (cfg.steps > 0) state = evolve(state, load_coin(cfg.coin, cfg.tolerance), cfg.steps);
    mu = measure_of(state);
  }
  out << class_to_json(classify_measure(*mu, window, cfg.tolerance)).dump(2) << '\n';
  return kOk;
}

int cmd_eigen_check(const RunConfig& cfg, const std::string& construct, const std::string& pairs_arg,
                    const std::string& lambda_arg, std::ostream& out) {
  const CoinOperator coin = load_coin(cfg.coin, cfg.tolerance);
  const Quaternion lambda = quaternion_arg(lambda_arg);

  std::optional<EigenCandidate> cand;
  if (!construct.empty()) {
    std::vector<EvenSitePair> pairs;
    for (const Spinor& s : json_arg(pairs_arg).get<std::vector<Spinor>>()) {
      pairs.push_back({s.left, s.right});
    }
    if (construct == "flip") {
      if (!approx_equal(lambda, 1.0, cfg.tolerance) && !approx_equal(lambda, -1.0, cfg.tolerance)) {
        throw Error(ErrorCode::ParseError, "flip construction needs --lambda 1 or -1");
      }
      cand = build_eigenstate_flip(lambda.re() > 0.0 ? 1 : -1, pairs, cfg.tolerance);
    } else {
      cand = build_eigenstate_flipneg(lambda, pairs, cfg.tolerance);
    }
  } else {
    cand = make_eigen_candidate(state_from_json(json_arg(cfg.init)), lambda, cfg.tolerance);
  }

  const CheckResult eig = right_eigen_check(coin, *cand, cfg.tolerance);
  VerificationReport rep{"eigen-check", eig.pass, eig.max_residual,
                         {{"lambda", lambda}, {"period", cand->state.size()}}};
  if (cfg.steps > 0) {
    const CheckResult st = verify_stationary(coin, cand->state, cfg.steps, cfg.tolerance);
    rep.params["stationary_steps"] = cfg.steps;
    rep.params["stationary_residual"] = st.max_residual;
    rep.pass = rep.pass && st.pass;
  }
  rep.params["state"] = state_to_json(cand->state);
  out << json(rep).dump(2) << '\n';
  return rep.pass ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic quantum walks on the integer line", "qqw"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags take precedence)");
    sub->add_option("--coin", cfg.coin, "Preset name, inline JSON {a,b,c,d} or @file");
    sub->add_option("--tol", cfg.tolerance, "Comparison tolerance");
  };

  CLI::App* dist = app.add_subcommand("dist", "Position distributions for n = 0..steps");
  add_common(dist);
  dist->add_option("--init", cfg.init, "Initial [left, right] pair or state object (JSON or @file)");
  dist->add_option("--steps", cfg.steps, "Number of steps");
  dist->add_option("--format", cfg.format, "csv or json");

  int xi_n = 0;
  int xi_l = 0;
  int xi_m = 0;
  std::string xi_mode = "brute";
  CLI::App* xi = app.add_subcommand("xi", "Path-sum matrix Xi_n(l, m)");
  add_common(xi);
  xi->add_option("n", xi_n, "Word length")->required();
  xi->add_option("l", xi_l, "Number of P (left) factors")->required();
  xi->add_option("m", xi_m, "Number of Q (right) factors")->required();
  xi->add_option("--mode", xi_mode, "brute, reduced or decompose")
      ->check(CLI::IsMember({"brute", "reduced", "decompose"}));

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "Run property verification suites");
  add_common(verify);
  verify->add_option("--suite", suite, "all, unitary, stationary, eigen, theorem1 or pqrs")
      ->check(CLI::IsMember({"all", "unitary", "stationary", "eigen", "theorem1", "pqrs"}));
  verify->add_option("--seed", cfg.seed, "RNG seed (also QQW_SEED)");

  std::string measure_arg;
  int window = 8;
  CLI::App* classify = app.add_subcommand("classify", "Classify the measure of a state");
  add_common(classify);
  classify->add_option("--init", cfg.init, "State to measure (JSON or @file)");
  classify->add_option("--measure", measure_arg, "Measure object instead of a state");
  classify->add_option("--steps", cfg.steps, "Evolve the state this many steps first");
  classify->add_option("--window", window, "Sites per side to inspect");

  std::string construct;
  std::string pairs_arg = "[[1, 1]]";
  std::string lambda_arg = "1";
  CLI::App* eigen = app.add_subcommand("eigen-check", "Check a right-eigenvalue candidate");
  add_common(eigen);
  eigen->add_option("--init", cfg.init, "Periodic state object (JSON or @file)");
  eigen->add_option("--construct", construct, "Build the candidate: flip or flip-neg")
      ->check(CLI::IsMember({"flip", "flip-neg"}));
  eigen->add_option("--pairs", pairs_arg, "Even-site pairs [[alpha, beta], ...] for --construct");
  eigen->add_option("--lambda", lambda_arg, "Eigenvalue, e.g. -1 or 0.6i+0.8k");
  eigen->add_option("--steps", cfg.steps, "Also check measure stationarity for this many steps");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    // Defaults that differ per subcommand.
    if (eigen->parsed() && eigen->get_option("--coin")->count() == 0) cfg.coin = "flip";
    ConfigLayer(app, cfg).apply(config_path);
    check_config(cfg);

    if (dist->parsed()) return cmd_distribution(cfg, out);
    if (xi->parsed()) return cmd_xi(cfg, xi_n, xi_l, xi_m, xi_mode, out);
    if (verify->parsed()) return cmd_verify(cfg, suite, out);
    if (classify->parsed()) return cmd_classify(cfg, measure_arg, window, out);
    if (eigen->parsed()) return cmd_eigen_check(cfg, construct, pairs_arg, lambda_arg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace qqw::cli
