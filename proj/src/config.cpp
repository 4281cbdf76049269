#include "umd/config.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace umd {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    out.push_back(trim(item));
  }
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != s.size() || s.empty()) {
    throw ParseError(what + ": not a number: '" + s + "'");
  }
  return value;
}

int to_int(const std::string& s, const std::string& what) {
  const double v = to_double(s, what);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw ParseError(what + ": not an integer: '" + s + "'");
  }
  return i;
}

bool to_bool(const std::string& s, const std::string& what) {
  const std::string v = lower(s);
  if (v == "true" || v == "1" || v == "yes" || v == "on") {
    return true;
  }
  if (v == "false" || v == "0" || v == "no" || v == "off") {
    return false;
  }
  throw ParseError(what + ": not a boolean: '" + s + "'");
}

Vector to_vector(const std::string& s, const std::string& what) {
  const std::vector<std::string> items = split(s, ',');
  Vector v(static_cast<Eigen::Index>(items.size()));
  for (size_t i = 0; i < items.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = to_double(items[i], what);
  }
  return v;
}

Vector random_direction(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = gauss(rng);
  }
  const double vn = v.norm();
  return vn > 0.0 ? Vector(v / vn) : Vector(Vector::Unit(n, 0));
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_string(const std::string& text) {
  ExperimentConfig config;
  std::stringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ParseError("config line " + std::to_string(lineno) +
                         ": malformed section header");
      }
      section = lower(trim(line.substr(1, line.size() - 2)));
      config.sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(lineno) +
                       ": expected 'key = value'");
    }
    if (section.empty()) {
      throw ParseError("config line " + std::to_string(lineno) +
                       ": key outside any [section]");
    }
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ParseError("config line " + std::to_string(lineno) +
                       ": empty key");
    }
    config.sections[section][key] = value;
  }
  return config;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str());
}

bool ExperimentConfig::has(const std::string& section,
                           const std::string& key) const {
  const auto sit = sections.find(section);
  return sit != sections.end() && sit->second.count(key) > 0;
}

std::string ExperimentConfig::get(const std::string& section,
                                  const std::string& key) const {
  if (!has(section, key)) {
    throw ParseError("config: missing [" + section + "] " + key);
  }
  return sections.at(section).at(key);
}

std::string ExperimentConfig::get_or(const std::string& section,
                                     const std::string& key,
                                     const std::string& fallback) const {
  return has(section, key) ? sections.at(section).at(key) : fallback;
}

namespace {

ConstraintSet resolve_set(const ExperimentConfig& config) {
  const std::string kind = lower(config.get("set", "kind"));
  if (kind == "full_space") {
    return full_space(to_int(config.get("set", "dim"), "[set] dim"));
  }
  if (kind == "ball") {
    const double radius = to_double(config.get("set", "radius"),
                                    "[set] radius");
    if (config.has("set", "center")) {
      return euclidean_ball(to_vector(config.get("set", "center"),
                                      "[set] center"),
                            radius);
    }
    const int dim = to_int(config.get("set", "dim"), "[set] dim");
    return euclidean_ball(Vector::Zero(dim), radius);
  }
  if (kind == "simplex") {
    return simplex(to_int(config.get("set", "dim"), "[set] dim"));
  }
  if (kind == "box") {
    return box(to_vector(config.get("set", "lower"), "[set] lower"),
               to_vector(config.get("set", "upper"), "[set] upper"));
  }
  if (kind == "segment") {
    return segment_2d(to_vector(config.get("set", "a"), "[set] a"),
                      to_vector(config.get("set", "b"), "[set] b"));
  }
  throw ArgumentError("unknown set kind: '" + kind + "'");
}

Regularizer resolve_regularizer(const ExperimentConfig& config,
                                const ConstraintSet& set) {
  const std::string kind = lower(config.get("regularizer", "kind"));
  if (kind == "euclidean" || kind == "euclidean_ball" ||
      kind == "euclidean_free") {
    return euclidean_regularizer(set);
  }
  if (kind == "entropy_simplex") {
    if (set.kind != SetKind::Simplex) {
      throw ArgumentError("entropy_simplex regularizer needs a simplex set");
    }
    return entropy_simplex_regularizer(set.n);
  }
  if (kind == "elastic_net") {
    if (set.kind != SetKind::FullSpace) {
      throw ArgumentError("elastic_net regularizer is defined on the full "
                          "space");
    }
    return elastic_net_regularizer(set.n);
  }
  throw ArgumentError("unknown regularizer kind: '" + kind + "'");
}

Dataset resolve_dataset(const ExperimentConfig& config) {
  if (config.has("problem", "data")) {
    const std::string format =
        lower(config.get_or("problem", "format", "last-column-target"));
    const double scale = config.has("problem", "feature_scale")
                             ? to_double(config.get("problem",
                                                    "feature_scale"),
                                         "[problem] feature_scale")
                             : 1.0;
    if (format == "last-column-target") {
      return ingest_csv(config.get("problem", "data"),
                        CsvFormat::LastColumnTarget, "", scale);
    }
    if (format == "separate-labels") {
      return ingest_csv(config.get("problem", "data"),
                        CsvFormat::SeparateLabels,
                        config.get("problem", "labels"), scale);
    }
    throw ArgumentError("unknown csv format: '" + format + "'");
  }
  // Synthetic instance, fully determined by the seed.
  const auto seed = static_cast<std::uint64_t>(
      to_int(config.get_or("problem", "seed", "1"), "[problem] seed"));
  const int features = to_int(config.get("problem", "features"),
                              "[problem] features");
  const double target_norm = to_double(
      config.get_or("problem", "target_norm", "1"), "[problem] target_norm");
  const Vector beta_true =
      target_norm * random_direction(features, seed ^ 0xbeefULL);
  if (config.has("problem", "gram_lambda_min")) {
    return make_conditioned_regression(
        features, beta_true,
        to_double(config.get("problem", "gram_lambda_min"),
                  "[problem] gram_lambda_min"),
        to_double(config.get("problem", "gram_lambda_max"),
                  "[problem] gram_lambda_max"),
        seed);
  }
  const int samples = to_int(config.get("problem", "samples"),
                             "[problem] samples");
  const double noise = to_double(config.get_or("problem", "noise", "0"),
                                 "[problem] noise");
  return make_synthetic_regression(samples, features, beta_true, noise, seed);
}

Problem resolve_problem(const ExperimentConfig& config,
                        const ConstraintSet& set) {
  const std::string kind = lower(config.get("problem", "kind"));
  if (kind == "least_squares") {
    return make_least_squares(resolve_dataset(config));
  }
  if (kind == "logistic") {
    return make_logistic(resolve_dataset(config));
  }
  if (kind == "l1_distance") {
    if (config.has("problem", "center")) {
      return make_l1_distance(to_vector(config.get("problem", "center"),
                                        "[problem] center"));
    }
    return make_l1_distance(Vector::Zero(set.n));
  }
  if (kind == "zero") {
    return make_zero(set.n);
  }
  throw ArgumentError("unknown problem kind: '" + kind + "'");
}

Vector resolve_theta1(const ExperimentConfig& config,
                      const std::string& section, Eigen::Index n) {
  const std::string spec = config.get_or(section, "theta_1", "zero");
  if (lower(spec) == "zero") {
    return Vector::Zero(n);
  }
  Vector v = to_vector(spec, "theta_1");
  require_dim(v, n, "theta_1");
  return v;
}

}  // namespace

DualPolicy parse_policy(const std::string& name) {
  const std::string p = lower(trim(name));
  if (p == "da") {
    return DualPolicy::da();
  }
  if (p == "md") {
    return DualPolicy::md();
  }
  if (p.rfind("gold:", 0) == 0) {
    const std::vector<std::string> parts = split(p.substr(5), ':');
    if (parts.size() == 1) {
      return DualPolicy::gold(to_int(parts[0], "gold k"));
    }
    if (parts.size() == 2) {
      return DualPolicy::gold_lookahead(to_int(parts[0], "gold k"),
                                        to_int(parts[1], "gold tau"));
    }
  }
  throw ArgumentError("unknown policy: '" + name +
                      "' (expected da, md, gold:K or gold:K:TAU)");
}

ResolvedExperiment resolve_experiment(const ExperimentConfig& config) {
  ResolvedExperiment exp;
  exp.set = resolve_set(config);
  exp.regularizer = resolve_regularizer(config, exp.set);
  exp.problem = resolve_problem(config, exp.set);
  if (exp.problem.n != exp.set.n) {
    throw DimensionError("problem dimension " + std::to_string(exp.problem.n) +
                         " does not match set dimension " +
                         std::to_string(exp.set.n));
  }
  for (const std::string& p :
       split(config.get("run", "policies"), ',')) {
    exp.policies.push_back(parse_policy(p));
  }
  for (const std::string& g :
       split(config.get("run", "step_sizes"), ',')) {
    const double gamma = to_double(g, "[run] step_sizes");
    if (!(gamma > 0.0)) {
      throw ArgumentError("step-sizes must be positive");
    }
    exp.step_sizes.push_back(gamma);
  }
  if (exp.policies.empty() || exp.step_sizes.empty()) {
    throw ArgumentError("need at least one policy and one step-size");
  }
  exp.T = to_int(config.get("run", "t"), "[run] T");
  if (exp.T < 1) {
    throw ArgumentError("[run] T must be >= 1");
  }
  exp.theta_1 = resolve_theta1(config, "run", exp.set.n);
  exp.certify = to_bool(config.get_or("run", "certify", "false"),
                        "[run] certify");
  exp.fstar_budget = to_int(config.get_or("run", "fstar_budget", "20000"),
                            "[run] fstar_budget");
  return exp;
}

ResolvedSaddle resolve_saddle(const ExperimentConfig& config) {
  ResolvedSaddle saddle;
  const std::vector<std::string> row_specs =
      split(config.get("saddle", "payoff"), ';');
  const Eigen::Index m = static_cast<Eigen::Index>(row_specs.size());
  Matrix payoff;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vector row = to_vector(row_specs[static_cast<size_t>(i)],
                                 "[saddle] payoff row");
    if (i == 0) {
      payoff.resize(m, row.size());
    } else if (row.size() != payoff.cols()) {
      throw DimensionError("[saddle] payoff: ragged rows");
    }
    payoff.row(i) = row.transpose();
  }
  saddle.op = make_bilinear_saddle(payoff);
  saddle.regularizer =
      product(entropy_simplex_regularizer(payoff.rows()),
              entropy_simplex_regularizer(payoff.cols()));
  saddle.set = saddle.regularizer.domain;
  saddle.T = to_int(config.get_or("saddle", "t", "1000"), "[saddle] T");
  const double K = saddle.regularizer.strong_convexity_K;
  const double L = *saddle.op.lipschitz_L;
  saddle.gamma = config.has("saddle", "gamma")
                     ? to_double(config.get("saddle", "gamma"),
                                 "[saddle] gamma")
                     : (L > 0.0 ? K / L : 1.0);
  const std::string zeta = lower(config.get_or("saddle", "zeta", "md"));
  if (zeta == "md") {
    saddle.zeta_policy = ZetaPolicy::MD;
  } else if (zeta == "da") {
    saddle.zeta_policy = ZetaPolicy::DA;
  } else {
    throw ArgumentError("unknown zeta policy: '" + zeta + "'");
  }
  return saddle;
}

ResolvedGame resolve_game(const ExperimentConfig& config) {
  ResolvedGame game;
  game.set = resolve_set(config);
  game.regularizer = resolve_regularizer(config, game.set);
  game.T = to_int(config.get_or("game", "t", "1000"), "[game] T");
  game.theta_1 = resolve_theta1(config, "game", game.set.n);
  game.policy = parse_policy(config.get_or("game", "policy", "da"));

  const std::string kind = lower(config.get("game", "adversary"));
  const NormTag primal = game.regularizer.norm;
  if (kind == "zero") {
    game.adversary = zero_adversary(game.set.n);
  } else if (kind == "fixed") {
    game.adversary = fixed_adversary(
        to_vector(config.get("game", "payoff"), "[game] payoff"), primal);
  } else if (kind == "alternating") {
    game.adversary = alternating_adversary(
        to_vector(config.get("game", "payoff"), "[game] payoff"), primal);
  } else if (kind == "seeded-random") {
    game.adversary = seeded_random_adversary(
        game.set.n,
        to_double(config.get_or("game", "m", "1"), "[game] M"),
        static_cast<std::uint64_t>(
            to_int(config.get_or("game", "seed", "1"), "[game] seed")),
        primal);
  } else {
    throw ArgumentError("unknown adversary kind: '" + kind + "'");
  }
  game.eta = config.has("game", "eta")
                 ? to_double(config.get("game", "eta"), "[game] eta")
                 : 0.0;
  return game;
}

}  // namespace umd
