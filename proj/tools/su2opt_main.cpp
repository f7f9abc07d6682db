// su2opt command line: decompose targets into cost-optimal control words,
// verify the structured solver against the brute-force estimate, and tabulate
// splitting convergence.
//
// Exit codes: 0 success, 1 usage or parse error, 2 no solution found,
// 3 verification failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "su2opt/json_io.hpp"
#include "su2opt/oracle.hpp"
#include "su2opt/solver.hpp"
#include "su2opt/splitting.hpp"

namespace {

using namespace su2opt;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitVerifyFailed = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

// Target forms:
//   quat:a,b,c,d              components, renormalized (norm within 1e-6 of 1)
//   axis:x,y,z:theta          exp((theta/2) * axis), axis normalized
//   word:GEN:t[,GEN:t...]     letters evaluated in the frame
struct TargetSpec {
  enum class Kind { Quat, Axis, Word } kind = Kind::Quat;
  double qa = 1, qb = 0, qc = 0, qd = 0;
  Su2Vector axis{};
  double theta = 0;
  Word word;

  UnitQuaternion realize(const ControlFrame& frame, bool degrees) const {
    switch (kind) {
      case Kind::Quat: return UnitQuaternion(qa, qb, qc, qd);
      case Kind::Axis: {
        const double t = degrees ? theta * std::numbers::pi / 180.0 : theta;
        return exp_su2(axis * (t / 2.0));
      }
      case Kind::Word: return eval_word(word, frame);
    }
    return UnitQuaternion::identity();
  }
};

TargetSpec parse_target(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("target must look like quat:..., axis:... or word:...");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  TargetSpec t;
  if (kind == "quat") {
    t.kind = TargetSpec::Kind::Quat;
    const auto parts = split(rest, ',');
    if (parts.size() != 4) throw std::invalid_argument("quat target needs four components a,b,c,d");
    t.qa = parse_double(parts[0]);
    t.qb = parse_double(parts[1]);
    t.qc = parse_double(parts[2]);
    t.qd = parse_double(parts[3]);
    const double n = std::sqrt(t.qa * t.qa + t.qb * t.qb + t.qc * t.qc + t.qd * t.qd);
    if (std::abs(n - 1.0) > 1e-6)
      throw std::invalid_argument("quaternion norm must be within 1e-6 of 1 before renormalization");
    return t;
  }
  if (kind == "axis") {
    t.kind = TargetSpec::Kind::Axis;
    const auto sections = split(rest, ':');
    if (sections.size() != 2) throw std::invalid_argument("axis target looks like axis:x,y,z:theta");
    const auto parts = split(sections[0], ',');
    if (parts.size() != 3) throw std::invalid_argument("axis needs three components x,y,z");
    Su2Vector axis{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
    const double n = norm(axis);
    if (n < 1e-12) throw std::invalid_argument("axis must be nonzero");
    t.axis = axis * (1.0 / n);
    t.theta = parse_double(sections[1]);
    return t;
  }
  if (kind == "word") {
    t.kind = TargetSpec::Kind::Word;
    for (const auto& letter : split(rest, ',')) {
      const auto parts = split(letter, ':');
      if (parts.size() != 2) throw std::invalid_argument("word letters look like X:0.3");
      t.word.letters.push_back({parse_generator(parts[0]), parse_double(parts[1])});
    }
    return t;
  }
  throw std::invalid_argument("unknown target kind '" + kind + "'");
}

nlohmann::json target_json(const UnitQuaternion& g) {
  return {{"a", g.a()}, {"b", g.b()}, {"c", g.c()}, {"d", g.d()}};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void print_decomposition(const Decomposition& dec) {
  std::printf("regime:   %s\n", to_string(dec.regime));
  std::printf("family:   %s\n", dec.family.c_str());
  std::printf("word:     ");
  if (dec.word.empty()) std::printf("(empty)");
  for (const auto& l : dec.word.letters) std::printf("[%s: %s] ", to_string(l.gen), fmt(l.time).c_str());
  std::printf("\n");
  std::printf("cost:     %s\n", fmt(dec.cost).c_str());
  std::printf("residual: %.3g\n", dec.residual);
}

UnitQuaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double a, b, c, d, n;
  do {
    a = gauss(rng);
    b = gauss(rng);
    c = gauss(rng);
    d = gauss(rng);
    n = std::sqrt(a * a + b * b + c * c + d * d);
  } while (n < 1e-6);
  return UnitQuaternion(a, b, c, d);
}

struct CommonArgs {
  std::string target;
  double alpha = 0.0;
  double kappa = 1.0;
  int max_len = 0;
  double tol = 1e-12;
  bool json = false;
  bool degrees = false;
};

int run_decompose(const CommonArgs& args) {
  const double alpha = args.degrees ? args.alpha * std::numbers::pi / 180.0 : args.alpha;
  const ControlFrame frame(alpha, args.kappa);
  const TargetSpec spec = parse_target(args.target);
  const UnitQuaternion g = spec.realize(frame, args.degrees);

  SolverConfig cfg;
  cfg.newton_tol = args.tol;
  const auto dec = decompose(g, frame, cfg, args.max_len);
  if (!dec) {
    std::fprintf(stderr, "no decomposition found within the length budget\n");
    return kExitNoSolution;
  }
  if (args.json) {
    nlohmann::json j = *dec;
    j["schema"] = 1;
    j["target"] = target_json(g);
    j["frame"] = {{"alpha", frame.alpha()}, {"kappa", frame.kappa()}, {"regime", to_string(frame.regime())}};
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    print_decomposition(*dec);
  }
  return kExitOk;
}

struct VerifyArgs {
  double alpha = 0.0;
  double kappa = 1.0;
  int max_n = 5;
  int trials = 20;
  std::uint64_t seed = 1;
  int max_len = 0;
  double tol = 1e-12;
  bool degrees = false;
  bool strict = false;
};

int run_verify(const VerifyArgs& args) {
  const double alpha = args.degrees ? args.alpha * std::numbers::pi / 180.0 : args.alpha;
  const ControlFrame frame(alpha, args.kappa);
  const Regime regime = frame.regime();
  // The candidate enumeration is backed by a derived length bound in the
  // KappaLt / KappaEq regimes, so discrepancies there are reported rather
  // than asserted unless --strict is given.
  const bool assert_regime =
      args.strict || regime == Regime::KappaGt || regime == Regime::FreeY;

  SolverConfig scfg;
  scfg.newton_tol = args.tol;
  OracleConfig ocfg;
  ocfg.seed = args.seed;

  std::mt19937_64 rng(args.seed);
  double max_disc = 0.0;
  double max_mid_dev = -1.0;
  int failures = 0;

  for (int trial = 0; trial < args.trials; ++trial) {
    const UnitQuaternion g = random_unit(rng);
    const auto dec = decompose(g, frame, scfg, args.max_len);
    const auto est = infimum_estimate(g, frame, args.max_n, ocfg);
    if (!dec || !est) {
      std::printf("trial %d: %s\n", trial, !dec ? "solver found nothing" : "oracle found nothing");
      ++failures;
      continue;
    }
    const double disc = std::abs(dec->cost - est->cost);
    max_disc = std::max(max_disc, disc);
    if (disc >= 1e-5) {
      ++failures;
      std::printf("trial %d: discrepancy %.3g for target quat:%.17g,%.17g,%.17g,%.17g\n", trial, disc,
                  g.a(), g.b(), g.c(), g.d());
    }
    if (regime == Regime::KappaEq && est->word.size() >= 4) {
      for (std::size_t i = 1; i + 1 < est->word.size(); ++i)
        if (est->word.letters[i].gen == Generator::X)
          max_mid_dev = std::max(max_mid_dev, std::abs(est->word.letters[i].time - std::numbers::pi / 2));
    }
  }

  std::printf("max discrepancy: %.3g over %d trials (alpha=%s, kappa=%s, regime %s)\n", max_disc,
              args.trials, fmt(frame.alpha()).c_str(), fmt(frame.kappa()).c_str(), to_string(regime));
  if (max_mid_dev >= 0.0)
    std::printf("middle X-times: max deviation from pi/2 in oracle words: %.3g\n", max_mid_dev);
  if (failures > 0 && assert_regime) return kExitVerifyFailed;
  if (failures > 0)
    std::printf("%d discrepancies reported (not asserted in regime %s; use --strict to fail)\n",
                failures, to_string(regime));
  return kExitOk;
}

struct SplitArgs {
  std::string a, b;
  std::string ns = "16,32,64,128";
  std::string csv;
};

int run_splitting(const SplitArgs& args) {
  const auto parse_vec = [](const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw std::invalid_argument("su(2) vectors look like x,y,z");
    return Su2Vector{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
  };
  const Su2Vector a = parse_vec(args.a);
  const Su2Vector b = parse_vec(args.b);
  std::vector<int> ns;
  for (const auto& tok : split(args.ns, ',')) ns.push_back(static_cast<int>(parse_double(tok)));

  const auto table = convergence_table(a, b, ns);
  std::printf("%8s  %14s  %14s\n", "N", "trotter_err", "strang_err");
  for (const auto& row : table.rows)
    std::printf("%8d  %14.6e  %14.6e\n", row.n, row.trotter_err, row.strang_err);
  if (table.trotter_exact)
    std::printf("fitted orders: EXACT (commuting inputs)\n");
  else
    std::printf("fitted orders: trotter %.3f, strang %.3f\n", table.trotter_order, table.strang_order);

  if (!args.csv.empty()) {
    std::ofstream out(args.csv);
    if (!out) throw std::runtime_error("cannot open '" + args.csv + "' for writing");
    write_csv(table, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cost-optimal control words in SU(2)"};
  app.require_subcommand(1);

  CommonArgs dec_args;
  auto* dec = app.add_subcommand("decompose", "find a minimum-cost word for a target");
  dec->add_option("--target", dec_args.target, "quat:a,b,c,d | axis:x,y,z:theta | word:GEN:t[,...]")->required();
  dec->add_option("--alpha", dec_args.alpha, "angle between the controls, radians")->required();
  dec->add_option("--kappa", dec_args.kappa, "cost factor of Y in [0, 1]")->required();
  dec->add_option("--max-len", dec_args.max_len, "word length budget (0 = automatic bound)");
  dec->add_option("--tol", dec_args.tol, "accepted residual norm");
  dec->add_flag("--json", dec_args.json, "emit JSON (schema 1)");
  dec->add_flag("--degrees", dec_args.degrees, "interpret angles in degrees");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "compare the solver against the brute-force estimate");
  ver->add_option("--alpha", ver_args.alpha, "angle between the controls, radians")->required();
  ver->add_option("--kappa", ver_args.kappa, "cost factor of Y in [0, 1]")->required();
  ver->add_option("--max-n", ver_args.max_n, "oracle word-length ceiling");
  ver->add_option("--trials", ver_args.trials, "number of random targets");
  ver->add_option("--seed", ver_args.seed, "target and oracle seed");
  ver->add_option("--max-len", ver_args.max_len, "solver length budget (0 = automatic)");
  ver->add_option("--tol", ver_args.tol, "solver residual tolerance");
  ver->add_flag("--degrees", ver_args.degrees, "interpret angles in degrees");
  ver->add_flag("--strict", ver_args.strict, "assert equality in every regime");

  SplitArgs split_args;
  auto* spl = app.add_subcommand("splitting", "product-formula convergence table");
  spl->add_option("--a", split_args.a, "first su(2) vector x,y,z")->required();
  spl->add_option("--b", split_args.b, "second su(2) vector x,y,z")->required();
  spl->add_option("--ns", split_args.ns, "comma-separated step counts");
  spl->add_option("--csv", split_args.csv, "write the table to this CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  }

  try {
    if (dec->parsed()) return run_decompose(dec_args);
    if (ver->parsed()) return run_verify(ver_args);
    if (spl->parsed()) return run_splitting(split_args);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
