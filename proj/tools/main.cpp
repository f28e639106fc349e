// densecsp: approximation toolkit for dense Max 2-CSPs, free games,
// projection games on random bipartite graphs, and Densest k-Subgraph.
//
// Reports go to stdout as deterministic JSON; logs go to stderr.
// Exit codes: 0 success, 2 validation error, 3 budget error, 64 usage.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <utility>

#include "densecsp/complete.hpp"
#include "densecsp/densify.hpp"
#include "densecsp/dks.hpp"
#include "densecsp/freegame.hpp"
#include "densecsp/generate.hpp"
#include "densecsp/io.hpp"
#include "densecsp/oracle.hpp"
#include "densecsp/projection.hpp"
#include "densecsp/rng.hpp"

namespace {

using namespace densecsp;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit(const Json& j, const std::string& output_path) {
  if (output_path.empty())
    std::cout << dump_deterministic(j);
  else
    save_json_file(output_path, j);
}

Json finish_report(const SolveReport& report, const Instance& inst,
                   const std::string& command, Json params) {
  Json j = report_to_json(report, &inst);
  j["command"] = command;
  j["params"] = std::move(params);
  return j;
}

void log_elapsed(const std::string& what, const Timer& timer) {
  std::cerr << what << ": elapsed " << timer.seconds() << " s\n";
}

// ---------------------------------------------------------------- gen --

struct GenArgs {
  int n = 8;
  int side = 4;
  int q = 3;
  double p = 0.5;
  int edges = -1;
  int clique = 0;
  double table_density = 0.5;
  std::uint64_t seed = 0;
  bool no_planted = false;
  std::string output;
  std::string planted_out;
};

void write_planted(const GenArgs& args, const Assignment& planted) {
  if (!args.planted_out.empty())
    save_json_file(args.planted_out, assignment_to_json(planted));
}

int run_gen_projection(const GenArgs& args) {
  RandomGraphConfig cfg{args.n, args.p, args.q, args.seed, !args.no_planted};
  if (!meets_density_precondition(cfg.n, cfg.p))
    std::cerr << "warning: p < 10*sqrt(ln n / n); the random-graph lemmas are "
                 "unreliable at this density\n";
  const ProjectionGame game = generate_projection_game(cfg);
  emit(instance_to_json(game.inst), args.output);
  write_planted(args, game.planted);
  return kExitOk;
}

int run_gen_complete(const GenArgs& args) {
  const auto planted =
      planted_complete_instance(args.n, args.q, args.seed, args.table_density);
  emit(instance_to_json(planted.inst), args.output);
  write_planted(args, planted.planted);
  return kExitOk;
}

int run_gen_csp(const GenArgs& args) {
  const int max_edges = args.n * (args.n - 1) / 2;
  const int edges = args.edges < 0 ? (max_edges + 1) / 2 : args.edges;
  const auto planted =
      planted_dense_instance(args.n, args.q, edges, args.seed, args.table_density);
  emit(instance_to_json(planted.inst), args.output);
  write_planted(args, planted.planted);
  return kExitOk;
}

int run_gen_freegame(const GenArgs& args) {
  if (args.no_planted) {
    emit(instance_to_json(
             random_free_game(args.side, args.q, args.seed, args.table_density)),
         args.output);
  } else {
    const auto planted =
        planted_free_game(args.side, args.q, args.seed, args.table_density);
    emit(instance_to_json(planted.inst), args.output);
    write_planted(args, planted.planted);
  }
  return kExitOk;
}

int run_gen_graph(const GenArgs& args) {
  const SimpleGraph g =
      args.clique > 0 ? planted_clique_graph(args.n, args.clique, args.p, args.seed)
                      : random_graph(args.n, args.p, args.seed);
  emit(graph_to_json(g), args.output);
  return kExitOk;
}

// -------------------------------------------------------------- solve --

struct SolveArgs {
  std::string file;
  std::uint64_t seed = 0;
  int level = 0;  // 0: derive from gamma
  double gamma = 0.0;
  std::string epsilon = "1/2";
  std::uint64_t max_work = 10'000'000'000ULL;
  int max_level = 4;
  bool oracle_check = false;
  long long budget = -1;
  double p = -1.0;
  int threads = 1;
  int k = 0;
  int trials = 0;
  std::string output;
};

int pick_level(const SolveArgs& args) {
  if (args.level > 0) return args.level;
  if (args.gamma > 0) return level_for_gamma(args.gamma);
  throw ValidationError("pass --level or --gamma");
}

int run_solve_freegame(const SolveArgs& args) {
  Timer timer;
  const Instance game = load_instance(args.file);
  throw_if_invalid(game);
  LevelParams params{pick_level(args), args.max_work, args.max_level};
  const AlphabetRestriction S = AlphabetRestriction::full(game.n(), game.q());
  SolveReport report = approx_free_game(game, S, params, args.seed);
  if (args.oracle_check) {
    const OptProfile profile = brute_force_csp(game, {}, args.budget);
    const Float50 bound = guarantee_bound(game, profile, S, params.level);
    GuaranteeInfo g;
    g.form = GuaranteeInfo::Form::Approx;
    g.approx_bound = static_cast<double>(bound);
    g.preconditions_verified = true;
    g.met = meets_guarantee_bound(report.satisfied, bound);
    g.note = "P(i) bound from the oracle profile (1e-12 slack)";
    report.guarantee = g;
  }
  Json params_json{{"file", args.file},
                   {"level", params.level},
                   {"max_work", args.max_work},
                   {"oracle_check", args.oracle_check}};
  emit(finish_report(report, game, "solve freegame", params_json), args.output);
  log_elapsed("solve freegame", timer);
  return kExitOk;
}

int run_solve_dense(const SolveArgs& args) {
  Timer timer;
  const Instance inst = load_instance(args.file);
  if (!(args.gamma > 0)) throw ValidationError("pass --gamma");
  DenseSolveOptions options;
  options.max_work = args.max_work;
  options.max_level = args.max_level;
  options.oracle_check = args.oracle_check;
  options.oracle_budget = args.budget;
  const SolveReport report = solve_dense_csp(inst, args.gamma, args.seed, options);
  Json params_json{{"file", args.file},
                   {"gamma", args.gamma},
                   {"oracle_check", args.oracle_check}};
  emit(finish_report(report, inst, "solve dense", params_json), args.output);
  log_elapsed("solve dense", timer);
  return kExitOk;
}

int run_solve_complete(const SolveArgs& args) {
  Timer timer;
  const Instance inst = load_instance(args.file);
  throw_if_invalid(inst);
  const int level = pick_level(args);
  SolveReport report = solve_complete(inst, level);
  report.seed = args.seed;
  if (args.oracle_check) {
    const OptProfile profile = brute_force_csp(inst, {}, args.budget);
    report.guarantee.preconditions_verified =
        profile.opt_satisfied == inst.edge_count();
    report.guarantee.note =
        report.guarantee.preconditions_verified
            ? "q^{-1/i} bound; satisfiability verified by the oracle"
            : "q^{-1/i} bound; the oracle found the instance unsatisfiable, "
              "so the bound is void";
  }
  Json params_json{{"file", args.file},
                   {"level", level},
                   {"oracle_check", args.oracle_check}};
  emit(finish_report(report, inst, "solve complete", params_json), args.output);
  log_elapsed("solve complete", timer);
  return kExitOk;
}

int run_solve_qptas(const SolveArgs& args) {
  Timer timer;
  const Instance inst = load_instance(args.file);
  const Rational epsilon = parse_rational(args.epsilon);
  QptasDetail detail;
  SolveReport report = qptas_dense(inst, epsilon, args.seed, &detail);
  if (args.oracle_check) {
    const OptProfile profile = brute_force_csp(inst, {}, args.budget);
    report.guarantee.preconditions_verified =
        profile.opt_satisfied == inst.edge_count();
    if (!report.guarantee.preconditions_verified)
      report.guarantee.note =
          "(1-eps)|E| bound; the oracle found the instance unsatisfiable, "
          "so the bound is void";
  }
  Json params_json{{"file", args.file},
                   {"epsilon", args.epsilon},
                   {"level", detail.level},
                   {"oracle_check", args.oracle_check}};
  emit(finish_report(report, inst, "solve qptas", params_json), args.output);
  log_elapsed("solve qptas", timer);
  return kExitOk;
}

int run_solve_projection(const SolveArgs& args) {
  Timer timer;
  const Instance game = load_instance(args.file);
  if (!(args.gamma > 0)) throw ValidationError("pass --gamma");
  ProjectionSolveOptions options;
  options.max_work = args.max_work;
  options.max_level = args.max_level;
  options.threads = args.threads;
  if (args.p > 0) options.p = args.p;
  const SolveReport report = solve_projection(game, args.gamma, args.seed, options);
  Json params_json{{"file", args.file}, {"gamma", args.gamma}};
  if (args.p > 0) params_json["p"] = args.p;
  emit(finish_report(report, game, "solve projection", params_json), args.output);
  log_elapsed("solve projection", timer);
  return kExitOk;
}

int run_solve_dks(const SolveArgs& args) {
  Timer timer;
  const SimpleGraph g = load_graph(args.file);
  if (args.k < 2) throw ValidationError("pass --k >= 2");
  const double gamma = args.gamma > 0 ? args.gamma : 0.5;
  DenseSolveOptions options;
  options.max_work = args.max_work;
  options.max_level = args.max_level;
  const DksResult result =
      solve_dks(g, args.k, gamma, args.trials, args.seed, options);

  Json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "solve dks";
  j["params"] = Json{{"file", args.file},
                     {"k", args.k},
                     {"gamma", gamma},
                     {"trials", result.trials},
                     {"seed", args.seed}};
  j["vertices"] = result.vertices;
  j["edges"] = result.edges;
  j["density"] = rational_to_string(result.density);
  j["density_approx"] = rational_to_double(result.density);
  j["best_trial"] = result.best_trial;
  j["vacuous_guarantee"] = result.vacuous;
  emit(j, args.output);
  log_elapsed("solve dks", timer);
  return kExitOk;
}

// ------------------------------------------------------------- reduce --

int run_reduce_densify(const SolveArgs& args) {
  const Instance inst = load_instance(args.file);
  const DensifyResult result = densify(inst);
  Json j;
  j["instance"] = instance_to_json(result.game);
  j["a_of"] = result.a_of;
  j["b_of"] = result.b_of;
  emit(j, args.output);
  return kExitOk;
}

int run_reduce_square(const SolveArgs& args) {
  Timer timer;
  const Instance game = load_instance(args.file);
  throw_if_invalid(game);
  const SquaredGame squared = square_game(game, args.threads);
  Json j;
  j["instance"] = instance_to_json(squared.game);
  j["origin"] = squared.origin;
  emit(j, args.output);
  log_elapsed("reduce square", timer);
  return kExitOk;
}

int run_reduce_dks(const SolveArgs& args) {
  const SimpleGraph g = load_graph(args.file);
  if (args.k < 2) throw ValidationError("pass --k >= 2");
  const DksReduction reduction = reduce_dks(g, args.k, args.seed);
  if (reduction.inst.edge_count() == 0)
    std::cerr << "warning: the reduced instance has no live variable pair\n";
  Json j;
  j["instance"] = instance_to_json(reduction.inst);
  j["parts"] = reduction.parts;
  j["seed"] = reduction.seed;
  emit(j, args.output);
  return kExitOk;
}

// ------------------------------------------------------------- oracle --

int run_oracle_csp(const SolveArgs& args) {
  Timer timer;
  const Instance inst = load_instance(args.file);
  const OptProfile profile = brute_force_csp(inst, {}, args.budget);
  Json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "oracle csp";
  j["params"] = Json{{"file", args.file}};
  j["opt_satisfied"] = profile.opt_satisfied;
  j["edges"] = inst.edge_count();
  j["opt_value"] =
      rational_to_string(Rational(profile.opt_satisfied, inst.edge_count()));
  j["opt_assignment"] = assignment_to_json(profile.opt_assignment);
  j["e_opt"] = profile.e_opt;
  j["d_opt"] = profile.d_opt;
  emit(j, args.output);
  log_elapsed("oracle csp", timer);
  return kExitOk;
}

int run_oracle_dks(const SolveArgs& args) {
  Timer timer;
  const SimpleGraph g = load_graph(args.file);
  if (args.k < 1) throw ValidationError("pass --k >= 1");
  const DksOpt opt = brute_force_dks(g, args.k, args.budget);
  Json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "oracle dks";
  j["params"] = Json{{"file", args.file}, {"k", args.k}};
  j["vertices"] = opt.vertices;
  j["edges"] = opt.edges;
  emit(j, args.output);
  log_elapsed("oracle dks", timer);
  return kExitOk;
}

// ------------------------------------------------------------- verify --

int run_verify(const std::string& path) {
  const Json j = load_json_file(path);
  if (!j.contains("instance") || !j.contains("assignment"))
    throw ValidationError("report lacks an embedded instance or assignment");
  const Instance inst = instance_from_json(j["instance"]);
  throw_if_invalid(inst);
  const Assignment phi = assignment_from_json(j["assignment"]);

  std::vector<std::string> problems;
  const long long satisfied = evaluate(inst, phi);
  if (satisfied != j.at("satisfied").get<long long>())
    problems.push_back("satisfied count mismatch: recomputed " +
                       std::to_string(satisfied));
  const Rational value(satisfied, inst.edge_count());
  if (rational_to_string(value) != j.at("value").get<std::string>())
    problems.push_back("value mismatch: recomputed " + rational_to_string(value));

  if (j.contains("guarantee")) {
    const GuaranteeInfo g = guarantee_from_json(j["guarantee"]);
    if (g.form == GuaranteeInfo::Form::Exact) {
      const bool met = g.bound.compare(Rational(satisfied)) <= 0;
      if (g.met && met != *g.met)
        problems.push_back("guarantee recheck disagrees with the report");
      else if (!met && g.preconditions_verified)
        problems.push_back("verified guarantee is not met by the assignment");
    }
  }

  Json out;
  out["report"] = path;
  out["satisfied"] = satisfied;
  out["value"] = rational_to_string(value);
  out["verified"] = problems.empty();
  out["problems"] = problems;
  std::cout << dump_deterministic(out);
  return problems.empty() ? kExitOk : kExitValidation;
}

// -------------------------------------------------------------- bench --

int bench_p1(Timer& timer) {
  std::cout << "suite,n,q,level,seed,edges,satisfied,value,bound,ok\n";
  bool all_ok = true;
  for (int n = 4; n <= 7; ++n) {
    for (int q = 2; q <= 5; ++q) {
      for (int level = 1; level <= 3; ++level) {
        const std::uint64_t seed =
            derived_seed(0xb1, static_cast<std::uint64_t>(n * 100 + q * 10 + level));
        const auto planted = planted_complete_instance(n, q, seed);
        const SolveReport report = solve_complete(planted.inst, level);
        const bool ok = report.guarantee.met.value_or(false);
        all_ok = all_ok && ok;
        std::cout << "p1-suite," << n << "," << q << "," << level << "," << seed
                  << "," << report.edge_total << "," << report.satisfied << ","
                  << rational_to_string(report.value) << ",q^{-1/" << level << "},"
                  << (ok ? 1 : 0) << "\n";
      }
    }
  }
  log_elapsed("bench p1-suite", timer);
  return all_ok ? kExitOk : kExitValidation;
}

int bench_freegame(Timer& timer) {
  std::cout << "suite,side,q,level,seed,edges,satisfied,bound,ok\n";
  bool all_ok = true;
  for (int side : {3, 4}) {
    for (int q : {2, 4}) {
      for (int level : {1, 2}) {
        const std::uint64_t seed = derived_seed(
            0xf6, static_cast<std::uint64_t>(side * 100 + q * 10 + level));
        const Instance game = random_free_game(side, q, seed);
        const OptProfile profile = brute_force_csp(game);
        const AlphabetRestriction S = AlphabetRestriction::full(game.n(), q);
        const SolveReport report =
            approx_free_game(game, S, LevelParams{level}, seed);
        const Float50 bound = guarantee_bound(game, profile, S, level);
        const bool ok = meets_guarantee_bound(report.satisfied, bound);
        all_ok = all_ok && ok;
        std::cout << "freegame-suite," << side << "," << q << "," << level << ","
                  << seed << "," << report.edge_total << "," << report.satisfied
                  << "," << static_cast<double>(bound) << "," << (ok ? 1 : 0)
                  << "\n";
      }
    }
  }
  log_elapsed("bench freegame-suite", timer);
  return all_ok ? kExitOk : kExitValidation;
}

int bench_rounding(Timer& timer) {
  std::cout << "suite,n,q,seed,fg_satisfied,expectation_quarters,rounded,ok\n";
  bool all_ok = true;
  for (int round = 0; round < 16; ++round) {
    const std::uint64_t seed = derived_seed(0xa4, static_cast<std::uint64_t>(round));
    const Instance inst = random_instance(5, 3, 8, seed);
    const DensifyResult embedded = densify(inst);
    Rng phi_rng(seed);
    std::vector<int> labels;
    for (int v = 0; v < embedded.game.n(); ++v) labels.push_back(phi_rng.label(3));
    const Assignment phi_prime(labels);
    const long long fg = evaluate(embedded.game, phi_prime);
    long long quarters = 0;
    const Assignment rounded = round_assignment(inst, embedded, phi_prime, &quarters);
    const long long satisfied = evaluate(inst, rounded);
    const bool ok = 4 * satisfied >= quarters && quarters >= fg;
    all_ok = all_ok && ok;
    std::cout << "rounding-suite,5,3," << seed << "," << fg << "," << quarters << ","
              << satisfied << "," << (ok ? 1 : 0) << "\n";
  }
  log_elapsed("bench rounding-suite", timer);
  return all_ok ? kExitOk : kExitValidation;
}

int bench_qptas(Timer& timer) {
  std::cout << "suite,n,q,epsilon,level,edges,satisfied,value,ok\n";
  bool all_ok = true;
  for (int n = 5; n <= 7; ++n) {
    for (const auto& [eps_str, eps] :
         {std::pair<std::string, Rational>{"1", Rational(1)},
          std::pair<std::string, Rational>{"1/2", Rational(1, 2)}}) {
      const std::uint64_t seed = derived_seed(0x97, static_cast<std::uint64_t>(n));
      const int max_edges = n * (n - 1) / 2;
      const auto planted =
          planted_dense_instance(n, 4, (max_edges + 1) / 2 + 1, seed);
      QptasDetail detail;
      const SolveReport report = qptas_dense(planted.inst, eps, seed, &detail);
      const bool ok = report.guarantee.met.value_or(false);
      all_ok = all_ok && ok;
      std::cout << "qptas-suite," << n << ",4," << eps_str << "," << detail.level
                << "," << report.edge_total << "," << report.satisfied << ","
                << rational_to_string(report.value) << "," << (ok ? 1 : 0) << "\n";
    }
  }
  log_elapsed("bench qptas-suite", timer);
  return all_ok ? kExitOk : kExitValidation;
}

int run_bench(const std::string& suite) {
  Timer timer;
  if (suite == "p1-suite") return bench_p1(timer);
  if (suite == "freegame-suite") return bench_freegame(timer);
  if (suite == "rounding-suite") return bench_rounding(timer);
  if (suite == "qptas-suite") return bench_qptas(timer);
  throw ValidationError("unknown bench suite '" + suite +
                        "'; available: p1-suite, freegame-suite, rounding-suite, "
                        "qptas-suite");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense Max 2-CSP approximation toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  SolveArgs solve;
  std::string verify_path;
  std::string bench_suite;

  auto* gen_cmd = app.add_subcommand("gen", "generate instances and graphs");
  gen_cmd->require_subcommand(1);
  auto add_gen_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", gen.seed, "64-bit RNG seed");
    cmd->add_option("-o,--output", gen.output, "write to a file instead of stdout");
    cmd->add_option("--planted-out", gen.planted_out,
                    "write the planted assignment to this file");
  };
  auto* gen_projection =
      gen_cmd->add_subcommand("projection", "random bipartite projection game");
  gen_projection->add_option("--n", gen.n, "total vertices (n/2 per side)")->required();
  gen_projection->add_option("--p", gen.p, "edge probability")->required();
  gen_projection->add_option("--q", gen.q, "alphabet size")->required();
  gen_projection->add_flag("--no-planted", gen.no_planted, "skip planting");
  add_gen_common(gen_projection);

  auto* gen_complete = gen_cmd->add_subcommand("complete", "planted complete instance");
  gen_complete->add_option("--n", gen.n)->required();
  gen_complete->add_option("--q", gen.q)->required();
  gen_complete->add_option("--table-density", gen.table_density);
  add_gen_common(gen_complete);

  auto* gen_csp = gen_cmd->add_subcommand("csp", "planted dense instance");
  gen_csp->add_option("--n", gen.n)->required();
  gen_csp->add_option("--q", gen.q)->required();
  gen_csp->add_option("--edges", gen.edges, "edge count (default: half of all pairs)");
  gen_csp->add_option("--table-density", gen.table_density);
  add_gen_common(gen_csp);

  auto* gen_freegame = gen_cmd->add_subcommand("freegame", "free game");
  gen_freegame->add_option("--side", gen.side, "vertices per side")->required();
  gen_freegame->add_option("--q", gen.q)->required();
  gen_freegame->add_option("--table-density", gen.table_density);
  gen_freegame->add_flag("--no-planted", gen.no_planted, "unplanted random tables");
  add_gen_common(gen_freegame);

  auto* gen_graph = gen_cmd->add_subcommand("graph", "random graph");
  gen_graph->add_option("--n", gen.n)->required();
  gen_graph->add_option("--p", gen.p)->required();
  gen_graph->add_option("--clique", gen.clique, "plant a clique of this size");
  add_gen_common(gen_graph);

  auto* solve_cmd = app.add_subcommand("solve", "run an approximation pipeline");
  solve_cmd->require_subcommand(1);
  auto add_solve_common = [&](CLI::App* cmd) {
    cmd->add_option("file", solve.file, "instance file")->required();
    cmd->add_option("--seed", solve.seed, "64-bit seed recorded in the report");
    cmd->add_option("--max-work", solve.max_work, "cap on (nq)^{2i}");
    cmd->add_option("--max-level", solve.max_level, "recursion level cap");
    cmd->add_option("-o,--output", solve.output, "write the report to a file");
  };
  auto* solve_freegame = solve_cmd->add_subcommand("freegame", "Approx-FreeGame_i");
  add_solve_common(solve_freegame);
  solve_freegame->add_option("--level", solve.level, "recursion depth i");
  solve_freegame->add_option("--gamma", solve.gamma,
                             "target exponent; i = ceil(1/gamma)");
  solve_freegame->add_flag("--oracle-check", solve.oracle_check,
                           "verify the P(i) bound with the brute-force oracle");
  solve_freegame->add_option("--budget", solve.budget, "oracle evaluation budget");

  auto* solve_dense = solve_cmd->add_subcommand("dense", "densify + solve + round");
  add_solve_common(solve_dense);
  solve_dense->add_option("--gamma", solve.gamma)->required();
  solve_dense->add_flag("--oracle-check", solve.oracle_check);
  solve_dense->add_option("--budget", solve.budget);

  auto* solve_complete_cmd =
      solve_cmd->add_subcommand("complete", "Approx-CompleteGame_i");
  add_solve_common(solve_complete_cmd);
  solve_complete_cmd->add_option("--level", solve.level);
  solve_complete_cmd->add_option("--gamma", solve.gamma);
  solve_complete_cmd->add_flag("--oracle-check", solve.oracle_check);
  solve_complete_cmd->add_option("--budget", solve.budget);

  auto* solve_qptas = solve_cmd->add_subcommand("qptas", "dummy-true completion QPTAS");
  add_solve_common(solve_qptas);
  solve_qptas->add_option("--epsilon", solve.epsilon, "rational like 1/2 or 0.25")
      ->required();
  solve_qptas->add_flag("--oracle-check", solve.oracle_check);
  solve_qptas->add_option("--budget", solve.budget);

  auto* solve_projection_cmd =
      solve_cmd->add_subcommand("projection", "square + solve + decode");
  add_solve_common(solve_projection_cmd);
  solve_projection_cmd->add_option("--gamma", solve.gamma)->required();
  solve_projection_cmd->add_option("--p", solve.p,
                                   "generation probability; enables graph checks");
  solve_projection_cmd->add_option("--threads", solve.threads);

  auto* solve_dks_cmd =
      solve_cmd->add_subcommand("dks", "reduce + solve + decode, best of trials");
  add_solve_common(solve_dks_cmd);
  solve_dks_cmd->add_option("--k", solve.k)->required();
  solve_dks_cmd->add_option("--gamma", solve.gamma);
  solve_dks_cmd->add_option("--trials", solve.trials, "0 = 3*ceil(log2 N)");

  auto* reduce_cmd = app.add_subcommand("reduce", "run a reduction on its own");
  reduce_cmd->require_subcommand(1);
  auto* reduce_densify = reduce_cmd->add_subcommand("densify", "embed into a free game");
  reduce_densify->add_option("file", solve.file)->required();
  reduce_densify->add_option("-o,--output", solve.output);
  auto* reduce_square = reduce_cmd->add_subcommand("square", "square a projection game");
  reduce_square->add_option("file", solve.file)->required();
  reduce_square->add_option("--threads", solve.threads);
  reduce_square->add_option("-o,--output", solve.output);
  auto* reduce_dks_cmd = reduce_cmd->add_subcommand("dks", "DkS -> Max 2-CSP");
  reduce_dks_cmd->add_option("file", solve.file)->required();
  reduce_dks_cmd->add_option("--k", solve.k)->required();
  reduce_dks_cmd->add_option("--seed", solve.seed);
  reduce_dks_cmd->add_option("-o,--output", solve.output);

  auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  auto* oracle_csp = oracle_cmd->add_subcommand("csp", "exact Max 2-CSP optimum");
  oracle_csp->add_option("file", solve.file)->required();
  oracle_csp->add_option("--budget", solve.budget, "evaluation budget");
  oracle_csp->add_option("-o,--output", solve.output);
  auto* oracle_dks = oracle_cmd->add_subcommand("dks", "exact densest k-subgraph");
  oracle_dks->add_option("file", solve.file)->required();
  oracle_dks->add_option("--k", solve.k)->required();
  oracle_dks->add_option("--budget", solve.budget);
  oracle_dks->add_option("-o,--output", solve.output);

  auto* verify_cmd = app.add_subcommand("verify", "recheck a report's claims");
  verify_cmd->add_option("report", verify_path)->required();
  auto* bench_cmd = app.add_subcommand("bench", "guarantee-vs-achieved tables");
  bench_cmd->add_option("suite", bench_suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_projection->parsed()) return run_gen_projection(gen);
    if (gen_complete->parsed()) return run_gen_complete(gen);
    if (gen_csp->parsed()) return run_gen_csp(gen);
    if (gen_freegame->parsed()) return run_gen_freegame(gen);
    if (gen_graph->parsed()) return run_gen_graph(gen);
    if (solve_freegame->parsed()) return run_solve_freegame(solve);
    if (solve_dense->parsed()) return run_solve_dense(solve);
    if (solve_complete_cmd->parsed()) return run_solve_complete(solve);
    if (solve_qptas->parsed()) return run_solve_qptas(solve);
    if (solve_projection_cmd->parsed()) return run_solve_projection(solve);
    if (solve_dks_cmd->parsed()) return run_solve_dks(solve);
    if (reduce_densify->parsed()) return run_reduce_densify(solve);
    if (reduce_square->parsed()) return run_reduce_square(solve);
    if (reduce_dks_cmd->parsed()) return run_reduce_dks(solve);
    if (oracle_csp->parsed()) return run_oracle_csp(solve);
    if (oracle_dks->parsed()) return run_oracle_dks(solve);
    if (verify_cmd->parsed()) return run_verify(verify_path);
    if (bench_cmd->parsed()) return run_bench(bench_suite);
    std::cerr << "usage error: no command\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
