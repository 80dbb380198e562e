#include "stg/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stg/best_policy.hpp"
#include "stg/errors.hpp"
#include "stg/fpras.hpp"
#include "stg/graph_spec.hpp"
#include "stg/journey.hpp"
#include "stg/mdp.hpp"
#include "stg/min_arrival.hpp"
#include "stg/model.hpp"
#include "stg/oracles.hpp"
#include "stg/pp2dnf.hpp"
#include "stg/simulate.hpp"
#include "stg/sp_tree.hpp"
#include "stg/trace.hpp"
#include "text_util.hpp"

namespace stg::cli {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Unreadable or unwritable files are usage errors.
class FileError : public Error {
 public:
  using Error::Error;
};

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const mpq_class& x) { return x.get_str(); }

/// Ordered `key: value` record.
class Record {
 public:
  void add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, double value) { add(std::move(key), fmt(value)); }
  void add(std::string key, std::uint64_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }

  void render(std::ostream& out) const {
    for (const auto& [k, v] : fields_) out << k << ": " << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// State shared by every subcommand: global flags, inputs read so far and
/// the record under construction.
struct Context {
  std::uint64_t seed = 0;
  double eps = 0.0;
  bool eps_set = false;
  std::string mode = "practical";
  std::uint64_t budget = 0;
  bool budget_set = false;

  std::string inputs;  // concatenated file contents, for the digest
  Record payload;
  Record metadata;
  std::string trailer;  // free text after the record (sample without --out)

  std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    inputs += text;
    return text;
  }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write '" + path + "'");
    out << text;
    if (!out) throw FileError("cannot write '" + path + "'");
  }
};

VertexId resolve(const GraphSpec& spec, const std::string& name, const char* role) {
  const auto v = spec.resolve_vertex(name);
  if (!v) throw PreconditionError(std::string("unknown ") + role + " vertex '" + name + "'");
  return *v;
}

std::string history_label(const ModelState& state) { return state.to_string(); }

void add_htable(Record& rec, const GraphSpec& spec, const HTable& table) {
  const std::size_t m = spec.graph.edge_count();
  for (std::uint64_t h = 0; h < table.history_count(); ++h) {
    const std::string hist = history_label(ModelState::from_index(table.memory(), m, h));
    for (VertexId a = 0; a < table.vertex_count(); ++a) {
      rec.add("h[" + spec.vertex_name(a) + "," + hist + "]", table.at(a, h));
    }
  }
}

SpTree read_sp(Context& ctx, const std::string& path) {
  const std::string text = ctx.read_file(path);
  std::string expr;
  for (std::string_view line : detail::split(text, '\n')) {
    expr += detail::strip_comment(line);
    expr += ' ';
  }
  return parse_sp_expression(expr);
}

struct SubcommandSpec {
  CLI::App* app;
  std::function<void(Context&)> run;
};

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic temporal graphs: minimum arrival and best policy solvers", "stg"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  app.add_option("--seed", ctx.seed, "Master seed for stochastic commands (default 0)");
  app.add_option("--eps", ctx.eps, "Accuracy parameter (command specific)")->each([&](const std::string&) {
    ctx.eps_set = true;
  });
  app.add_option("--mode", ctx.mode, "FPRAS mode: paper or practical (default practical)")
      ->check(CLI::IsMember({"paper", "practical"}));
  app.add_option("--budget", ctx.budget, "Size budget (command specific)")->each([&](const std::string&) {
    ctx.budget_set = true;
  });

  std::vector<SubcommandSpec> commands;
  auto add_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  // sample
  std::string graph_path;
  std::uint64_t steps = 0;
  std::string out_path;
  {
    CLI::App* sub = add_command("sample", "Sample a temporal trace from a memory-k stochastic temporal graph "
                                          "(per-edge Markov evolution, one uniform draw per edge per step)");
    sub->add_option("--graph", graph_path, "Graph-spec file")->required();
    sub->add_option("--steps", steps, "Horizon T")->required();
    sub->add_option("--out", out_path, "Write the trace here instead of after the record");
    commands.push_back({sub, [&](Context& c) {
                          const GraphSpec spec = parse_graph_spec(c.read_file(graph_path));
                          const StochasticModel model = StochasticModel::from_spec(spec);
                          const TemporalTrace trace = sample_trace(model, model.initial_state(), steps, c.seed);
                          c.payload.add("horizon", static_cast<std::uint64_t>(trace.horizon()));
                          c.payload.add("edges", static_cast<std::uint64_t>(trace.edge_count()));
                          std::uint64_t present = 0;
                          for (const EdgeSet& s : trace.snapshots()) present += s.count();
                          c.payload.add("edge_appearances", present);
                          c.metadata.add("seed", c.seed);
                          c.metadata.add("rng", std::string(CounterRng::kName));
                          if (out_path.empty()) {
                            c.trailer = to_string(trace);
                          } else {
                            Context::write_file(out_path, to_string(trace));
                            c.metadata.add("trace_file", out_path);
                          }
                        }});
  }

  // foremost
  std::string trace_path;
  std::string source_name;
  std::string target_name;
  std::uint64_t start = 0;
  {
    CLI::App* sub = add_command("foremost", "Foremost journey on a realized trace "
                                            "(earliest-arrival sweep over snapshots)");
    sub->add_option("--graph", graph_path, "Graph-spec file")->required();
    sub->add_option("--trace", trace_path, "Trace file")->required();
    sub->add_option("--source", source_name, "Source vertex (id or label)")->required();
    sub->add_option("--target", target_name, "Target vertex (id or label)")->required();
    sub->add_option("--start", start, "Time at which the source holds the information (default 0)");
    commands.push_back({sub, [&](Context& c) {
                          const GraphSpec spec = parse_graph_spec(c.read_file(graph_path));
                          const TemporalTrace trace = parse_trace(c.read_file(trace_path));
                          const VertexId s = resolve(spec, source_name, "source");
                          const VertexId y = resolve(spec, target_name, "target");
                          const ForemostResult r = foremost_arrival(trace, spec.graph, s, y, start);
                          if (!r.arrival) {
                            c.payload.add("arrival", "none");
                            c.payload.add("journey", "none");
                          } else {
                            c.payload.add("arrival", static_cast<std::uint64_t>(*r.arrival));
                            std::string journey;
                            VertexId at = s;
                            for (const TimeEdge& te : r.witness->steps) {
                              const Edge& e = spec.graph.edge(te.edge);
                              const VertexId next = e.u == at ? e.v : e.u;
                              if (!journey.empty()) journey += ' ';
                              journey += spec.vertex_name(at) + "-" + spec.vertex_name(next) + "@" +
                                         std::to_string(te.time);
                              at = next;
                            }
                            c.payload.add("journey", journey);
                          }
                          c.metadata.add("start", start);
                          c.metadata.add("trace_horizon", static_cast<std::uint64_t>(trace.horizon()));
                        }});
  }

  // fptas
  std::string sp_path;
  std::string csv_path;
  bool exact = false;
  {
    CLI::App* sub = add_command("fptas", "FPTAS for Minimum Arrival on memoryless series-parallel graphs "
                                         "(SP arrival-distribution DP truncated at tau = w*(ln(w*/eps)+1))");
    sub->add_option("--sp", sp_path, "File with an SP expression, e.g. P(S(e(1/2), e(1/2)), S(e(1/2), e(1/2)))")
        ->required();
    sub->add_option("--csv", csv_path, "Write the arrival distribution (i, geq, eq)");
    sub->add_flag("--exact", exact, "Use exact rational arithmetic");
    commands.push_back({sub, [&](Context& c) {
                          const SpTree tree = read_sp(c, sp_path);
                          const double eps = c.eps_set ? c.eps : 1e-2;
                          auto emit = [&](const auto& r) {
                            c.payload.add("estimate", fmt(r.estimate));
                            if (exact) c.payload.add("estimate_double", to_double(r.estimate));
                            c.payload.add("min_weight", r.min_weight);
                            c.payload.add("horizon", static_cast<std::uint64_t>(r.horizon));
                            if (!csv_path.empty()) Context::write_file(csv_path, r.distribution.to_csv());
                          };
                          if (exact) {
                            emit(fptas_series_parallel<mpq_class>(tree, eps));
                          } else {
                            emit(fptas_series_parallel<double>(tree, eps));
                          }
                          c.metadata.add("eps", eps);
                          c.metadata.add("edges", static_cast<std::uint64_t>(tree.leaf_count()));
                          c.metadata.add("arithmetic", exact ? "rational" : "double");
                        }});
  }

  // fpras
  std::uint64_t reps = 10'000;
  std::uint64_t horizon = 0;
  double floor_c = 1.0;
  unsigned threads = 1;
  {
    CLI::App* sub = add_command("fpras", "FPRAS for Minimum Arrival on memory-k graphs "
                                         "(mean foremost arrival over independent sampled experiments)");
    sub->add_option("--graph", graph_path, "Graph-spec file")->required();
    sub->add_option("--source", source_name, "Source vertex")->required();
    sub->add_option("--target", target_name, "Target vertex")->required();
    sub->add_option("--r", reps, "Experiments in practical mode (default 10000)");
    sub->add_option("--horizon", horizon, "Per-experiment horizon in practical mode (default 50 w*)");
    sub->add_option("--c", floor_c, "Probability floor exponent for paper mode (default 1)");
    sub->add_option("--threads", threads, "Worker threads (result does not depend on it)");
    sub->add_option("--csv", csv_path, "Write per-experiment arrivals (experiment, arrival; 0 = failed)");
    commands.push_back({sub, [&](Context& c) {
                          const GraphSpec spec = parse_graph_spec(c.read_file(graph_path));
                          const StochasticModel model = StochasticModel::from_spec(spec);
                          FprasConfig cfg;
                          cfg.mode = parse_fpras_mode(c.mode);
                          cfg.eps = c.eps_set ? c.eps : 0.1;
                          cfg.c = floor_c;
                          cfg.r = reps;
                          if (horizon > 0) cfg.horizon = horizon;
                          cfg.seed = c.seed;
                          cfg.threads = threads;
                          if (c.budget_set) cfg.max_experiments = c.budget;
                          cfg.keep_samples = !csv_path.empty();
                          const FprasResult r = fpras_estimate(model, resolve(spec, source_name, "source"),
                                                               resolve(spec, target_name, "target"), cfg);
                          c.payload.add("estimate", r.estimate);
                          c.payload.add("std_error", r.std_error);
                          c.payload.add("r", r.r);
                          c.payload.add("horizon", static_cast<std::uint64_t>(r.horizon));
                          c.payload.add("failures", r.failures);
                          c.metadata.add("seed", r.seed);
                          c.metadata.add("mode", std::string(to_string(r.mode)));
                          if (r.mode == FprasMode::Paper) {
                            c.metadata.add("eps", cfg.eps);
                            c.metadata.add("c", cfg.c);
                          }
                          c.metadata.add("rng", std::string(CounterRng::kName));
                          if (!csv_path.empty()) {
                            std::ostringstream csv;
                            csv << "experiment,arrival\n";
                            for (std::size_t j = 0; j < r.samples.size(); ++j) csv << j << ',' << r.samples[j] << '\n';
                            Context::write_file(csv_path, csv.str());
                          }
                        }});
  }

  // exact-min
  {
    CLI::App* sub = add_command("exact-min", "Exact Minimum Arrival oracle (informed-set hitting time for "
                                             "memoryless graphs, forward propagation for memory-k)");
    sub->add_option("--graph", graph_path, "Graph-spec file")->required();
    sub->add_option("--source", source_name, "Source vertex")->required();
    sub->add_option("--target", target_name, "Target vertex")->required();
    sub->add_flag("--exact", exact, "Exact rational arithmetic (memoryless only)");
    commands.push_back({sub, [&](Context& c) {
                          const GraphSpec spec = parse_graph_spec(c.read_file(graph_path));
                          const StochasticModel model = StochasticModel::from_spec(spec);
                          const VertexId s = resolve(spec, source_name, "source");
                          const VertexId y = resolve(spec, target_name, "target");
                          if (model.is_memoryless()) {
                            const std::size_t max_n = c.budget_set ? c.budget : 14;
                            if (exact) {
                              const mpq_class e = exact_min_arrival_memoryless<mpq_class>(model, s, y, max_n);
                              c.payload.add("expectation", fmt(e));
                              c.payload.add("expectation_double", e.get_d());
                            } else {
                              c.payload.add("expectation", exact_min_arrival_memoryless<double>(model, s, y, max_n));
                            }
                            c.metadata.add("method", "informed-set");
                          } else {
                            if (exact) throw PreconditionError("--exact is available for memoryless graphs only");
                            const double eps_tail = c.eps_set ? c.eps : 1e-9;
                            const MemoryKOracleResult r = exact_min_arrival_memory_k(
                                model, s, y, eps_tail, c.budget_set ? c.budget : std::uint64_t{1} << 22);
                            c.payload.add("expectation", r.expectation);
                            c.payload.add("tail_bound", r.tail_bound);
                            c.metadata.add("method", "forward-propagation");
                            c.metadata.add("eps", eps_tail);
                            c.metadata.add("steps", r.steps);
                          }
                        }});
  }

  // best-policy
  {
    CLI::App* sub = add_command("best-policy", "Best Policy on memoryless graphs "
                                               "(O(n^2) greedy list construction of h-values)");
    sub->add_option("--graph", graph_path, "Graph-spec file (undirected, memoryless)")->required();
    sub->add_option("--target", target_name, "Target vertex")->required();
    sub->add_option("--csv", csv_path, "Write the h-table (vertex, history-bits, h)");
    sub->add_flag("--exact", exact, "Exact rational arithmetic");
    commands.push_back({sub, [&](Context& c) {
                          const GraphSpec spec = parse_graph_spec(c.read_file(graph_path));
                          const StochasticModel model = StochasticModel::from_spec(spec);
                          const auto probs = model.memoryless_probabilities();
                          const VertexId y = resolve(spec, target_name, "target");
                          auto emit = [&](const auto& h) {
                            std::string order;
                            for (VertexId v : h.order) order += (order.empty() ? "" : " ") + spec.vertex_name(v);
                            c.payload.add("order", order);
                            for (VertexId v = 0; v < h.h.size(); ++v) {
                              c.payload.add("h[" + spec.vertex_name(v) + "]", h.h[v] ? fmt(*h.h[v]) : "inf");
                            }
                            if (!csv_path.empty()) {
                              Context::write_file(csv_path, to_htable(h, spec.graph.edge_count()).to_csv());
                            }
                          };
                          if (exact) {
                            emit(memoryless_h_values<mpq_class>(spec.graph, probs, y));
                          } else {
                            emit(memoryless_h_values<double>(spec.graph, probs, y));
                          }
                          c.metadata.add("arithmetic", exact ? "rational" : "double");
                        }});
  }

  // value-iterate
  double tol = 1e-12;
  std::uint64_t max_iters = 1'000'000;
  {
    CLI::App* sub = add_command("value-iterate", "Best Policy on memory-k graphs "
                                                 "(value iteration on the (vertex, history) recurrence)");
    sub->add_option("--graph", graph_path, "Graph-spec file")->required();
    sub->add_option("--target", target_name, "Target vertex")->required();
    sub->add_option("--tol", tol, "Sup-norm stopping tolerance (default 1e-12)");
    sub->add_option("--max-iters", max_iters, "Sweep limit (default 1000000)");
    sub->add_option("--csv", csv_path, "Write the h-table (vertex, history-bits, h)");
    commands.push_back({sub, [&](Context& c) {
                          const GraphSpec spec = parse_graph_spec(c.read_file(graph_path));
                          const StochasticModel model = StochasticModel::from_spec(spec);
                          ValueIterationOptions opt;
                          opt.tol = tol;
                          opt.max_iters = max_iters;
                          if (c.budget_set) opt.max_states = c.budget;
                          const ValueIterationResult r =
                              value_iterate(model, resolve(spec, target_name, "target"), opt);
                          add_htable(c.payload, spec, r.table);
                          c.metadata.add("iterations", r.iterations);
                          c.metadata.add("last_change", r.last_change);
                          c.metadata.add("tol", tol);
                          if (!csv_path.empty()) Context::write_file(csv_path, r.table.to_csv());
                        }});
  }

  // exact-ordering
  {
    CLI::App* sub = add_command("exact-ordering", "Best Policy by ordering enumeration "
                                                  "(linear system per ordering of non-terminal states)");
    sub->add_option("--graph", graph_path, "Graph-spec file")->required();
    sub->add_option("--target", target_name, "Target vertex")->required();
    sub->add_option("--csv", csv_path, "Write the h-table (vertex, history-bits, h)");
    commands.push_back({sub, [&](Context& c) {
                          const GraphSpec spec = parse_graph_spec(c.read_file(graph_path));
                          const StochasticModel model = StochasticModel::from_spec(spec);
                          const OrderingResult r = exact_ordering_solver(
                              model, resolve(spec, target_name, "target"), c.budget_set ? c.budget : 6);
                          add_htable(c.payload, spec, r.table);
                          std::string order;
                          for (const Triplet& t : r.certificate.order) {
                            if (!order.empty()) order += ' ';
                            order += "(" + spec.vertex_name(t.vertex) + "," +
                                     ModelState::from_index(model.memory(), spec.graph.edge_count(), t.history)
                                         .to_string() +
                                     ")";
                          }
                          c.payload.add("ordering", order);
                          c.metadata.add("orderings_tried", r.certificate.orderings_tried);
                          c.metadata.add("equality_residual", r.certificate.max_equality_residual);
                          if (!csv_path.empty()) Context::write_file(csv_path, r.table.to_csv());
                        }});
  }

  // gadget-verify
  std::string formula_path;
  bool directed = false;
  {
    CLI::App* sub = add_command("gadget-verify", "#PP2DNF reduction check for Minimum Arrival "
                                                 "(psi = 2^(n_x+n_y) (4 - E[X]) against direct counting)");
    sub->add_option("--formula", formula_path, "Formula file (pp2dnf <n_x> <n_y>, clause <i> <j>)")->required();
    sub->add_flag("--directed", directed, "Orient the gadget edges");
    commands.push_back({sub, [&](Context& c) {
                          const Pp2dnfFormula f = parse_pp2dnf(c.read_file(formula_path));
                          const GadgetVerification v =
                              verify_gadget_identity(f, directed, c.budget_set ? c.budget : 14);
                          const MinArrivalGadget g = build_min_arrival_gadget(f, directed);
                          c.payload.add("expectation", fmt(v.expectation));
                          c.payload.add("psi_from_expectation", fmt(v.psi_from_expectation));
                          c.payload.add("psi_direct", v.psi_direct);
                          c.payload.add("match", v.match);
                          c.metadata.add("n_x", static_cast<std::uint64_t>(f.n_x));
                          c.metadata.add("n_y", static_cast<std::uint64_t>(f.n_y));
                          c.metadata.add("clauses", static_cast<std::uint64_t>(f.clauses.size()));
                          c.metadata.add("gadget_vertices", static_cast<std::uint64_t>(g.graph.vertex_count()));
                          c.metadata.add("gadget_edges", static_cast<std::uint64_t>(g.graph.edge_count()));
                          c.metadata.add("directed", directed);
                          if (!v.match) throw InvariantViolation("gadget identity does not hold");
                        }});
  }

  // simulate-policy
  std::uint64_t max_steps = 1'000'000;
  {
    CLI::App* sub = add_command("simulate-policy", "Monte-Carlo run of the best policy "
                                                   "(greedy h-values if memoryless, value iteration otherwise)");
    sub->add_option("--graph", graph_path, "Graph-spec file")->required();
    sub->add_option("--source", source_name, "Source vertex")->required();
    sub->add_option("--target", target_name, "Target vertex")->required();
    sub->add_option("--reps", reps, "Runs (default 10000)");
    sub->add_option("--max-steps", max_steps, "Safety horizon per run (default 1000000)");
    commands.push_back({sub, [&](Context& c) {
                          const GraphSpec spec = parse_graph_spec(c.read_file(graph_path));
                          const StochasticModel model = StochasticModel::from_spec(spec);
                          const VertexId s = resolve(spec, source_name, "source");
                          const VertexId y = resolve(spec, target_name, "target");
                          HTable table;
                          if (model.is_memoryless() && !spec.graph.directed()) {
                            const auto probs = model.memoryless_probabilities();
                            table = to_htable(memoryless_h_values<double>(spec.graph, probs, y),
                                              spec.graph.edge_count());
                            c.metadata.add("policy", "memoryless-greedy");
                          } else {
                            ValueIterationOptions opt;
                            if (c.budget_set) opt.max_states = c.budget;
                            table = value_iterate(model, y, opt).table;
                            c.metadata.add("policy", "value-iteration");
                          }
                          const SimulationResult r = simulate_policy(model, table, s, y, c.seed, reps, max_steps);
                          c.payload.add("mean", r.mean);
                          c.payload.add("std_error", r.std_error);
                          c.payload.add("completed", r.completed);
                          c.payload.add("truncated", r.truncated);
                          c.payload.add("h_start", table.at(s, model.initial_state()));
                          c.metadata.add("seed", c.seed);
                          c.metadata.add("reps", reps);
                          c.metadata.add("rng", std::string(CounterRng::kName));
                        }});
  }

  std::vector<const char*> argv{"stg"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (const SubcommandSpec& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cmd.run(ctx);
    } catch (const FileError& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const BudgetExceeded& e) {
      err << "budget exceeded: " << e.what() << '\n';
      return kBudget;
    } catch (const NonConvergence& e) {
      err << "budget exceeded: " << e.what() << '\n';
      return kBudget;
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << '\n';
      return kPrecondition;
    } catch (const LowConfidenceError& e) {
      err << "low confidence: " << e.what() << '\n';
      return kPrecondition;
    } catch (const PreconditionError& e) {
      err << "precondition violated: " << e.what() << '\n';
      return kPrecondition;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kFailure;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out << "command: " << cmd.app->get_name() << '\n';
    out << "input_digest: " << fnv1a_hex(ctx.inputs) << '\n';
    ctx.payload.render(out);
    ctx.metadata.render(out);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    out << "runtime_ms: " << buf << '\n';
    if (!ctx.trailer.empty()) out << '\n' << ctx.trailer;
    return kOk;
  }
  err << "no command given\n";
  return kUsage;
}

}  // namespace stg::cli
