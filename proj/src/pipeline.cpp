#include "diskhitter/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <thread>

#include "diskhitter/decomposition.hpp"
#include "diskhitter/dp.hpp"
#include "diskhitter/kernel.hpp"
#include "diskhitter/oracle.hpp"

namespace dh {

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::Unknown: return "UNKNOWN";
  }
  return "?";
}

int select_p(Problem problem, int k, Mode mode) {
  if (k < 1) return 3;
  const bool geo = mode == Mode::Geometric;
  double e = 0.0;
  switch (problem) {
    case Problem::Ths: e = geo ? 1.0 / 3.0 : 1.0 / 5.0; break;
    case Problem::Fvs: e = geo ? 1.0 / 8.0 : 1.0 / 10.0; break;
    case Problem::Oct: e = geo ? 1.0 / 16.0 : 1.0 / 20.0; break;
  }
  return std::max(3, static_cast<int>(std::lround(std::pow(static_cast<double>(k), e))));
}

std::vector<Vertex> deep_vertices(const HittingGraph& g, std::span<const Vertex> f) {
  std::vector<char> in_f(static_cast<std::size_t>(g.capacity()), 0);
  for (Vertex v : f) in_f[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    if (in_f[v]) continue;
    const auto& nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return in_f[w] != 0; })) out.push_back(v);
  }
  return out;
}

bool certify_solution(Problem problem, const HittingGraph& g, std::span<const Vertex> solution, int k) {
  const HittingGraph x = expand_members(g);
  std::vector<Vertex> s(solution.begin(), solution.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  if (static_cast<int>(s.size()) > k) return false;
  for (Vertex v : s)
    if (v < 0 || v >= x.capacity() || !x.alive(v)) return false;
  for (const Edge& e : x.constraint_edges())
    if (!std::binary_search(s.begin(), s.end(), e.u) && !std::binary_search(s.begin(), s.end(), e.v)) return false;
  switch (problem) {
    case Problem::Ths: return is_triangle_free(x, s);
    case Problem::Fvs: return is_forest(x, s);
    case Problem::Oct: return is_bipartite(x, s);
  }
  return false;
}

namespace {

struct Outcome {
  enum class Kind { Yes, No, Unresolved } kind = Kind::No;
  std::vector<Vertex> solution;
  int kernel = -1;
  std::vector<double> widths;
  bool short_circuit = false;
  int overflows = 0;
  bool robust_retry = false;
  bool cleaning_skipped = false;
};

class Evaluator {
 public:
  Evaluator(const SolveInput& input, Mode mode, const SolveConfig& config)
      : input_(input), mode_(mode), config_(config) {}

  Outcome operator()(const HittingInstance& inst) const {
    Outcome o;
    const Problem problem = config_.problem;
    if (problem == Problem::Ths && greedy_ths_3approx(inst.graph).size() > 3 * static_cast<std::size_t>(inst.k)) {
      o.short_circuit = true;
      return o;
    }
    if (problem == Problem::Fvs && fvs_2approx(inst.graph).size() > 2 * static_cast<std::size_t>(inst.k)) {
      o.short_circuit = true;
      return o;
    }

    HittingInstance work = inst;
    work.graph = problem == Problem::Ths ? clean_for_ths(inst.graph) : clean_for_fvs_oct(inst.graph, problem);
    if (config_.validate && cleaning_disagrees(inst.graph, work.graph, inst.k)) {
      work.graph = inst.graph;
      o.cleaning_skipped = true;
    }
    if (problem == Problem::Ths) {
      work = kernelize_ths(work);
      o.kernel = work.graph.alive_count();
    }

    const auto dp = run_dp(work, o);
    if (!dp) {
      o.kind = Outcome::Kind::Unresolved;
      return o;
    }
    if (!dp->feasible || dp->cost > work.k) return o;
    o.kind = Outcome::Kind::Yes;
    for (Vertex v : inst.forced) {
      const auto m = input_.graph.members(v);
      o.solution.insert(o.solution.end(), m.begin(), m.end());
    }
    const auto rest = expand_solution(work.graph, *dp);
    o.solution.insert(o.solution.end(), rest.begin(), rest.end());
    std::sort(o.solution.begin(), o.solution.end());
    return o;
  }

 private:
  bool cleaning_disagrees(const HittingGraph& before, const HittingGraph& after, int k) const {
    try {
      const auto a = brute_force(config_.problem, before, k);
      const auto b = brute_force(config_.problem, after, k);
      return a.optimum != b.optimum;
    } catch (const TooLarge&) {
      return false;
    }
  }

  std::optional<DpResult> run_dp(const HittingInstance& work, Outcome& o) const {
    DpOptions opts;
    opts.state_cap = config_.state_cap;
    opts.budget = work.k;
    const bool geometric = mode_ == Mode::Geometric;
    try {
      TdOptions td_opts;
      td_opts.seed = config_.seed;
      const auto td = geometric ? build_td(work.graph, *input_.disks, td_opts) : robust_td(work.graph);
      o.widths.push_back(weighted_width(td));
      return solve_td(config_.problem, make_nice(td), work.graph, opts);
    } catch (const WidthOverflow&) {
      ++o.overflows;
    }
    if (!geometric) return std::nullopt;
    o.robust_retry = true;
    try {
      const auto td = robust_td(work.graph);
      o.widths.push_back(weighted_width(td));
      return solve_td(config_.problem, make_nice(td), work.graph, opts);
    } catch (const WidthOverflow&) {
      ++o.overflows;
    }
    return std::nullopt;
  }

  const SolveInput& input_;
  Mode mode_;
  const SolveConfig& config_;
};

std::vector<Outcome> evaluate_batch(const Evaluator& eval, const std::vector<HittingInstance>& batch, int jobs) {
  std::vector<Outcome> out(batch.size());
  const int workers = std::min<int>(jobs, static_cast<int>(batch.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = eval(batch[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < batch.size(); i = next++) out[i] = eval(batch[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

SolveReport solve(const SolveInput& input, int k, const SolveConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (k < 0) throw InvalidArgument("k must be non-negative");
  if (config.p != 0 && config.p < 3) throw InvalidArgument("p must be at least 3");
  const Mode mode = config.mode == Mode::Geometric && input.disks ? Mode::Geometric : Mode::Robust;

  SolveReport rep;
  rep.k = k;
  rep.p = config.p ? config.p : select_p(config.problem, k, mode);

  HittingInstance root;
  root.graph = input.graph;
  root.k = k;
  root.mode = mode;
  if (mode == Mode::Geometric) root.disks = input.disks;

  const Evaluator eval(input, mode, config);
  const int jobs = std::max(1, config.jobs);
  const std::size_t batch_size = jobs == 1 ? 1 : static_cast<std::size_t>(4 * jobs);
  std::vector<HittingInstance> batch;
  bool found = false;
  bool unresolved = false;

  // Outcomes are consumed in stream order, so the reported instance is the
  // first YES regardless of the number of workers.
  auto drain = [&]() {
    const auto outcomes = evaluate_batch(eval, batch, jobs);
    batch.clear();
    for (const auto& o : outcomes) {
      ++rep.instances_explored;
      if (o.kernel >= 0) rep.kernel_sizes.push_back(o.kernel);
      rep.widths.insert(rep.widths.end(), o.widths.begin(), o.widths.end());
      rep.short_circuits += o.short_circuit ? 1 : 0;
      rep.overflows += o.overflows;
      rep.robust_retries += o.robust_retry ? 1 : 0;
      rep.cleaning_skipped += o.cleaning_skipped ? 1 : 0;
      if (o.kind == Outcome::Kind::Unresolved) unresolved = true;
      if (o.kind == Outcome::Kind::Yes) {
        found = true;
        rep.solution = o.solution;
        return false;
      }
    }
    return true;
  };
  run_two_step(root, rep.p, [&](HittingInstance&& inst) {
    batch.push_back(std::move(inst));
    return batch.size() < batch_size || drain();
  });
  if (!found && !batch.empty()) drain();

  if (found) {
    rep.answer = Answer::Yes;
    rep.certified = certify_solution(config.problem, input.graph, rep.solution, k);
    if (!rep.certified) throw Error("solver produced an uncertified solution");
  } else {
    rep.answer = unresolved ? Answer::Unknown : Answer::No;
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

KernelProfile kernel_profile(const SolveInput& input, int k, int p, Mode mode) {
  HittingInstance root;
  root.graph = input.graph;
  root.k = k;
  root.mode = mode == Mode::Geometric && input.disks ? Mode::Geometric : Mode::Robust;
  if (root.mode == Mode::Geometric) root.disks = input.disks;

  auto kernel_size = [](HittingInstance inst) {
    inst.graph = clean_for_ths(inst.graph);
    return kernelize_ths(inst).graph.alive_count();
  };
  KernelProfile prof;
  long total = 0;
  run_two_step(root, p, [&](HittingInstance&& inst) {
    if (greedy_ths_3approx(inst.graph).size() > 3 * static_cast<std::size_t>(inst.k)) {
      ++prof.short_circuits;
      return true;
    }
    const int size = kernel_size(std::move(inst));
    ++prof.instances;
    total += size;
    prof.max_kernel = std::max(prof.max_kernel, size);
    return true;
  });
  if (prof.instances) prof.mean_kernel = static_cast<double>(total) / prof.instances;
  prof.direct_kernel = kernel_size(root);
  return prof;
}

}  // namespace dh
