// Triangle hitting and odd cycle transversal: every product state of a bag is
// evaluated, costs live in dense arrays indexed by the mixed-radix state.

#include <algorithm>

#include "dp_internal.hpp"

namespace dh {

namespace {

using detail::Frame;
using detail::Layout;

struct Survivor {
  Vertex v;
  int color;
};

class DenseSolver {
 public:
  DenseSolver(const NiceTreeDecomposition& ntd, const HittingGraph& g, Problem problem, const DpOptions& opts)
      : ntd_(ntd), g_(g), problem_(problem), opts_(opts), frame_(ntd, g, problem, detail::resolve_cap(opts)) {}

  DpResult run() {
    const auto order = ntd_.postorder();
    cost_.resize(ntd_.nodes.size());
    argmin_.resize(ntd_.nodes.size());
    DpResult result;
    for (int t : order) {
      const NiceNode& nd = ntd_.nodes[t];
      switch (nd.kind) {
        case NiceKind::Leaf: cost_[t].assign(1, 0); break;
        case NiceKind::Introduce: introduce(t); break;
        case NiceKind::Forget: forget(t); break;
        case NiceKind::Join: join(t); break;
      }
      for (int c : nd.children) std::vector<int>().swap(cost_[c]);
      NodeStats st{t, nd.kind, cost_[t].size(),
                   static_cast<std::uint64_t>(std::count_if(cost_[t].begin(), cost_[t].end(),
                                                            [](int c) { return c < kInfeasible; }))};
      result.max_states = std::max(result.max_states, st.enumerated);
      if (opts_.on_node) opts_.on_node(st);
    }
    const int best = cost_[ntd_.root].at(0);
    if (best >= kInfeasible) return result;
    result.feasible = true;
    result.cost = best;
    detail::fill_result(g_, ntd_, frame_, reconstruct(), result);
    return result;
  }

 private:
  void decode(int node, std::uint64_t state, std::vector<Survivor>& out) const {
    out.clear();
    const Layout& l = frame_.layouts[node];
    for (std::size_t i = 0; i < l.units.size(); ++i) {
      const int u = l.units[i];
      const LocalChoice& ch = frame_.choices[u][l.digit(state, static_cast<int>(i), frame_.radix(u))];
      for (std::size_t j = 0; j < ch.survivors.size(); ++j)
        out.push_back({ch.survivors[j], ch.colors.empty() ? 0 : ch.colors[j]});
    }
  }

  // Can the survivors of `ch` join the surviving set `others`?
  bool compatible(const LocalChoice& ch, const std::vector<Survivor>& others) const {
    const auto& s = ch.survivors;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Vertex a = s[i];
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (frame_.must_hit_pair(a, s[j])) return false;
      for (const Survivor& x : others) {
        if (frame_.must_hit_pair(a, x.v)) return false;
        if (problem_ == Problem::Oct && x.color == ch.colors[i] && g_.adjacent(a, x.v)) return false;
      }
    }
    if (problem_ != Problem::Ths) return true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Vertex a = s[i];
      if (s.size() == 2 && i == 0)
        for (const Survivor& x : others)
          if (g_.adjacent(a, x.v) && g_.adjacent(s[1], x.v)) return false;
      for (std::size_t p = 0; p < others.size(); ++p) {
        if (!g_.adjacent(a, others[p].v)) continue;
        for (std::size_t q = p + 1; q < others.size(); ++q)
          if (g_.adjacent(a, others[q].v) && g_.adjacent(others[p].v, others[q].v)) return false;
      }
    }
    return true;
  }

  void introduce(int t) {
    const NiceNode& nd = ntd_.nodes[t];
    const int child = nd.children[0];
    const Layout& wide = frame_.layouts[t];
    const int pos = wide.position(nd.unit);
    const auto& choices = frame_.choices[nd.unit];
    auto& out = cost_[t];
    out.assign(wide.size(), kInfeasible);
    const auto& in = cost_[child];
    std::vector<Survivor> others;
    for (std::uint64_t s = 0; s < in.size(); ++s) {
      if (in[s] >= kInfeasible) continue;
      decode(child, s, others);
      for (std::size_t c = 0; c < choices.size(); ++c) {
        if (!compatible(choices[c], others)) continue;
        const int cost = in[s] + choices[c].cost;
        if (opts_.budget >= 0 && cost > opts_.budget) continue;
        out[Frame::insert_digit(wide, s, pos, static_cast<int>(c))] = cost;
      }
    }
  }

  void forget(int t) {
    const NiceNode& nd = ntd_.nodes[t];
    const int child = nd.children[0];
    const Layout& wide = frame_.layouts[child];
    const int pos = wide.position(nd.unit);
    const int radix = frame_.radix(nd.unit);
    const auto& in = cost_[child];
    auto& out = cost_[t];
    out.assign(frame_.layouts[t].size(), kInfeasible);
    auto& arg = argmin_[t];
    arg.assign(out.size(), 0);
    for (std::uint64_t s = 0; s < out.size(); ++s)
      for (int c = 0; c < radix; ++c) {
        const int v = in[Frame::insert_digit(wide, s, pos, c)];
        if (v < out[s]) {
          out[s] = v;
          arg[s] = static_cast<std::uint32_t>(c);
        }
      }
  }

  int bag_deleted(int node, std::uint64_t state) const {
    const Layout& l = frame_.layouts[node];
    int w = 0;
    for (std::size_t i = 0; i < l.units.size(); ++i) {
      const int u = l.units[i];
      w += frame_.choices[u][l.digit(state, static_cast<int>(i), frame_.radix(u))].cost;
    }
    return w;
  }

  void join(int t) {
    const NiceNode& nd = ntd_.nodes[t];
    const auto& a = cost_[nd.children[0]];
    const auto& b = cost_[nd.children[1]];
    auto& out = cost_[t];
    out.assign(a.size(), kInfeasible);
    JoinRecord rec;
    if (opts_.on_join) {
      rec.node = t;
      rec.left = a;
      rec.right = b;
      rec.bag_deleted.resize(a.size());
    }
    for (std::uint64_t s = 0; s < out.size(); ++s) {
      const int del = bag_deleted(t, s);
      if (opts_.on_join) rec.bag_deleted[s] = del;
      if (a[s] >= kInfeasible || b[s] >= kInfeasible) continue;
      const int cost = a[s] + b[s] - del;
      if (opts_.budget >= 0 && cost > opts_.budget) continue;
      out[s] = cost;
    }
    if (opts_.on_join) {
      rec.cost = out;
      opts_.on_join(rec);
    }
  }

  std::vector<int> reconstruct() const {
    std::vector<int> unit_choice(ntd_.units.size(), -1);
    std::vector<std::pair<int, std::uint64_t>> stack{{ntd_.root, 0}};
    while (!stack.empty()) {
      auto [t, s] = stack.back();
      stack.pop_back();
      const NiceNode& nd = ntd_.nodes[t];
      switch (nd.kind) {
        case NiceKind::Leaf: break;
        case NiceKind::Introduce: {
          const Layout& wide = frame_.layouts[t];
          stack.emplace_back(nd.children[0], Frame::remove_digit(wide, s, wide.position(nd.unit)));
          break;
        }
        case NiceKind::Forget: {
          const int c = argmin_[t][s];
          unit_choice[nd.unit] = c;
          const Layout& wide = frame_.layouts[nd.children[0]];
          stack.emplace_back(nd.children[0], Frame::insert_digit(wide, s, wide.position(nd.unit), c));
          break;
        }
        case NiceKind::Join:
          stack.emplace_back(nd.children[0], s);
          stack.emplace_back(nd.children[1], s);
          break;
      }
    }
    return unit_choice;
  }

  const NiceTreeDecomposition& ntd_;
  const HittingGraph& g_;
  Problem problem_;
  const DpOptions& opts_;
  Frame frame_;
  std::vector<std::vector<int>> cost_;
  std::vector<std::vector<std::uint32_t>> argmin_;
};

}  // namespace

DpResult solve_ths_td(const NiceTreeDecomposition& ntd, const HittingGraph& g, const DpOptions& opts) {
  return DenseSolver(ntd, g, Problem::Ths, opts).run();
}

DpResult solve_oct_td(const NiceTreeDecomposition& ntd, const HittingGraph& g, const DpOptions& opts) {
  return DenseSolver(ntd, g, Problem::Oct, opts).run();
}

}  // namespace dh
