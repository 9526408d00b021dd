#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "dp_internal.hpp"

namespace dh {

std::uint64_t default_state_cap() {
  if (const char* env = std::getenv("DISKHITTER_STATE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 22;
}

std::vector<LocalChoice> local_choices(const HittingGraph& g, std::span<const Vertex> clique, Problem problem) {
  std::vector<LocalChoice> out;
  const std::size_t n = clique.size();
  int total = 0;
  for (Vertex v : clique) total += g.multiplicity(v);

  // Survivor sets of size <= 2, then per-problem annotations.
  std::vector<std::vector<Vertex>> sets{{}};
  for (std::size_t i = 0; i < n; ++i) sets.push_back({clique[i]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sets.push_back({clique[i], clique[j]});

  for (const auto& s : sets) {
    int kept = 0;
    for (Vertex v : s) kept += g.multiplicity(v);
    const int base = total - kept;
    switch (problem) {
      case Problem::Ths:
        out.push_back({s, {}, {}, base});
        break;
      case Problem::Oct:
        if (s.empty()) {
          out.push_back({s, {}, {}, base});
        } else if (s.size() == 1) {
          out.push_back({s, {0}, {}, base});
          out.push_back({s, {1}, {}, base});
        } else {
          out.push_back({s, {0, 1}, {}, base});
          out.push_back({s, {1, 0}, {}, base});
        }
        break;
      case Problem::Fvs: {
        // Each representative of several copies keeps all of them (full) or one.
        std::vector<std::vector<char>> modes{{}};
        for (Vertex v : s) {
          std::vector<std::vector<char>> next;
          for (const auto& m : modes) {
            auto single = m;
            single.push_back(0);
            next.push_back(single);
            if (g.multiplicity(v) >= 2) {
              auto full = m;
              full.push_back(1);
              next.push_back(full);
            }
          }
          modes = std::move(next);
        }
        for (const auto& m : modes) {
          int cost = base;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (!m[i]) cost += g.multiplicity(s[i]) - 1;
          out.push_back({s, {}, m, cost});
        }
        break;
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> enumerate_bag_states(const HittingGraph& g, const CliquePartition& part,
                                                   Problem problem) {
  std::vector<int> radix;
  for (const auto& c : part.cliques) radix.push_back(static_cast<int>(local_choices(g, c, problem).size()));
  std::vector<std::vector<int>> out;
  std::vector<int> digits(radix.size(), 0);
  while (true) {
    out.push_back(digits);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == radix[i]) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

std::uint64_t bag_state_count(const HittingGraph& g, const CliquePartition& part, Problem problem) {
  std::uint64_t n = 1;
  for (const auto& c : part.cliques) {
    const auto r = static_cast<std::uint64_t>(local_choices(g, c, problem).size());
    if (n > std::numeric_limits<std::uint64_t>::max() / r) return std::numeric_limits<std::uint64_t>::max();
    n *= r;
  }
  return n;
}

bool row_dominates(const PartitionRow& a, const PartitionRow& b) {
  if (a.cost > b.cost || a.block.size() != b.block.size()) return false;
  for (std::size_t i = 0; i < a.degree.size(); ++i)
    if (a.degree[i] > b.degree[i]) return false;
  // a refines b: survivors together in a are together in b.
  std::map<int, int> image;
  for (std::size_t i = 0; i < a.block.size(); ++i) {
    auto [it, fresh] = image.emplace(a.block[i], b.block[i]);
    if (!fresh && it->second != b.block[i]) return false;
  }
  return true;
}

std::vector<PartitionRow> rank_reduce(std::vector<PartitionRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.cost < b.cost; });
  std::vector<PartitionRow> kept;
  for (auto& r : rows) {
    bool redundant = false;
    for (const auto& k : kept)
      if (row_dominates(k, r)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(r));
  }
  return kept;
}

std::vector<Vertex> expand_solution(const HittingGraph& g, const DpResult& r) {
  std::vector<Vertex> out;
  for (Vertex v : r.deleted)
    for (Vertex m : g.members(v)) out.push_back(m);
  for (Vertex v : r.single) {
    const auto m = g.members(v);
    out.insert(out.end(), m.begin() + 1, m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

DpResult solve_td(Problem problem, const NiceTreeDecomposition& ntd, const HittingGraph& g, const DpOptions& opts) {
  switch (problem) {
    case Problem::Ths: return solve_ths_td(ntd, g, opts);
    case Problem::Oct: return solve_oct_td(ntd, g, opts);
    case Problem::Fvs: return solve_fvs_td(ntd, g, opts);
  }
  throw InvalidArgument("unknown problem");
}

namespace detail {

int Layout::position(int unit) const {
  const auto it = std::lower_bound(units.begin(), units.end(), unit);
  return static_cast<int>(it - units.begin());
}

Frame::Frame(const NiceTreeDecomposition& ntd, const HittingGraph& g, Problem problem, std::uint64_t cap)
    : capacity(g.capacity()) {
  for (const auto& u : ntd.units) choices.push_back(local_choices(g, u, problem));
  for (const auto& nd : ntd.nodes) {
    Layout l;
    l.units = nd.units;
    l.stride.push_back(1);
    for (int u : nd.units) {
      const auto r = static_cast<std::uint64_t>(choices[u].size());
      if (l.stride.back() > cap / r)
        throw WidthOverflow("bag needs more than " + std::to_string(cap) + " states");
      l.stride.push_back(l.stride.back() * r);
    }
    if (l.size() > cap) throw WidthOverflow("bag needs more than " + std::to_string(cap) + " states");
    layouts.push_back(std::move(l));
  }
  must_hit.assign(static_cast<std::size_t>(capacity) * static_cast<std::size_t>(capacity), 0);
  for (const Edge& e : g.constraint_edges()) {
    must_hit[static_cast<std::size_t>(e.u) * capacity + e.v] = 1;
    must_hit[static_cast<std::size_t>(e.v) * capacity + e.u] = 1;
  }
}

std::uint64_t Frame::insert_digit(const Layout& wide, std::uint64_t narrow_state, int pos, int digit) {
  const std::uint64_t low = narrow_state % wide.stride[pos];
  const std::uint64_t high = narrow_state / wide.stride[pos];
  return low + static_cast<std::uint64_t>(digit) * wide.stride[pos] + high * wide.stride[pos + 1];
}

std::uint64_t Frame::remove_digit(const Layout& wide, std::uint64_t wide_state, int pos) {
  const std::uint64_t low = wide_state % wide.stride[pos];
  const std::uint64_t high = wide_state / wide.stride[pos + 1];
  return low + high * wide.stride[pos];
}

void fill_result(const HittingGraph& g, const NiceTreeDecomposition& ntd, const Frame& frame,
                 const std::vector<int>& unit_choice, DpResult& out) {
  out.deleted.clear();
  out.single.clear();
  for (std::size_t u = 0; u < unit_choice.size(); ++u) {
    if (unit_choice[u] < 0) throw Error("unit without a recorded choice");
    const LocalChoice& ch = frame.choices[u][unit_choice[u]];
    for (Vertex v : ntd.units[u]) {
      const auto it = std::find(ch.survivors.begin(), ch.survivors.end(), v);
      if (it == ch.survivors.end()) {
        out.deleted.push_back(v);
      } else if (!ch.full.empty() && !ch.full[it - ch.survivors.begin()] && g.multiplicity(v) >= 2) {
        out.single.push_back(v);
      }
    }
  }
  std::sort(out.deleted.begin(), out.deleted.end());
  std::sort(out.single.begin(), out.single.end());
}

std::uint64_t resolve_cap(const DpOptions& opts) { return opts.state_cap ? opts.state_cap : default_state_cap(); }

}  // namespace detail

}  // namespace dh
