// Feedback vertex set: rows keyed by the bag state, each carrying a partition
// of the survivors into forest components plus residual degrees. An edge is
// processed when the first of its endpoints is forgotten, so every edge is
// seen exactly once even below join nodes.

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "dp_internal.hpp"

namespace dh {

namespace {

using detail::Frame;
using detail::Layout;

struct Row {
  PartitionRow part;
  std::uint32_t from_a = 0;
  std::uint32_t from_b = 0;
  std::uint64_t child_key = 0;
};

using Table = std::unordered_map<std::uint64_t, std::vector<Row>>;

struct SurvivorInfo {
  Vertex v;
  bool full;
  int weight;  // copies seen by a neighbour
};

void canonicalize(std::vector<int>& block) {
  std::unordered_map<int, int> map;
  for (int& b : block) {
    auto [it, fresh] = map.emplace(b, static_cast<int>(map.size()));
    b = it->second;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

class FvsSolver {
 public:
  FvsSolver(const NiceTreeDecomposition& ntd, const HittingGraph& g, const DpOptions& opts)
      : ntd_(ntd), g_(g), opts_(opts), cap_(detail::resolve_cap(opts)), frame_(ntd, g, Problem::Fvs, cap_) {}

  DpResult run() {
    tables_.resize(ntd_.nodes.size());
    DpResult result;
    for (int t : ntd_.postorder()) {
      const NiceNode& nd = ntd_.nodes[t];
      std::uint64_t generated = 0;
      switch (nd.kind) {
        case NiceKind::Leaf: {
          Row r;
          tables_[t][0].push_back(r);
          generated = 1;
          break;
        }
        case NiceKind::Introduce: generated = introduce(t); break;
        case NiceKind::Forget: generated = forget(t); break;
        case NiceKind::Join: generated = join(t); break;
      }
      std::uint64_t rows = 0;
      for (auto& [key, list] : tables_[t]) {
        if (opts_.reduce_rows) reduce(list);
        rows += list.size();
      }
      if (rows > cap_) throw WidthOverflow("feedback vertex set table exceeds " + std::to_string(cap_) + " rows");
      result.max_states = std::max(result.max_states, generated);
      if (opts_.on_node) opts_.on_node({t, nd.kind, generated, rows});
    }
    const auto it = tables_[ntd_.root].find(0);
    if (it == tables_[ntd_.root].end() || it->second.empty()) return result;
    const auto& roots = it->second;
    std::uint32_t best = 0;
    for (std::uint32_t i = 1; i < roots.size(); ++i)
      if (roots[i].part.cost < roots[best].part.cost) best = i;
    result.feasible = true;
    result.cost = roots[best].part.cost;
    detail::fill_result(g_, ntd_, frame_, reconstruct(best), result);
    return result;
  }

 private:
  std::vector<SurvivorInfo> survivors(int node, std::uint64_t key) const {
    std::vector<SurvivorInfo> out;
    const Layout& l = frame_.layouts[node];
    for (std::size_t i = 0; i < l.units.size(); ++i) {
      const int u = l.units[i];
      const LocalChoice& ch = frame_.choices[u][l.digit(key, static_cast<int>(i), frame_.radix(u))];
      for (std::size_t j = 0; j < ch.survivors.size(); ++j) {
        const bool full = ch.full[j] != 0;
        out.push_back({ch.survivors[j], full, full ? g_.multiplicity(ch.survivors[j]) : 1});
      }
    }
    return out;
  }

  // Number of survivors contributed by units before position `pos`.
  int offset(int node, std::uint64_t key, int pos) const {
    const Layout& l = frame_.layouts[node];
    int off = 0;
    for (int i = 0; i < pos; ++i) {
      const int u = l.units[i];
      off += static_cast<int>(frame_.choices[u][l.digit(key, i, frame_.radix(u))].survivors.size());
    }
    return off;
  }

  bool within_budget(int cost) const { return opts_.budget < 0 || cost <= opts_.budget; }

  std::uint64_t introduce(int t) {
    const NiceNode& nd = ntd_.nodes[t];
    const int child = nd.children[0];
    const Layout& wide = frame_.layouts[t];
    const int pos = wide.position(nd.unit);
    const auto& choices = frame_.choices[nd.unit];
    std::uint64_t generated = 0;
    for (const auto& [key, rows] : tables_[child]) {
      const auto others = survivors(child, key);
      const int off = offset(child, key, pos);
      for (std::size_t c = 0; c < choices.size(); ++c) {
        const LocalChoice& ch = choices[c];
        bool ok = true;
        for (std::size_t i = 0; i < ch.survivors.size() && ok; ++i) {
          for (std::size_t j = i + 1; j < ch.survivors.size(); ++j)
            ok = ok && !frame_.must_hit_pair(ch.survivors[i], ch.survivors[j]);
          for (const auto& x : others) ok = ok && !frame_.must_hit_pair(ch.survivors[i], x.v);
        }
        if (!ok) continue;
        const std::uint64_t out_key = Frame::insert_digit(wide, key, pos, static_cast<int>(c));
        auto& out = tables_[t][out_key];
        const int fresh = static_cast<int>(others.size()) + 2;
        for (std::uint32_t r = 0; r < rows.size(); ++r) {
          const int cost = rows[r].part.cost + ch.cost;
          ++generated;
          if (!within_budget(cost)) continue;
          Row nr;
          nr.part.cost = cost;
          nr.part.block = rows[r].part.block;
          nr.part.degree = rows[r].part.degree;
          for (std::size_t i = 0; i < ch.survivors.size(); ++i) {
            nr.part.block.insert(nr.part.block.begin() + off + static_cast<long>(i), fresh + static_cast<int>(i));
            nr.part.degree.insert(nr.part.degree.begin() + off + static_cast<long>(i), 0);
          }
          canonicalize(nr.part.block);
          nr.from_a = r;
          nr.child_key = key;
          out.push_back(std::move(nr));
        }
      }
    }
    return generated;
  }

  std::uint64_t forget(int t) {
    const NiceNode& nd = ntd_.nodes[t];
    const int child = nd.children[0];
    const Layout& wide = frame_.layouts[child];
    const int pos = wide.position(nd.unit);
    std::uint64_t generated = 0;
    for (const auto& [key, rows] : tables_[child]) {
      const auto surv = survivors(child, key);
      const int off = offset(child, key, pos);
      const int digit = wide.digit(key, pos, frame_.radix(nd.unit));
      const int gone = static_cast<int>(frame_.choices[nd.unit][digit].survivors.size());
      const std::uint64_t out_key = Frame::remove_digit(wide, key, pos);
      const int n = static_cast<int>(surv.size());
      for (std::uint32_t r = 0; r < rows.size(); ++r) {
        ++generated;
        const PartitionRow& in = rows[r].part;
        UnionFind uf(n);
        // Blocks already joined below this node.
        std::vector<int> first(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
          if (first[in.block[i]] < 0)
            first[in.block[i]] = i;
          else
            uf.unite(first[in.block[i]], i);
        }
        std::vector<int> degree = in.degree;
        bool ok = true;
        for (int i = off; i < off + gone && ok; ++i)
          for (int j = 0; j < n && ok; ++j) {
            if (j == i || (j >= off && j < i)) continue;
            if (!g_.adjacent(surv[i].v, surv[j].v)) continue;
            degree[i] += surv[j].weight;
            degree[j] += surv[i].weight;
            if ((surv[i].full && degree[i] > 1) || (surv[j].full && degree[j] > 1)) ok = false;
            if (!uf.unite(i, j)) ok = false;
          }
        if (!ok) continue;
        Row nr;
        nr.part.cost = in.cost;
        for (int i = 0; i < n; ++i) {
          if (i >= off && i < off + gone) continue;
          nr.part.block.push_back(uf.find(i));
          nr.part.degree.push_back(degree[i]);
        }
        canonicalize(nr.part.block);
        nr.from_a = r;
        nr.child_key = key;
        tables_[t][out_key].push_back(std::move(nr));
      }
    }
    return generated;
  }

  int bag_deleted(int node, std::uint64_t key) const {
    const Layout& l = frame_.layouts[node];
    int w = 0;
    for (std::size_t i = 0; i < l.units.size(); ++i) {
      const int u = l.units[i];
      w += frame_.choices[u][l.digit(key, static_cast<int>(i), frame_.radix(u))].cost;
    }
    return w;
  }

  std::uint64_t join(int t) {
    const NiceNode& nd = ntd_.nodes[t];
    const Table& left = tables_[nd.children[0]];
    const Table& right = tables_[nd.children[1]];
    std::uint64_t generated = 0;
    for (const auto& [key, lrows] : left) {
      const auto rit = right.find(key);
      if (rit == right.end()) continue;
      const auto& rrows = rit->second;
      const auto surv = survivors(t, key);
      const int n = static_cast<int>(surv.size());
      const int del = bag_deleted(t, key);
      for (std::uint32_t a = 0; a < lrows.size(); ++a)
        for (std::uint32_t b = 0; b < rrows.size(); ++b) {
          ++generated;
          const PartitionRow& pa = lrows[a].part;
          const PartitionRow& pb = rrows[b].part;
          const int cost = pa.cost + pb.cost - del;
          if (!within_budget(cost)) continue;
          UnionFind uf(n);
          std::vector<int> first(static_cast<std::size_t>(n), -1);
          for (int i = 0; i < n; ++i) {
            if (first[pa.block[i]] < 0)
              first[pa.block[i]] = i;
            else
              uf.unite(first[pa.block[i]], i);
          }
          std::fill(first.begin(), first.end(), -1);
          bool ok = true;
          for (int i = 0; i < n && ok; ++i) {
            if (first[pb.block[i]] < 0)
              first[pb.block[i]] = i;
            else if (!uf.unite(first[pb.block[i]], i))
              ok = false;
          }
          if (!ok) continue;
          Row nr;
          nr.part.cost = cost;
          for (int i = 0; i < n && ok; ++i) {
            const int d = pa.degree[i] + pb.degree[i];
            if (surv[i].full && d > 1) ok = false;
            nr.part.block.push_back(uf.find(i));
            nr.part.degree.push_back(d);
          }
          if (!ok) continue;
          canonicalize(nr.part.block);
          nr.from_a = a;
          nr.from_b = b;
          nr.child_key = key;
          tables_[t][key].push_back(std::move(nr));
        }
    }
    return generated;
  }

  static void reduce(std::vector<Row>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.part.cost < b.part.cost; });
    std::vector<Row> kept;
    for (auto& r : rows) {
      bool redundant = false;
      for (const auto& k : kept)
        if (row_dominates(k.part, r.part)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(r));
    }
    rows = std::move(kept);
  }

  std::vector<int> reconstruct(std::uint32_t root_row) const {
    std::vector<int> unit_choice(ntd_.units.size(), -1);
    struct Item {
      int node;
      std::uint64_t key;
      std::uint32_t row;
    };
    std::vector<Item> stack{{ntd_.root, 0, root_row}};
    while (!stack.empty()) {
      const Item it = stack.back();
      stack.pop_back();
      const NiceNode& nd = ntd_.nodes[it.node];
      const Row& r = tables_[it.node].at(it.key)[it.row];
      switch (nd.kind) {
        case NiceKind::Leaf: break;
        case NiceKind::Introduce: stack.push_back({nd.children[0], r.child_key, r.from_a}); break;
        case NiceKind::Forget: {
          const Layout& wide = frame_.layouts[nd.children[0]];
          unit_choice[nd.unit] = wide.digit(r.child_key, wide.position(nd.unit), frame_.radix(nd.unit));
          stack.push_back({nd.children[0], r.child_key, r.from_a});
          break;
        }
        case NiceKind::Join:
          stack.push_back({nd.children[0], it.key, r.from_a});
          stack.push_back({nd.children[1], it.key, r.from_b});
          break;
      }
    }
    return unit_choice;
  }

  const NiceTreeDecomposition& ntd_;
  const HittingGraph& g_;
  const DpOptions& opts_;
  std::uint64_t cap_;
  Frame frame_;
  std::vector<Table> tables_;
};

}  // namespace

DpResult solve_fvs_td(const NiceTreeDecomposition& ntd, const HittingGraph& g, const DpOptions& opts) {
  return FvsSolver(ntd, g, opts).run();
}

}  // namespace dh
