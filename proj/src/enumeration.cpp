#include "walkmap/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace walkmap {

QsWalkIndex::QsWalkIndex(const Graph& g, Universe universe) : graph_(&g), universe_(universe) {}

const std::vector<Walk>& QsWalkIndex::bucket(std::size_t m, NodeId x, NodeId y) {
  if (!graph_->contains(x) || !graph_->contains(y)) throw ContractError("qswalk bucket for unknown node");
  auto key = std::make_tuple(m, x, y);
  if (auto it = buckets_.find(key); it != buckets_.end()) return it->second;

  std::vector<Walk> out;
  if (m == 0) {
    if (x == y) out.push_back(Walk::trivial(x, universe_));
  } else {
    for (Dart e : graph_->steps_from(x, universe_)) {
      for (const Walk& w : bucket(m - 1, graph_->head(e), y)) {
        if (!is_member(x, w)) out.push_back(w.prepend(*graph_, e));
      }
    }
  }
  return buckets_.emplace(key, std::move(out)).first->second;
}

std::vector<Walk> QsWalkIndex::all(NodeId x, NodeId y) {
  std::vector<Walk> out;
  for (std::size_t m = 0; m <= graph_->node_count(); ++m) {
    const auto& b = bucket(m, x, y);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::vector<Walk> enumerate_qswalks_of_length(const Graph& g, std::size_t m, NodeId x, NodeId y, Universe universe) {
  QsWalkIndex index(g, universe);
  return index.bucket(m, x, y);
}

std::vector<Walk> enumerate_all_qswalks(const Graph& g, NodeId x, NodeId y, Universe universe) {
  QsWalkIndex index(g, universe);
  return index.all(x, y);
}

std::uint64_t count_walks_of_length(const Graph& g, std::size_t n, NodeId x, NodeId y, Universe universe) {
  if (!g.contains(x) || !g.contains(y)) throw ContractError("count_walks_of_length: unknown node");
  // counts[k] = W(i, k, y), advanced one length at a time.
  std::vector<std::uint64_t> counts(g.node_count(), 0);
  counts[y] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(g.node_count(), 0);
    for (NodeId k = 0; k < g.node_count(); ++k) {
      for (Dart e : g.steps_from(k, universe)) {
        if (__builtin_add_overflow(next[k], counts[g.head(e)], &next[k])) {
          throw std::overflow_error("walk count exceeds 64 bits");
        }
      }
    }
    counts = std::move(next);
  }
  return counts[x];
}

namespace {

void extend(const Graph& g, Universe universe, NodeId y, std::size_t max_len, const Walk& current,
            std::vector<Walk>& out) {
  if (current.end() == y) out.push_back(current);
  if (current.length() == max_len) return;
  for (Dart e : g.steps_from(current.end(), universe)) {
    std::vector<Dart> steps = current.steps();
    steps.push_back(e);
    extend(g, universe, y, max_len, Walk::from_darts(g, current.start(), std::move(steps), universe), out);
  }
}

}  // namespace

std::vector<Walk> enumerate_walks_up_to(const Graph& g, NodeId x, NodeId y, std::size_t max_len, Universe universe) {
  if (!g.contains(x) || !g.contains(y)) throw ContractError("enumerate_walks_up_to: unknown node");
  std::vector<Walk> out;
  extend(g, universe, y, max_len, Walk::trivial(x, universe), out);
  std::stable_sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.steps() < b.steps();
  });
  return out;
}

}  // namespace walkmap
