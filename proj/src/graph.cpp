#include "walkmap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "walkmap/error.hpp"

namespace walkmap {

std::string to_string(Dart d) {
  return "e" + std::to_string(d.edge()) + (d.is_forward() ? "+" : "-");
}

Graph Graph::build(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edge_list) {
  Graph g;
  g.node_count_ = node_count;
  g.edges_.reserve(edge_list.size());
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    auto [s, t] = edge_list[i];
    if (s >= node_count || t >= node_count) {
      throw ValidationError("edge " + std::to_string(i) + " (" + std::to_string(s) + " -> " + std::to_string(t) +
                            ") has an endpoint outside 0.." +
                            (node_count == 0 ? std::string("(no nodes)") : std::to_string(node_count - 1)));
    }
    g.edges_.push_back({static_cast<EdgeId>(i), s, t});
  }
  g.incident_.assign(node_count, {});
  for (const auto& e : g.edges_) {
    g.incident_[e.source].push_back(Dart(e.id, Orientation::Forward));
    g.incident_[e.target].push_back(Dart(e.id, Orientation::Reverse));
  }
  for (auto& darts : g.incident_) std::sort(darts.begin(), darts.end());
  return g;
}

const EdgeRecord& Graph::edge(EdgeId id) const {
  if (id >= edges_.size()) throw ContractError("edge id " + std::to_string(id) + " out of range");
  return edges_[id];
}

NodeId Graph::tail(Dart d) const {
  const auto& e = edge(d.edge());
  return d.is_forward() ? e.source : e.target;
}

NodeId Graph::head(Dart d) const {
  const auto& e = edge(d.edge());
  return d.is_forward() ? e.target : e.source;
}

const std::vector<Dart>& Graph::incident_darts(NodeId x) const {
  if (x >= node_count_) throw ContractError("node id " + std::to_string(x) + " out of range");
  return incident_[x];
}

std::vector<Dart> Graph::steps_from(NodeId x, Universe universe) const {
  const auto& all = incident_darts(x);
  if (universe == Universe::Symmetric) return all;
  std::vector<Dart> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](Dart d) { return d.is_forward(); });
  return out;
}

std::vector<Dart> symmetrise(const Graph& g) {
  std::vector<Dart> darts;
  darts.reserve(g.dart_count());
  for (std::size_t i = 0; i < g.dart_count(); ++i) darts.push_back(Dart::from_index(i));
  return darts;
}

bool is_connected(const Graph& g) {
  if (g.node_count() <= 1) return true;
  std::vector<NodeId> parent(g.node_count());
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.node_count();
  for (const auto& e : g.edges()) {
    auto a = find(e.source), b = find(e.target);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

CyclicOrderVerdict validate_cyclic_order(std::span<const Dart> darts_at_node, const CyclicOrder& order) {
  std::unordered_set<Dart> expected(darts_at_node.begin(), darts_at_node.end());
  std::unordered_set<Dart> seen;
  for (Dart d : order.elements()) {
    if (!seen.insert(d).second) return {CyclicOrderIssue::Duplicate, d};
  }
  for (Dart d : order.elements()) {
    if (!expected.contains(d)) return {CyclicOrderIssue::Foreign, d};
  }
  // Report the smallest missing dart so diagnostics are deterministic.
  std::optional<Dart> missing;
  for (Dart d : darts_at_node) {
    if (!seen.contains(d) && (!missing || d < *missing)) missing = d;
  }
  if (missing) return {CyclicOrderIssue::Missing, missing};
  return {};
}

std::string describe(const CyclicOrderVerdict& verdict) {
  switch (verdict.issue) {
    case CyclicOrderIssue::None:
      return "valid";
    case CyclicOrderIssue::Duplicate:
      return "duplicate dart " + to_string(*verdict.dart);
    case CyclicOrderIssue::Missing:
      return "missing dart " + to_string(*verdict.dart);
    case CyclicOrderIssue::Foreign:
      return "foreign dart " + to_string(*verdict.dart);
  }
  return "unknown";
}

}  // namespace walkmap
