// Fixture graphs and maps plus brute-force oracles shared by the unit and
// acceptance suites. The oracles deliberately avoid the library's own
// algorithms: they work on raw node/dart vectors and only use the graph for
// tail/head lookups.
#ifndef WALKMAP_TESTS_FIXTURES_HPP
#define WALKMAP_TESTS_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "walkmap/embedding.hpp"
#include "walkmap/graph.hpp"
#include "walkmap/homotopy.hpp"
#include "walkmap/walk.hpp"

namespace fixtures {

using walkmap::CyclicOrder;
using walkmap::Dart;
using walkmap::Graph;
using walkmap::NodeId;
using walkmap::Orientation;
using walkmap::RotationMap;
using walkmap::Universe;
using walkmap::Walk;

inline Dart fwd(walkmap::EdgeId e) { return Dart(e, Orientation::Forward); }
inline Dart rev(walkmap::EdgeId e) { return Dart(e, Orientation::Reverse); }

inline Graph loop1() { return Graph::build(1, {{0, 0}}); }
inline Graph digon() { return Graph::build(2, {{0, 1}, {0, 1}}); }
inline Graph triangle() { return Graph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }
// e0: 0→1, e1: 1→0, e2: 0→2
inline Graph pathloop() { return Graph::build(3, {{0, 1}, {1, 0}, {0, 2}}); }
inline Graph torus2() { return Graph::build(1, {{0, 0}, {0, 0}}); }
inline Graph k4() { return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}); }

inline RotationMap loop1_map() { return RotationMap(loop1(), {CyclicOrder({fwd(0), rev(0)})}); }
inline RotationMap digon_map() {
  return RotationMap(digon(), {CyclicOrder({fwd(0), fwd(1)}), CyclicOrder({rev(1), rev(0)})});
}
inline RotationMap triangle_map() {
  return RotationMap(triangle(), {CyclicOrder({fwd(0), rev(2)}), CyclicOrder({fwd(1), rev(0)}),
                                  CyclicOrder({fwd(2), rev(1)})});
}
inline RotationMap pathloop_map() {
  return RotationMap(pathloop(), {CyclicOrder({fwd(0), rev(1), fwd(2)}), CyclicOrder({rev(0), fwd(1)}),
                                  CyclicOrder({rev(2)})});
}
inline RotationMap torus2_map() { return RotationMap(torus2(), {CyclicOrder({fwd(0), fwd(1), rev(0), rev(1)})}); }
inline RotationMap k4sphere_map() {
  return RotationMap(k4(), {CyclicOrder({fwd(0), fwd(1), fwd(2)}), CyclicOrder({fwd(3), rev(0), rev(5)}),
                            CyclicOrder({fwd(4), rev(1), rev(3)}), CyclicOrder({fwd(5), rev(2), rev(4)})});
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct NamedMap {
  std::string name;
  RotationMap map;
  bool sphere;  // hand-derived: the rotation embeds the graph in the sphere
};

inline std::vector<NamedGraph> fixture_graphs() {
  return {{"LOOP1", loop1()},       {"DIGON", digon()},   {"TRIANGLE", triangle()},
          {"PATHLOOP", pathloop()}, {"TORUS2", torus2()}, {"K4SPHERE", k4()}};
}

inline std::vector<NamedMap> fixture_maps() {
  return {{"LOOP1", loop1_map(), true},       {"DIGON", digon_map(), true},
          {"TRIANGLE", triangle_map(), true}, {"PATHLOOP", pathloop_map(), true},
          {"TORUS2", torus2_map(), false},    {"K4SPHERE", k4sphere_map(), true}};
}

/// Random multigraph with 1..5 nodes and 0..8 edges (loops and parallels allowed).
inline Graph random_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> nodes_dist(1, 5), edges_dist(0, 8);
  const int n = nodes_dist(rng);
  const int m = edges_dist(rng);
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(node(rng), node(rng));
  return Graph::build(n, edges);
}

/// Random rotation: each node's incident darts shuffled.
inline RotationMap random_map(Graph g, std::mt19937& rng) {
  std::vector<CyclicOrder> rotation;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    auto darts = g.incident_darts(x);
    std::shuffle(darts.begin(), darts.end(), rng);
    rotation.emplace_back(std::move(darts));
  }
  return RotationMap(std::move(g), std::move(rotation));
}

/// Plain walk representation used by the oracles.
struct RawWalk {
  std::vector<NodeId> nodes;  // length + 1 entries
  std::vector<Dart> steps;

  std::size_t length() const { return steps.size(); }
  NodeId start() const { return nodes.front(); }
  NodeId end() const { return nodes.back(); }
  bool operator==(const RawWalk&) const = default;
  auto operator<=>(const RawWalk&) const = default;
};

inline RawWalk raw(const Walk& w) { return {w.nodes(), w.steps()}; }

inline Walk cooked(const Graph& g, const RawWalk& r, Universe u = Universe::Symmetric) {
  return Walk::from_darts(g, r.start(), r.steps, u);
}

inline RawWalk raw_suffix(const RawWalk& w, std::size_t from) {
  return {std::vector<NodeId>(w.nodes.begin() + from, w.nodes.end()),
          std::vector<Dart>(w.steps.begin() + from, w.steps.end())};
}

/// Every walk from x with length <= max_len, by plain depth-first search.
inline void dfs_walks(const Graph& g, Universe u, std::size_t max_len, RawWalk& current, std::vector<RawWalk>& out) {
  out.push_back(current);
  if (current.length() == max_len) return;
  for (std::size_t i = 0; i < g.dart_count(); ++i) {
    Dart d = Dart::from_index(i);
    if (u == Universe::Directed && !d.is_forward()) continue;
    if (g.tail(d) != current.end()) continue;
    current.steps.push_back(d);
    current.nodes.push_back(g.head(d));
    dfs_walks(g, u, max_len, current, out);
    current.steps.pop_back();
    current.nodes.pop_back();
  }
}

inline std::vector<RawWalk> all_walks_from(const Graph& g, NodeId x, std::size_t max_len, Universe u) {
  std::vector<RawWalk> out;
  RawWalk start{{x}, {}};
  dfs_walks(g, u, max_len, start, out);
  return out;
}

inline std::vector<RawWalk> all_walks(const Graph& g, std::size_t max_len, Universe u) {
  std::vector<RawWalk> out;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    auto w = all_walks_from(g, x, max_len, u);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

/// Largest number of non-final positions holding the same node.
inline std::size_t max_occurrence(const RawWalk& w) {
  std::map<NodeId, std::size_t> count;
  std::size_t best = 0;
  for (std::size_t i = 0; i < w.length(); ++i) best = std::max(best, ++count[w.nodes[i]]);
  return best;
}

inline bool census_quasi(const RawWalk& w) { return max_occurrence(w) <= 1; }

/// Every q with p ⇝ q, generated straight from the three rule schemas by
/// trying every decomposition.
inline std::set<RawWalk> brute_reducts(const RawWalk& p) {
  std::set<RawWalk> out;
  if (p.length() == 0) return out;
  const NodeId x = p.start();
  const bool loop = p.start() == p.end();
  if (loop) out.insert(RawWalk{{x}, {}});  // xi1
  // xi2: p = e ⊙ p', p' ⇝ q'
  const NodeId y = p.nodes[1];
  if (!loop && x != y) {
    for (const auto& q : brute_reducts(raw_suffix(p, 1))) {
      RawWalk lifted{{x}, {p.steps[0]}};
      lifted.nodes.insert(lifted.nodes.end(), q.nodes.begin(), q.nodes.end());
      lifted.steps.insert(lifted.steps.end(), q.steps.begin(), q.steps.end());
      out.insert(lifted);
    }
  }
  // xi3: p = (e ⊙ p') · q with e ⊙ p' a loop of length split, q nontrivial
  if (!loop) {
    for (std::size_t split = 1; split < p.length(); ++split) {
      if (p.nodes[split] == x) out.insert(raw_suffix(p, split));
    }
  }
  return out;
}

/// Independent rule checker: is (before, after) a single reduction step?
inline bool derives(const RawWalk& before, const RawWalk& after) { return brute_reducts(before).contains(after); }

/// Tries every move shape; returns the applicable ones.
inline std::vector<walkmap::HomotopyMove> all_valid_moves(const RotationMap& m, const Walk& w,
                                                          std::size_t max_len) {
  std::vector<walkmap::HomotopyMove> out;
  for (const auto& f : m.faces()) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = 0; b < f.size(); ++b) {
        for (std::size_t o = 0; o <= w.length(); ++o) {
          for (auto dir : {walkmap::MoveDirection::CcwToCw, walkmap::MoveDirection::CwToCcw}) {
            walkmap::HomotopyMove mv{f.id, a, b, o, dir};
            try {
              auto next = walkmap::apply_hcollapse(m, w, mv);
              if (next.length() <= max_len) out.push_back(mv);
            } catch (const walkmap::ContractError&) {
            }
          }
        }
      }
    }
  }
  return out;
}

/// A certificate from `w` built by `moves` random valid moves.
inline walkmap::HomotopyCertificate random_certificate(const RotationMap& m, const Walk& w, std::size_t moves,
                                                       std::size_t max_len, std::mt19937& rng) {
  walkmap::HomotopyCertificate c{w, w, {}};
  for (std::size_t i = 0; i < moves; ++i) {
    auto options = all_valid_moves(m, c.target, max_len);
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    auto mv = options[pick(rng)];
    c.target = walkmap::apply_hcollapse(m, c.target, mv);
    c.moves.push_back(mv);
  }
  return c;
}

}  // namespace fixtures

#endif  // WALKMAP_TESTS_FIXTURES_HPP
