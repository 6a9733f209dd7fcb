#ifndef WALKMAP_GRAPH_HPP
#define WALKMAP_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace walkmap {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class Orientation : std::uint8_t { Forward, Reverse };

/// An oriented edge of the symmetrised graph.
///
/// Darts are totally ordered by (edge, orientation) with the forward dart
/// first; that order is the one used for canonical face ids and for the
/// lexicographic enumeration order.
class Dart {
 public:
  constexpr Dart() = default;
  constexpr Dart(EdgeId edge, Orientation orientation)
      : code_(edge * 2u + (orientation == Orientation::Reverse ? 1u : 0u)) {}

  static constexpr Dart from_index(std::size_t index) {
    Dart d;
    d.code_ = static_cast<std::uint32_t>(index);
    return d;
  }

  constexpr EdgeId edge() const { return code_ >> 1; }
  constexpr Orientation orientation() const {
    return (code_ & 1u) ? Orientation::Reverse : Orientation::Forward;
  }
  constexpr bool is_forward() const { return (code_ & 1u) == 0; }
  constexpr Dart reversed() const { return from_index(code_ ^ 1u); }
  constexpr std::size_t index() const { return code_; }

  constexpr auto operator<=>(const Dart&) const = default;

 private:
  std::uint32_t code_ = 0;
};

/// "e3+" / "e3-".
std::string to_string(Dart d);

struct EdgeRecord {
  EdgeId id;
  NodeId source;
  NodeId target;

  bool is_loop() const { return source == target; }
  bool operator==(const EdgeRecord&) const = default;
};

/// Which graph a walk lives in: G itself (forward darts only) or its
/// symmetrisation U(G) (both orientations).
enum class Universe : std::uint8_t { Directed, Symmetric };

/// A finite directed multigraph with dense node and edge identifiers.
/// Parallel edges and self-loops are allowed. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edge ids are assigned in input order. Throws ValidationError naming the
  /// first edge with an endpoint >= node_count.
  static Graph build(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edge_list);
  static Graph build(std::size_t node_count, std::initializer_list<std::pair<NodeId, NodeId>> edge_list) {
    return build(node_count, std::span<const std::pair<NodeId, NodeId>>(edge_list.begin(), edge_list.size()));
  }

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return 2 * edges_.size(); }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const EdgeRecord& edge(EdgeId id) const;

  bool contains(NodeId x) const { return x < node_count_; }
  bool contains(Dart d) const { return d.edge() < edges_.size(); }

  NodeId tail(Dart d) const;
  NodeId head(Dart d) const;

  /// Darts whose tail is x, in ascending dart order. A self-loop at x
  /// contributes both of its darts.
  const std::vector<Dart>& incident_darts(NodeId x) const;

  /// Darts a walk may take out of x: forward darts only for the directed
  /// universe, every incident dart for the symmetric one.
  std::vector<Dart> steps_from(NodeId x, Universe universe) const;

  bool operator==(const Graph& other) const {
    return node_count_ == other.node_count_ && edges_ == other.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<Dart>> incident_;
};

/// The dart universe of U(G): every dart, in index order (2·|E| entries).
std::vector<Dart> symmetrise(const Graph& g);

/// Undirected connectivity. The empty graph counts as connected.
bool is_connected(const Graph& g);

/// A cyclic order on a set of darts: elements[i+1] follows elements[i] and
/// the first element follows the last.
class CyclicOrder {
 public:
  CyclicOrder() = default;
  explicit CyclicOrder(std::vector<Dart> elements) : elements_(std::move(elements)) {}

  const std::vector<Dart>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool operator==(const CyclicOrder&) const = default;

 private:
  std::vector<Dart> elements_;
};

enum class CyclicOrderIssue { None, Duplicate, Missing, Foreign };

struct CyclicOrderVerdict {
  CyclicOrderIssue issue = CyclicOrderIssue::None;
  std::optional<Dart> dart;  // offending dart, when there is one

  bool valid() const { return issue == CyclicOrderIssue::None; }
};

/// Accepts iff `order` lists each dart of `darts_at_node` exactly once and
/// nothing else. Duplicates are reported before foreign darts, foreign darts
/// before missing ones.
CyclicOrderVerdict validate_cyclic_order(std::span<const Dart> darts_at_node, const CyclicOrder& order);

std::string describe(const CyclicOrderVerdict& verdict);

}  // namespace walkmap

template <>
struct std::hash<walkmap::Dart> {
  std::size_t operator()(walkmap::Dart d) const noexcept { return std::hash<std::size_t>{}(d.index()); }
};

#endif  // WALKMAP_GRAPH_HPP
