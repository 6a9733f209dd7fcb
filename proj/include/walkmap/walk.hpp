#ifndef WALKMAP_WALK_HPP
#define WALKMAP_WALK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walkmap/error.hpp"
#include "walkmap/graph.hpp"

namespace walkmap {

/// A walk: a start node followed by adjacency-connected darts.
///
/// The visited node sequence is cached next to the darts, so every query
/// below works without the graph. nodes()[i] is the tail of steps()[i] and
/// nodes().back() is the end. Walks are immutable values; the only ways to
/// obtain one are the checked factories and the slicing/composition
/// operations, which preserve adjacency.
class Walk {
 public:
  /// The trivial walk at node 0.
  Walk() : nodes_{0} {}

  static Walk trivial(NodeId x, Universe universe = Universe::Symmetric);

  /// Checks that every dart exists, that consecutive darts are adjacent and,
  /// for the directed universe, that every dart is forward.
  static Walk from_darts(const Graph& g, NodeId start, std::vector<Dart> steps,
                         Universe universe = Universe::Symmetric);

  /// Walk in G along forward edges.
  static Walk from_edges(const Graph& g, NodeId start, const std::vector<EdgeId>& edges);

  NodeId start() const { return nodes_.front(); }
  NodeId end() const { return nodes_.back(); }
  std::size_t length() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Universe universe() const { return universe_; }
  const std::vector<Dart>& steps() const { return steps_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }

  /// First n steps.
  Walk prefix(std::size_t n) const;
  /// Steps from position n on; suffix_from(length()) is the trivial walk at end().
  Walk suffix_from(std::size_t n) const;
  /// Steps [from, to).
  Walk slice(std::size_t from, std::size_t to) const;

  /// (e ⊙ this): requires head(e) == start().
  Walk prepend(const Graph& g, Dart e) const;

  /// Same darts viewed in U(G).
  Walk as_symmetric() const;

  bool operator==(const Walk& other) const {
    return universe_ == other.universe_ && nodes_.front() == other.nodes_.front() && steps_ == other.steps_;
  }
  auto operator<=>(const Walk& other) const {
    if (auto c = steps_.size() <=> other.steps_.size(); c != 0) return c;
    if (auto c = nodes_.front() <=> other.nodes_.front(); c != 0) return c;
    return steps_ <=> other.steps_;
  }

 private:
  Walk(std::vector<NodeId> nodes, std::vector<Dart> steps, Universe universe)
      : nodes_(std::move(nodes)), steps_(std::move(steps)), universe_(universe) {}

  friend Walk compose(const Walk&, const Walk&);

  std::vector<NodeId> nodes_;
  std::vector<Dart> steps_;
  Universe universe_ = Universe::Symmetric;
};

/// w1 · w2. Throws ContractError unless end(w1) == start(w2) and both walks
/// live in the same universe.
Walk compose(const Walk& w1, const Walk& w2);

/// Number of positions i < length(w) with nodes[i] == z. The end node's final
/// position is never counted, so occurs(z, trivial(z)) == 0.
std::size_t occurs(NodeId z, const Walk& w);

/// z ∈ w, i.e. occurs(z, w) >= 1.
inline bool is_member(NodeId z, const Walk& w) { return occurs(z, w) > 0; }

/// Σ_z occurs(z, w); always equals length(w).
std::size_t membership_census(const Walk& w);

/// Every node occurs at most once among the non-final positions. Decided by
/// peeling the first step: (e ⊙ w') is quasi-simple iff w' is and the tail of
/// e does not occur in w'.
bool is_quasi_simple(const Walk& w);

/// p's darts are an initial segment of w's and both start at the same node.
bool is_prefix(const Walk& p, const Walk& w);

/// The w2 with p · w2 == w. Throws ContractError when p is not a prefix of w.
Walk suffix_of(const Walk& p, const Walk& w);

struct Split {
  Walk prefix;
  Walk suffix;
};

/// Divides w at the first membership occurrence of y. nullopt iff y ∉ w;
/// otherwise prefix · suffix == w, end(prefix) == y and y ∉ prefix.
std::optional<Split> split_at(const Walk& w, NodeId y);

/// "3:e0+,e4-"; the trivial walk at 3 is "3:".
std::string to_compact(const Walk& w);

/// "x3 -e0> x1 -e4< x2".
std::string to_arrow(const Walk& w);

/// Raised by parse_walk; position() is the character offset of the problem.
class WalkSyntaxError : public ValidationError {
 public:
  WalkSyntaxError(const std::string& message, std::string text, std::size_t position);

  std::size_t position() const { return position_; }
  /// The input followed by a caret line pointing at position().
  std::string caret() const;

 private:
  std::string text_;
  std::size_t position_;
};

/// Parses the compact form "start:dart,dart,..." where a dart is
/// "<edge><+|->", optionally written with a leading 'e'. Syntax problems
/// raise WalkSyntaxError; well-formed text describing a non-walk (unknown
/// node or edge, broken adjacency) raises ValidationError.
Walk parse_walk(const Graph& g, std::string_view text, Universe universe = Universe::Symmetric);

/// Parses a single dart literal ("3+", "e3-").
std::optional<Dart> parse_dart(std::string_view text);

}  // namespace walkmap

#endif  // WALKMAP_WALK_HPP
