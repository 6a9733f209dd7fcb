#ifndef WALKMAP_ENUMERATION_HPP
#define WALKMAP_ENUMERATION_HPP

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "walkmap/graph.hpp"
#include "walkmap/walk.hpp"

namespace walkmap {

/// Memoized buckets qswalk(m, x, y) of quasi-simple walks of length m.
///
/// Buckets are filled by the first-step recurrence: a walk of length m+1
/// from x is a dart e out of x prepended to a bucket walk w of length m from
/// head(e) in which x is not a member. Every bucket is sorted
/// lexicographically by dart sequence. Buckets are write-once.
class QsWalkIndex {
 public:
  QsWalkIndex(const Graph& g, Universe universe);
  QsWalkIndex(Graph&&, Universe) = delete;  // keeps a pointer to the graph

  const Graph& graph() const { return *graph_; }
  Universe universe() const { return universe_; }

  const std::vector<Walk>& bucket(std::size_t m, NodeId x, NodeId y);

  /// All quasi-simple walks from x to y, by ascending length
  /// (0..node_count) and lexicographically within a length.
  std::vector<Walk> all(NodeId x, NodeId y);

 private:
  const Graph* graph_;
  Universe universe_;
  std::map<std::tuple<std::size_t, NodeId, NodeId>, std::vector<Walk>> buckets_;
};

std::vector<Walk> enumerate_qswalks_of_length(const Graph& g, std::size_t m, NodeId x, NodeId y,
                                              Universe universe = Universe::Directed);

std::vector<Walk> enumerate_all_qswalks(const Graph& g, NodeId x, NodeId y, Universe universe = Universe::Directed);

/// Number of walks (of any kind) of length n from x to y, from the
/// recurrence W(0,x,y) = [x = y], W(n+1,x,y) = Σ_{e: x→k} W(n,k,y).
/// Throws std::overflow_error past 2^64 - 1.
std::uint64_t count_walks_of_length(const Graph& g, std::size_t n, NodeId x, NodeId y,
                                    Universe universe = Universe::Directed);

/// Every walk from x to y with length <= max_len, depth-first, ordered by
/// ascending length then dart sequence.
std::vector<Walk> enumerate_walks_up_to(const Graph& g, NodeId x, NodeId y, std::size_t max_len,
                                        Universe universe = Universe::Directed);

}  // namespace walkmap

#endif  // WALKMAP_ENUMERATION_HPP
