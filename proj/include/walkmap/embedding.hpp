#ifndef WALKMAP_EMBEDDING_HPP
#define WALKMAP_EMBEDDING_HPP

#include <cstddef>
#include <vector>

#include "walkmap/graph.hpp"
#include "walkmap/walk.hpp"

namespace walkmap {

/// A face: one orbit of the face-tracing permutation, listed from its
/// smallest dart.
struct Face {
  std::size_t id = 0;
  std::vector<Dart> boundary;

  std::size_t size() const { return boundary.size(); }
};

/// Raised when a rotation is not a permutation of a node's incident darts.
class RotationError : public ValidationError {
 public:
  RotationError(NodeId node, CyclicOrderVerdict verdict);

  NodeId node() const { return node_; }
  const CyclicOrderVerdict& verdict() const { return verdict_; }

 private:
  NodeId node_;
  CyclicOrderVerdict verdict_;
};

/// A rotation system: for every node, a cyclic order on the darts leaving it.
/// Faces are traced once at construction.
class RotationMap {
 public:
  /// `rotation[x]` must be a permutation of g.incident_darts(x). Throws
  /// RotationError for the first node that fails validation.
  RotationMap(Graph g, std::vector<CyclicOrder> rotation);

  /// The map whose rotation at every node is its incident darts in ascending
  /// order.
  static RotationMap with_sorted_rotation(Graph g);

  const Graph& graph() const { return graph_; }
  const CyclicOrder& rotation(NodeId x) const { return rotation_.at(x); }
  const std::vector<CyclicOrder>& rotations() const { return rotation_; }

  /// Next dart around tail(d).
  Dart rotation_successor(Dart d) const { return successor_[d.index()]; }
  /// Face-tracing successor: rotation successor of reverse(d) at head(d).
  Dart face_successor(Dart d) const { return rotation_successor(d.reversed()); }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t id) const { return faces_.at(id); }
  std::size_t face_of(Dart d) const { return face_of_[d.index()]; }
  std::size_t position_of(Dart d) const { return position_of_[d.index()]; }
  std::size_t max_face_size() const;

  /// Tail of the boundary dart at `position` of `face`.
  NodeId corner_node(std::size_t face, std::size_t position) const;

 private:
  Graph graph_;
  std::vector<CyclicOrder> rotation_;
  std::vector<Dart> successor_;
  std::vector<Face> faces_;
  std::vector<std::size_t> face_of_;
  std::vector<std::size_t> position_of_;
};

/// Orbits of the face-tracing successor, ids assigned by ascending smallest
/// dart.
std::vector<Face> trace_faces(const RotationMap& m);

/// V − E + F. An isolated node bounds one face of its own.
long euler_characteristic(const RotationMap& m);

struct BoundaryAnchor {
  std::size_t face = 0;
  std::size_t position = 0;
};

struct BoundaryWalks {
  Walk cw;
  Walk ccw;
};

/// cw reads the boundary from position a up to position b in tracing
/// order; ccw goes from a back to b against tracing order on reversed darts.
/// Both run from the corner at a to the corner at b. When a == b, cw is the
/// whole boundary loop and ccw is the trivial walk.
BoundaryWalks boundary_walks(const RotationMap& m, BoundaryAnchor a, BoundaryAnchor b);

/// Dart sequences of the two boundary walks, without building Walk values.
std::vector<Dart> cw_darts(const RotationMap& m, std::size_t face, std::size_t a, std::size_t b);
std::vector<Dart> ccw_darts(const RotationMap& m, std::size_t face, std::size_t a, std::size_t b);

}  // namespace walkmap

#endif  // WALKMAP_EMBEDDING_HPP
