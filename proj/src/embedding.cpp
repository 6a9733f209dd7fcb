#include "walkmap/embedding.hpp"

#include <algorithm>

namespace walkmap {

RotationError::RotationError(NodeId node, CyclicOrderVerdict verdict)
    : ValidationError("rotation at node " + std::to_string(node) + ": " + describe(verdict)),
      node_(node),
      verdict_(verdict) {}

RotationMap::RotationMap(Graph g, std::vector<CyclicOrder> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  if (rotation_.size() != graph_.node_count()) {
    throw ValidationError("rotation lists " + std::to_string(rotation_.size()) + " nodes but the graph has " +
                          std::to_string(graph_.node_count()));
  }
  for (NodeId x = 0; x < graph_.node_count(); ++x) {
    auto verdict = validate_cyclic_order(graph_.incident_darts(x), rotation_[x]);
    if (!verdict.valid()) throw RotationError(x, verdict);
  }
  successor_.resize(graph_.dart_count());
  for (const auto& order : rotation_) {
    const auto& el = order.elements();
    for (std::size_t i = 0; i < el.size(); ++i) successor_[el[i].index()] = el[(i + 1) % el.size()];
  }
  faces_ = trace_faces(*this);
  face_of_.resize(graph_.dart_count());
  position_of_.resize(graph_.dart_count());
  for (const auto& f : faces_) {
    for (std::size_t i = 0; i < f.boundary.size(); ++i) {
      face_of_[f.boundary[i].index()] = f.id;
      position_of_[f.boundary[i].index()] = i;
    }
  }
}

RotationMap RotationMap::with_sorted_rotation(Graph g) {
  std::vector<CyclicOrder> rotation;
  for (NodeId x = 0; x < g.node_count(); ++x) rotation.emplace_back(g.incident_darts(x));
  return RotationMap(std::move(g), std::move(rotation));
}

std::size_t RotationMap::max_face_size() const {
  std::size_t best = 0;
  for (const auto& f : faces_) best = std::max(best, f.size());
  return best;
}

NodeId RotationMap::corner_node(std::size_t face, std::size_t position) const {
  const auto& f = faces_.at(face);
  if (position >= f.size()) throw ContractError("boundary position out of range");
  return graph_.tail(f.boundary[position]);
}

std::vector<Face> trace_faces(const RotationMap& m) {
  const std::size_t n = m.graph().dart_count();
  std::vector<bool> visited(n, false);
  std::vector<Face> faces;
  // Scanning darts in ascending order means each orbit is first met at its
  // smallest dart, which gives the canonical start and id.
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    Face f;
    f.id = faces.size();
    Dart d = Dart::from_index(i);
    do {
      visited[d.index()] = true;
      f.boundary.push_back(d);
      d = m.face_successor(d);
    } while (d.index() != i);
    faces.push_back(std::move(f));
  }
  return faces;
}

long euler_characteristic(const RotationMap& m) {
  const auto& g = m.graph();
  long isolated = 0;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (g.incident_darts(x).empty()) ++isolated;
  }
  return static_cast<long>(g.node_count()) - static_cast<long>(g.edge_count()) +
         static_cast<long>(m.faces().size()) + isolated;
}

std::vector<Dart> cw_darts(const RotationMap& m, std::size_t face, std::size_t a, std::size_t b) {
  const auto& boundary = m.face(face).boundary;
  const std::size_t len = boundary.size();
  if (a >= len || b >= len) throw ContractError("boundary position out of range");
  const std::size_t count = a == b ? len : (b + len - a) % len;
  std::vector<Dart> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) out.push_back(boundary[(a + t) % len]);
  return out;
}

std::vector<Dart> ccw_darts(const RotationMap& m, std::size_t face, std::size_t a, std::size_t b) {
  const auto& boundary = m.face(face).boundary;
  const std::size_t len = boundary.size();
  if (a >= len || b >= len) throw ContractError("boundary position out of range");
  const std::size_t count = (a + len - b) % len;
  std::vector<Dart> out;
  out.reserve(count);
  for (std::size_t t = 1; t <= count; ++t) out.push_back(boundary[(a + len - t) % len].reversed());
  return out;
}

BoundaryWalks boundary_walks(const RotationMap& m, BoundaryAnchor a, BoundaryAnchor b) {
  if (a.face != b.face) throw ContractError("boundary anchors lie on different faces");
  const NodeId from = m.corner_node(a.face, a.position);
  return {Walk::from_darts(m.graph(), from, cw_darts(m, a.face, a.position, b.position)),
          Walk::from_darts(m.graph(), from, ccw_darts(m, a.face, a.position, b.position))};
}

}  // namespace walkmap
