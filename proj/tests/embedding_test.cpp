#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "walkmap/embedding.hpp"

using namespace walkmap;
using fixtures::fwd;
using fixtures::rev;

namespace {

// Orbits of d ↦ successor(reverse(d)) computed from the raw rotation lists.
std::set<std::set<Dart>> oracle_orbits(const RotationMap& m) {
  const Graph& g = m.graph();
  std::map<Dart, Dart> next_around;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    const auto& e = m.rotation(x).elements();
    for (std::size_t i = 0; i < e.size(); ++i) next_around[e[i]] = e[(i + 1) % e.size()];
  }
  std::set<std::set<Dart>> orbits;
  std::set<Dart> seen;
  for (std::size_t i = 0; i < g.dart_count(); ++i) {
    Dart d = Dart::from_index(i);
    if (seen.contains(d)) continue;
    std::set<Dart> orbit;
    for (Dart c = d; !orbit.contains(c); c = next_around.at(c.reversed())) orbit.insert(c);
    seen.insert(orbit.begin(), orbit.end());
    orbits.insert(orbit);
  }
  return orbits;
}

}  // namespace

TEST(Rotation, RejectsInvalidRotation) {
  Graph g = fixtures::digon();
  try {
    RotationMap(g, {CyclicOrder({fwd(0)}), CyclicOrder({rev(1), rev(0)})});
    FAIL();
  } catch (const RotationError& e) {
    EXPECT_EQ(e.node(), 0u);
    EXPECT_EQ(e.verdict().issue, CyclicOrderIssue::Missing);
    EXPECT_EQ(e.verdict().dart, fwd(1));
  }
  EXPECT_THROW(RotationMap(g, {CyclicOrder({fwd(0), fwd(1)})}), ValidationError);
}

TEST(Faces, Loop1) {
  auto m = fixtures::loop1_map();
  ASSERT_EQ(m.faces().size(), 2u);
  EXPECT_EQ(m.face(0).boundary, (std::vector<Dart>{fwd(0)}));
  EXPECT_EQ(m.face(1).boundary, (std::vector<Dart>{rev(0)}));
  EXPECT_EQ(euler_characteristic(m), 2);
}

TEST(Faces, Torus2) {
  auto m = fixtures::torus2_map();
  ASSERT_EQ(m.faces().size(), 1u);
  EXPECT_EQ(m.face(0).size(), 4u);
  EXPECT_EQ(euler_characteristic(m), 0);
}

TEST(Faces, Digon) {
  auto m = fixtures::digon_map();
  ASSERT_EQ(m.faces().size(), 2u);
  EXPECT_EQ(m.face(0).boundary, (std::vector<Dart>{fwd(0), rev(1)}));
  EXPECT_EQ(m.face(1).boundary, (std::vector<Dart>{rev(0), fwd(1)}));
  EXPECT_EQ(euler_characteristic(m), 2);
}

TEST(Faces, K4Sphere) {
  auto m = fixtures::k4sphere_map();
  EXPECT_EQ(m.faces().size(), 4u);
  for (const auto& f : m.faces()) EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(euler_characteristic(m), 2);
}

TEST(Faces, IsolatedNodeCountsAFace) {
  auto m = RotationMap::with_sorted_rotation(Graph::build(1, {}));
  EXPECT_TRUE(m.faces().empty());
  EXPECT_EQ(euler_characteristic(m), 2);
}

TEST(Faces, PartitionAndOracleOnRandomMaps) {
  std::mt19937 rng(99);
  for (int round = 0; round < 200; ++round) {
    auto m = fixtures::random_map(fixtures::random_graph(rng), rng);
    const Graph& g = m.graph();
    std::size_t total = 0;
    std::set<std::set<Dart>> orbits;
    for (const auto& f : m.faces()) {
      total += f.size();
      orbits.insert(std::set<Dart>(f.boundary.begin(), f.boundary.end()));
      EXPECT_EQ(f.boundary.front(), *std::min_element(f.boundary.begin(), f.boundary.end()));
      for (std::size_t i = 0; i < f.size(); ++i) {
        EXPECT_EQ(m.face_of(f.boundary[i]), f.id);
        EXPECT_EQ(m.position_of(f.boundary[i]), i);
        EXPECT_EQ(m.face_successor(f.boundary[i]), f.boundary[(i + 1) % f.size()]);
        EXPECT_EQ(g.head(f.boundary[i]), g.tail(f.boundary[(i + 1) % f.size()]));
      }
    }
    EXPECT_EQ(total, g.dart_count());
    EXPECT_EQ(orbits, oracle_orbits(m));
    for (std::size_t i = 1; i < m.faces().size(); ++i) EXPECT_LT(m.face(i - 1).boundary[0], m.face(i).boundary[0]);
    if (is_connected(g)) {
      long chi = euler_characteristic(m);
      EXPECT_LE(chi, 2);
      EXPECT_EQ(chi % 2, 0);
    }
  }
}

TEST(Boundary, EqualAnchors) {
  auto m = fixtures::loop1_map();
  auto b = boundary_walks(m, {0, 0}, {0, 0});
  EXPECT_EQ(b.cw.steps(), (std::vector<Dart>{fwd(0)}));
  EXPECT_EQ(b.ccw, Walk::trivial(0));
}

TEST(Boundary, DigonFace) {
  auto m = fixtures::digon_map();
  auto b = boundary_walks(m, {0, 0}, {0, 1});
  EXPECT_EQ(b.cw.steps(), (std::vector<Dart>{fwd(0)}));
  EXPECT_EQ(b.ccw.steps(), (std::vector<Dart>{fwd(1)}));
  EXPECT_EQ(b.cw.start(), 0u);
  EXPECT_EQ(b.ccw.end(), 1u);
  EXPECT_THROW(boundary_walks(m, {0, 0}, {1, 0}), ContractError);
}

TEST(Boundary, CwHalvesCoverFace) {
  for (const auto& nm : fixtures::fixture_maps()) {
    const auto& m = nm.map;
    for (const auto& f : m.faces()) {
      for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = 0; b < f.size(); ++b) {
          auto ab = boundary_walks(m, {f.id, a}, {f.id, b});
          EXPECT_EQ(ab.cw.start(), m.corner_node(f.id, a));
          EXPECT_EQ(ab.cw.end(), m.corner_node(f.id, b));
          EXPECT_EQ(ab.ccw.start(), m.corner_node(f.id, a));
          EXPECT_EQ(ab.ccw.end(), m.corner_node(f.id, b));
          EXPECT_EQ(ab.cw.steps(), cw_darts(m, f.id, a, b));
          EXPECT_EQ(ab.ccw.steps(), ccw_darts(m, f.id, a, b));
          if (a == b) continue;
          auto ba = boundary_walks(m, {f.id, b}, {f.id, a});
          auto loop = compose(ab.cw, ba.cw);
          EXPECT_EQ(std::multiset<Dart>(loop.steps().begin(), loop.steps().end()),
                    std::multiset<Dart>(f.boundary.begin(), f.boundary.end()));
        }
      }
    }
  }
}
