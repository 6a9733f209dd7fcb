#include "walkmap/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "walkmap/enumeration.hpp"

namespace walkmap {

std::string to_string(MoveDirection direction) {
  return direction == MoveDirection::CcwToCw ? "ccw_to_cw" : "cw_to_ccw";
}

HomotopyMove HomotopyMove::inverse() const {
  HomotopyMove out = *this;
  out.direction = direction == MoveDirection::CcwToCw ? MoveDirection::CwToCcw : MoveDirection::CcwToCw;
  return out;
}

namespace {

std::string dart_list(const std::vector<Dart>& darts) {
  std::string out = "[";
  for (std::size_t i = 0; i < darts.size(); ++i) out += (i ? "," : "") + to_string(darts[i]);
  return out + "]";
}

void require_symmetric(const Walk& w) {
  if (w.universe() != Universe::Symmetric) throw ContractError("homotopy is defined on walks in U(G)");
}

}  // namespace

SegmentMismatch::SegmentMismatch(const HomotopyMove& move, std::vector<Dart> expected, std::vector<Dart> found)
    : ContractError("hcollapse on face " + std::to_string(move.face) + " at offset " +
                    std::to_string(move.prefix_len) + ": expected " + dart_list(expected) + ", found " +
                    dart_list(found)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Walk apply_hcollapse(const RotationMap& m, const Walk& w, const HomotopyMove& move) {
  require_symmetric(w);
  if (move.face >= m.faces().size()) throw ContractError("hcollapse names unknown face " + std::to_string(move.face));
  const bool to_cw = move.direction == MoveDirection::CcwToCw;
  auto source = to_cw ? ccw_darts(m, move.face, move.a, move.b) : cw_darts(m, move.face, move.a, move.b);
  auto replacement = to_cw ? cw_darts(m, move.face, move.a, move.b) : ccw_darts(m, move.face, move.a, move.b);

  const auto& steps = w.steps();
  const std::size_t o = move.prefix_len;
  if (o > steps.size()) throw SegmentMismatch(move, source, {});
  const std::size_t avail = std::min(source.size(), steps.size() - o);
  std::vector<Dart> found(steps.begin() + o, steps.begin() + o + avail);
  if (found != source) throw SegmentMismatch(move, source, found);
  if (w.nodes()[o] != m.corner_node(move.face, move.a)) {
    throw ContractError("hcollapse: walk is at node " + std::to_string(w.nodes()[o]) + " but the face corner is node " +
                        std::to_string(m.corner_node(move.face, move.a)));
  }
  std::vector<Dart> out(steps.begin(), steps.begin() + o);
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), steps.begin() + o + source.size(), steps.end());
  return Walk::from_darts(m.graph(), w.start(), std::move(out));
}

HomotopyCertificate hrefl(const Walk& w) { return {w, w, {}}; }

HomotopyCertificate hsym(const HomotopyCertificate& c) {
  HomotopyCertificate out{c.target, c.source, {}};
  out.moves.reserve(c.moves.size());
  for (auto it = c.moves.rbegin(); it != c.moves.rend(); ++it) out.moves.push_back(it->inverse());
  return out;
}

HomotopyCertificate htrans(const HomotopyCertificate& first, const HomotopyCertificate& second) {
  if (!(first.target == second.source)) throw ContractError("htrans: certificates do not meet");
  HomotopyCertificate out{first.source, second.target, first.moves};
  out.moves.insert(out.moves.end(), second.moves.begin(), second.moves.end());
  return out;
}

Walk replay(const RotationMap& m, const HomotopyCertificate& c) {
  Walk current = c.source;
  for (const auto& move : c.moves) {
    current = apply_hcollapse(m, current, move);
    if (current.start() != c.source.start() || current.end() != c.source.end()) {
      throw ContractError("replay moved an endpoint");
    }
  }
  return current;
}

bool replays(const RotationMap& m, const HomotopyCertificate& c) {
  try {
    return replay(m, c) == c.target;
  } catch (const Error&) {
    return false;
  }
}

HomotopyCertificate whisker(const std::optional<Walk>& left, const HomotopyCertificate& c,
                            const std::optional<Walk>& right) {
  HomotopyCertificate out = c;
  if (left) {
    out.source = compose(*left, out.source);
    out.target = compose(*left, out.target);
    for (auto& move : out.moves) move.prefix_len += left->length();
  }
  if (right) {
    out.source = compose(out.source, *right);
    out.target = compose(out.target, *right);
  }
  return out;
}

SearchBudget default_budget(const RotationMap& m) {
  return {2 * m.graph().node_count() + m.max_face_size(), 200000};
}

namespace {

struct StepsHash {
  std::size_t operator()(const std::vector<Dart>& steps) const noexcept {
    std::size_t h = steps.size();
    for (Dart d : steps) h = h * 1000003u ^ (d.index() + 0x9e3779b9u + (h << 6) + (h >> 2));
    return h;
  }
};

// Calls emit(move, offset, removed_count, replacement) for every hcollapse
// applicable to the walk whose result stays within max_len.
template <class Emit>
void for_each_move(const RotationMap& m, const std::vector<Dart>& steps, const std::vector<NodeId>& nodes,
                   std::size_t max_len, Emit&& emit) {
  const std::size_t len = steps.size();
  for (std::size_t o = 0; o <= len; ++o) {
    for (Dart corner : m.graph().incident_darts(nodes[o])) {
      const std::size_t f = m.face_of(corner);
      const std::size_t a = m.position_of(corner);
      const auto& boundary = m.face(f).boundary;
      const std::size_t L = boundary.size();

      // The walk follows the boundary forward from a: cw(a, b) -> ccw(a, b).
      for (std::size_t t = 1; t <= L && o + t <= len; ++t) {
        if (steps[o + t - 1] != boundary[(a + t - 1) % L]) break;
        if (len - t + (L - t) > max_len) continue;
        const std::size_t b = (a + t) % L;
        emit(HomotopyMove{f, a, b, o, MoveDirection::CwToCcw}, o, t, ccw_darts(m, f, a, b));
      }
      // The walk follows the boundary backward from a: ccw(a, b) -> cw(a, b).
      for (std::size_t t = 0; t < L && o + t <= len; ++t) {
        if (t > 0 && steps[o + t - 1] != boundary[(a + L - t) % L].reversed()) break;
        const std::size_t replacement = t == 0 ? L : L - t;
        if (len - t + replacement > max_len) continue;
        const std::size_t b = (a + L - t) % L;
        emit(HomotopyMove{f, a, b, o, MoveDirection::CcwToCw}, o, t, cw_darts(m, f, a, b));
      }
    }
  }
}

}  // namespace

Exploration explore_homotopies(const RotationMap& m, const Walk& root, const std::vector<Walk>& targets,
                               const SearchBudget& budget) {
  require_symmetric(root);
  std::size_t max_len = std::max(budget.max_len, root.length());
  for (const auto& t : targets) {
    require_symmetric(t);
    if (t.start() != root.start() || t.end() != root.end()) {
      throw ContractError("homotopy search needs walks with equal endpoints: " + to_compact(root) + " vs " +
                          to_compact(t));
    }
    max_len = std::max(max_len, t.length());
  }

  const Graph& g = m.graph();
  Exploration result;
  result.certificates.assign(targets.size(), std::nullopt);

  std::unordered_map<std::vector<Dart>, std::size_t, StepsHash> index;
  std::vector<std::vector<Dart>> states;
  std::vector<std::pair<std::size_t, HomotopyMove>> parent;

  std::unordered_map<std::vector<Dart>, std::vector<std::size_t>, StepsHash> wanted;
  for (std::size_t i = 0; i < targets.size(); ++i) wanted[targets[i].steps()].push_back(i);
  std::size_t remaining = targets.size();

  auto certificate_for = [&](std::size_t state, const Walk& target) {
    std::vector<HomotopyMove> moves;
    for (std::size_t s = state; s != 0; s = parent[s].first) moves.push_back(parent[s].second);
    std::reverse(moves.begin(), moves.end());
    return HomotopyCertificate{root, target, std::move(moves)};
  };
  auto visit = [&](std::size_t state) {
    auto it = wanted.find(states[state]);
    if (it == wanted.end()) return;
    for (std::size_t i : it->second) {
      result.certificates[i] = certificate_for(state, targets[i]);
      --remaining;
    }
    wanted.erase(it);
  };

  index.emplace(root.steps(), 0);
  states.push_back(root.steps());
  parent.emplace_back(0, HomotopyMove{});
  visit(0);

  std::vector<NodeId> nodes;
  bool capped = false;
  std::size_t head = 0;
  for (; head < states.size() && remaining > 0 && !capped; ++head) {
    nodes.assign(1, root.start());
    for (Dart d : states[head]) nodes.push_back(g.head(d));
    // Copy: emplacing new states may reallocate `states`.
    const std::vector<Dart> current = states[head];
    for_each_move(m, current, nodes, max_len,
                  [&](const HomotopyMove& move, std::size_t o, std::size_t removed, const std::vector<Dart>& repl) {
                    if (capped || remaining == 0) return;
                    std::vector<Dart> next(current.begin(), current.begin() + o);
                    next.insert(next.end(), repl.begin(), repl.end());
                    next.insert(next.end(), current.begin() + o + removed, current.end());
                    auto [it, inserted] = index.try_emplace(std::move(next), states.size());
                    if (!inserted) return;
                    states.push_back(it->first);
                    parent.emplace_back(head, move);
                    visit(states.size() - 1);
                    if (states.size() >= budget.max_states) capped = true;
                  });
  }
  result.states_visited = states.size();
  result.exhausted = !capped && head == states.size();
  return result;
}

ProofOutcome prove_homotopic(const RotationMap& m, const Walk& w1, const Walk& w2, const SearchBudget& budget) {
  require_symmetric(w1);
  require_symmetric(w2);
  if (w1.start() != w2.start() || w1.end() != w2.end()) {
    throw ContractError("prove_homotopic: walks " + to_compact(w1) + " and " + to_compact(w2) +
                        " do not share endpoints");
  }
  auto ex = explore_homotopies(m, w1, {w2}, budget);
  return {std::move(ex.certificates[0]), ex.states_visited, ex.exhausted};
}

ProofOutcome loop_collapse_cert(const RotationMap& m, const Walk& w, const SearchBudget& budget) {
  if (w.start() != w.end()) throw ContractError("loop_collapse_cert: " + to_compact(w) + " is not a loop");
  return prove_homotopic(m, w, Walk::trivial(w.start()), budget);
}

namespace {

class HomotopyNormalizer {
 public:
  HomotopyNormalizer(const RotationMap& m, const SearchBudget& budget) : m_(m), budget_(budget) {}

  HomotopyNormalization run(const Walk& p) {
    const std::size_t len = p.length();
    const NodeId x = p.start();
    const NodeId z = p.end();
    if (len == 0) return done(p, {p, {}}, hrefl(p));
    if (len == 1) {
      if (x != z) return done(p, {p, {}}, hrefl(p));
      return collapse_to_trivial(p, hrefl(p), p);
    }

    const Walk e = p.prefix(1);
    const NodeId y = p.nodes()[1];
    const Walk w = p.suffix_from(1);

    if (x == y) {
      auto h1 = run(w);
      if (!h1.proved()) return h1;
      if (x == z) {
        // nf(w) is a normal loop, so trivial; still collapse it explicitly.
        auto h2 = loop_collapse(h1.normal_form);
        if (!h2) return failed(p, h1.normal_form);
        auto cert = htrans(whisker(e, *h1.certificate, std::nullopt), whisker(e, *h2, std::nullopt));
        return collapse_to_trivial(p, cert, compose(e, Walk::trivial(z)));
      }
      // (e ⊙ ⟨x⟩) · w ⇝ w by Xi3, then w ⇝* nf(w).
      auto loop = loop_collapse(e);
      if (!loop) return failed(p, e);
      ReductionTrace trace{p, {{0, Rule::Xi3, 1, p, w}}};
      append(trace, h1.trace);
      return done(h1.normal_form, std::move(trace), htrans(whisker(std::nullopt, *loop, w), *h1.certificate));
    }

    if (auto split = split_at(w, x)) {
      const Walk& w1 = split->prefix;
      const Walk& w2 = split->suffix;
      auto r1 = run(w1);
      if (!r1.proved()) return r1;
      auto r2 = run(w2);
      if (!r2.proved()) return r2;
      const Walk head_loop = compose(e, r1.normal_form);
      auto h4 = loop_collapse(head_loop);
      if (!h4) return failed(p, head_loop);
      // e·w1·w2 ∼ e·nf(w1)·w2 ∼ e·nf(w1)·nf(w2) ∼ nf(w2)
      auto s1 = htrans(htrans(whisker(e, *r1.certificate, w2), whisker(head_loop, *r2.certificate, std::nullopt)),
                       whisker(std::nullopt, *h4, r2.normal_form));
      if (x == z) {
        auto s2 = loop_collapse(r2.normal_form);
        if (!s2) return failed(p, r2.normal_form);
        ReductionTrace trace{p, {{0, Rule::Xi1, 0, p, Walk::trivial(x)}}};
        return done(Walk::trivial(x), std::move(trace), htrans(s1, *s2));
      }
      ReductionTrace trace{p, {{0, Rule::Xi3, 1 + w1.length(), p, w2}}};
      append(trace, r2.trace);
      return done(r2.normal_form, std::move(trace), s1);
    }

    // x ∉ w
    auto r = run(w);
    if (!r.proved()) return r;
    auto base = whisker(e, *r.certificate, std::nullopt);
    if (x == z) return collapse_to_trivial(p, base, compose(e, r.normal_form));
    return done(compose(e, r.normal_form), lift_trace(e, r.trace), base);
  }

 private:
  std::optional<HomotopyCertificate> loop_collapse(const Walk& loop) {
    if (loop.empty()) return hrefl(loop);
    if (auto it = cache_.find(loop); it != cache_.end()) return it->second;
    auto outcome = loop_collapse_cert(m_, loop, budget_);
    cache_.emplace(loop, outcome.certificate);
    return outcome.certificate;
  }

  // p ⇝ ⟨x⟩ by Xi1; `so_far` proves p ∼ quasi_loop, which is then collapsed.
  HomotopyNormalization collapse_to_trivial(const Walk& p, const HomotopyCertificate& so_far, const Walk& quasi_loop) {
    auto c = loop_collapse(quasi_loop);
    if (!c) return failed(p, quasi_loop);
    const Walk trivial = Walk::trivial(p.start());
    ReductionTrace trace{p, {{0, Rule::Xi1, 0, p, trivial}}};
    return done(trivial, std::move(trace), htrans(so_far, *c));
  }

  static HomotopyNormalization done(Walk nf, ReductionTrace trace, HomotopyCertificate cert) {
    return {std::move(nf), std::move(trace), std::move(cert), std::nullopt};
  }

  static HomotopyNormalization failed(const Walk& p, const Walk& loop) {
    HomotopyNormalization out{p, {p, {}}, std::nullopt, std::make_pair(loop, Walk::trivial(loop.start()))};
    return out;
  }

  static void append(ReductionTrace& trace, const ReductionTrace& more) {
    trace.steps.insert(trace.steps.end(), more.steps.begin(), more.steps.end());
  }

  const RotationMap& m_;
  SearchBudget budget_;
  std::map<Walk, std::optional<HomotopyCertificate>> cache_;
};

}  // namespace

HomotopyNormalization normalize_homotopy(const RotationMap& m, const Walk& w, const SearchBudget& budget) {
  require_symmetric(w);
  auto out = HomotopyNormalizer(m, budget).run(w);
  if (!out.proved()) {
    // the rewriting half never depends on the searches
    auto n = normalize(w);
    out.normal_form = std::move(n.normal_form);
    out.trace = std::move(n.trace);
  }
  return out;
}

std::string to_string(SphericityStatus status) {
  switch (status) {
    case SphericityStatus::Spherical:
      return "spherical";
    case SphericityStatus::NotSpherical:
      return "not_spherical";
    case SphericityStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(SphericityMethod method) {
  switch (method) {
    case SphericityMethod::Quasi:
      return "quasi";
    case SphericityMethod::Bounded:
      return "bounded";
    case SphericityMethod::Euler:
      return "euler";
  }
  return "?";
}

namespace {

SphericityVerdict base_verdict(const RotationMap& m, SphericityMethod method) {
  SphericityVerdict v;
  v.method = method;
  v.euler_characteristic = euler_characteristic(m);
  v.connected = is_connected(m.graph());
  return v;
}

// Proves every walk of each group homotopic to the group's first walk.
template <class WalksFor>
SphericityVerdict check_groups(const RotationMap& m, SphericityMethod method, const SearchBudget& budget,
                               WalksFor&& walks_for) {
  SphericityVerdict v = base_verdict(m, method);
  const std::size_t n = m.graph().node_count();
  for (NodeId x = 0; x < n; ++x) {
    for (NodeId y = 0; y < n; ++y) {
      std::vector<Walk> walks = walks_for(x, y);
      if (walks.size() < 2) continue;
      const Walk root = walks.front();
      std::vector<Walk> targets(walks.begin() + 1, walks.end());
      auto ex = explore_homotopies(m, root, targets, budget);
      v.states_visited += ex.states_visited;
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!ex.certificates[i]) {
          v.status = SphericityStatus::Inconclusive;
          v.witness = std::make_pair(root, targets[i]);
          return v;
        }
        v.certificates.push_back(std::move(*ex.certificates[i]));
      }
      v.pairs_checked += walks.size() * (walks.size() - 1) / 2;
    }
  }
  v.status = SphericityStatus::Spherical;
  return v;
}

}  // namespace

SphericityVerdict check_spherical_quasi(const RotationMap& m, const SearchBudget& budget) {
  QsWalkIndex index(m.graph(), Universe::Symmetric);
  return check_groups(m, SphericityMethod::Quasi, budget, [&](NodeId x, NodeId y) { return index.all(x, y); });
}

SphericityVerdict check_spherical_bounded(const RotationMap& m, std::size_t max_len, const SearchBudget& budget) {
  SearchBudget widened = budget;
  widened.max_len = std::max(budget.max_len, max_len + m.max_face_size());
  return check_groups(m, SphericityMethod::Bounded, widened, [&](NodeId x, NodeId y) {
    return enumerate_walks_up_to(m.graph(), x, y, max_len, Universe::Symmetric);
  });
}

SphericityVerdict check_spherical_euler(const RotationMap& m) {
  SphericityVerdict v = base_verdict(m, SphericityMethod::Euler);
  if (!v.connected) {
    v.status = SphericityStatus::Inconclusive;
  } else {
    v.status = v.euler_characteristic == 2 ? SphericityStatus::Spherical : SphericityStatus::NotSpherical;
  }
  return v;
}

}  // namespace walkmap
