#ifndef WALKMAP_HOMOTOPY_HPP
#define WALKMAP_HOMOTOPY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walkmap/embedding.hpp"
#include "walkmap/rewrite.hpp"
#include "walkmap/walk.hpp"

namespace walkmap {

enum class MoveDirection { CcwToCw, CwToCcw };

std::string to_string(MoveDirection direction);

/// One face deformation: in a walk w1 · seg · w2 with length(w1) ==
/// prefix_len, replace the boundary walk seg between positions a and b of
/// `face` with the boundary walk going the other way round. CcwToCw expects
/// ccw(a, b) at the offset and writes cw(a, b); CwToCcw is its inverse.
struct HomotopyMove {
  std::size_t face = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t prefix_len = 0;
  MoveDirection direction = MoveDirection::CcwToCw;

  HomotopyMove inverse() const;
  bool operator==(const HomotopyMove&) const = default;
};

/// apply_hcollapse found something other than the expected segment.
class SegmentMismatch : public ContractError {
 public:
  SegmentMismatch(const HomotopyMove& move, std::vector<Dart> expected, std::vector<Dart> found);

  const std::vector<Dart>& expected() const { return expected_; }
  const std::vector<Dart>& found() const { return found_; }

 private:
  std::vector<Dart> expected_;
  std::vector<Dart> found_;
};

Walk apply_hcollapse(const RotationMap& m, const Walk& w, const HomotopyMove& move);

/// Evidence that source ∼ target: the moves, applied in order to source,
/// produce target. Certificates are not canonical; compare them by replay.
struct HomotopyCertificate {
  Walk source;
  Walk target;
  std::vector<HomotopyMove> moves;
};

HomotopyCertificate hrefl(const Walk& w);
/// Reversed move list with every direction flipped.
HomotopyCertificate hsym(const HomotopyCertificate& c);
/// Requires first.target == second.source.
HomotopyCertificate htrans(const HomotopyCertificate& first, const HomotopyCertificate& second);

/// Applies every move, checking that each intermediate walk keeps the
/// source's endpoints. Returns the final walk; throws on a bad move.
Walk replay(const RotationMap& m, const HomotopyCertificate& c);
/// replay() succeeds and lands exactly on c.target.
bool replays(const RotationMap& m, const HomotopyCertificate& c);

/// Certificate for left · source · right ∼ left · target · right. Missing
/// sides are treated as trivial walks.
HomotopyCertificate whisker(const std::optional<Walk>& left, const HomotopyCertificate& c,
                            const std::optional<Walk>& right);

struct SearchBudget {
  std::size_t max_len = 0;  // walks longer than this are never generated
  std::size_t max_states = 200000;
};

/// max_len = 2·node_count + largest face boundary; max_states = 200000.
SearchBudget default_budget(const RotationMap& m);

struct ProofOutcome {
  std::optional<HomotopyCertificate> certificate;
  std::size_t states_visited = 0;
  /// True when every walk reachable within max_len was visited, i.e. the
  /// search was not cut short by max_states. Still not a disproof.
  bool exhausted = false;

  bool proved() const { return certificate.has_value(); }
};

/// Breadth-first search over hcollapse moves (both directions, every face,
/// anchor pair and offset) starting at w1. The length bound is raised to
/// cover w1 and w2 themselves.
ProofOutcome prove_homotopic(const RotationMap& m, const Walk& w1, const Walk& w2, const SearchBudget& budget);

/// prove_homotopic(w, trivial(start)) for a loop w.
ProofOutcome loop_collapse_cert(const RotationMap& m, const Walk& w, const SearchBudget& budget);

/// Single search from `root` towards many targets at once. certificates[i]
/// proves root ∼ targets[i] when the search reached it.
struct Exploration {
  std::vector<std::optional<HomotopyCertificate>> certificates;
  std::size_t states_visited = 0;
  bool exhausted = false;
};

Exploration explore_homotopies(const RotationMap& m, const Walk& root, const std::vector<Walk>& targets,
                               const SearchBudget& budget);

struct HomotopyNormalization {
  Walk normal_form;
  ReductionTrace trace;
  std::optional<HomotopyCertificate> certificate;  // w ∼ normal_form
  /// Set instead of certificate when a loop collapse could not be proved:
  /// the loop and the trivial walk it should collapse to.
  std::optional<std::pair<Walk, Walk>> failed_subgoal;

  bool proved() const { return certificate.has_value(); }
};

/// Normal form, reduction trace and homotopy certificate built together by
/// strong induction on length: the trace matches normalize(w) and the
/// certificate is assembled from whiskered sub-certificates plus loop
/// collapses of quasi-simple loops.
HomotopyNormalization normalize_homotopy(const RotationMap& m, const Walk& w, const SearchBudget& budget);

enum class SphericityStatus { Spherical, NotSpherical, Inconclusive };
enum class SphericityMethod { Quasi, Bounded, Euler };

std::string to_string(SphericityStatus status);
std::string to_string(SphericityMethod method);

struct SphericityVerdict {
  SphericityStatus status = SphericityStatus::Inconclusive;
  SphericityMethod method = SphericityMethod::Euler;
  long euler_characteristic = 0;
  bool connected = true;
  /// Unordered pairs of distinct walks shown homotopic.
  std::size_t pairs_checked = 0;
  std::size_t states_visited = 0;
  /// The first pair left unproven.
  std::optional<std::pair<Walk, Walk>> witness;
  /// For each node pair, every walk w other than the group's first walk r
  /// gets a certificate r ∼ w; any pair follows by hsym/htrans.
  std::vector<HomotopyCertificate> certificates;
};

/// Every pair of quasi-simple walks in U(G) sharing endpoints.
SphericityVerdict check_spherical_quasi(const RotationMap& m, const SearchBudget& budget);

/// Every pair of walks in U(G) of length <= max_len sharing endpoints. The
/// search bound is at least max_len + the largest face boundary.
SphericityVerdict check_spherical_bounded(const RotationMap& m, std::size_t max_len, const SearchBudget& budget);

/// χ = 2 on a connected map. Disconnected maps are Inconclusive.
SphericityVerdict check_spherical_euler(const RotationMap& m);

}  // namespace walkmap

#endif  // WALKMAP_HOMOTOPY_HPP
