#ifndef WALKMAP_REWRITE_HPP
#define WALKMAP_REWRITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "walkmap/walk.hpp"

namespace walkmap {

struct WalkClass {
  bool loop = false;              // start == end
  bool trivial = false;           // length 0
  bool non_trivial = false;       // length >= 1
  bool no_reduce = false;         // trivial, or one step between distinct nodes
  bool non_trivial_loop = false;  // length >= 1 and start == end
};

WalkClass classify(const Walk& w);

/// The three loop-reduction rules.
///   Xi1: a nontrivial loop reduces to the trivial walk at its endpoint.
///   Xi2: (e ⊙ p) reduces to (e ⊙ q) when p reduces to q, provided e is not
///        a self-loop and (e ⊙ p) is not a loop.
///   Xi3: (e ⊙ p) · q reduces to q when e ⊙ p is a loop, q is nontrivial and
///        the whole walk is not a loop.
enum class Rule { Xi1, Xi2, Xi3 };

std::string to_string(Rule rule);

/// One reduction step before ⇝ after.
///
/// Every derivation is `lifted` applications of Xi2 around a core Xi1 or
/// Xi3 step; the core acts on before.suffix_from(lifted). For a Xi3 core,
/// `removed` is the length of the deleted leading loop.
struct ReductionStep {
  std::size_t lifted = 0;
  Rule core = Rule::Xi1;
  std::size_t removed = 0;
  Walk before;
  Walk after;

  /// Outermost rule of the derivation.
  Rule rule() const { return lifted > 0 ? Rule::Xi2 : core; }
  /// Xi2: preserved leading-edge count. Xi3: removed loop length. Xi1: 0.
  std::size_t site() const;
};

/// Recomputes the reduct of `w` for the derivation described by
/// (lifted, core, removed), checking every side condition on the way.
/// Throws ContractError if the derivation does not apply.
Walk apply_reduction(const Walk& w, std::size_t lifted, Rule core, std::size_t removed);

/// Every one-step reduct of w, ordered by lifting depth, Xi1 before Xi3,
/// then by removed loop length. Empty iff no rule applies.
std::vector<ReductionStep> applicable_reductions(const Walk& w);

/// Quasi-simple and irreducible.
bool is_normal(const Walk& w);

/// The first step of the deterministic strategy, or nullopt when w is normal.
///
/// Strategy, on the suffix starting after the Xi2-preserved prefix: a
/// nontrivial loop takes Xi1; otherwise the leading loop up to the first
/// repeat of the head node is removed by Xi3; if the head never repeats the
/// first edge is kept (Xi2) and the strategy recurses on the rest.
std::optional<ReductionStep> progress(const Walk& w);

struct ReductionTrace {
  Walk origin;
  std::vector<ReductionStep> steps;

  const Walk& result() const { return steps.empty() ? origin : steps.back().after; }
  /// Steps are chained from origin and each re-applies via apply_reduction.
  bool replays() const;
};

struct Normalization {
  Walk normal_form;
  ReductionTrace trace;
};

/// Iterates progress() until done. Terminates because each step strictly
/// shortens the walk.
Normalization normalize(const Walk& w);

/// Reduction trace prefixed with one Xi2 lift per dart of `prefix`:
/// turns a trace of w into a trace of prefix · w.
ReductionTrace lift_trace(const Walk& prefix, const ReductionTrace& trace);

}  // namespace walkmap

#endif  // WALKMAP_REWRITE_HPP
