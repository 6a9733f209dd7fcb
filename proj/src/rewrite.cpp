#include "walkmap/rewrite.hpp"

namespace walkmap {

WalkClass classify(const Walk& w) {
  WalkClass c;
  c.loop = w.start() == w.end();
  c.trivial = w.length() == 0;
  c.non_trivial = !c.trivial;
  c.no_reduce = c.trivial || (w.length() == 1 && w.start() != w.end());
  c.non_trivial_loop = c.non_trivial && c.loop;
  return c;
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::Xi1:
      return "xi1";
    case Rule::Xi2:
      return "xi2";
    case Rule::Xi3:
      return "xi3";
  }
  return "?";
}

std::size_t ReductionStep::site() const {
  switch (rule()) {
    case Rule::Xi2:
      return lifted;
    case Rule::Xi3:
      return removed;
    case Rule::Xi1:
      break;
  }
  return 0;
}

namespace {

// Xi2 may wrap position i when its edge is not a self-loop and the walk from
// i on is not a loop.
bool liftable_at(const Walk& w, std::size_t i) {
  const auto& n = w.nodes();
  return n[i] != n[i + 1] && n[i] != w.end();
}

ReductionStep make_step(const Walk& w, std::size_t lifted, Rule core, std::size_t removed) {
  return ReductionStep{lifted, core, removed, w, apply_reduction(w, lifted, core, removed)};
}

}  // namespace

Walk apply_reduction(const Walk& w, std::size_t lifted, Rule core, std::size_t removed) {
  const auto& n = w.nodes();
  if (lifted >= w.length()) throw ContractError("reduction site beyond the walk");
  for (std::size_t i = 0; i < lifted; ++i) {
    if (!liftable_at(w, i)) throw ContractError("xi2 side condition fails at position " + std::to_string(i));
  }
  const std::size_t k = lifted;
  switch (core) {
    case Rule::Xi1:
      if (n[k] != w.end()) throw ContractError("xi1 needs a nontrivial loop");
      return w.prefix(k);
    case Rule::Xi3: {
      if (removed == 0 || k + removed >= w.length()) throw ContractError("xi3 needs a nontrivial remainder");
      if (n[k + removed] != n[k]) throw ContractError("xi3 needs the removed part to be a loop");
      if (n[k] == w.end()) throw ContractError("xi3 does not apply to loops");
      return compose(w.prefix(k), w.suffix_from(k + removed));
    }
    case Rule::Xi2:
      break;
  }
  throw ContractError("xi2 cannot be a core rule");
}

std::vector<ReductionStep> applicable_reductions(const Walk& w) {
  std::vector<ReductionStep> out;
  const auto& n = w.nodes();
  for (std::size_t k = 0; k < w.length(); ++k) {
    if (k > 0 && !liftable_at(w, k - 1)) break;
    if (n[k] == w.end()) {
      out.push_back(make_step(w, k, Rule::Xi1, 0));
      continue;  // Xi3 excludes loops
    }
    for (std::size_t len = 1; k + len < w.length(); ++len) {
      if (n[k + len] == n[k]) out.push_back(make_step(w, k, Rule::Xi3, len));
    }
  }
  return out;
}

bool is_normal(const Walk& w) { return is_quasi_simple(w) && applicable_reductions(w).empty(); }

std::optional<ReductionStep> progress(const Walk& w) {
  const auto& n = w.nodes();
  for (std::size_t k = 0; k < w.length(); ++k) {
    const NodeId x = n[k];
    if (x == w.end()) return make_step(w, k, Rule::Xi1, 0);
    // Split the remainder at the first later occurrence of x (x itself when
    // the first edge is a self-loop).
    for (std::size_t j = k + 1; j < w.length(); ++j) {
      if (n[j] == x) return make_step(w, k, Rule::Xi3, j - k);
    }
    // x never repeats: keep the edge and reduce under it.
  }
  return std::nullopt;
}

bool ReductionTrace::replays() const {
  Walk current = origin;
  for (const auto& step : steps) {
    if (!(step.before == current)) return false;
    try {
      if (!(apply_reduction(step.before, step.lifted, step.core, step.removed) == step.after)) return false;
    } catch (const ContractError&) {
      return false;
    }
    if (step.after.length() >= step.before.length()) return false;
    current = step.after;
  }
  return true;
}

Normalization normalize(const Walk& w) {
  ReductionTrace trace{w, {}};
  Walk current = w;
  while (auto step = progress(current)) {
    current = step->after;
    trace.steps.push_back(std::move(*step));
  }
  return {current, std::move(trace)};
}

ReductionTrace lift_trace(const Walk& prefix, const ReductionTrace& trace) {
  ReductionTrace out{compose(prefix, trace.origin), {}};
  for (const auto& step : trace.steps) {
    out.steps.push_back(ReductionStep{step.lifted + prefix.length(), step.core, step.removed,
                                      compose(prefix, step.before), compose(prefix, step.after)});
  }
  return out;
}

}  // namespace walkmap
