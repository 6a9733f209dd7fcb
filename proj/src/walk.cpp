#include "walkmap/walk.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

namespace walkmap {

Walk Walk::trivial(NodeId x, Universe universe) { return Walk({x}, {}, universe); }

Walk Walk::from_darts(const Graph& g, NodeId start, std::vector<Dart> steps, Universe universe) {
  if (!g.contains(start)) throw ValidationError("walk starts at unknown node " + std::to_string(start));
  std::vector<NodeId> nodes;
  nodes.reserve(steps.size() + 1);
  nodes.push_back(start);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Dart d = steps[i];
    if (!g.contains(d)) throw ValidationError("step " + std::to_string(i) + " uses unknown edge " + to_string(d));
    if (universe == Universe::Directed && !d.is_forward()) {
      throw ValidationError("step " + std::to_string(i) + " uses reverse dart " + to_string(d) +
                            " in a directed walk");
    }
    if (g.tail(d) != nodes.back()) {
      throw ValidationError("step " + std::to_string(i) + " (" + to_string(d) + ") leaves node " +
                            std::to_string(g.tail(d)) + " but the walk is at node " + std::to_string(nodes.back()));
    }
    nodes.push_back(g.head(d));
  }
  return Walk(std::move(nodes), std::move(steps), universe);
}

Walk Walk::from_edges(const Graph& g, NodeId start, const std::vector<EdgeId>& edges) {
  std::vector<Dart> steps;
  steps.reserve(edges.size());
  for (EdgeId e : edges) steps.emplace_back(e, Orientation::Forward);
  return from_darts(g, start, std::move(steps), Universe::Directed);
}

Walk Walk::prefix(std::size_t n) const { return slice(0, n); }

Walk Walk::suffix_from(std::size_t n) const { return slice(n, length()); }

Walk Walk::slice(std::size_t from, std::size_t to) const {
  if (from > to || to > length()) throw ContractError("walk slice out of range");
  return Walk(std::vector<NodeId>(nodes_.begin() + from, nodes_.begin() + to + 1),
              std::vector<Dart>(steps_.begin() + from, steps_.begin() + to), universe_);
}

Walk Walk::prepend(const Graph& g, Dart e) const {
  if (!g.contains(e) || g.head(e) != start()) {
    throw ContractError("cannot prepend " + to_string(e) + " to a walk starting at " + std::to_string(start()));
  }
  if (universe_ == Universe::Directed && !e.is_forward()) {
    throw ContractError("cannot prepend reverse dart " + to_string(e) + " to a directed walk");
  }
  std::vector<NodeId> nodes;
  nodes.reserve(nodes_.size() + 1);
  nodes.push_back(g.tail(e));
  nodes.insert(nodes.end(), nodes_.begin(), nodes_.end());
  std::vector<Dart> steps;
  steps.reserve(steps_.size() + 1);
  steps.push_back(e);
  steps.insert(steps.end(), steps_.begin(), steps_.end());
  return Walk(std::move(nodes), std::move(steps), universe_);
}

Walk Walk::as_symmetric() const { return Walk(nodes_, steps_, Universe::Symmetric); }

Walk compose(const Walk& w1, const Walk& w2) {
  if (w1.universe() != w2.universe()) throw ContractError("cannot compose walks from different universes");
  if (w1.end() != w2.start()) {
    throw ContractError("cannot compose: first walk ends at " + std::to_string(w1.end()) +
                        " but second starts at " + std::to_string(w2.start()));
  }
  std::vector<NodeId> nodes = w1.nodes_;
  nodes.insert(nodes.end(), w2.nodes_.begin() + 1, w2.nodes_.end());
  std::vector<Dart> steps = w1.steps_;
  steps.insert(steps.end(), w2.steps_.begin(), w2.steps_.end());
  return Walk(std::move(nodes), std::move(steps), w1.universe());
}

std::size_t occurs(NodeId z, const Walk& w) {
  const auto& nodes = w.nodes();
  return static_cast<std::size_t>(std::count(nodes.begin(), nodes.end() - 1, z));
}

std::size_t membership_census(const Walk& w) {
  std::unordered_map<NodeId, std::size_t> seen;
  for (std::size_t i = 0; i < w.length(); ++i) seen.try_emplace(w.nodes()[i], 0);
  std::size_t total = 0;
  for (const auto& [z, unused] : seen) total += occurs(z, w);
  return total;
}

bool is_quasi_simple(const Walk& w) {
  // Walk the recursion bottom-up: the suffix starting at i is quasi-simple
  // iff the suffix at i+1 is and nodes[i] is not a member of it.
  const auto& nodes = w.nodes();
  for (std::size_t i = w.length(); i-- > 0;) {
    if (std::find(nodes.begin() + i + 1, nodes.end() - 1, nodes[i]) != nodes.end() - 1) return false;
  }
  return true;
}

bool is_prefix(const Walk& p, const Walk& w) {
  if (p.start() != w.start() || p.length() > w.length()) return false;
  return std::equal(p.steps().begin(), p.steps().end(), w.steps().begin());
}

Walk suffix_of(const Walk& p, const Walk& w) {
  if (!is_prefix(p, w)) throw ContractError("suffix_of: " + to_compact(p) + " is not a prefix of " + to_compact(w));
  return w.suffix_from(p.length());
}

std::optional<Split> split_at(const Walk& w, NodeId y) {
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w.nodes()[i] == y) return Split{w.prefix(i), w.suffix_from(i)};
  }
  return std::nullopt;
}

std::string to_compact(const Walk& w) {
  std::string out = std::to_string(w.start()) + ":";
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ',';
    out += to_string(w.steps()[i]);
  }
  return out;
}

std::string to_arrow(const Walk& w) {
  std::string out = "x" + std::to_string(w.start());
  for (std::size_t i = 0; i < w.length(); ++i) {
    Dart d = w.steps()[i];
    out += " -e" + std::to_string(d.edge()) + (d.is_forward() ? "> " : "< ") + "x" + std::to_string(w.nodes()[i + 1]);
  }
  return out;
}

WalkSyntaxError::WalkSyntaxError(const std::string& message, std::string text, std::size_t position)
    : ValidationError(message + " at column " + std::to_string(position + 1)),
      text_(std::move(text)),
      position_(position) {}

std::string WalkSyntaxError::caret() const { return text_ + "\n" + std::string(position_, ' ') + "^"; }

namespace {

bool parse_number(std::string_view text, std::uint32_t& value) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::optional<Dart> parse_dart(std::string_view text) {
  if (!text.empty() && text.front() == 'e') text.remove_prefix(1);
  if (text.size() < 2) return std::nullopt;
  char sign = text.back();
  if (sign != '+' && sign != '-') return std::nullopt;
  std::uint32_t edge = 0;
  if (!parse_number(text.substr(0, text.size() - 1), edge)) return std::nullopt;
  return Dart(edge, sign == '+' ? Orientation::Forward : Orientation::Reverse);
}

Walk parse_walk(const Graph& g, std::string_view text, Universe universe) {
  const std::string owned(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw WalkSyntaxError("expected ':' after the start node", owned, text.size());
  std::uint32_t start = 0;
  if (!parse_number(text.substr(0, colon), start)) throw WalkSyntaxError("expected a start node number", owned, 0);

  std::vector<Dart> steps;
  std::size_t pos = colon + 1;
  if (pos < text.size()) {
    while (true) {
      auto comma = text.find(',', pos);
      auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      auto dart = parse_dart(token);
      if (!dart) throw WalkSyntaxError("expected a dart like e3+ or e3-", owned, pos);
      steps.push_back(*dart);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return Walk::from_darts(g, start, std::move(steps), universe);
}

}  // namespace walkmap
