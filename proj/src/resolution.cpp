#include "braidskein/resolution.hpp"

#include <sstream>

#include "walk.hpp"

namespace braidskein {

using detail::kNoBad;
using detail::NodeState;

std::string_view label_name(Label l) {
  switch (l) {
    case Label::Good:
      return "good";
    case Label::Bad:
      return "bad";
    case Label::Unlabeled:
      break;
  }
  return "unlabeled";
}

LabelMap::LabelMap(const BraidWord& w) {
  for (const auto& l : w.letters()) labels_.emplace(l.id, Label::Unlabeled);
}

Label LabelMap::at(CrossingId id) const {
  auto it = labels_.find(id);
  if (it == labels_.end()) throw std::out_of_range("crossing id " + std::to_string(id) + " has no label entry");
  return it->second;
}

void LabelMap::set(CrossingId id, Label l) {
  auto it = labels_.find(id);
  if (it == labels_.end()) throw std::out_of_range("crossing id " + std::to_string(id) + " has no label entry");
  if (it->second == Label::Good && l != Label::Good) {
    throw std::logic_error("crossing " + std::to_string(id) + " is already good");
  }
  it->second = l;
}

std::size_t LabelMap::count(Label l) const {
  std::size_t c = 0;
  for (const auto& [id, x] : labels_) c += (x == l);
  return c;
}

namespace {

std::vector<Label> labels_for(const BraidWord& w, const LabelMap& m) {
  std::vector<Label> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) out.push_back(m.contains(l.id) ? m.at(l.id) : Label::Unlabeled);
  return out;
}

LabelMap to_label_map(const BraidWord& w, const std::vector<Label>& labels) {
  LabelMap m(w);
  for (std::size_t j = 0; j < w.size(); ++j) m.set(w[j].id, labels[j]);
  return m;
}

std::vector<int> component_of(const BraidWord& w, int start) {
  const Permutation p = permutation(w);
  std::vector<int> out{start};
  for (int s = p(start); s != start; s = p(s)) out.push_back(s);
  return out;
}

}  // namespace

std::optional<Basepoint> canonical_basepoint(const BraidWord& w, const std::set<int>& completed) {
  const int n = w.strand_count();
  std::vector<bool> blocked(n + 1, false);
  for (int c : completed) {
    if (c < 1 || c > n) throw std::invalid_argument("completed position " + std::to_string(c) + " out of range");
    for (int s : component_of(w, c)) blocked[s] = true;
  }
  for (int s = 1; s <= n; ++s) {
    if (!blocked[s]) return Basepoint{s};
  }
  return std::nullopt;
}

TraverseResult traverse(const BraidWord& w, Basepoint bp, LabelMap labels) {
  if (bp.strand_position < 1 || bp.strand_position > w.strand_count()) {
    throw std::invalid_argument("basepoint " + std::to_string(bp.strand_position) + " out of range");
  }
  std::vector<Label> raw = labels_for(w, labels);
  const auto outcome = detail::walk_component(w.letters(), raw, bp.strand_position, true);
  if (outcome.first_bad != kNoBad) {
    const Letter& l = w[outcome.first_bad];
    return FirstBad{l.id, l.sign, outcome.position_entered, outcome.first_bad, to_label_map(w, raw)};
  }
  return CompletedLabels{to_label_map(w, raw), outcome.component};
}

SkeinVector resolve(const BraidWord& w, const ResolveOptions& options) {
  const auto order = detail::basepoint_order(w.strand_count(), options.first_basepoint);
  SkeinVector out(w.strand_count());
  detail::expand_serial(detail::root_state(w), order, out);
  return out;
}

LabelMap label_only(const BraidWord& w, const ResolveOptions& options) {
  const auto order = detail::basepoint_order(w.strand_count(), options.first_basepoint);
  std::vector<Label> raw(w.size(), Label::Unlabeled);
  std::vector<bool> done(w.strand_count() + 1, false);
  for (int s : order) {
    if (done[s]) continue;
    const auto outcome = detail::walk_component(w.letters(), raw, s, false);
    for (int p : outcome.component) done[p] = true;
  }
  return to_label_map(w, raw);
}

// ---------------------------------------------------------------------------

namespace {

LaurentAB as_laurent(const detail::PathMonomial& m) { return LaurentAB::monomial(m.sign, m.a, m.b); }

ResolutionNode build_node(NodeState st, const std::vector<int>& order, std::optional<LaurentAB> edge) {
  ResolutionNode node{BraidWord(st.n, st.letters), std::move(edge), as_laurent(st.coefficient), {}, {}, {}, {}};
  node.inherited_labels = to_label_map(node.word, st.labels);
  const std::size_t bad = detail::find_first_bad(st, order);
  if (bad == kNoBad) {
    node.leaf_partition = detail::cycle_type_of(st.n, st.letters);
    return node;
  }
  node.resolved_crossing = st.letters[bad].id;
  const int sign = st.letters[bad].sign;
  auto [changed, removed] = detail::branch(st, bad);
  node.children.push_back(build_node(std::move(changed), order, sign > 0 ? units::A() : units::A_inv()));
  node.children.push_back(build_node(std::move(removed), order, sign > 0 ? units::B() : units::neg_A_inv_B()));
  return node;
}

void sum_into(const ResolutionNode& node, SkeinVector& out) {
  if (node.is_leaf()) {
    out.add(*node.leaf_partition, node.path_coefficient);
    return;
  }
  for (const auto& c : node.children) sum_into(c, out);
}

void format_into(const ResolutionNode& node, int depth, std::ostringstream& os) {
  os << std::string(2 * depth, ' ');
  if (node.incoming_edge) os << "[" << format_laurent(*node.incoming_edge) << "] ";
  os << format_word(node.word);
  if (node.is_leaf()) {
    os << "  => " << format_partition(*node.leaf_partition) << " x " << format_laurent(node.path_coefficient);
  } else {
    const auto idx = node.word.index_of(*node.resolved_crossing);
    os << "  resolve c" << (*idx + 1);
  }
  os << '\n';
  for (const auto& c : node.children) format_into(c, depth + 1, os);
}

}  // namespace

ResolutionNode resolution_tree(const BraidWord& w) {
  const auto order = detail::basepoint_order(w.strand_count(), std::nullopt);
  return build_node(detail::root_state(w), order, std::nullopt);
}

std::size_t leaf_count(const ResolutionNode& node) {
  if (node.is_leaf()) return 1;
  std::size_t c = 0;
  for (const auto& ch : node.children) c += leaf_count(ch);
  return c;
}

SkeinVector sum_leaves(const ResolutionNode& node) {
  SkeinVector out(node.word.strand_count());
  sum_into(node, out);
  return out;
}

std::string format_tree(const ResolutionNode& node) {
  std::ostringstream os;
  format_into(node, 0, os);
  return os.str();
}

nlohmann::json tree_to_json(const ResolutionNode& node) {
  nlohmann::json j;
  j["word"] = format_word(node.word);
  j["edge"] = node.incoming_edge ? nlohmann::json(format_laurent(*node.incoming_edge)) : nlohmann::json(nullptr);
  j["path_coefficient"] = format_laurent(node.path_coefficient);
  if (node.is_leaf()) {
    j["partition"] = node.leaf_partition->parts();
  } else {
    j["resolved_letter"] = *node.word.index_of(*node.resolved_crossing) + 1;
    j["children"] = nlohmann::json::array();
    for (const auto& c : node.children) j["children"].push_back(tree_to_json(c));
  }
  return j;
}

BasepointReport compare_basepoints(const BraidWord& w) {
  BasepointReport report;
  for (int s = 1; s <= w.strand_count(); ++s) {
    report.outputs.push_back(resolve(w, ResolveOptions{s}));
    if (!(report.outputs.back() == report.outputs.front())) report.consistent = false;
  }
  return report;
}

nlohmann::json labels_to_json(const BraidWord& w, const LabelMap& labels) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t j = 0; j < w.size(); ++j) {
    arr.push_back({{"crossing", j + 1},
                   {"generator", w[j].signed_generator()},
                   {"label", std::string(label_name(labels.at(w[j].id)))}});
  }
  return {{"word", format_word(w)}, {"labels", std::move(arr)}};
}

std::string format_labels(const BraidWord& w, const LabelMap& labels) {
  std::string out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    out += "c" + std::to_string(j + 1) + " s" + std::to_string(w[j].signed_generator()) + " " +
           std::string(label_name(labels.at(w[j].id))) + "\n";
  }
  return out;
}

}  // namespace braidskein
