#pragma once

// Resolution of a closed braid diagram into the partition basis.
//
// A walk starts at the top of a strand position and follows the closed
// braid along its orientation. Each crossing is labelled the first time the
// walk meets it: good when the walk is on the over-strand, bad otherwise.
// The first bad crossing is resolved with b+ = A b- + B b0 (or its inverse
// b- = A^-1 b+ - A^-1 B b0), the changed crossing becomes good, and both
// children continue with the inherited labels. A diagram whose crossings are
// all good is the closure of a partition braid and contributes the basis
// vector of its cycle type.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "braidskein/braid.hpp"
#include "braidskein/skein.hpp"

namespace braidskein {

enum class Label : std::uint8_t { Unlabeled, Good, Bad };

std::string_view label_name(Label l);

class LabelMap {
 public:
  LabelMap() = default;
  /// Every crossing of `w` starts unlabeled.
  explicit LabelMap(const BraidWord& w);

  Label at(CrossingId id) const;
  void set(CrossingId id, Label l);
  bool contains(CrossingId id) const { return labels_.contains(id); }
  const std::map<CrossingId, Label>& entries() const { return labels_; }
  std::size_t count(Label l) const;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  std::map<CrossingId, Label> labels_;
};

struct Basepoint {
  int strand_position = 1;  // 1-based, top of the word
};

/// Smallest strand position whose closure component contains none of the
/// `completed` positions; nullopt once every component is completed.
std::optional<Basepoint> canonical_basepoint(const BraidWord& w, const std::set<int>& completed);

struct FirstBad {
  CrossingId id = 0;
  int sign = 1;
  int position_entered = 0;  // 1-based position at which the walk met the crossing
  std::size_t letter_index = 0;
  LabelMap labels;  // includes the good labels assigned on the way and this bad one
};

struct CompletedLabels {
  LabelMap labels;
  std::vector<int> component;  // top positions visited, in walk order
};

using TraverseResult = std::variant<FirstBad, CompletedLabels>;

/// Walks the component through `bp`, labelling unlabelled crossings and
/// stopping at the first bad one.
TraverseResult traverse(const BraidWord& w, Basepoint bp, LabelMap labels);

struct ResolveOptions {
  /// Diagnostic override for the first basepoint; later components still use
  /// the canonical rule.
  std::optional<int> first_basepoint;
};

/// Serial reference resolution.
SkeinVector resolve(const BraidWord& w, const ResolveOptions& options = {});

/// Labels every crossing from the canonical basepoints without resolving.
LabelMap label_only(const BraidWord& w, const ResolveOptions& options = {});

struct ResolutionNode {
  BraidWord word;
  std::optional<LaurentAB> incoming_edge;  // none at the root
  LaurentAB path_coefficient{1};
  LabelMap inherited_labels;  // labels the node starts its walk with
  std::optional<CrossingId> resolved_crossing;  // internal nodes only
  std::optional<Partition> leaf_partition;      // leaves only
  std::vector<ResolutionNode> children;         // zero or two

  bool is_leaf() const { return children.empty(); }
};

ResolutionNode resolution_tree(const BraidWord& w);
std::size_t leaf_count(const ResolutionNode& node);
/// Sum over leaves of path coefficient times the leaf basis vector.
SkeinVector sum_leaves(const ResolutionNode& node);

std::string format_tree(const ResolutionNode& node);
nlohmann::json tree_to_json(const ResolutionNode& node);

/// Outputs for each choice of first basepoint.
struct BasepointReport {
  std::vector<SkeinVector> outputs;  // index s-1 for first basepoint s
  bool consistent = true;
};
BasepointReport compare_basepoints(const BraidWord& w);

nlohmann::json labels_to_json(const BraidWord& w, const LabelMap& labels);
/// One line per crossing: "c<index> s<signed generator> <label>".
std::string format_labels(const BraidWord& w, const LabelMap& labels);

}  // namespace braidskein
