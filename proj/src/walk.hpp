#pragma once

// Walk kernel shared by the resolution engine, label_only and traverse.
// Works on raw letter/label arrays so the engine can mutate state cheaply.

#include <cstddef>
#include <vector>

#include "braidskein/braid.hpp"
#include "braidskein/resolution.hpp"

namespace braidskein::detail {

inline constexpr std::size_t kNoBad = static_cast<std::size_t>(-1);

struct WalkOutcome {
  std::size_t first_bad = kNoBad;
  int position_entered = 0;
  std::vector<int> component;  // 1-based top positions in walk order
};

/// Walks the closure component through top position `start`. Unlabelled
/// crossings get Good when the walk is on the over-strand and Bad otherwise.
/// Stops at the first newly assigned Bad when `stop_at_bad`.
inline WalkOutcome walk_component(const std::vector<Letter>& letters, std::vector<Label>& labels, int start,
                                  bool stop_at_bad) {
  WalkOutcome out;
  int pos = start;
  out.component.push_back(start);
  while (true) {
    for (std::size_t j = 0; j < letters.size(); ++j) {
      const Letter& l = letters[j];
      if (pos != l.generator && pos != l.generator + 1) continue;
      const bool entered_left = (pos == l.generator);
      if (labels[j] == Label::Unlabeled) {
        const bool over = entered_left == (l.sign > 0);
        labels[j] = over ? Label::Good : Label::Bad;
        if (!over && stop_at_bad) {
          out.first_bad = j;
          out.position_entered = pos;
          return out;
        }
      }
      pos = entered_left ? l.generator + 1 : l.generator;
    }
    if (pos == start) return out;
    out.component.push_back(pos);
  }
}

inline Partition cycle_type_of(int n, const std::vector<Letter>& letters) {
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[i] = i;
  for (const auto& l : letters) std::swap(at[l.generator - 1], at[l.generator]);
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[at[p]] = p;
  return cycle_type(Permutation(std::move(images)));
}

/// Basepoint order: the optional override first, then 1..n.
inline std::vector<int> basepoint_order(int n, std::optional<int> first) {
  std::vector<int> order;
  order.reserve(n + 1);
  if (first) {
    if (*first < 1 || *first > n) {
      throw std::invalid_argument("basepoint " + std::to_string(*first) + " out of range for " + std::to_string(n) +
                                  " strands");
    }
    order.push_back(*first);
  }
  for (int s = 1; s <= n; ++s) {
    if (!first || s != *first) order.push_back(s);
  }
  return order;
}

/// Signed monomial sign * A^a * B^b; every path coefficient has this shape.
struct PathMonomial {
  int sign = 1;
  int a = 0;
  int b = 0;

  PathMonomial flipped_edge(int crossing_sign) const {
    return crossing_sign > 0 ? PathMonomial{sign, a + 1, b} : PathMonomial{sign, a - 1, b};
  }
  PathMonomial smoothed_edge(int crossing_sign) const {
    return crossing_sign > 0 ? PathMonomial{sign, a, b + 1} : PathMonomial{-sign, a - 1, b + 1};
  }
};

/// Working diagram of one tree node.
struct NodeState {
  int n = 1;
  std::vector<Letter> letters;
  std::vector<Label> labels;
  PathMonomial coefficient;
};

/// Runs walks from the basepoints until one finds a bad crossing. Returns the
/// letter index of that crossing, or kNoBad when the node is a leaf.
inline std::size_t find_first_bad(NodeState& st, const std::vector<int>& order) {
  std::vector<bool> done(st.n + 1, false);
  for (int s : order) {
    if (done[s]) continue;
    WalkOutcome w = walk_component(st.letters, st.labels, s, true);
    if (w.first_bad != kNoBad) return w.first_bad;
    for (int p : w.component) done[p] = true;
  }
  return kNoBad;
}

/// Skein children of `st` at letter `j`: (crossing changed, crossing removed).
inline std::pair<NodeState, NodeState> branch(const NodeState& st, std::size_t j) {
  const int sign = st.letters[j].sign;
  NodeState changed = st;
  changed.letters[j].sign = -sign;
  changed.labels[j] = Label::Good;
  changed.coefficient = st.coefficient.flipped_edge(sign);

  NodeState removed = st;
  removed.letters.erase(removed.letters.begin() + static_cast<std::ptrdiff_t>(j));
  removed.labels.erase(removed.labels.begin() + static_cast<std::ptrdiff_t>(j));
  removed.coefficient = st.coefficient.smoothed_edge(sign);
  return {std::move(changed), std::move(removed)};
}

inline NodeState root_state(const BraidWord& w) {
  NodeState st;
  st.n = w.strand_count();
  st.letters = w.letters();
  st.labels.assign(w.size(), Label::Unlabeled);
  return st;
}

/// Depth-first serial resolution of one subtree into `out`.
inline void expand_serial(NodeState st, const std::vector<int>& order, SkeinVector& out) {
  const std::size_t bad = find_first_bad(st, order);
  if (bad == kNoBad) {
    out.add_monomial(cycle_type_of(st.n, st.letters), st.coefficient.sign, st.coefficient.a, st.coefficient.b);
    return;
  }
  auto [changed, removed] = branch(st, bad);
  expand_serial(std::move(changed), order, out);
  expand_serial(std::move(removed), order, out);
}

}  // namespace braidskein::detail
