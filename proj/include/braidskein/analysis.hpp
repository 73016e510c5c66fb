#pragma once

// Bad-crossing parity, single crossing-change scans and odd crossing-change
// checks built on the resolution engine.

#include <optional>
#include <set>
#include <vector>

#include "json.hpp"

#include "braidskein/braid.hpp"
#include "braidskein/resolution.hpp"
#include "braidskein/skein.hpp"

namespace braidskein {

struct BadCount {
  int positive_bad = 0;
  int negative_bad = 0;
  int total() const { return positive_bad + negative_bad; }

  friend bool operator==(const BadCount&, const BadCount&) = default;
};

/// Counts from label_only(w), split by the sign of the bad letter.
BadCount bad_counts(const BraidWord& w);

/// Exponent k of the unique monomial A^k free of B in a resolve output.
/// Throws MalformedVectorError unless exactly one such monomial exists and
/// its coefficient is +1.
int bfree_exponent(const SkeinVector& v);

struct ParityVerdict {
  int k = 0;
  BadCount counts;
  bool consistent() const { return k == counts.positive_bad - counts.negative_bad; }
};

/// Reads k from the resolved vector and p, n from the labels independently.
ParityVerdict parity_consistency(const BraidWord& w);

struct NugatoryEntry {
  std::size_t letter_index = 0;  // 0-based
  CrossingId id = 0;
  SkeinVector changed{1};
  bool different = true;
  int exponent_delta = 0;  // k(changed) - k(original)
};

struct NugatoryScanReport {
  BraidWord word;
  SkeinVector original{1};
  std::vector<NugatoryEntry> entries;

  bool all_different() const;
};

/// Resolves every single crossing change of w (in parallel) and compares
/// each with resolve(w).
NugatoryScanReport nugatory_scan(const BraidWord& w);
/// Serial reference for nugatory_scan.
NugatoryScanReport nugatory_scan_serial(const BraidWord& w);

struct OddChangeVerdict {
  BraidWord changed_word;
  SkeinVector original{1};
  SkeinVector changed{1};
  int k_original = 0;
  int k_changed = 0;
  bool different = true;
};

/// Changes every crossing in `ids` and compares outputs. Throws MoveError
/// for an empty set or an unknown id.
OddChangeVerdict odd_change_check(const BraidWord& w, const std::set<CrossingId>& ids);

nlohmann::json nugatory_to_json(const NugatoryScanReport& r, std::optional<bool> certified);
nlohmann::json odd_change_to_json(const BraidWord& w, const OddChangeVerdict& v);

}  // namespace braidskein
