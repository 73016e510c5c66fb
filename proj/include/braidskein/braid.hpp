#pragma once

// Braid words on n strands, their underlying permutations, the partition
// basis braids and the isotopy / Markov moves acting on words.
//
// Words are read top to bottom. The closure joins each bottom endpoint to the
// top endpoint in the same position. At a positive letter s_i the strand that
// enters at position i passes over the strand entering at position i+1; at
// s_i^-1 it passes under.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidskein/errors.hpp"

namespace braidskein {

using CrossingId = std::uint64_t;

/// Returns a fresh crossing identifier. Identifiers are never reused within a
/// process and minting is thread safe.
CrossingId mint_crossing_id();

struct Letter {
  int generator = 1;  // i in s_i, 1-based
  int sign = 1;       // +1 or -1
  CrossingId id = 0;

  int signed_generator() const { return sign * generator; }
};

class BraidWord {
 public:
  /// Trivial braid on `strands` strands.
  explicit BraidWord(int strands = 1);
  /// Validates generator ranges, signs and id uniqueness.
  BraidWord(int strands, std::vector<Letter> letters);

  /// Builds a word from signed generator indices, minting ids in letter order.
  static BraidWord from_generators(int strands, std::span<const int> signed_gens);
  static BraidWord from_generators(int strands, std::initializer_list<int> signed_gens);

  int strand_count() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  std::optional<std::size_t> index_of(CrossingId id) const;
  std::vector<int> signed_generators() const;
  std::vector<CrossingId> crossing_ids() const;

  /// Diagram equality: strand count and signed letters. Crossing ids are ignored.
  friend bool operator==(const BraidWord& a, const BraidWord& b);

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Parses "n : i1 i2 ... ik". Positive ij is s_ij, negative is its inverse.
BraidWord parse_word(std::string_view text);
/// Inverse of parse_word: "n: i1 i2 ... ik", or "n:" for the empty word.
std::string format_word(const BraidWord& w);

class Partition {
 public:
  Partition() = default;
  /// Parts are sorted into non-increasing order; all must be positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  std::size_t length() const { return parts_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; the canonical listing order is the reverse.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

/// Orders partitions reverse-lexicographically: (3) before (2,1) before (1,1,1).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// "(2,1)" style rendering.
std::string format_partition(const Partition& p);

/// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);

class Permutation {
 public:
  /// images[p] is the 0-based image of position p.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// 1-based image of 1-based position.
  int operator()(int position) const { return images_[position - 1] + 1; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Follows each top position down through the word: the image of p is the
/// bottom position reached from top position p.
Permutation permutation(const BraidWord& w);
Partition cycle_type(const Permutation& p);

/// v_lambda: descending blocks s_{k-1} ... s_1 placed side by side.
BraidWord basis_braid(const Partition& lambda, int n);

// ---------------------------------------------------------------------------
// Moves. Every move returns a new word; untouched letters keep their ids.
// ---------------------------------------------------------------------------

/// Cancels adjacent s_i s_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// True when apply_braid_relation_at(w, position) would succeed.
bool braid_relation_applies(const BraidWord& w, std::size_t position);
/// Far commutation s_i s_j -> s_j s_i (|i-j| > 1) or the braid relation
/// s_i^a s_j^b s_i^c -> s_j^c s_i^b s_j^a (|i-j| = 1) starting at `position`.
/// Commutation takes precedence when both could apply.
BraidWord apply_braid_relation_at(const BraidWord& w, std::size_t position);

/// Moves the first k letters (mod length) to the back.
BraidWord cyclic_rotate(const BraidWord& w, std::size_t k);
/// a w a^-1. The letters of a and a^-1 receive fresh ids.
BraidWord conjugate_by(const BraidWord& w, const BraidWord& a);
/// Appends s_n^sign and adds a strand.
BraidWord stabilize(const BraidWord& w, int sign);
/// Removes a final s_{n-1}^{+-1} that is the only use of generator n-1.
BraidWord destabilize(const BraidWord& w);
/// Flips the sign of one crossing, keeping its id.
BraidWord change_crossing(const BraidWord& w, CrossingId id);
/// Inverse braid: reversed letters with flipped signs, fresh ids.
BraidWord inverse(const BraidWord& w);
/// Concatenation; ids of `b` are re-minted if they collide with ids in `a`.
BraidWord concatenate(const BraidWord& a, const BraidWord& b);

}  // namespace braidskein
