#pragma once

// Test-only oracle for resolve(): computes the image of a braid word in the
// cocenter H_n / [H_n, H_n] of the Iwahori-Hecke algebra with T^2 = B T + A,
// working in the standard basis {T_w : w in S_n}.
//
// Reduction to the partition basis uses cyclic shifts: if s x s has the same
// length as x then T_x and T_{sxs} agree in the cocenter; if it is two
// shorter then T_x = B T_{sx} + A T_{sxs} there. An element admitting
// neither is of minimal length in its conjugacy class and maps to the basis
// vector of its cycle type. Shares nothing with the walk-based engine.

#include <map>
#include <set>
#include <vector>

#include "braidskein/braid.hpp"
#include "braidskein/skein.hpp"

namespace braidskein::oracle {

using Perm = std::vector<int>;  // 0-based one-line notation

inline int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  return inv;
}

/// w * s_i, i 0-based: swap entries i and i+1.
inline Perm right_mult(Perm w, int i) {
  std::swap(w[i], w[i + 1]);
  return w;
}
/// s_i * w: swap the values i and i+1.
inline Perm left_mult(Perm w, int i) {
  for (auto& v : w) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return w;
}

using HeckeElement = std::map<Perm, LaurentAB>;

inline void accumulate(HeckeElement& h, const Perm& w, const LaurentAB& c) {
  if (c.is_zero()) return;
  auto& slot = h[w];
  slot += c;
  if (slot.is_zero()) h.erase(w);
}

/// h * T_{s_i}^{sign}
inline HeckeElement times_generator(const HeckeElement& h, int i, int sign) {
  HeckeElement out;
  for (const auto& [w, c] : h) {
    const Perm ws = right_mult(w, i);
    const bool up = w[i] < w[i + 1];
    if (sign > 0) {
      if (up) {
        accumulate(out, ws, c);
      } else {  // T_w T_s = B T_w + A T_{ws}
        accumulate(out, w, c * units::B());
        accumulate(out, ws, c * units::A());
      }
    } else {
      // T_s^-1 = A^-1 T_s - A^-1 B
      if (up) {
        accumulate(out, ws, c * units::A_inv());
        accumulate(out, w, c * units::neg_A_inv_B());
      } else {
        // T_w T_s^-1 = T_{ws} T_s T_s^-1 = T_{ws}
        accumulate(out, ws, c);
      }
    }
  }
  return out;
}

inline Partition perm_cycle_type(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(parts);
}

class CocenterOracle {
 public:
  explicit CocenterOracle(int n) : n_(n) {}

  SkeinVector image(const BraidWord& word) {
    Perm id(n_);
    for (int i = 0; i < n_; ++i) id[i] = i;
    HeckeElement h{{id, LaurentAB(1)}};
    for (const auto& l : word.letters()) h = times_generator(h, l.generator - 1, l.sign);
    SkeinVector out(n_);
    for (const auto& [w, c] : h) out += reduce(w).scaled(c);
    return out;
  }

  const SkeinVector& reduce(const Perm& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    SkeinVector result(n_);
    // Explore the equal-length cyclic shift class of w.
    std::set<Perm> seen{w};
    std::vector<Perm> frontier{w};
    const int len = perm_length(w);
    bool reduced = false;
    while (!frontier.empty() && !reduced) {
      Perm x = frontier.back();
      frontier.pop_back();
      for (int i = 0; i + 1 < n_ && !reduced; ++i) {
        const Perm sxs = left_mult(right_mult(x, i), i);
        const int l2 = perm_length(sxs);
        if (l2 == len - 2) {
          const Perm sx = left_mult(x, i);
          result += reduce(sx).scaled(units::B());
          result += reduce(sxs).scaled(units::A());
          reduced = true;
        } else if (l2 == len && seen.insert(sxs).second) {
          frontier.push_back(sxs);
        }
      }
    }
    if (!reduced) result = SkeinVector::singleton(perm_cycle_type(w), n_);
    return memo_.emplace(w, std::move(result)).first->second;
  }

 private:
  int n_;
  std::map<Perm, SkeinVector> memo_;
};

}  // namespace braidskein::oracle
