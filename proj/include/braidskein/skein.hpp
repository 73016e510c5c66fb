#pragma once

// The coefficient ring Z[A^+-1, B] and vectors over the partition basis.

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "braidskein/braid.hpp"
#include "braidskein/errors.hpp"
#include "braidskein/poly.hpp"

namespace braidskein {

struct NonNegativeB {
  static void check(const Exponents& e) {
    if (e.second < 0) throw RingDomainError("negative power of B (B^" + std::to_string(e.second) + ")");
  }
};

/// Exponents.first is the power of A, Exponents.second the power of B.
using LaurentAB = SparsePoly2<NonNegativeB>;

namespace units {
inline LaurentAB A() { return LaurentAB::monomial(1, 1, 0); }
inline LaurentAB A_inv() { return LaurentAB::monomial(1, -1, 0); }
inline LaurentAB B() { return LaurentAB::monomial(1, 0, 1); }
/// -A^-1 B, the smoothing coefficient for a negative crossing.
inline LaurentAB neg_A_inv_B() { return LaurentAB::monomial(-1, -1, 1); }
}  // namespace units

/// "A + B^2", "-A^-1*B", "2*A^3*B", "1", "0".
std::string format_laurent(const LaurentAB& p);
LaurentAB parse_laurent(std::string_view text);

/// An element of V_n written in the basis of closed partition braids.
class SkeinVector {
 public:
  using Entries = std::map<Partition, LaurentAB, CanonicalOrder>;

  explicit SkeinVector(int ambient_n);
  static SkeinVector singleton(const Partition& lambda, int ambient_n);

  int ambient_n() const { return n_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  /// Zero polynomial for absent keys.
  LaurentAB coefficient(const Partition& lambda) const;

  void add(const Partition& lambda, const LaurentAB& c);
  /// Adds sign * A^a B^b to the lambda entry.
  void add_monomial(const Partition& lambda, int sign, int a_exp, int b_exp);

  SkeinVector& operator+=(const SkeinVector& o);
  friend SkeinVector operator+(SkeinVector a, const SkeinVector& b) { return a += b; }
  SkeinVector operator-() const;
  SkeinVector scaled(const LaurentAB& c) const;

  friend bool operator==(const SkeinVector&, const SkeinVector&) = default;

 private:
  void check_key(const Partition& lambda) const;

  int n_;
  Entries entries_;
};

/// "(2): A + B^2 ; (1,1): A*B". The zero vector formats as "0".
std::string format_vector(const SkeinVector& v);
/// Inverse of format_vector; `ambient_n` is needed to read back "0".
SkeinVector parse_vector(std::string_view text, int ambient_n);

/// {"ambient_n": n, "entries": [{"partition": [...], "terms": [[a, b, c], ...]}]}
/// Entries appear in canonical partition order, terms graded by b then a.
/// Coefficients are JSON integers when they fit in 64 bits, decimal strings
/// otherwise.
nlohmann::json vector_to_json(const SkeinVector& v);
SkeinVector vector_from_json(const nlohmann::json& j);

namespace detail {
nlohmann::json integer_to_json(const Integer& c);
Integer integer_from_json(const nlohmann::json& j);
}  // namespace detail

}  // namespace braidskein
