#pragma once

// Sparse two-variable Laurent polynomials with arbitrary-precision integer
// coefficients. Terms are kept in a map keyed by (second exponent, first
// exponent) so iteration is graded by the second variable, then the first.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidskein {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair. `first` is the primary variable (A or l), `second` the
/// grading variable (B or m).
struct Exponents {
  int first = 0;
  int second = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
  friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
    if (auto c = a.second <=> b.second; c != 0) return c;
    return a.first <=> b.first;
  }
};

/// `Policy` supplies `static void check(const Exponents&)`, called on every
/// stored monomial.
template <class Policy>
class SparsePoly2 {
 public:
  using Terms = std::map<Exponents, Integer>;

  SparsePoly2() = default;
  SparsePoly2(long long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponents{0, 0}, Integer(constant));
  }
  static SparsePoly2 monomial(Integer coefficient, int first, int second) {
    SparsePoly2 p;
    p.add_term({first, second}, std::move(coefficient));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Exponents e, const Integer& c) {
    if (c == 0) return;
    Policy::check(e);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly2& operator+=(const SparsePoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly2& operator-=(const SparsePoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly2 operator-() const {
    SparsePoly2 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend SparsePoly2 operator+(SparsePoly2 a, const SparsePoly2& b) { return a += b; }
  friend SparsePoly2 operator-(SparsePoly2 a, const SparsePoly2& b) { return a -= b; }
  friend SparsePoly2 operator*(const SparsePoly2& a, const SparsePoly2& b) {
    SparsePoly2 r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
    return r;
  }
  SparsePoly2& operator*=(const SparsePoly2& o) { return *this = *this * o; }

  /// Multiplies by sign * x^first * y^second without a general product.
  SparsePoly2 shifted(int first, int second, int sign = 1) const {
    SparsePoly2 r;
    for (const auto& [e, c] : terms_) r.add_term({e.first + first, e.second + second}, sign < 0 ? Integer(-c) : c);
    return r;
  }

  friend bool operator==(const SparsePoly2&, const SparsePoly2&) = default;

 private:
  Terms terms_;
};

namespace detail {

/// Renders `coefficient * body` as a signed term. `glue` separates a
/// non-unit coefficient from the body.
inline void append_term(std::string& out, const Integer& coefficient, const std::string& body, bool first_term,
                        const char* glue) {
  const bool negative = coefficient < 0;
  const Integer magnitude = negative ? Integer(-coefficient) : coefficient;
  if (first_term) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += magnitude.str();
  } else if (magnitude == 1) {
    out += body;
  } else {
    out += magnitude.str();
    out += glue;
    out += body;
  }
}

/// Reads a signed sum of terms such as "-2*A^-1*B + 3" or "- 2l^-2 + l^-2 m^2".
/// Factors are the two variable letters with optional integer powers,
/// separated by '*' or whitespace. Throws ParseError.
std::vector<std::pair<Exponents, Integer>> parse_terms(std::string_view text, char first_var, char second_var);

}  // namespace detail

}  // namespace braidskein
