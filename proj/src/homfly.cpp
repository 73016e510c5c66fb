#include "braidskein/homfly.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidskein {

namespace {

std::string factor(char var, int exp) {
  std::string s(1, var);
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

HomflyPoly power_of(const HomflyPoly& base, int exp) {
  HomflyPoly r(1);
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::string format_homfly(const HomflyPoly& h) {
  if (h.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : h.terms()) {
    std::string body;
    if (e.first != 0) body = factor('l', e.first);
    if (e.second != 0) {
      if (!body.empty()) body += ' ';
      body += factor('m', e.second);
    }
    detail::append_term(out, c, body, first, "");
    first = false;
  }
  return out;
}

HomflyPoly parse_homfly(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first) == "0") return {};
  HomflyPoly h;
  for (const auto& [e, c] : detail::parse_terms(text, 'l', 'm')) h.add_term(e, c);
  return h;
}

nlohmann::json homfly_to_json(const HomflyPoly& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : h.terms()) terms.push_back({e.first, e.second, detail::integer_to_json(c)});
  return {{"text", format_homfly(h)}, {"terms", std::move(terms)}};
}

HomflyPoly homfly_delta() { return HomflyPoly::monomial(-1, 1, -1) + HomflyPoly::monomial(-1, -1, -1); }

BridgeWeights BridgeWeights::standard() {
  return BridgeWeights{HomflyPoly::monomial(-1, -2, 0), HomflyPoly::monomial(-1, -1, 1), homfly_delta()};
}

HomflyPoly to_homfly(const SkeinVector& v, const BridgeWeights& weights) {
  // Cache powers; exponents of A may be negative, so A^-1 is needed too.
  // a_image is a monomial under the standard weights, but weights supplied
  // for negative controls may not be invertible; only invert monomials.
  auto a_power = [&](int e) {
    if (e >= 0) return power_of(weights.a_image, e);
    if (weights.a_image.term_count() != 1) throw std::domain_error("A image is not invertible");
    const auto& [ex, c] = *weights.a_image.terms().begin();
    if (c != 1 && c != -1) throw std::domain_error("A image is not invertible");
    return power_of(HomflyPoly::monomial(c, -ex.first, -ex.second), -e);
  };
  HomflyPoly out;
  for (const auto& [lambda, coefficient] : v.entries()) {
    HomflyPoly entry;
    for (const auto& [e, c] : coefficient.terms()) {
      entry += a_power(e.first) * power_of(weights.b_image, e.second) * HomflyPoly::monomial(c, 0, 0);
    }
    out += entry * power_of(weights.delta, static_cast<int>(lambda.length()) - 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle: recursive skein on the closed braid. Basepoints are taken from the
// highest strand position down; a diagram in which every crossing is first
// met on its over-strand is an unlink of its c components, P = delta^(c-1).
// Otherwise the first crossing met from below is switched:
//   P(+) = -l^-2 P(-) - l^-1 m P(0),   P(-) = -l^2 P(+) - l m P(0).

namespace {

class SkeinOracle {
 public:
  explicit SkeinOracle(int strands) : strands_(strands), delta_(homfly_delta()) {}

  HomflyPoly evaluate(const std::vector<int>& gens) {
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    int components = 0;
    const int under = first_under_crossing(gens, components);
    HomflyPoly result;
    if (under < 0) {
      result = power_of(delta_, components - 1);
    } else {
      std::vector<int> switched = gens;
      switched[under] = -switched[under];
      std::vector<int> smoothed = gens;
      smoothed.erase(smoothed.begin() + under);
      const HomflyPoly p_switched = evaluate(switched);
      const HomflyPoly p_smoothed = evaluate(smoothed);
      if (gens[under] > 0) {
        result = p_switched.shifted(-2, 0, -1) + p_smoothed.shifted(-1, 1, -1);
      } else {
        result = p_switched.shifted(2, 0, -1) + p_smoothed.shifted(1, 1, -1);
      }
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  // Index of the first crossing reached along its under-strand, or -1.
  // Counts components as a side effect.
  int first_under_crossing(const std::vector<int>& gens, int& components) const {
    std::vector<bool> reached(gens.size(), false);
    std::vector<bool> top_visited(strands_ + 1, false);
    components = 0;
    for (int start = strands_; start >= 1; --start) {
      if (top_visited[start]) continue;
      ++components;
      int pos = start;
      do {
        top_visited[pos] = true;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const int g = std::abs(gens[j]);
          if (pos != g && pos != g + 1) continue;
          const bool from_left = pos == g;
          if (!reached[j]) {
            reached[j] = true;
            // s_g: left-entering strand is over; s_g^-1: right-entering strand is over.
            const bool on_over = (gens[j] > 0) ? from_left : !from_left;
            if (!on_over) return static_cast<int>(j);
          }
          pos = from_left ? g + 1 : g;
        }
      } while (pos != start);
    }
    return -1;
  }

  int strands_;
  HomflyPoly delta_;
  std::map<std::vector<int>, HomflyPoly> memo_;
};

}  // namespace

HomflyPoly homfly_oracle(const BraidWord& w) {
  SkeinOracle oracle(w.strand_count());
  return oracle.evaluate(w.signed_generators());
}

int mfw_lower_bound(const HomflyPoly& h) {
  if (h.is_zero()) throw std::invalid_argument("MFW bound of the zero polynomial");
  int lo = h.terms().begin()->first.first;
  int hi = lo;
  for (const auto& [e, c] : h.terms()) {
    lo = std::min(lo, e.first);
    hi = std::max(hi, e.first);
  }
  return (hi - lo + 1) / 2 + 1;
}

BraidIndexCertificate certify_braid_index_3(const BraidWord& w) {
  if (w.strand_count() != 3) {
    throw std::invalid_argument("braid index 3 certification needs a 3-braid, got " +
                                std::to_string(w.strand_count()) + " strands");
  }
  return mfw_lower_bound(homfly_oracle(w)) == 3 ? BraidIndexCertificate::Certified : BraidIndexCertificate::Unknown;
}

// ---------------------------------------------------------------------------

namespace {

using Laurent1 = std::map<int, Integer>;  // exponent of s = t^(1/2)

void add_to(Laurent1& p, int e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Laurent1 multiply(const Laurent1& a, const Laurent1& b) {
  Laurent1 r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_to(r, ea + eb, ca * cb);
  return r;
}

// Exact division by (s^-1 - s) = s^-1 (1 - s^2).
Laurent1 divide_by_x(const Laurent1& p) {
  if (p.empty()) return p;
  // q * (1 - s^2) = s * p. Solve for q from the lowest exponent upward.
  Laurent1 rest;
  for (const auto& [e, c] : p) rest[e + 1] = c;
  Laurent1 q;
  while (!rest.empty()) {
    const auto [e, c] = *rest.begin();
    add_to(q, e, c);
    add_to(rest, e, -c);
    add_to(rest, e + 2, c);
    if (!rest.empty() && rest.begin()->first > p.rbegin()->first + 3) {
      throw std::domain_error("HOMFLY does not specialize to a Jones Laurent polynomial");
    }
  }
  return q;
}

}  // namespace

JonesPoly jones(const HomflyPoly& h) {
  int min_m = 0;
  for (const auto& [e, c] : h.terms()) min_m = std::min(min_m, e.second);
  const int shift = -min_m;  // multiply through by x^shift, x = s^-1 - s
  const Laurent1 x{{-1, 1}, {1, -1}};
  Laurent1 total;
  for (const auto& [e, c] : h.terms()) {
    const int i_power = e.first + e.second;
    if (i_power % 2 != 0) throw std::domain_error("odd power of i in Jones specialization");
    const int sign = (((i_power / 2) % 2) + 2) % 2 == 0 ? 1 : -1;
    Laurent1 term{{-2 * e.first, sign * c}};
    for (int k = 0; k < e.second + shift; ++k) term = multiply(term, x);
    for (const auto& [te, tc] : term) add_to(total, te, tc);
  }
  for (int k = 0; k < shift; ++k) total = divide_by_x(total);
  return total;
}

std::string format_jones(const JonesPoly& j) {
  if (j.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [half, c] : j) {
    std::string body;
    if (half != 0) {
      if (half % 2 == 0) {
        body = factor('t', half / 2);
      } else {
        body = "t^(" + std::to_string(half) + "/2)";
      }
    }
    detail::append_term(out, c, body, first, "");
    first = false;
  }
  return out;
}

}  // namespace braidskein
