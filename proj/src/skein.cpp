#include "braidskein/skein.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

namespace braidskein {

namespace {

std::string power(char var, int exp) {
  std::string s(1, var);
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

Partition parse_partition(std::string_view text) {
  const std::string t = trim(text);
  if (t.size() < 3 || t.front() != '(' || t.back() != ')') throw ParseError("bad partition '" + t + "'");
  std::vector<int> parts;
  std::string_view body(t);
  body = body.substr(1, body.size() - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const std::string piece = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("bad partition part '" + piece + "' in '" + t + "'");
    }
    parts.push_back(std::stoi(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) throw ParseError("partition '" + t + "' is not non-increasing");
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string format_laurent(const LaurentAB& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string body;
    if (e.first != 0) body = power('A', e.first);
    if (e.second != 0) {
      if (!body.empty()) body += '*';
      body += power('B', e.second);
    }
    detail::append_term(out, c, body, first, "*");
    first = false;
  }
  return out;
}

LaurentAB parse_laurent(std::string_view text) {
  const std::string t = trim(text);
  if (t == "0") return {};
  LaurentAB p;
  try {
    for (const auto& [e, c] : detail::parse_terms(t, 'A', 'B')) p.add_term(e, c);
  } catch (const RingDomainError& e) {
    throw ParseError(std::string("coefficient outside the ring: ") + e.what());
  }
  return p;
}

// ---------------------------------------------------------------------------

SkeinVector::SkeinVector(int ambient_n) : n_(ambient_n) {
  if (ambient_n < 1) throw DimensionError("ambient strand count must be at least 1");
}

SkeinVector SkeinVector::singleton(const Partition& lambda, int ambient_n) {
  SkeinVector v(ambient_n);
  v.add(lambda, LaurentAB(1));
  return v;
}

void SkeinVector::check_key(const Partition& lambda) const {
  if (lambda.size() != n_) {
    throw DimensionError("partition " + format_partition(lambda) + " is not a partition of " + std::to_string(n_));
  }
}

LaurentAB SkeinVector::coefficient(const Partition& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? LaurentAB{} : it->second;
}

void SkeinVector::add(const Partition& lambda, const LaurentAB& c) {
  check_key(lambda);
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SkeinVector::add_monomial(const Partition& lambda, int sign, int a_exp, int b_exp) {
  check_key(lambda);
  auto it = entries_.try_emplace(lambda).first;
  it->second.add_term({a_exp, b_exp}, Integer(sign));
  if (it->second.is_zero()) entries_.erase(it);
}

SkeinVector& SkeinVector::operator+=(const SkeinVector& o) {
  if (o.n_ != n_) {
    throw DimensionError("cannot add vectors over " + std::to_string(n_) + " and " + std::to_string(o.n_) +
                         " strands");
  }
  for (const auto& [lambda, c] : o.entries_) add(lambda, c);
  return *this;
}

SkeinVector SkeinVector::operator-() const {
  SkeinVector r(n_);
  for (const auto& [lambda, c] : entries_) r.entries_.emplace(lambda, -c);
  return r;
}

SkeinVector SkeinVector::scaled(const LaurentAB& c) const {
  SkeinVector r(n_);
  for (const auto& [lambda, x] : entries_) r.add(lambda, x * c);
  return r;
}

std::string format_vector(const SkeinVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : v.entries()) {
    if (!out.empty()) out += " ; ";
    out += format_partition(lambda) + ": " + format_laurent(c);
  }
  return out;
}

SkeinVector parse_vector(std::string_view text, int ambient_n) {
  SkeinVector v(ambient_n);
  const std::string t = trim(text);
  if (t == "0") return v;
  std::size_t start = 0;
  while (true) {
    const auto semi = t.find(';', start);
    const std::string entry = trim(std::string_view(t).substr(start, semi == std::string::npos ? t.npos : semi - start));
    const auto close = entry.find(')');
    if (close == std::string::npos || close + 1 >= entry.size() || entry[close + 1] != ':') {
      throw ParseError("bad vector entry '" + entry + "'");
    }
    const Partition lambda = parse_partition(std::string_view(entry).substr(0, close + 1));
    if (v.entries().contains(lambda)) throw ParseError("repeated partition in '" + t + "'");
    const LaurentAB c = parse_laurent(std::string_view(entry).substr(close + 2));
    if (c.is_zero()) throw ParseError("zero coefficient stored for " + format_partition(lambda));
    try {
      v.add(lambda, c);
    } catch (const DimensionError& e) {
      throw ParseError(e.what());
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return v;
}

namespace detail {

nlohmann::json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("coefficient must be an integer or decimal string");
}

}  // namespace detail

nlohmann::json vector_to_json(const SkeinVector& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [lambda, c] : v.entries()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, k] : c.terms()) terms.push_back({e.first, e.second, detail::integer_to_json(k)});
    entries.push_back({{"partition", lambda.parts()}, {"terms", std::move(terms)}});
  }
  return {{"ambient_n", v.ambient_n()}, {"entries", std::move(entries)}};
}

SkeinVector vector_from_json(const nlohmann::json& j) {
  try {
    SkeinVector v(j.at("ambient_n").get<int>());
    for (const auto& entry : j.at("entries")) {
      const Partition lambda(entry.at("partition").get<std::vector<int>>());
      LaurentAB c;
      for (const auto& t : entry.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw ParseError("term must be [a, b, coefficient]");
        c.add_term({t[0].get<int>(), t[1].get<int>()}, detail::integer_from_json(t[2]));
      }
      v.add(lambda, c);
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad vector JSON: ") + e.what());
  } catch (const RingDomainError& e) {
    throw ParseError(std::string("bad vector JSON: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string("bad vector JSON: ") + e.what());
  }
}

}  // namespace braidskein
