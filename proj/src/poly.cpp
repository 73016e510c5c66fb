#include "braidskein/poly.hpp"

#include <cctype>

#include "braidskein/errors.hpp"

namespace braidskein::detail {

namespace {

std::pair<Exponents, Integer> parse_one(std::string_view term, bool negative, char first_var, char second_var) {
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < term.size() && std::isspace(static_cast<unsigned char>(term[i]))) ++i;
  };
  skip_space();
  Integer coefficient = 1;
  bool saw_anything = false;
  const std::size_t digits_start = i;
  while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
  if (i > digits_start) {
    coefficient = Integer(std::string(term.substr(digits_start, i - digits_start)));
    saw_anything = true;
  }
  Exponents e;
  bool expect_factor = false;
  while (true) {
    skip_space();
    if (i < term.size() && term[i] == '*') {
      ++i;
      expect_factor = true;
      continue;
    }
    if (i == term.size()) break;
    const char var = term[i];
    if (var != first_var && var != second_var) {
      throw ParseError("unexpected character '" + std::string(1, var) + "' in term '" + std::string(term) + "'");
    }
    ++i;
    int power = 1;
    if (i < term.size() && term[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < term.size() && (term[i] == '-' || term[i] == '+')) ++i;
      while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
      const std::string digits(term.substr(start, i - start));
      if (digits.empty() || digits == "-" || digits == "+") {
        throw ParseError("missing exponent in term '" + std::string(term) + "'");
      }
      power = std::stoi(digits);
    }
    (var == first_var ? e.first : e.second) += power;
    saw_anything = true;
    expect_factor = false;
  }
  if (!saw_anything || expect_factor) throw ParseError("incomplete term '" + std::string(term) + "'");
  return {e, negative ? Integer(-coefficient) : coefficient};
}

}  // namespace

std::vector<std::pair<Exponents, Integer>> parse_terms(std::string_view text, char first_var, char second_var) {
  std::vector<std::pair<Exponents, Integer>> out;
  std::size_t start = 0;
  bool negative = false;
  // A '+' or '-' separates terms unless it is the sign of an exponent.
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if ((ch == '+' || ch == '-') && (i == 0 || text[i - 1] != '^')) {
      if (i == 0 || text.substr(start, i - start).find_first_not_of(" \t") == std::string_view::npos) {
        if (!out.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
        negative = (ch == '-');
      } else {
        out.push_back(parse_one(text.substr(start, i - start), negative, first_var, second_var));
        negative = (ch == '-');
      }
      start = i + 1;
    }
  }
  std::string_view tail = text.substr(start);
  if (tail.find_first_not_of(" \t") == std::string_view::npos) {
    throw ParseError("empty term in '" + std::string(text) + "'");
  }
  out.push_back(parse_one(tail, negative, first_var, second_var));
  return out;
}

}  // namespace braidskein::detail
