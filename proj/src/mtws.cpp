#include "braidskein/mtws.hpp"

#include <cstdlib>

#include "braidskein/analysis.hpp"
#include "braidskein/homfly.hpp"
#include "braidskein/resolution.hpp"

namespace braidskein {

namespace {

void append_power(std::vector<int>& gens, int generator, int power) {
  for (int i = 0; i < std::abs(power); ++i) gens.push_back(power > 0 ? generator : -generator);
}

constexpr std::size_t kMaxRecordedFailures = 8;

}  // namespace

WordPair flype_pair(const FlypeInstance& f) {
  if (f.epsilon != 1 && f.epsilon != -1) throw MoveError("flype crossing sign must be +1 or -1");
  std::vector<int> left, right;
  append_power(left, 1, f.a);
  append_power(left, 2, f.b);
  append_power(left, 1, f.c);
  append_power(left, 2, f.epsilon);
  append_power(right, 1, f.a);
  append_power(right, 2, f.epsilon);
  append_power(right, 1, f.c);
  append_power(right, 2, f.b);
  return {BraidWord::from_generators(3, left), BraidWord::from_generators(3, right)};
}

WordPair exchange_pair(const ExchangeInstance& e, int n) {
  if (n < 3) throw MoveError("exchange moves need at least 3 strands");
  for (const auto* block : {&e.u, &e.v}) {
    for (int g : *block) {
      if (g == 0 || std::abs(g) > n - 2) {
        throw MoveError("exchange block letter " + std::to_string(g) + " outside generators 1.." +
                        std::to_string(n - 2));
      }
    }
  }
  std::vector<int> first = e.u, second = e.u;
  first.push_back(n - 1);
  second.push_back(-(n - 1));
  first.insert(first.end(), e.v.begin(), e.v.end());
  second.insert(second.end(), e.v.begin(), e.v.end());
  first.push_back(-(n - 1));
  second.push_back(n - 1);
  return {BraidWord::from_generators(n, first), BraidWord::from_generators(n, second)};
}

bool admissible(const TemplateWeights& t) {
  return t.w_prime - t.k == t.k_prime - t.w && t.w_prime - t.k >= 0;
}

TemplateWeights template_weights(const FlypeInstance&) { return TemplateWeights{1, 1, 1, 1}; }

std::vector<FlypeInstance> flype_instances(int max_power) {
  std::vector<FlypeInstance> out;
  for (int a = -max_power; a <= max_power; ++a)
    for (int b = -max_power; b <= max_power; ++b)
      for (int c = -max_power; c <= max_power; ++c)
        for (int eps : {1, -1}) out.push_back({a, b, c, eps});
  return out;
}

std::vector<std::vector<int>> block_words(int max_generator, int max_len) {
  std::vector<int> letters;
  for (int g = 1; g <= max_generator; ++g) {
    letters.push_back(g);
    letters.push_back(-g);
  }
  std::vector<std::vector<int>> out{{}};
  if (letters.empty()) return out;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int l : letters) {
        next.push_back(w);
        next.back().push_back(l);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

PairCheck check_pair(const WordPair& pair) {
  PairCheck c{pair, resolve(pair.first), resolve(pair.second), true, true, false};
  c.outputs_equal = c.first_output == c.second_output;
  c.homfly_equal = homfly_oracle(pair.first) == homfly_oracle(pair.second);
  c.is_knot = cycle_type(permutation(pair.first)).length() == 1;
  return c;
}

namespace {

SweepSummary sweep(const std::vector<WordPair>& pairs, bool check_bad_parity) {
  SweepSummary s;
  s.instances = pairs.size();
  std::vector<PairCheck> checks(pairs.size());
  std::vector<char> odd(pairs.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    checks[i] = check_pair(pairs[i]);
    if (check_bad_parity) {
      const int diff = bad_counts(pairs[i].first).total() - bad_counts(pairs[i].second).total();
      odd[i] = (diff % 2) != 0;
    }
  }
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const bool failed = !checks[i].outputs_equal || !checks[i].homfly_equal || odd[i];
    s.output_mismatches += !checks[i].outputs_equal;
    s.homfly_mismatches += !checks[i].homfly_equal;
    s.odd_bad_difference += odd[i] != 0;
    if (failed && s.failures.size() < kMaxRecordedFailures) s.failures.push_back(checks[i]);
  }
  return s;
}

}  // namespace

SweepSummary flype_sweep(int max_power) {
  std::vector<WordPair> pairs;
  for (const auto& f : flype_instances(max_power)) pairs.push_back(flype_pair(f));
  return sweep(pairs, false);
}

SweepSummary exchange_sweep(int n, int max_len) {
  const auto blocks = block_words(n - 2, max_len);
  std::vector<WordPair> pairs;
  pairs.reserve(blocks.size() * blocks.size());
  for (const auto& u : blocks)
    for (const auto& v : blocks) pairs.push_back(exchange_pair({u, v}, n));
  return sweep(pairs, true);
}

DivergenceReport search_exchange_divergence(int n, int max_block_len) {
  DivergenceReport r;
  r.n = n;
  r.max_block_len = max_block_len;
  const auto blocks = block_words(n - 2, max_block_len);
  std::vector<WordPair> pairs;
  for (const auto& u : blocks)
    for (const auto& v : blocks) pairs.push_back(exchange_pair({u, v}, n));
  r.instances = pairs.size();

  std::vector<SkeinVector> first(pairs.size(), SkeinVector(n)), second(pairs.size(), SkeinVector(n));
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    first[i] = resolve(pairs[i].first);
    second[i] = resolve(pairs[i].second);
  }
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(first[i] == second[i])) hits.push_back(i);
  }
  r.diverging.resize(hits.size());
  const auto hit_count = static_cast<std::ptrdiff_t>(hits.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t h = 0; h < hit_count; ++h) {
    const std::size_t i = hits[h];
    PairCheck c{pairs[i], first[i], second[i], false, true, false};
    c.homfly_equal = homfly_oracle(pairs[i].first) == homfly_oracle(pairs[i].second);
    c.is_knot = cycle_type(permutation(pairs[i].first)).length() == 1;
    r.diverging[h] = std::move(c);
  }
  for (const auto& c : r.diverging) {
    r.any_knot = r.any_knot || c.is_knot;
    r.all_same_link_type = r.all_same_link_type && c.homfly_equal;
  }
  return r;
}

nlohmann::json pair_check_to_json(const PairCheck& c) {
  return {{"first", format_word(c.pair.first)},
          {"second", format_word(c.pair.second)},
          {"first_output", format_vector(c.first_output)},
          {"second_output", format_vector(c.second_output)},
          {"outputs_equal", c.outputs_equal},
          {"homfly_equal", c.homfly_equal},
          {"knot", c.is_knot}};
}

nlohmann::json sweep_to_json(const SweepSummary& s, const char* kind) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : s.failures) failures.push_back(pair_check_to_json(f));
  return {{"kind", kind},
          {"instances", s.instances},
          {"output_mismatches", s.output_mismatches},
          {"homfly_mismatches", s.homfly_mismatches},
          {"odd_bad_difference", s.odd_bad_difference},
          {"failures", std::move(failures)}};
}

nlohmann::json divergence_to_json(const DivergenceReport& r, std::size_t max_listed) {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < r.diverging.size() && i < max_listed; ++i) {
    pairs.push_back(pair_check_to_json(r.diverging[i]));
  }
  return {{"n", r.n},
          {"max_block_len", r.max_block_len},
          {"instances", r.instances},
          {"diverging_count", r.diverging.size()},
          {"any_knot", r.any_knot},
          {"all_same_link_type", r.all_same_link_type},
          {"pairs", std::move(pairs)}};
}

}  // namespace braidskein
