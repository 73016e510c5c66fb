#pragma once

// Word-level instances of the exchange and flype templates, and searches
// over them.

#include <utility>
#include <vector>

#include "json.hpp"

#include "braidskein/braid.hpp"
#include "braidskein/skein.hpp"

namespace braidskein {

/// s1^a s2^b s1^c s2^eps on three strands; negative powers use inverses.
struct FlypeInstance {
  int a = 0;
  int b = 0;
  int c = 0;
  int epsilon = 1;
};

/// Weighted-strand multiplicities of a flype template.
struct TemplateWeights {
  int w = 0;
  int k = 0;
  int w_prime = 0;
  int k_prime = 0;
};

/// u and v are braids on the first n-1 strands of an n-braid.
struct ExchangeInstance {
  std::vector<int> u;  // signed generators
  std::vector<int> v;
};

using WordPair = std::pair<BraidWord, BraidWord>;

/// (s1^a s2^b s1^c s2^eps, s1^a s2^eps s1^c s2^b)
WordPair flype_pair(const FlypeInstance& f);
/// (u s_{n-1} v s_{n-1}^-1, u s_{n-1}^-1 v s_{n-1}). Throws MoveError when u
/// or v uses a generator outside 1..n-2.
WordPair exchange_pair(const ExchangeInstance& e, int n);

/// w' - k = k' - w >= 0
bool admissible(const TemplateWeights& t);
/// The 3-braid flype template has a single strand on every weighted arc.
TemplateWeights template_weights(const FlypeInstance& f);

/// All flype instances with |a|, |b|, |c| <= max_power and eps = +-1.
std::vector<FlypeInstance> flype_instances(int max_power);
/// All words over the generators 1..max_generator (both signs) of length <= max_len.
std::vector<std::vector<int>> block_words(int max_generator, int max_len);

struct PairCheck {
  WordPair pair;
  SkeinVector first_output{1};
  SkeinVector second_output{1};
  bool outputs_equal = true;
  bool homfly_equal = true;
  bool is_knot = false;
};

/// Resolves both sides and compares them with each other and with the HOMFLY
/// oracle.
PairCheck check_pair(const WordPair& pair);

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t output_mismatches = 0;
  std::size_t homfly_mismatches = 0;
  std::size_t odd_bad_difference = 0;  // exchange only: bad totals differ by an odd number
  std::vector<PairCheck> failures;     // first few offending pairs
};

/// Flype invariance over flype_instances(max_power), in parallel.
SweepSummary flype_sweep(int max_power);
/// Exchange invariance over all u, v with |u|, |v| <= max_len on n strands.
SweepSummary exchange_sweep(int n, int max_len);

struct DivergenceReport {
  int n = 4;
  int max_block_len = 0;
  std::size_t instances = 0;
  std::vector<PairCheck> diverging;
  bool any_knot = false;
  bool all_same_link_type = true;
};

/// Exchange pairs on n strands whose resolve outputs differ.
DivergenceReport search_exchange_divergence(int n, int max_block_len);

nlohmann::json pair_check_to_json(const PairCheck& c);
nlohmann::json sweep_to_json(const SweepSummary& s, const char* kind);
nlohmann::json divergence_to_json(const DivergenceReport& r, std::size_t max_listed);

}  // namespace braidskein
