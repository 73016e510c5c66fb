#include <random>

#include "braidskein/analysis.hpp"
#include "braidskein/parallel.hpp"
#include "braidskein/resolution.hpp"
#include "doctest.h"

using namespace braidskein;

namespace {

std::vector<BraidWord> batch(std::uint64_t seed, int count, int max_len) {
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> out;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 4;
    std::uniform_int_distribution<int> g(1, n - 1), s(0, 1), len(0, max_len);
    std::vector<int> gens;
    for (int j = len(rng); j > 0; --j) gens.push_back(s(rng) ? g(rng) : -g(rng));
    out.push_back(BraidWord::from_generators(n, gens));
  }
  return out;
}

}  // namespace

TEST_CASE("parallel tree split matches the serial engine") {
  for (const auto& w : batch(21, 120, 14)) {
    const auto ref = resolve(w);
    CHECK(resolve_parallel(w) == ref);
    CHECK(resolve_parallel(w, {.min_tasks = 1}) == ref);
    CHECK(resolve_parallel(w, {.min_tasks = 1000}) == ref);
  }
}

TEST_CASE("batch resolution matches the serial batch") {
  const auto words = batch(22, 200, 12);
  const auto par = resolve_batch(words);
  const auto ser = resolve_batch_serial(words);
  REQUIRE(par.size() == words.size());
  CHECK(par == ser);
  CHECK(resolve_batch({}).empty());
}

TEST_CASE("nugatory scan matches its serial reference") {
  for (const auto& w : batch(23, 30, 9)) {
    const auto p = nugatory_scan(w), s = nugatory_scan_serial(w);
    CHECK(p.original == s.original);
    REQUIRE(p.entries.size() == s.entries.size());
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
      CHECK(p.entries[i].changed == s.entries[i].changed);
      CHECK(p.entries[i].different == s.entries[i].different);
      CHECK(p.entries[i].exponent_delta == s.entries[i].exponent_delta);
    }
  }
}

TEST_CASE("thread count is positive") { CHECK(max_threads() >= 1); }
