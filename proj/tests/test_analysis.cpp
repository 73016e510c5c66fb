#include <random>

#include "braidskein/analysis.hpp"
#include "braidskein/errors.hpp"
#include "braidskein/resolution.hpp"
#include "doctest.h"

using namespace braidskein;

TEST_CASE("bad counts") {
  CHECK(bad_counts(parse_word("2: 1 1 1")) == BadCount{1, 0});
  CHECK(bad_counts(parse_word("3: 1 -2 1 -2")) == BadCount{0, 1});
  CHECK(bad_counts(parse_word("3: 2 1")).total() == 0);
  CHECK(bad_counts(parse_word("2: -1 -1")) == BadCount{0, 1});
}

TEST_CASE("B-free exponent") {
  CHECK(bfree_exponent(resolve(parse_word("2: 1 1 1"))) == 1);
  CHECK(bfree_exponent(resolve(parse_word("3: 1 -2 1 -2"))) == -1);
  CHECK(bfree_exponent(resolve(parse_word("4:"))) == 0);
  CHECK_THROWS_AS(bfree_exponent(parse_vector("(2): B", 2)), MalformedVectorError);
  CHECK_THROWS_AS(bfree_exponent(parse_vector("(2): 2*A", 2)), MalformedVectorError);
  CHECK_THROWS_AS(bfree_exponent(parse_vector("(2): A ; (1,1): 1", 2)), MalformedVectorError);
  CHECK_THROWS_AS(bfree_exponent(SkeinVector(3)), MalformedVectorError);
}

TEST_CASE("parity of the B-free exponent") {
  std::mt19937_64 rng(30);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + i % 3;
    std::uniform_int_distribution<int> g(1, n - 1), s(0, 1);
    std::vector<int> gens;
    for (int j = 0; j < i % 11; ++j) gens.push_back(s(rng) ? g(rng) : -g(rng));
    const auto w = BraidWord::from_generators(n, gens);
    const auto v = parity_consistency(w);
    CHECK(v.consistent());
    CHECK(v.counts == bad_counts(w));
  }
}

TEST_CASE("nugatory scan") {
  const auto one = nugatory_scan(parse_word("2: 1"));
  REQUIRE(one.entries.size() == 1);
  CHECK(format_vector(one.entries[0].changed) == "(2): A^-1 ; (1,1): -A^-1*B");
  CHECK(one.entries[0].different);
  CHECK(one.entries[0].exponent_delta == -1);

  const auto fig8 = nugatory_scan(parse_word("3: 1 -2 1 -2"));
  CHECK(fig8.all_different());
  CHECK(fig8.entries.size() == 4);
  CHECK(fig8.entries[1].exponent_delta == 1);

  // s1 s1^-1 is a diagram whose two crossings can be changed together
  // without changing the link, but each single change alters the output.
  const auto pair = nugatory_scan(parse_word("2: 1 -1"));
  CHECK(pair.all_different());

  const auto j = nugatory_to_json(fig8, true);
  CHECK(j["entries"].size() == 4);
  CHECK(j["braid_index_3_certified"] == true);
  CHECK(nugatory_to_json(fig8, std::nullopt)["braid_index_3_certified"].is_null());
}

TEST_CASE("odd crossing changes") {
  const auto w = parse_word("3: 1 -2 1 -2");
  const auto v = odd_change_check(w, {w[0].id});
  CHECK(format_word(v.changed_word) == "3: -1 -2 1 -2");
  CHECK(v.k_original == -1);
  CHECK(v.k_changed == -2);
  CHECK(v.different);
  const auto three = odd_change_check(w, {w[0].id, w[1].id, w[2].id});
  CHECK(format_word(three.changed_word) == "3: -1 2 -1 -2");
  CHECK(three.different);
  CHECK(odd_change_to_json(w, v)["verdict"] == "different");
  CHECK_THROWS_AS(odd_change_check(w, {}), MoveError);
  CHECK_THROWS_AS(odd_change_check(w, {0}), MoveError);
}
