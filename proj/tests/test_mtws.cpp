#include "braidskein/errors.hpp"
#include "braidskein/mtws.hpp"
#include "doctest.h"

using namespace braidskein;

TEST_CASE("flype pairs") {
  const auto p = flype_pair({1, 2, -1, 1});
  CHECK(format_word(p.first) == "3: 1 2 2 -1 2");
  CHECK(format_word(p.second) == "3: 1 2 -1 2 2");
  const auto q = flype_pair({0, -1, 0, -1});
  CHECK(format_word(q.first) == "3: -2 -2");
  CHECK_THROWS_AS(flype_pair({1, 1, 1, 2}), MoveError);
  CHECK(flype_instances(1).size() == 54);
  CHECK(flype_instances(0).size() == 2);
}

TEST_CASE("exchange pairs") {
  const auto p = exchange_pair({{1}, {-1}}, 3);
  CHECK(format_word(p.first) == "3: 1 2 -1 -2");
  CHECK(format_word(p.second) == "3: 1 -2 -1 2");
  CHECK(format_word(exchange_pair({{}, {}}, 4).first) == "4: 3 -3");
  CHECK_THROWS_AS(exchange_pair({{2}, {}}, 3), MoveError);
  CHECK_THROWS_AS(exchange_pair({{}, {}}, 2), MoveError);
}

TEST_CASE("template admissibility") {
  CHECK(admissible({1, 1, 1, 1}));
  CHECK(admissible({2, 1, 3, 4}));
  CHECK_FALSE(admissible({2, 1, 1, 1}));
  CHECK_FALSE(admissible({1, 2, 1, 0}));
  CHECK(admissible(template_weights({1, 2, 3, -1})));
}

TEST_CASE("block words") {
  CHECK(block_words(1, 2).size() == 7);
  CHECK(block_words(2, 3).size() == 85);
  CHECK(block_words(0, 3).size() == 1);
}

TEST_CASE("flype and exchange sweeps are clean") {
  const auto f = flype_sweep(2);
  CHECK(f.instances == 250);
  CHECK(f.output_mismatches == 0);
  CHECK(f.homfly_mismatches == 0);
  CHECK(f.failures.empty());

  const auto e = exchange_sweep(3, 3);
  CHECK(e.instances == 15 * 15);
  CHECK(e.output_mismatches == 0);
  CHECK(e.homfly_mismatches == 0);
  CHECK(e.odd_bad_difference == 0);
  CHECK(sweep_to_json(e, "exchange")["instances"] == 225);
}

TEST_CASE("exchange divergence on four strands") {
  CHECK(search_exchange_divergence(3, 3).diverging.empty());
  CHECK(search_exchange_divergence(4, 0).diverging.empty());

  const auto r = search_exchange_divergence(4, 2);
  CHECK(r.instances == 21 * 21);
  REQUIRE_FALSE(r.diverging.empty());
  CHECK(r.all_same_link_type);
  for (const auto& c : r.diverging) {
    CHECK_FALSE(c.outputs_equal);
    CHECK(c.homfly_equal);
    CHECK(check_pair(c.pair).first_output == c.first_output);
  }
  const auto j = divergence_to_json(r, 3);
  CHECK(j["pairs"].size() == 3);
  CHECK(j["diverging_count"] == r.diverging.size());
}
