#include <random>

#include "braidskein/errors.hpp"
#include "braidskein/skein.hpp"
#include "doctest.h"

using namespace braidskein;

namespace {

LaurentAB random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), a(-4, 4), b(0, 3), c(-5, 5);
  LaurentAB p;
  for (int i = terms(rng); i > 0; --i) p += LaurentAB::monomial(c(rng), a(rng), b(rng));
  return p;
}

}  // namespace

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + LaurentAB{} == x);
    CHECK(x * LaurentAB{1} == x);
    CHECK((x - x).is_zero());
    CHECK(parse_laurent(format_laurent(x)) == x);
  }
}

TEST_CASE("units and formatting") {
  CHECK(units::A() * units::A_inv() == LaurentAB{1});
  CHECK(format_laurent(units::neg_A_inv_B()) == "-A^-1*B");
  CHECK(format_laurent(units::A() + units::B() * units::B()) == "A + B^2");
  CHECK(format_laurent(LaurentAB{}) == "0");
  CHECK(format_laurent(LaurentAB::monomial(-2, -2, 3)) == "-2*A^-2*B^3");
  CHECK(parse_laurent("  -A^-1*B + 3 ") == LaurentAB{3} - units::A_inv() * units::B());
  CHECK(parse_laurent("2*A B") == LaurentAB::monomial(2, 1, 1));
}

TEST_CASE("big coefficients survive") {
  LaurentAB p{1};
  for (int i = 0; i < 80; ++i) p *= LaurentAB{1} + units::A();
  CHECK(p.terms().at(Exponents{40, 0}) > Integer(std::numeric_limits<long long>::max()));
  CHECK(parse_laurent(format_laurent(p)) == p);
  SkeinVector v(2);
  v.add(Partition({2}), p);
  CHECK(vector_from_json(vector_to_json(v)) == v);
}

TEST_CASE("negative B powers are rejected") {
  CHECK_THROWS_AS(LaurentAB::monomial(1, 0, -1), RingDomainError);
  CHECK_THROWS_WITH_AS(parse_laurent("B^-2"), doctest::Contains("negative power of B"), ParseError);
  CHECK_THROWS_AS(parse_laurent("A + "), ParseError);
  CHECK_THROWS_AS(parse_laurent("C"), ParseError);
}

TEST_CASE("vector operations") {
  SkeinVector v(3);
  v.add(Partition({3}), units::A());
  v.add_monomial(Partition({2, 1}), -1, 0, 2);
  CHECK(format_vector(v) == "(3): A ; (2,1): -B^2");
  CHECK(format_vector(v + -v) == "0");
  CHECK((v + -v).is_zero());
  CHECK(v.coefficient(Partition({1, 1, 1})).is_zero());
  CHECK(format_vector(v.scaled(units::B())) == "(3): A*B ; (2,1): -B^3");
  CHECK(SkeinVector::singleton(Partition({2, 1}), 3).coefficient(Partition({2, 1})) == LaurentAB{1});
  CHECK_THROWS_AS(v.add(Partition({2}), units::A()), DimensionError);
  CHECK_THROWS_AS(v += SkeinVector(2), DimensionError);
  CHECK_THROWS_AS(SkeinVector(0), DimensionError);
}

TEST_CASE("vector text and json round trip") {
  const auto v = parse_vector("(2): A + B^2 ; (1,1): A*B", 2);
  CHECK(v.coefficient(Partition({1, 1})) == units::A() * units::B());
  CHECK(format_vector(v) == "(2): A + B^2 ; (1,1): A*B");
  CHECK(parse_vector("0", 4).is_zero());
  CHECK(vector_from_json(vector_to_json(v)) == v);
  const auto j = vector_to_json(v);
  CHECK(j["ambient_n"] == 2);
  CHECK(j["entries"][0]["partition"] == nlohmann::json::array({2}));
  CHECK_THROWS(parse_vector("(3): A", 2));
  CHECK_THROWS(parse_vector("(2) A", 2));
}

TEST_CASE("entries are listed in canonical order") {
  SkeinVector v(4);
  for (const auto& p : partitions_of(4)) v.add(p, LaurentAB{1});
  std::vector<Partition> keys;
  for (const auto& [k, c] : v.entries()) keys.push_back(k);
  CHECK(keys == partitions_of(4));
}
