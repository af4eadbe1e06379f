#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "semidec/semiring.hpp"

using namespace semidec;

namespace {

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::ok;
  }

  // Group check on the units under multiplication.
  void check_unit_group(SemiringTable const& R) {
    auto u = units(R);
    std::set<Scalar> U(u.begin(), u.end());
    CHECK(U.count(R.one()) == 1);
    for (auto a : u) {
      bool has_inverse = false;
      for (auto b : u) {
        CHECK(U.count(R.mul(a, b)) == 1);
        has_inverse |= R.mul(a, b) == R.one() && R.mul(b, a) == R.one();
      }
      CHECK(has_inverse);
    }
  }

}  // namespace

TEST_CASE("prime fields") {
  auto Z2 = make_prime_field(2);
  CHECK(Z2->add_table() == std::vector<std::vector<Scalar>>{{0, 1}, {1, 0}});
  CHECK(Z2->mul_table() == std::vector<std::vector<Scalar>>{{0, 0}, {0, 1}});
  CHECK(Z2->is_field());

  auto Z3 = make_prime_field(3);
  CHECK(Z3->size() == 3);
  CHECK(Z3->add(1, 2) == 0);
  CHECK(Z3->mul(2, 2) == 1);

  CHECK(code_of([] { make_prime_field(4); }) == ErrorCode::not_prime);
  CHECK(code_of([] { make_prime_field(17); }) == ErrorCode::bound_exceeded);

  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto R = make_prime_field(p);
    CHECK(units(*R).size() == p - 1);
    check_unit_group(*R);
  }
}

TEST_CASE("boolean semiring") {
  auto B = make_boolean_semiring();
  CHECK(B->size() == 2);
  CHECK(B->add(1, 1) == 1);
  CHECK(B->zero() == 0);
  CHECK(B->one() == 1);
  CHECK_FALSE(B->is_field());
  CHECK(units(*B) == std::vector<Scalar>{1});
  check_unit_group(*B);
}

TEST_CASE("tables are checked") {
  auto Z2 = make_from_tables({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 0, 1);
  CHECK(Z2->is_field());
  auto B = make_from_tables({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
  CHECK_FALSE(B->is_field());

  // Z_3 addition with 2*2 = 2.
  std::vector<std::vector<Scalar>> add = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<Scalar>> mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  try {
    make_from_tables(add, mul, 0, 1);
    FAIL("expected AxiomViolation");
  } catch (AxiomViolation const& e) {
    CHECK(e.code() == ErrorCode::axiom_violation);
    auto [a, b, c] = e.witness();
    bool assoc_fails = mul[mul[a][b]][c] != mul[a][mul[b][c]];
    bool dist_fails  = mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]
                      || mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]];
    CHECK((assoc_fails || dist_fails));
  }

  CHECK(code_of([] { make_from_tables({{0, 1}}, {{0, 0}, {0, 1}}, 0, 1); })
        != ErrorCode::ok);
}

TEST_CASE("units") {
  CHECK(units(*make_prime_field(3)) == std::vector<Scalar>{1, 2});
  CHECK(units(*make_prime_field(2)) == std::vector<Scalar>{1});
}

TEST_CASE("zero and one need not be 0 and 1") {
  // Z_2 with the labels swapped.
  auto R = make_from_tables({{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}, 1, 0);
  CHECK(R->zero() == 1);
  CHECK(R->one() == 0);
  CHECK(R->is_field());
  CHECK(units(*R) == std::vector<Scalar>{0});
}

TEST_CASE("json round trip and ring specs") {
  auto Z5 = make_prime_field(5);
  auto R  = ring_from_json(ring_to_json(*Z5));
  CHECK(*R == *Z5);
  CHECK(R->is_field());
  CHECK(*parse_ring_spec("zp:3") == *make_prime_field(3));
  CHECK(*parse_ring_spec("bool") == *make_boolean_semiring());
  CHECK(code_of([] { parse_ring_spec("zq:3"); }) != ErrorCode::ok);
}
