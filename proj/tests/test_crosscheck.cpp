#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semidec/crosscheck.hpp"

using namespace semidec;

TEST_CASE("standard property suites have no violations") {
  auto all = standard_crosschecks();
  CHECK(all.size() == 7);
  for (auto const& c : all) {
    INFO(c.name << " on " << c.subject << ": " << c.first_violation);
    CHECK(c.checked > 0);
    CHECK(c.violations == 0);
  }
}

TEST_CASE("counts") {
  auto Z3 = make_prime_field(3);
  // 27 elements: pairs for green_operations, elements for regularity.
  CHECK(check_green_operations({FamilyKind::T, 2, Z3}).checked == 27 * 27);
  CHECK(check_regularity({FamilyKind::T, 2, Z3}).checked == 27);
  CHECK(check_projective(2, Z3).checked == 27 + 27 * 27);
}

TEST_CASE("UT over Z_3 and T_3 over Z_2") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  CHECK(check_green_operations({FamilyKind::UT, 2, Z3}).ok());
  CHECK(check_regularity({FamilyKind::UT, 2, Z3}).ok());
  CHECK(check_green_operations({FamilyKind::T, 3, Z2}).ok());
  CHECK(check_regularity({FamilyKind::T, 3, Z2}).ok());
}

TEST_CASE("preconditions") {
  auto B = make_boolean_semiring();
  CHECK_THROWS_AS(check_regularity({FamilyKind::T, 2, B}), Error);
  CHECK_THROWS_AS(check_green_operations({FamilyKind::AS, 1, make_prime_field(2)}), Error);
}
