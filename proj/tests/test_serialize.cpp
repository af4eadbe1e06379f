#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semidec/families.hpp"
#include "semidec/serialize.hpp"
#include "semidec/witness.hpp"

using namespace semidec;

namespace {

  void round_trip(DivisionWitness const& w) {
    auto j  = certificate_to_json(w);
    auto j2 = nlohmann::json::parse(dump(j));
    CHECK(j2 == j);
    auto r = verify(certificate_from_json(j2));
    CHECK(r.verified());
    CHECK(r.verdict.closure_size == w.verdict.closure_size);
    auto back = certificate_to_json(r);
    for (auto const* k : {"name", "pairs", "steps", "verdict"}) {
      CHECK(back[k] == j[k]);
    }
    CHECK(back["source"]["descriptor"] == j["source"]["descriptor"]);
    CHECK(back["target"]["descriptor"] == j["target"]["descriptor"]);
  }

}  // namespace

TEST_CASE("monoid json round trip") {
  auto z3 = make_prime_field(3);
  for (auto k : {FamilyKind::T, FamilyKind::PT, FamilyKind::AS_star, FamilyKind::Xtilde,
                 FamilyKind::augmented}) {
    auto m = build_family({k, 1, z3});
    auto j = monoid_to_json(*m);
    auto r = monoid_from_json(nlohmann::json::parse(dump(j)));
    CHECK(r->keys() == m->keys());
    CHECK(r->label() == m->label());
  }
  auto q = quotient_by_central_units(cyclic_group(4), {0, 2}).monoid;
  CHECK(monoid_from_json(monoid_to_json(*q))->size() == 2);
  auto h = maximal_subgroup(build_family({FamilyKind::T, 2, z3}), 0);
  CHECK(monoid_from_json(monoid_to_json(*h))->keys() == h->keys());
}

TEST_CASE("element list must match the descriptor") {
  auto j = monoid_to_json(*cyclic_group(3));
  j["elements"].erase(1);
  CHECK_THROWS_AS(monoid_from_json(j), Error);
}

TEST_CASE("unknown descriptors are rejected") {
  Rebuilder rb;
  try {
    rb.monoid({{"kind", "nonsense"}});
    FAIL("no error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::unsupported_format);
  }
}

TEST_CASE("certificates round trip") {
  auto z2 = make_prime_field(2);
  auto U  = u1();
  round_trip(identity_witness(cyclic_group(3)));
  round_trip(times_to_wreath(cyclic_group(2), U));
  round_trip(interchange(U, U, U, U));
  round_trip(absorb(U, U, U));
  round_trip(augmentation(build_family({FamilyKind::AS_star, 1, z2})));
  auto g = group_with_zero(make_prime_field(3));
  round_trip(g);
  round_trip(product_witness({g, g}));
  auto w = times_to_wreath(cyclic_group(2), U);
  round_trip(lift_left(w, U));
  round_trip(lift_right(w, U));
}

TEST_CASE("dot export marks essential classes") {
  auto dot = j_order_dot(*build_family({FamilyKind::T, 2, make_prime_field(3)}));
  CHECK(dot.find("digraph J") == 0);
  CHECK(dot.find("fillcolor") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
