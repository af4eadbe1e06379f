#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semidec/families.hpp"
#include "semidec/witness.hpp"
#include "semidec/wreath.hpp"

using namespace semidec;

namespace {

  MonoidPtr fam(FamilyKind k, std::size_t n, Ring const& r) {
    return build_family({k, n, r});
  }

  // U_1 < C_2 x U_1 by projection onto the second factor.
  DivisionWitness projection(bool enumerated_target) {
    auto C2 = cyclic_group(2);
    auto U  = u1();
    auto P  = direct_product(C2, U);
    DivisionWitness w;
    w.name   = "proj";
    w.source = U;
    w.target = enumerated_target ? P->as_carrier() : P->carrier();
    Key g1   = C2->key(C2->identity());
    w.pairs  = {{ProductCarrier::encode({g1, U->key(0)}), U->key(0)},
                {ProductCarrier::encode({g1, U->key(1)}), U->key(1)}};
    return verify(w);
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::ok;
  }

}  // namespace

TEST_CASE("identity witness") {
  auto C3 = cyclic_group(3);
  auto w  = identity_witness(C3);
  CHECK(w.verified());
  CHECK(w.verdict.closure_size == 3);
  auto c = compose(w, w);
  CHECK(c.verified());
  CHECK(c.pairs == w.pairs);
}

TEST_CASE("verify rejects a non-functional claim") {
  auto            C2 = cyclic_group(2);
  auto            one = trivial_monoid();
  DivisionWitness w;
  w.source = C2;
  w.target = one->as_carrier();
  w.pairs  = {{one->key(0), C2->key(1 - C2->identity())}};
  w        = verify(w);
  CHECK(w.verdict.status == VerdictStatus::failed);
  CHECK(w.verdict.failure == ErrorCode::not_functional);
}

TEST_CASE("verify reports uncovered source elements") {
  auto            C2 = cyclic_group(2);
  DivisionWitness w;
  w.source = C2;
  w.target = C2->as_carrier();
  w.pairs  = {{C2->key(C2->identity()), C2->key(C2->identity())}};
  w        = verify(w);
  CHECK(w.verdict.failure == ErrorCode::not_surjective);
}

TEST_CASE("verify respects the size limit") {
  auto w = identity_witness(cyclic_group(5));
  w      = verify(w, 3);
  CHECK(w.verdict.failure == ErrorCode::size_limit_exceeded);
}

TEST_CASE("compose needs a verified second witness") {
  auto w = identity_witness(cyclic_group(2));
  auto u = w;
  u.verdict = {};
  u.closure.reset();
  CHECK(code_of([&] { compose(w, u); }) == ErrorCode::precondition);
}

TEST_CASE("times_to_wreath") {
  auto U  = u1();
  auto C2 = cyclic_group(2);
  CHECK(times_to_wreath(U, U).verdict.closure_size == 4);
  CHECK(times_to_wreath(C2, U).verdict.closure_size == 4);
  auto as = fam(FamilyKind::AS_star, 1, make_prime_field(3));
  REQUIRE(as->size() == 6);
  CHECK(times_to_wreath(as, C2).verdict.closure_size == 12);
}

TEST_CASE("interchange") {
  auto U  = u1();
  auto C2 = cyclic_group(2);
  auto w  = interchange(U, U, U, U);
  CHECK(w.verdict.closure_size == 64);
  CHECK(interchange(C2, U, U, U).verdict.closure_size == 64);
  auto one = trivial_monoid();
  CHECK(interchange(C2, one, U, one).verdict.closure_size == 4);
}

TEST_CASE("absorb") {
  auto U = u1();
  // |U_1 wr U_1| * |U_1| = 2^2 * 2 * 2
  CHECK(absorb(U, U, U).verdict.closure_size == 16);
  auto z2 = make_prime_field(2);
  auto as = fam(FamilyKind::AS, 1, z2);
  auto t1 = fam(FamilyKind::T, 1, z2);
  auto w  = absorb(as, t1, t1);
  // |AS_1(Z_2)|^2 * 2 * 2
  CHECK(as->size() == 4);
  CHECK(w.verdict.closure_size == 64);
  CHECK(absorb(U, U, trivial_monoid()).verdict.closure_size == 8);
}

TEST_CASE("augmentation") {
  auto z2 = make_prime_field(2);
  auto a2 = fam(FamilyKind::AS_star, 1, z2);
  auto w  = augmentation(a2);
  CHECK(w.verdict.closure_size == 6);
  CHECK(w.source->size() == 4);

  auto a3 = fam(FamilyKind::AS_star, 1, make_prime_field(3));
  auto w3 = augmentation(a3);
  CHECK(w3.source->size() == 9);

  auto triv = close_generators(std::make_shared<TransformationCarrier>(2),
                                 {TransformationCarrier::encode({0, 1})});
  auto wt   = augmentation(triv);
  CHECK(wt.source->size() == 3);
  CHECK(isomorphic(*wt.source, *constants_monoid(2)));
}

TEST_CASE("group with zero") {
  auto w3 = group_with_zero(make_prime_field(3));
  // all of T_1*(Z_3) x U_1: (g, e) -> 0 for both units g
  CHECK(w3.verdict.closure_size == 4);
  CHECK(w3.source->size() == 3);
  CHECK(group_with_zero(make_prime_field(2)).source->size() == 2);
  CHECK(code_of([] { group_with_zero(make_boolean_semiring()); }) == ErrorCode::field_required);
}

TEST_CASE("product witness") {
  auto g = group_with_zero(make_prime_field(3));
  auto w = product_witness({g, g, g});
  CHECK(w.source->size() == 27);
  CHECK(w.verdict.closure_size == 64);
  auto i = identity_witness(u1());
  CHECK(product_witness(i, i).injective());
}

TEST_CASE("lifts through a projection") {
  for (bool enumerated : {false, true}) {
    auto p = projection(enumerated);
    REQUIRE(p.verified());
    auto U  = u1();
    auto ll = lift_left(p, U);
    CHECK(ll.verified());
    CHECK(ll.source->size() == 8);
    auto lr = lift_right(p, U);
    CHECK(lr.verified());
    CHECK(lr.source->size() == 8);
  }
  auto i  = identity_witness(cyclic_group(2));
  auto ll = lift_left(i, u1());
  CHECK(ll.injective());
  CHECK(ll.verdict.closure_size == 8);
}

TEST_CASE("search division") {
  auto U  = u1();
  auto C2 = cyclic_group(2);
  CHECK_FALSE(search_division(U, C2).witness);
  auto P = direct_product(C2, U);
  auto r = search_division(C2, P);
  REQUIRE(r.witness);
  CHECK(r.witness->verified());
  CHECK(search_division(P, P).witness);
  auto big = cyclic_group(13);
  CHECK(code_of([&] { search_division(C2, big); }) == ErrorCode::size_limit_exceeded);
}

TEST_CASE("combinators agree with exhaustive search") {
  auto U  = u1();
  auto C2 = cyclic_group(2);
  auto w  = times_to_wreath(C2, U);
  auto T  = close_generators(w.target, [&] {
    std::vector<Key> g;
    for (auto const& [t, s] : w.pairs) g.push_back(t);
    return g;
  }());
  CHECK(search_division(w.source, T).witness);
  auto p = direct_product(U, U);
  CHECK(search_division(p, enumerate_wreath(U, U)).witness);
}

TEST_CASE("closure projects onto the traced image") {
  auto w = times_to_wreath(cyclic_group(2), u1());
  auto m = image_submonoid(w);
  CHECK(m->size() == w.verdict.closure_size);
  auto phi = image_map(w, *m);
  for (std::uint32_t a = 0; a < m->size(); ++a) {
    for (std::uint32_t b = 0; b < m->size(); ++b) {
      CHECK(phi[m->mul(a, b)] == w.source->mul(phi[a], phi[b]));
    }
  }
}

TEST_CASE("reassociate") {
  auto U    = u1();
  auto UU   = enumerate_wreath(U, U);
  auto UUU  = enumerate_wreath(UU, U);
  CHECK(UUU->size() == 128);
  auto w = reassociate(U->as_carrier(), U, U, UUU->keys());
  CHECK(w.verified());
  CHECK(w.source->size() == 128);
  CHECK(w.injective());
  CHECK(w.steps.front()["op"] == "restrict_base");
  CHECK(w.steps.back()["op"] == "reassociate");

  // C_2 on top keeps the group part visible.
  auto C2 = cyclic_group(2);
  auto CU = enumerate_wreath(C2, U);
  auto g  = reassociate(C2->as_carrier(), U, U, enumerate_wreath(CU, U)->keys());
  CHECK(g.verified());
  CHECK(g.source->size() == 128);
}

TEST_CASE("augmentation of a non-group") {
  auto tc = std::make_shared<TransformationCarrier>(2);
  auto A  = close_generators(tc, {TransformationCarrier::encode({0, 0})});
  REQUIRE(A->size() == 2);
  CHECK(code_of([&] { augmentation(A); }) == ErrorCode::not_functional);
  CHECK(code_of([] { augmentation(build_family({FamilyKind::AS, 1, make_prime_field(3)})); })
        == ErrorCode::not_functional);
}
