#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "semidec/families.hpp"

using namespace semidec;

namespace {

  MonoidPtr fam(FamilyKind k, std::size_t n, unsigned p) {
    return build_family({k, n, make_prime_field(p)});
  }

  Key mat(Ring const& R, std::vector<std::vector<Scalar>> const& rows) {
    return TriMatrix::from_rows(R, rows).key();
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::ok;
  }

  std::uint32_t idempotent_count(Monoid const& m) {
    std::uint32_t c = 0;
    for (std::uint32_t x = 0; x < m.size(); ++x) {
      c += m.mul(x, x) == x;
    }
    return c;
  }

  // Symmetric group on 3 points as a transformation closure.
  MonoidPtr s3() {
    auto carrier = std::make_shared<TransformationCarrier>(3);
    return close_generators(carrier,
                            {TransformationCarrier::encode({1, 0, 2}),
                             TransformationCarrier::encode({1, 2, 0})});
  }

}  // namespace

TEST_CASE("closure") {
  auto Z2      = make_prime_field(2);
  auto carrier = std::make_shared<MatrixCarrier>(Z2, 2);
  auto c2      = close_generators(carrier, {mat(Z2, {{1, 1}, {0, 1}})});
  CHECK(c2->size() == 2);

  auto T = fam(FamilyKind::T, 2, 2);
  CHECK(close_generators(carrier, T->keys())->size() == 8);

  auto Z3   = make_prime_field(3);
  auto AS1  = build_family({FamilyKind::AS, 1, Z3});
  auto step = affine_key(Z3, AffineMap::scaling(Z3, 1, {1}));
  CHECK(close_generators(AS1->carrier(), {step})->size() == 3);

  CHECK(code_of([&] { close_generators(carrier, {}); }) != ErrorCode::ok);
  CHECK(code_of([&] { close_generators(std::make_shared<MatrixCarrier>(Z3, 3),
                                       fam(FamilyKind::T, 3, 3)->keys(), 100); })
        == ErrorCode::size_limit_exceeded);

  // Generators in input order, then BFS products.
  auto s = s3();
  CHECK(s->size() == 6);
  CHECK(s->key(0) == TransformationCarrier::encode({1, 0, 2}));
  CHECK(s->key(1) == TransformationCarrier::encode({1, 2, 0}));
  CHECK(s3()->keys() == s->keys());
}

TEST_CASE("green's relations") {
  auto T = fam(FamilyKind::T, 2, 2);
  auto g = greens(*T);
  CHECK(g.num_J == 5);
  CHECK(g.regular_J_count() == 4);

  auto C = cyclic_group(5);
  auto h = greens(*C);
  CHECK(h.num_J == 1);
  for (std::uint32_t x = 0; x < C->size(); ++x) {
    CHECK(h.regular[x]);
  }

  auto U = u1();
  auto u = greens(*U);
  CHECK(u.num_J == 2);
  CHECK(u.regular_J_count() == 2);

  // H refines L and R, which refine J; regular iff x y x = x for some y.
  auto M  = fam(FamilyKind::T, 2, 3);
  auto gm = greens(*M);
  for (std::uint32_t x = 0; x < M->size(); ++x) {
    bool inverse = false;
    for (std::uint32_t y = 0; y < M->size(); ++y) {
      inverse |= M->mul(M->mul(x, y), x) == x;
      if (gm.H[x] == gm.H[y]) {
        CHECK(gm.L[x] == gm.L[y]);
        CHECK(gm.R[x] == gm.R[y]);
      }
      if (gm.L[x] == gm.L[y] || gm.R[x] == gm.R[y]) {
        CHECK(gm.J[x] == gm.J[y]);
      }
    }
    CHECK(gm.regular[x] == inverse);
  }
}

TEST_CASE("maximal subgroups") {
  auto Z3 = make_prime_field(3);
  auto T  = fam(FamilyKind::T, 2, 3);
  CHECK(maximal_subgroup(T, T->identity())->size() == 12);

  auto e = T->at(mat(Z3, {{1, 0}, {0, 0}}));
  auto G = maximal_subgroup(T, e);
  CHECK(G->size() == 2);
  CHECK(isomorphic(*G, *fam(FamilyKind::T_star, 1, 3)));

  CHECK(maximal_subgroup(T, T->at(mat(Z3, {{0, 0}, {0, 0}})))->size() == 1);
  CHECK(code_of([&] { maximal_subgroup(T, T->at(mat(Z3, {{2, 0}, {0, 0}}))); })
        == ErrorCode::not_idempotent);

  // Oracle: H-class of e counted directly as {x : x e = e x = x, x y = e = y x for some y}.
  std::size_t h = 0;
  for (std::uint32_t x = 0; x < T->size(); ++x) {
    if (T->mul(x, e) != x || T->mul(e, x) != x) {
      continue;
    }
    for (std::uint32_t y = 0; y < T->size(); ++y) {
      if (T->mul(x, y) == e && T->mul(y, x) == e) {
        ++h;
        break;
      }
    }
  }
  CHECK(h == 2);
}

TEST_CASE("aperiodic and group") {
  CHECK(is_aperiodic(*u1()));
  auto UTs = fam(FamilyKind::UT_star, 2, 2);
  CHECK_FALSE(is_aperiodic(*UTs));
  CHECK(is_group(*UTs));
  CHECK(isomorphic(*UTs, *cyclic_group(2)));
  CHECK_FALSE(is_aperiodic(*fam(FamilyKind::T, 2, 2)));
  CHECK_FALSE(is_group(*fam(FamilyKind::T, 2, 2)));
  CHECK(is_aperiodic(*constants_monoid(3)));
  CHECK(is_aperiodic(*trivial_monoid()));
  CHECK(is_group(*trivial_monoid()));
}

TEST_CASE("depth") {
  auto d2 = depth_report(*fam(FamilyKind::T, 2, 2));
  CHECK(d2.depth == 1);
  CHECK(d2.census == std::vector<std::size_t>{1});

  auto d3 = depth_report(*fam(FamilyKind::T, 2, 3));
  CHECK(d3.depth == 2);
  CHECK(d3.census == std::vector<std::size_t>{1, 2});

  auto dc = depth_report(*cyclic_group(3));
  CHECK(dc.depth == 1);
  CHECK(dc.census == std::vector<std::size_t>{1});

  CHECK(depth_report(*u1()).depth == 0);

  // depth = 1 + max essential depth, essential iff a nontrivial subgroup.
  for (auto const& d : {d2, d3}) {
    int deepest = -1;
    for (std::size_t c = 0; c < d.num_classes; ++c) {
      CHECK(d.essential[c] == (d.subgroup_order[c] > 1));
      deepest = std::max(deepest, d.class_depth[c]);
    }
    CHECK(d.depth == static_cast<std::size_t>(deepest + 1));
  }
}

TEST_CASE("quotients") {
  auto Z3 = make_prime_field(3);
  auto T1 = fam(FamilyKind::T, 1, 3);
  auto q1 = quotient_by_central_units(T1, {T1->at(mat(Z3, {{1}})), T1->at(mat(Z3, {{2}}))});
  CHECK(q1.monoid->size() == 2);
  CHECK(isomorphic(*q1.monoid, *u1()));

  // Orbit count by hand: the zero matrix, plus 26 nonzero matrices in pairs.
  auto T = fam(FamilyKind::T, 2, 3);
  auto q = quotient_by_central_units(T, {T->at(mat(Z3, {{1, 0}, {0, 1}})),
                                         T->at(mat(Z3, {{2, 0}, {0, 2}}))});
  CHECK(q.monoid->size() == 14);
  std::set<std::uint32_t> hit(q.projection.begin(), q.projection.end());
  CHECK(hit.size() == 14);
  for (std::uint32_t x = 0; x < T->size(); ++x) {
    for (std::uint32_t y = 0; y < T->size(); ++y) {
      CHECK(q.projection[T->mul(x, y)] == q.monoid->mul(q.projection[x], q.projection[y]));
    }
  }

  auto same = quotient_by_central_units(T, {T->identity()});
  CHECK(same.monoid->size() == 27);

  auto x = T->at(mat(Z3, {{1, 1}, {0, 1}}));
  CHECK(code_of([&] { quotient_by_central_units(T, {x}); }) == ErrorCode::not_central);
}

TEST_CASE("products and isomorphism") {
  auto P = direct_product(u1(), u1());
  CHECK(P->size() == 4);
  CHECK(idempotent_count(*P) == 4);

  auto AS = fam(FamilyKind::AS_star, 1, 3);
  CHECK(isomorphic(*AS, *s3()));
  CHECK_FALSE(isomorphic(*cyclic_group(2), *u1()));
  CHECK_FALSE(isomorphic(*cyclic_group(6), *s3()));
  CHECK(isomorphic(*cyclic_group(6), *direct_product(cyclic_group(2), cyclic_group(3))));
  CHECK(code_of([&] { isomorphic(*fam(FamilyKind::T, 2, 3), *fam(FamilyKind::T, 2, 3), 16); })
        == ErrorCode::size_limit_exceeded);
}

TEST_CASE("associativity is verified on construction") {
  // (1*2)*1 = 2 but 1*(2*1) = 1.
  std::vector<std::vector<std::uint32_t>> bad = {{0, 1, 2}, {1, 2, 1}, {2, 2, 2}};
  CHECK(code_of([&] { monoid_from_table(bad, 0, "bad"); }) != ErrorCode::ok);
}
