#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "semidec/families.hpp"

using namespace semidec;

namespace {

  MonoidPtr fam(FamilyKind k, std::size_t n, Ring const& R) {
    return build_family({k, n, R});
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::ok;
  }

  std::set<Key> key_set(Monoid const& m) {
    return {m.keys().begin(), m.keys().end()};
  }

  bool commutative(Monoid const& m) {
    for (std::uint32_t a = 0; a < m.size(); ++a) {
      for (std::uint32_t b = 0; b < m.size(); ++b) {
        if (m.mul(a, b) != m.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("family orders") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  auto B  = make_boolean_semiring();
  CHECK(fam(FamilyKind::T, 2, Z2)->size() == 8);
  CHECK(fam(FamilyKind::T, 3, Z2)->size() == 64);
  CHECK(fam(FamilyKind::UT, 2, Z3)->size() == 12);
  CHECK(fam(FamilyKind::T_star, 2, Z3)->size() == 12);
  CHECK(fam(FamilyKind::UT_star, 3, Z2)->size() == 8);
  CHECK(fam(FamilyKind::T, 2, B)->size() == 8);

  auto AS1 = fam(FamilyKind::AS, 1, Z2);
  CHECK(AS1->size() == 4);
  auto AS1s = fam(FamilyKind::AS_star, 1, Z3);
  CHECK(AS1s->size() == 6);
  CHECK_FALSE(commutative(*AS1s));
  CHECK(is_group(*AS1s));

  auto PT1 = fam(FamilyKind::PT, 1, Z3);
  CHECK(PT1->size() == 2);
  CHECK(isomorphic(*PT1, *u1()));
  CHECK(fam(FamilyKind::PT, 2, Z2)->size() == 8);
  CHECK(fam(FamilyKind::PT_star, 2, Z3)->size() == 6);

  CHECK(code_of([&] { fam(FamilyKind::PT, 2, B); }) == ErrorCode::field_required);
  CHECK(code_of([&] { build_family({FamilyKind::T, 3, Z3}, 100); })
        == ErrorCode::size_limit_exceeded);
}

TEST_CASE("affine monoid orders") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  // |A_1(R)| = |R|^2, |AT_2(Z_2)| = 2^3 * 2^2, |AS*_2(Z_3)| = 2 * 9.
  CHECK(fam(FamilyKind::A, 1, Z3)->size() == 9);
  CHECK(fam(FamilyKind::AT, 2, Z2)->size() == 32);
  CHECK(fam(FamilyKind::AS_star, 2, Z3)->size() == 18);
  CHECK(fam(FamilyKind::AS, 2, Z3)->size() == 27);
  CHECK(fam(FamilyKind::A_star, 1, Z3)->size() == 6);
}

TEST_CASE("constants and U_1") {
  auto X1 = constants_monoid(1);
  CHECK(X1->size() == 2);
  CHECK(isomorphic(*X1, *u1()));
  auto X2 = constants_monoid(2);
  CHECK(X2->size() == 3);
  for (std::uint32_t a = 0; a < X2->size(); ++a) {
    for (std::uint32_t b = 0; b < X2->size(); ++b) {
      if (b != X2->identity()) {
        CHECK(X2->mul(a, b) == b);
      }
    }
  }
  CHECK(constants_monoid(4)->size() == 5);
  CHECK(is_aperiodic(*constants_monoid(4)));

  auto U = u1();
  CHECK(U->size() == 2);
  auto e = 1 - U->identity();
  CHECK(U->mul(e, e) == e);
  CHECK(is_aperiodic(*U));
  CHECK(commutative(*U));
}

TEST_CASE("augmented monoids") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  auto a2 = augmented_monoid(*fam(FamilyKind::AS_star, 1, Z2));
  CHECK(a2->size() == 4);
  CHECK(key_set(*a2) == key_set(*fam(FamilyKind::AS, 1, Z2)));

  auto trivial = augmented_monoid(*trivial_monoid(), {{0, 1}});
  CHECK(trivial->size() == 3);
  CHECK(isomorphic(*trivial, *constants_monoid(2)));

  CHECK(augmented_monoid(*fam(FamilyKind::AS_star, 1, Z3))->size() == 9);

  // AS_n(k) is AS*_n(k) plus constants.
  for (auto const& R : {Z2, Z3}) {
    for (std::size_t n : {1u, 2u}) {
      auto aug = augmented_monoid(*fam(FamilyKind::AS_star, n, R));
      CHECK(key_set(*aug) == key_set(*fam(FamilyKind::AS, n, R)));
    }
  }

  auto C2 = cyclic_group(2);
  CHECK(code_of([&] { augmented_monoid(*C2, {{0, 1}, {0, 1}}); })
        == ErrorCode::action_not_faithful);
}

TEST_CASE("unit groups") {
  for (unsigned p : {2u, 3u}) {
    auto R = make_prime_field(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      if (p == 3 && n == 3) {
        continue;  // 3^6 elements; covered by n <= 2
      }
      auto T = fam(FamilyKind::T, n, R);
      CHECK(key_set(*unit_group(T)) == key_set(*fam(FamilyKind::T_star, n, R)));
    }
  }
  auto Z3 = make_prime_field(3);
  CHECK(key_set(*unit_group(fam(FamilyKind::UT, 2, Z3)))
        == key_set(*fam(FamilyKind::UT_star, 2, Z3)));
}

TEST_CASE("affine maps embed in triangular matrices") {
  for (auto const& R : {make_prime_field(2), make_prime_field(3)}) {
    for (std::size_t n : {2u, 3u}) {
      auto const dim = n - 1;
      auto       AT  = fam(FamilyKind::AT, dim, R);
      auto       T   = fam(FamilyKind::T, n, R);
      // Rebuild each map from its images and embed.
      std::vector<AffineMap> maps;
      std::set<Key>          images;
      for (std::uint32_t i = 0; i < AT->size(); ++i) {
        auto f = TransformationCarrier::decode(AT->key(i));
        auto c = vector_at(*R, dim, f[vector_index(*R, std::vector<Scalar>(dim, R->zero()))]);
        std::vector<Scalar> X(dim * dim, R->zero());
        for (std::size_t r = 0; r < dim; ++r) {
          std::vector<Scalar> e(dim, R->zero());
          e[r] = R->one();
          auto img = vector_at(*R, dim, f[vector_index(*R, e)]);
          for (std::size_t j = 0; j < dim; ++j) {
            // img = e_r X + c, and c is additively cancelled by searching.
            for (Scalar x = 0; x < R->size(); ++x) {
              if (R->add(x, c[j]) == img[j]) {
                X[r * dim + j] = x;
                break;
              }
            }
          }
        }
        maps.push_back(AffineMap::triangular(TriMatrix(R, dim, X), c));
        REQUIRE(affine_key(R, maps.back()) == AT->key(i));
        auto M = affine_to_matrix(R, maps.back());
        CHECK(T->index_of(M.key()).has_value());
        images.insert(M.key());
      }
      CHECK(images.size() == AT->size());
      for (std::uint32_t a = 0; a < AT->size(); ++a) {
        for (std::uint32_t b = 0; b < AT->size(); ++b) {
          auto Mab = affine_to_matrix(R, maps[AT->mul(a, b)]);
          CHECK(Mab == mat_mul(affine_to_matrix(R, maps[a]), affine_to_matrix(R, maps[b])));
        }
      }
    }
  }
}

TEST_CASE("affine pairs over the boolean semiring") {
  auto B = make_boolean_semiring();
  for (std::size_t n : {2u, 3u}) {
    auto const dim = n - 1;
    auto       T   = fam(FamilyKind::T, dim, B);
    std::vector<AffineMap> pairs;
    for (auto const& X : T->keys()) {
      for (std::uint32_t v = 0; v < point_count(*B, dim); ++v) {
        pairs.push_back(AffineMap::triangular(TriMatrix::from_key(B, dim, X),
                                              vector_at(*B, dim, v)));
      }
    }
    std::set<Key> images, maps;
    for (auto const& f : pairs) {
      images.insert(affine_to_matrix(B, f).key());
      maps.insert(affine_key(B, f));
    }
    CHECK(images.size() == pairs.size());
    CHECK(maps.size() == fam(FamilyKind::AT, dim, B)->size());
    CHECK(maps.size() < pairs.size());
    for (auto const& f : pairs) {
      for (auto const& g : pairs) {
        auto c = row_times(*B, f.translation, *g.linear);
        for (std::size_t i = 0; i < dim; ++i) {
          c[i] = B->add(c[i], g.translation[i]);
        }
        auto fg = AffineMap::triangular(mat_mul(*f.linear, *g.linear), c);
        CHECK(affine_to_matrix(B, fg)
              == mat_mul(affine_to_matrix(B, f), affine_to_matrix(B, g)));
      }
    }
  }
  // v -> v + 1 and v -> 1 are the same map.
  CHECK(fam(FamilyKind::AT, 1, B)->size() == 3);
}

TEST_CASE("diagonal subgroup") {
  for (unsigned p : {2u, 3u}) {
    auto R = make_prime_field(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto Ts = fam(FamilyKind::T_star, n, R);
      auto u  = units(*R);
      std::set<Key> diag;
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<Scalar> e(n * n, R->zero());
        for (std::size_t i = 0; i < n; ++i) {
          e[i * n + i] = u[idx[i]];
        }
        diag.insert(TriMatrix(R, n, e).key());
        std::size_t d = 0;
        while (d < n && ++idx[d] == u.size()) {
          idx[d++] = 0;
        }
        if (d == n) {
          break;
        }
      }
      CHECK(diag.size() == static_cast<std::size_t>(std::pow(u.size(), n)));
      for (auto const& a : diag) {
        CHECK(Ts->index_of(a).has_value());
        for (auto const& b : diag) {
          CHECK(diag.count(Ts->carrier()->multiply(a, b)) == 1);
        }
      }
    }
  }
}

TEST_CASE("kind names") {
  for (auto k : {FamilyKind::T, FamilyKind::UT_star, FamilyKind::AS, FamilyKind::Xtilde,
                 FamilyKind::augmented}) {
    CHECK(parse_kind(kind_name(k)) == k);
  }
  CHECK(code_of([] { parse_kind("Q"); }) != ErrorCode::ok);
}
