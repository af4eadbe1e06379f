#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "semidec/trimat.hpp"

using namespace semidec;

namespace {

  using Rows = std::vector<std::vector<Scalar>>;

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::ok;
  }

  std::vector<TriMatrix> all_matrices(Ring const& R, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        cells.emplace_back(i, j);
      }
    }
    std::vector<TriMatrix> out;
    std::vector<Scalar>    digits(cells.size(), 0);
    while (true) {
      std::vector<Scalar> e(n * n, R->zero());
      for (std::size_t c = 0; c < cells.size(); ++c) {
        e[cells[c].first * n + cells[c].second] = digits[c];
      }
      out.emplace_back(R, n, e);
      std::size_t d = 0;
      while (d < digits.size() && ++digits[d] == R->size()) {
        digits[d++] = 0;
      }
      if (d == digits.size()) {
        return out;
      }
    }
  }

  std::vector<std::vector<Scalar>> all_vectors(Ring const& R, std::size_t dim) {
    std::vector<std::vector<Scalar>> out{{}};
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<std::vector<Scalar>> next;
      for (auto const& v : out) {
        for (Scalar x = 0; x < R->size(); ++x) {
          auto w = v;
          w.push_back(x);
          next.push_back(w);
        }
      }
      out = next;
    }
    return out;
  }

  // (1, v) as a row vector.
  std::vector<Scalar> lifted(Ring const& R, std::vector<Scalar> const& v) {
    std::vector<Scalar> out(v.size() + 1, R->one());
    std::copy(v.begin(), v.end(), out.begin() + 1);
    return out;
  }

}  // namespace

TEST_CASE("multiplication") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  auto B  = make_boolean_semiring();
  auto s  = TriMatrix::from_rows(Z2, {{1, 1}, {0, 1}});
  CHECK(mat_mul(s, s) == TriMatrix::identity(Z2, 2));
  auto t = TriMatrix::from_rows(Z3, {{2, 1}, {0, 2}});
  CHECK(mat_mul(t, TriMatrix::identity(Z3, 2)) == t);
  auto b = TriMatrix::from_rows(B, {{1, 1}, {0, 1}});
  CHECK(mat_mul(b, b) == b);

  CHECK(code_of([&] { mat_mul(s, TriMatrix::identity(Z2, 3)); })
        == ErrorCode::dimension_mismatch);
  CHECK(code_of([&] { mat_mul(s, b); }) == ErrorCode::ring_mismatch);
  CHECK(code_of([&] { TriMatrix::from_rows(Z2, {{1, 0}, {1, 1}}); }) != ErrorCode::ok);

  for (auto const& x : all_matrices(Z3, 2)) {
    for (auto const& y : all_matrices(Z3, 2)) {
      auto z = mat_mul(x, y);
      CHECK(z.at(1, 0) == Z3->zero());
    }
  }
}

TEST_CASE("classification") {
  auto Z3 = make_prime_field(3);
  auto c1 = classify(TriMatrix::from_rows(Z3, {{1, 0}, {0, 0}}));
  CHECK(c1.subidentity);
  CHECK(c1.unitriangular);
  auto c2 = classify(TriMatrix::from_rows(Z3, {{1, 2}, {0, 1}}));
  CHECK(c2.unitriangular);
  CHECK_FALSE(c2.subidentity);
  auto c3 = classify(TriMatrix::from_rows(Z3, {{2, 0}, {0, 1}}));
  CHECK(c3.triangular);
  CHECK_FALSE(c3.unitriangular);
}

TEST_CASE("row and column operations") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  using K = ElementaryOp::Kind;

  auto r = apply_row_op(TriMatrix::identity(Z2, 2), {K::add_multiple, 0, 1, 1});
  CHECK(r == TriMatrix::from_rows(Z2, {{1, 1}, {0, 1}}));
  auto s = apply_row_op(TriMatrix::from_rows(Z3, {{1, 1}, {0, 1}}), {K::scale, 0, 0, 0});
  CHECK(s == TriMatrix::from_rows(Z3, {{0, 0}, {0, 1}}));
  CHECK(code_of([&] { apply_row_op(TriMatrix::identity(Z2, 2), {K::add_multiple, 1, 0, 1}); })
        == ErrorCode::illegal_direction);
  CHECK(code_of([&] { apply_col_op(TriMatrix::identity(Z2, 2), {K::add_multiple, 0, 1, 1}); })
        == ErrorCode::illegal_direction);

  // Row op = left multiplication, column op = right multiplication, on all of T_2(Z_3).
  std::vector<ElementaryOp> row_ops = {{K::add_multiple, 0, 1, 1}, {K::add_multiple, 0, 1, 2}};
  std::vector<ElementaryOp> col_ops = {{K::add_multiple, 1, 0, 1}, {K::add_multiple, 1, 0, 2}};
  for (std::size_t t = 0; t < 2; ++t) {
    for (Scalar f = 0; f < 3; ++f) {
      row_ops.push_back({K::scale, t, t, f});
      col_ops.push_back({K::scale, t, t, f});
    }
  }
  for (auto const& m : all_matrices(Z3, 2)) {
    for (auto const& op : row_ops) {
      auto got = apply_row_op(m, op);
      CHECK(got == mat_mul(row_op_matrix(Z3, 2, op), m));
      CHECK(classify(got).triangular);
    }
    for (auto const& op : col_ops) {
      CHECK(apply_col_op(m, op) == mat_mul(m, col_op_matrix(Z3, 2, op)));
    }
  }
}

TEST_CASE("block decomposition") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  auto p  = block_decompose(TriMatrix::from_rows(Z3, {{2, 1}, {0, 2}}));
  CHECK(p.M == TriMatrix::from_rows(Z3, {{2}}));
  CHECK(p.v == std::vector<Scalar>{1});
  CHECK(p.c == 2);

  auto q = block_decompose(TriMatrix::identity(Z2, 3));
  CHECK(q.M == TriMatrix::identity(Z2, 2));
  CHECK(q.v == std::vector<Scalar>{0, 0});
  CHECK(q.c == 1);

  auto z = block_decompose(TriMatrix::zero(Z3, 2));
  CHECK(z.M == TriMatrix::zero(Z3, 1));
  CHECK(z.c == 0);

  CHECK(code_of([&] { block_decompose(TriMatrix::identity(Z2, 1)); })
        == ErrorCode::dimension_too_small);
  for (auto const& m : all_matrices(Z2, 3)) {
    CHECK(reassemble(block_decompose(m)) == m);
  }
}

TEST_CASE("affine maps as matrices") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  CHECK(affine_to_matrix(Z3, AffineMap::scaling(Z3, 2, {1}))
        == TriMatrix::from_rows(Z3, {{1, 1}, {0, 2}}));
  CHECK(affine_to_matrix(Z2, AffineMap::scaling(Z2, 1, {0, 0})) == TriMatrix::identity(Z2, 3));
  CHECK(affine_to_matrix(Z2, AffineMap::scaling(Z2, 0, {1, 0}))
        == TriMatrix::from_rows(Z2, {{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
}

TEST_CASE("M_f M_g represents f then g") {
  for (unsigned p : {2u, 3u}) {
    auto R = make_prime_field(p);
    for (std::size_t dim : {1u, 2u}) {
      std::vector<AffineMap> maps;
      for (auto const& X : all_matrices(R, dim)) {
        for (auto const& c : all_vectors(R, dim)) {
          maps.push_back(AffineMap::triangular(X, c));
        }
      }
      auto vs = all_vectors(R, dim);
      for (auto const& f : maps) {
        auto Mf = affine_to_matrix(R, f);
        for (auto const& v : vs) {
          CHECK(row_times(*R, lifted(R, v), Mf) == lifted(R, f.apply(*R, v)));
        }
        for (auto const& g : maps) {
          // fg: v -> v X_f X_g + c_f X_g + c_g
          auto cg = row_times(*R, f.translation, *g.linear);
          for (std::size_t i = 0; i < dim; ++i) {
            cg[i] = R->add(cg[i], g.translation[i]);
          }
          auto fg = AffineMap::triangular(mat_mul(*f.linear, *g.linear), cg);
          REQUIRE(affine_to_matrix(R, fg) == mat_mul(Mf, affine_to_matrix(R, g)));
        }
      }
    }
  }
}

TEST_CASE("span conditions") {
  auto Z3 = make_prime_field(3);
  CHECK(column_span_condition(TriMatrix::from_rows(Z3, {{1, 2}, {0, 0}})));
  CHECK_FALSE(column_span_condition(TriMatrix::from_rows(Z3, {{0, 1}, {0, 0}})));
  CHECK(row_span_condition(TriMatrix::from_rows(Z3, {{0, 1}, {0, 1}})));
  CHECK_FALSE(row_span_condition(TriMatrix::from_rows(Z3, {{0, 1}, {0, 0}})));
  CHECK(code_of([] { column_span_condition(TriMatrix::identity(make_boolean_semiring(), 2)); })
        == ErrorCode::field_required);
}

TEST_CASE("json") {
  auto Z3 = make_prime_field(3);
  auto m  = TriMatrix::from_rows(Z3, {{2, 1, 0}, {0, 1, 2}, {0, 0, 0}});
  auto j  = matrix_to_json(m);
  CHECK(j["n"] == 3);
  CHECK(matrix_from_json(Z3, j) == m);
}
