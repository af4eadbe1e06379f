#include "semidec/trimat.hpp"

#include <sstream>

namespace semidec {

  TriMatrix::TriMatrix(Ring ring, std::size_t n, std::vector<Scalar> entries)
      : ring_(std::move(ring)), n_(n), entries_(std::move(entries)) {
    if (ring_ == nullptr) {
      fail(ErrorCode::invalid_argument, "matrix without a ring");
    }
    if (n_ == 0 || entries_.size() != n_ * n_) {
      fail(ErrorCode::dimension_mismatch,
           "expected " + std::to_string(n_ * n_) + " entries");
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (entries_[i * n_ + j] >= ring_->size()) {
          fail(ErrorCode::invalid_argument, "matrix entry out of range");
        }
        if (j < i && entries_[i * n_ + j] != ring_->zero()) {
          fail(ErrorCode::invalid_argument,
               "matrix is not upper triangular at (" + std::to_string(i + 1)
                   + ", " + std::to_string(j + 1) + ")");
        }
      }
    }
  }

  TriMatrix TriMatrix::identity(Ring ring, std::size_t n) {
    std::vector<Scalar> e(n * n, ring->zero());
    for (std::size_t i = 0; i < n; ++i) {
      e[i * n + i] = ring->one();
    }
    return TriMatrix(std::move(ring), n, std::move(e));
  }

  TriMatrix TriMatrix::zero(Ring ring, std::size_t n) {
    Scalar z = ring->zero();
    return TriMatrix(std::move(ring), n, std::vector<Scalar>(n * n, z));
  }

  TriMatrix TriMatrix::from_rows(Ring ring,
                                 std::vector<std::vector<Scalar>> const& rows) {
    std::vector<Scalar> e;
    for (auto const& row : rows) {
      if (row.size() != rows.size()) {
        fail(ErrorCode::dimension_mismatch, "matrix rows must be square");
      }
      e.insert(e.end(), row.begin(), row.end());
    }
    return TriMatrix(std::move(ring), rows.size(), std::move(e));
  }

  TriMatrix TriMatrix::from_key(Ring ring, std::size_t n, KeyView key) {
    if (key.size() != n * n) {
      fail(ErrorCode::parse_error, "matrix key has wrong length");
    }
    return TriMatrix(std::move(ring), n, std::vector<Scalar>(key.begin(), key.end()));
  }

  Key TriMatrix::key() const {
    return Key(entries_.begin(), entries_.end());
  }

  std::string TriMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < n_; ++i) {
      out << (i == 0 ? "[" : ",[");
      for (std::size_t j = 0; j < n_; ++j) {
        out << (j == 0 ? "" : ",") << static_cast<int>(at(i, j));
      }
      out << ']';
    }
    out << ']';
    return out.str();
  }

  TriMatrix mat_mul(TriMatrix const& a, TriMatrix const& b) {
    if (a.dim() != b.dim()) {
      fail(ErrorCode::dimension_mismatch,
           std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    if (a.ring() != b.ring() && !(*a.ring() == *b.ring())) {
      fail(ErrorCode::ring_mismatch, a.ring()->label() + " vs " + b.ring()->label());
    }
    auto const&         R = *a.ring();
    std::size_t const   n = a.dim();
    std::vector<Scalar> e(n * n, R.zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Scalar acc = R.zero();
        for (std::size_t k = i; k <= j; ++k) {
          acc = R.add(acc, R.mul(a.at(i, k), b.at(k, j)));
        }
        e[i * n + j] = acc;
      }
    }
    return TriMatrix(a.ring(), n, std::move(e));
  }

  Classification classify(TriMatrix const& m) {
    auto const&    R = *m.ring();
    Classification c;
    c.unitriangular = true;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      Scalar d = m.at(i, i);
      c.unitriangular = c.unitriangular && (d == R.zero() || d == R.one());
    }
    c.subidentity = c.unitriangular;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = i + 1; j < m.dim(); ++j) {
        c.subidentity = c.subidentity && m.at(i, j) == R.zero();
      }
    }
    return c;
  }

  namespace {
    void check_op(std::size_t n, ElementaryOp const& op, bool rows) {
      if (op.target >= n || op.source >= n) {
        fail(ErrorCode::invalid_argument, "row/column index out of range");
      }
      if (op.kind != ElementaryOp::Kind::add_multiple) {
        return;
      }
      if (rows && op.target >= op.source) {
        fail(ErrorCode::illegal_direction,
             "a row multiple may only be added to a row above it");
      }
      if (!rows && op.target <= op.source) {
        fail(ErrorCode::illegal_direction,
             "a column multiple may only be added to a column to its right");
      }
    }
  }  // namespace

  TriMatrix row_op_matrix(Ring const& ring, std::size_t n, ElementaryOp const& op) {
    check_op(n, op, true);
    std::vector<Scalar> e = TriMatrix::identity(ring, n).entries();
    if (op.kind == ElementaryOp::Kind::scale) {
      e[op.target * n + op.target] = op.factor;
    } else {
      e[op.target * n + op.source] = op.factor;
    }
    return TriMatrix(ring, n, std::move(e));
  }

  TriMatrix col_op_matrix(Ring const& ring, std::size_t n, ElementaryOp const& op) {
    check_op(n, op, false);
    std::vector<Scalar> e = TriMatrix::identity(ring, n).entries();
    if (op.kind == ElementaryOp::Kind::scale) {
      e[op.target * n + op.target] = op.factor;
    } else {
      e[op.source * n + op.target] = op.factor;
    }
    return TriMatrix(ring, n, std::move(e));
  }

  TriMatrix apply_row_op(TriMatrix const& m, ElementaryOp const& op) {
    auto const&         R = *m.ring();
    std::size_t const   n = m.dim();
    TriMatrix           L = row_op_matrix(m.ring(), n, op);
    std::vector<Scalar> e = m.entries();
    for (std::size_t j = 0; j < n; ++j) {
      if (op.kind == ElementaryOp::Kind::scale) {
        e[op.target * n + j] = R.mul(op.factor, m.at(op.target, j));
      } else {
        e[op.target * n + j]
            = R.add(m.at(op.target, j), R.mul(op.factor, m.at(op.source, j)));
      }
    }
    TriMatrix direct(m.ring(), n, std::move(e));
    if (!(direct == mat_mul(L, m))) {
      fail(ErrorCode::precondition, "row operation disagrees with its elementary matrix");
    }
    return direct;
  }

  TriMatrix apply_col_op(TriMatrix const& m, ElementaryOp const& op) {
    auto const&         R = *m.ring();
    std::size_t const   n = m.dim();
    TriMatrix           E = col_op_matrix(m.ring(), n, op);
    std::vector<Scalar> e = m.entries();
    for (std::size_t i = 0; i < n; ++i) {
      if (op.kind == ElementaryOp::Kind::scale) {
        e[i * n + op.target] = R.mul(m.at(i, op.target), op.factor);
      } else {
        e[i * n + op.target]
            = R.add(m.at(i, op.target), R.mul(m.at(i, op.source), op.factor));
      }
    }
    TriMatrix direct(m.ring(), n, std::move(e));
    if (!(direct == mat_mul(m, E))) {
      fail(ErrorCode::precondition,
           "column operation disagrees with its elementary matrix");
    }
    return direct;
  }

  BlockParts block_decompose(TriMatrix const& s) {
    std::size_t const n = s.dim();
    if (n < 2) {
      fail(ErrorCode::dimension_too_small, "block decomposition needs n >= 2");
    }
    std::vector<Scalar> M((n - 1) * (n - 1));
    std::vector<Scalar> v(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) {
        M[i * (n - 1) + j] = s.at(i, j);
      }
      v[i] = s.at(i, n - 1);
    }
    return {TriMatrix(s.ring(), n - 1, std::move(M)), std::move(v), s.at(n - 1, n - 1)};
  }

  TriMatrix reassemble(BlockParts const& parts) {
    std::size_t const m = parts.M.dim();
    std::size_t const n = m + 1;
    if (parts.v.size() != m) {
      fail(ErrorCode::dimension_mismatch, "block column has wrong length");
    }
    std::vector<Scalar> e(n * n, parts.M.ring()->zero());
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        e[i * n + j] = parts.M.at(i, j);
      }
      e[i * n + m] = parts.v[i];
    }
    e[m * n + m] = parts.c;
    return TriMatrix(parts.M.ring(), n, std::move(e));
  }

  AffineMap AffineMap::scaling(Ring const& ring, Scalar lambda, std::vector<Scalar> c) {
    if (lambda >= ring->size()) {
      fail(ErrorCode::invalid_argument, "scalar out of range");
    }
    AffineMap f;
    f.dim         = c.size();
    f.lambda      = lambda;
    f.translation = std::move(c);
    return f;
  }

  AffineMap AffineMap::triangular(TriMatrix X, std::vector<Scalar> c) {
    if (X.dim() != c.size()) {
      fail(ErrorCode::dimension_mismatch, "translation length differs from dimension");
    }
    AffineMap f;
    f.dim         = c.size();
    f.linear      = std::move(X);
    f.translation = std::move(c);
    return f;
  }

  std::vector<Scalar> row_times(SemiringTable const&       R,
                                std::vector<Scalar> const& v,
                                TriMatrix const&           m) {
    if (v.size() != m.dim()) {
      fail(ErrorCode::dimension_mismatch, "vector length differs from matrix dimension");
    }
    std::vector<Scalar> out(m.dim(), R.zero());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Scalar acc = R.zero();
      for (std::size_t i = 0; i <= j; ++i) {
        acc = R.add(acc, R.mul(v[i], m.at(i, j)));
      }
      out[j] = acc;
    }
    return out;
  }

  std::vector<Scalar> AffineMap::apply(SemiringTable const&       R,
                                       std::vector<Scalar> const& v) const {
    if (v.size() != dim) {
      fail(ErrorCode::dimension_mismatch, "vector length differs from map dimension");
    }
    std::vector<Scalar> out;
    if (linear) {
      out = row_times(R, v, *linear);
    } else {
      out.resize(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        out[i] = R.mul(v[i], lambda);
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      out[i] = R.add(out[i], translation[i]);
    }
    return out;
  }

  TriMatrix AffineMap::linear_part(Ring const& ring) const {
    if (linear) {
      return *linear;
    }
    std::vector<Scalar> e(dim * dim, ring->zero());
    for (std::size_t i = 0; i < dim; ++i) {
      e[i * dim + i] = lambda;
    }
    return TriMatrix(ring, dim, std::move(e));
  }

  TriMatrix affine_to_matrix(Ring const& ring, AffineMap const& f) {
    TriMatrix           X = f.linear_part(ring);
    std::size_t const   n = f.dim + 1;
    std::vector<Scalar> e(n * n, ring->zero());
    e[0] = ring->one();
    for (std::size_t j = 0; j < f.dim; ++j) {
      e[j + 1] = f.translation[j];
      for (std::size_t i = 0; i < f.dim; ++i) {
        e[(i + 1) * n + (j + 1)] = X.at(i, j);
      }
    }
    return TriMatrix(ring, n, std::move(e));
  }

  namespace {
    // Rank of a list of vectors over a field, by Gaussian elimination.
    std::size_t rank(SemiringTable const& F, std::vector<std::vector<Scalar>> rows) {
      if (rows.empty()) {
        return 0;
      }
      std::size_t const width = rows.front().size();
      std::size_t       r     = 0;
      for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == F.zero()) {
          ++pivot;
        }
        if (pivot == rows.size()) {
          continue;
        }
        std::swap(rows[r], rows[pivot]);
        Scalar inv = F.inverse(rows[r][col]);
        for (auto& x : rows[r]) {
          x = F.mul(inv, x);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i == r || rows[i][col] == F.zero()) {
            continue;
          }
          Scalar factor = F.negate(rows[i][col]);
          for (std::size_t k = 0; k < width; ++k) {
            rows[i][k] = F.add(rows[i][k], F.mul(factor, rows[r][k]));
          }
        }
        ++r;
      }
      return r;
    }

    bool span_condition(TriMatrix const& m, bool columns) {
      auto const& F = *m.ring();
      if (!F.is_field()) {
        fail(ErrorCode::field_required, "span test needs a field, got " + F.label());
      }
      std::size_t const                n = m.dim();
      std::vector<std::vector<Scalar>> vecs(n, std::vector<Scalar>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          vecs[a][b] = columns ? m.at(b, a) : m.at(a, b);
        }
      }
      std::vector<std::vector<Scalar>> basis;
      for (std::size_t a = 0; a < n; ++a) {
        if (m.at(a, a) != F.zero()) {
          basis.push_back(vecs[a]);
        }
      }
      std::size_t const base_rank = rank(F, basis);
      for (std::size_t a = 0; a < n; ++a) {
        auto extended = basis;
        extended.push_back(vecs[a]);
        if (rank(F, extended) != base_rank) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool column_span_condition(TriMatrix const& m) {
    return span_condition(m, true);
  }

  bool row_span_condition(TriMatrix const& m) {
    return span_condition(m, false);
  }

  nlohmann::json matrix_to_json(TriMatrix const& m) {
    std::vector<std::vector<Scalar>> rows(m.dim(), std::vector<Scalar>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = 0; j < m.dim(); ++j) {
        rows[i][j] = m.at(i, j);
      }
    }
    return {{"n", m.dim()}, {"ring", m.ring()->label()}, {"entries", rows}};
  }

  TriMatrix matrix_from_json(Ring ring, nlohmann::json const& j) {
    try {
      auto rows = j.at("entries").get<std::vector<std::vector<Scalar>>>();
      if (j.at("n").get<std::size_t>() != rows.size()) {
        fail(ErrorCode::dimension_mismatch, "n does not match entries");
      }
      return TriMatrix::from_rows(std::move(ring), rows);
    } catch (nlohmann::json::exception const& e) {
      fail(ErrorCode::parse_error, std::string("matrix JSON: ") + e.what());
    }
  }

}  // namespace semidec
