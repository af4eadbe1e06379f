#ifndef SEMIDEC_TRIMAT_HPP_
#define SEMIDEC_TRIMAT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "semidec/key.hpp"
#include "semidec/semiring.hpp"

namespace semidec {

  //! An upper triangular n x n matrix over a finite semiring.
  //!
  //! Entries are stored row-major; indices are 0-based throughout the code.
  class TriMatrix {
   public:
    // Throws invalid_argument if an entry below the diagonal is non-zero.
    TriMatrix(Ring ring, std::size_t n, std::vector<Scalar> entries);

    static TriMatrix identity(Ring ring, std::size_t n);
    static TriMatrix zero(Ring ring, std::size_t n);
    static TriMatrix from_rows(Ring ring, std::vector<std::vector<Scalar>> const& rows);
    static TriMatrix from_key(Ring ring, std::size_t n, KeyView key);

    std::size_t dim() const noexcept {
      return n_;
    }
    Ring const& ring() const noexcept {
      return ring_;
    }
    Scalar at(std::size_t i, std::size_t j) const noexcept {
      return entries_[i * n_ + j];
    }
    std::vector<Scalar> const& entries() const noexcept {
      return entries_;
    }

    Key         key() const;
    std::string to_string() const;

    bool operator==(TriMatrix const& that) const noexcept {
      return n_ == that.n_ && entries_ == that.entries_;
    }

   private:
    Ring                ring_;
    std::size_t         n_;
    std::vector<Scalar> entries_;
  };

  TriMatrix mat_mul(TriMatrix const& a, TriMatrix const& b);

  struct Classification {
    bool triangular    = true;
    bool unitriangular = false;
    bool subidentity   = false;
  };

  Classification classify(TriMatrix const& m);

  // Elementary upper-triangular operations. For rows, add_multiple adds
  // factor * (row source) to row target, which must lie above it. For
  // columns, factor * (column source) is added to column target, which must
  // lie to the right of it. scale multiplies row/column target by factor.
  struct ElementaryOp {
    enum class Kind { add_multiple, scale };
    Kind        kind   = Kind::scale;
    std::size_t target = 0;
    std::size_t source = 0;
    Scalar      factor = 0;
  };

  // The triangular matrix L with L * m = apply_row_op(m, op).
  TriMatrix row_op_matrix(Ring const& ring, std::size_t n, ElementaryOp const& op);
  // The triangular matrix E with m * E = apply_col_op(m, op).
  TriMatrix col_op_matrix(Ring const& ring, std::size_t n, ElementaryOp const& op);

  TriMatrix apply_row_op(TriMatrix const& m, ElementaryOp const& op);
  TriMatrix apply_col_op(TriMatrix const& m, ElementaryOp const& op);

  // s = (M v; 0 c) with M of dimension n-1.
  struct BlockParts {
    TriMatrix           M;
    std::vector<Scalar> v;
    Scalar              c;
  };

  BlockParts block_decompose(TriMatrix const& s);
  TriMatrix  reassemble(BlockParts const& parts);

  //! Affine map v -> vX + c on row vectors of length dim. In scaling form X
  //! is lambda * I and only lambda is stored.
  struct AffineMap {
    std::size_t              dim = 0;
    std::optional<TriMatrix> linear;
    Scalar                   lambda = 0;
    std::vector<Scalar>      translation;

    static AffineMap scaling(Ring const& ring, Scalar lambda, std::vector<Scalar> c);
    static AffineMap triangular(TriMatrix X, std::vector<Scalar> c);

    std::vector<Scalar> apply(SemiringTable const& ring,
                              std::vector<Scalar> const& v) const;
    TriMatrix           linear_part(Ring const& ring) const;
  };

  // M_f = (1 c; 0 X), of dimension dim + 1.
  TriMatrix affine_to_matrix(Ring const& ring, AffineMap const& f);

  // Row vector v times a triangular matrix.
  std::vector<Scalar> row_times(SemiringTable const& ring,
                                std::vector<Scalar> const& v,
                                TriMatrix const& m);

  // Whether every column (row) of m lies in the span of the columns (rows)
  // with non-zero diagonal entry. Requires a field.
  bool column_span_condition(TriMatrix const& m);
  bool row_span_condition(TriMatrix const& m);

  nlohmann::json matrix_to_json(TriMatrix const& m);
  TriMatrix      matrix_from_json(Ring ring, nlohmann::json const& j);

}  // namespace semidec

#endif  // SEMIDEC_TRIMAT_HPP_
