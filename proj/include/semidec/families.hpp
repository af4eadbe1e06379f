#ifndef SEMIDEC_FAMILIES_HPP_
#define SEMIDEC_FAMILIES_HPP_

#include <string>
#include <vector>

#include "semidec/monoid.hpp"
#include "semidec/trimat.hpp"

namespace semidec {

  enum class FamilyKind {
    T,
    UT,
    PT,
    T_star,
    UT_star,
    PT_star,
    A,
    AT,
    AS,
    A_star,
    AT_star,
    AS_star,
    Xtilde,
    U1,
    augmented
  };

  // Names as used on the command line: T UT PT T* UT* PT* A AT AS A* AT* AS*
  // Xtilde U1 augmented.
  std::string kind_name(FamilyKind kind);
  FamilyKind  parse_kind(std::string const& name);

  //! n is the matrix degree for the triangular kinds and the dimension of
  //! R^n for the affine kinds; Xtilde is the constants monoid on R^n and
  //! augmented is the augmented monoid of AS*_n(R) acting on R^n.
  struct FamilySpec {
    FamilyKind  kind = FamilyKind::T;
    std::size_t n    = 1;
    Ring        ring;
  };

  MonoidPtr build_family(FamilySpec const& spec, std::size_t limit = default_monoid_limit);

  std::string family_label(FamilySpec const& spec);

  MonoidPtr constants_monoid(std::size_t points);
  MonoidPtr u1();

  // Right action of A on X as a table action[a][x]; must be faithful.
  MonoidPtr augmented_monoid(Monoid const&                                  A,
                             std::vector<std::vector<std::uint32_t>> const& action,
                             std::size_t limit = default_monoid_limit);
  // A must be a monoid of transformations (TransformationCarrier).
  MonoidPtr augmented_monoid(Monoid const& A, std::size_t limit = default_monoid_limit);

  std::vector<std::vector<std::uint32_t>> transformation_action(Monoid const& A);

  // Group of units as a submonoid with the same carrier.
  MonoidPtr unit_group(MonoidPtr const& m, std::string label = "");

  // Row vectors of R^dim are numbered with the first coordinate most
  // significant.
  std::uint32_t       vector_index(SemiringTable const& ring, std::vector<Scalar> const& v);
  std::vector<Scalar> vector_at(SemiringTable const& ring, std::size_t dim, std::uint32_t index);
  std::size_t         point_count(SemiringTable const& ring, std::size_t dim);

  // Extensional key of an affine map as a transformation of R^dim.
  Key affine_key(Ring const& ring, AffineMap const& f);

}  // namespace semidec

#endif  // SEMIDEC_FAMILIES_HPP_
