#ifndef SEMIDEC_CROSSCHECK_HPP_
#define SEMIDEC_CROSSCHECK_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "semidec/families.hpp"

namespace semidec {

  //! Outcome of an exhaustive property check on one monoid.
  struct CrossCheck {
    std::string name;
    std::string subject;
    std::size_t checked    = 0;
    std::size_t violations = 0;
    std::string first_violation;

    bool ok() const noexcept {
      return checked > 0 && violations == 0;
    }
  };

  // L, R and J in T_n(R) or UT_n(R) against mutual reachability under row
  // operations, column operations and both. For UT the operations are left
  // and right multiplication by UT_n(R).
  CrossCheck check_green_operations(FamilySpec const& spec);

  // Regular, row span, column span and J-related to a subidentity agree on
  // every element of T_n(k) or UT_n(k).
  CrossCheck check_regularity(FamilySpec const& spec);

  // Regularity and L, R, J are preserved and reflected by T_n(k) -> PT_n(k).
  CrossCheck check_projective(std::size_t n, Ring const& field);

  // All three on T_2(Z_2), T_2(Z_3) and UT_3(Z_2), projective on T_2(Z_3).
  std::vector<CrossCheck> standard_crosschecks();

  nlohmann::json crosscheck_to_json(CrossCheck const& c);

}  // namespace semidec

#endif  // SEMIDEC_CROSSCHECK_HPP_
