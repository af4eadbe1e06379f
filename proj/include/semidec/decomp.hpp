#ifndef SEMIDEC_DECOMP_HPP_
#define SEMIDEC_DECOMP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "semidec/families.hpp"
#include "semidec/witness.hpp"

namespace semidec {

  enum class TermTag { group, aperiodic, mixed };

  char const* tag_name(TermTag tag) noexcept;
  TermTag     classify_term(Monoid const& m);

  struct PlanTerm {
    std::string    label;
    TermTag        tag = TermTag::mixed;
    std::size_t    order = 0;
    nlohmann::json descriptor;
  };

  // A maximal run of adjacent terms with the same tag.
  struct TermBlock {
    TermTag                  tag = TermTag::mixed;
    std::vector<std::size_t> terms;
  };

  struct EmbeddingCheck {
    std::size_t m    = 0;
    std::size_t size = 0;
    bool        ok   = false;
  };

  //! An iterated wreath product (outermost term first) that T_n(R) divides,
  //! with the verified witness chain behind it.
  struct DecompositionPlan {
    std::string                    pipeline;
    std::size_t                    n = 0;
    Ring                           ring;
    std::vector<PlanTerm>          terms;
    std::vector<TermBlock>         blocks;
    std::size_t                    group_length = 0;
    std::vector<DivisionWitness>   chain;
    std::optional<DivisionWitness> composite;
    std::string                    composite_error;
    std::vector<EmbeddingCheck>    embeddings;
  };

  // Merges adjacent terms of equal tag and counts group blocks.
  void merge_terms(DecompositionPlan& plan);

  // T_n(R) < [AS_{n-1}(R) wr T_{n-1}(R)] x T_1(R), s -> (f_s, M_s, c_s).
  DivisionWitness induction_step(std::size_t n, Ring const& ring,
                                 std::size_t limit = default_closure_limit);

  // T_n(R) < AS_{n-1}(R) wr (AS_{n-2}(R) wr ... wr (AS_1(R) wr T_1(R)^n)).
  DecompositionPlan ring_pipeline(std::size_t n, Ring const& ring,
                                  std::size_t limit = default_closure_limit);

  // T_n(k) < k~^{n-1} wr AS*_{n-1}(k) wr ... wr k~ wr AS*_1(k) wr T_1*(k)^n wr U_1^n.
  DecompositionPlan field_pipeline(std::size_t n, Ring const& field,
                                   std::size_t limit = default_closure_limit);

  // AS*_m(k) embeds in T_n*(k) through f -> diag(M_f, I).
  EmbeddingCheck check_affine_embedding(std::size_t m, std::size_t n, Ring const& field);

  struct DepthComparison {
    DepthReport                          report;
    std::vector<std::vector<std::size_t>> k_orders;  // |G_J| per essential class, per depth
    std::vector<std::size_t>             k_product_orders;
    std::optional<std::size_t>           pipeline_group_length;
  };

  // Depth report plus, for a field family T_n(k), the field pipeline's group
  // length.
  DepthComparison depth_analysis(MonoidPtr const&                 m,
                                 std::optional<FamilySpec> const& family = std::nullopt);

  struct CensusReport {
    FamilyKind                kind = FamilyKind::T;
    std::size_t               n    = 0;
    std::size_t               depth = 0;
    std::vector<std::size_t>  counts;
    std::vector<std::size_t>  subgroup_orders;  // per depth
    bool                      ok = false;
  };

  // Essential J-classes per depth are binomial(n, i) and each maximal
  // subgroup at depth i is isomorphic to the unit group of the n-i family.
  // Throws CensusMismatch.
  CensusReport verify_census(std::size_t n, Ring const& field, FamilyKind kind);

  nlohmann::json plan_to_json(DecompositionPlan const& plan);
  // Certificates are re-verified; their verdicts are recomputed.
  DecompositionPlan plan_from_json(nlohmann::json const& j,
                                   std::size_t           limit = default_closure_limit);
  std::string    plan_to_text(DecompositionPlan const& plan);

}  // namespace semidec

#endif  // SEMIDEC_DECOMP_HPP_
