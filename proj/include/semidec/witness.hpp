#ifndef SEMIDEC_WITNESS_HPP_
#define SEMIDEC_WITNESS_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "semidec/wreath.hpp"

namespace semidec {

  inline constexpr std::size_t default_closure_limit = 100000;
  inline constexpr std::size_t default_search_limit  = 12;

  enum class VerdictStatus { unverified, verified, failed };

  struct Verdict {
    VerdictStatus status       = VerdictStatus::unverified;
    std::size_t   closure_size = 0;
    ErrorCode     failure      = ErrorCode::ok;
    std::string   reason;
  };

  // The closure of a witness's pairs: a functional relation from a
  // subsemigroup of the target onto the source.
  struct WitnessClosure {
    std::vector<Key>                       targets;  // discovery order
    std::vector<std::uint32_t>             sources;  // source index per target
    std::unordered_map<Key, std::uint32_t> position;
    // least (discovery order) closure position over each source element
    std::vector<std::uint32_t> first_preimage;
  };

  //! Certificate that source divides target: generator pairs (t, s) whose
  //! closure under componentwise products is the graph of a surjective
  //! homomorphism from a subsemigroup of the target onto the source.
  struct DivisionWitness {
    std::string                      name;
    MonoidPtr                        source;
    CarrierPtr                       target;
    std::vector<std::pair<Key, Key>> pairs;
    nlohmann::json                   steps = nlohmann::json::array();
    Verdict                          verdict;
    std::shared_ptr<WitnessClosure const> closure;

    bool verified() const noexcept {
      return verdict.status == VerdictStatus::verified;
    }
    // Throws unless verified.
    void require_verified() const;

    // Source index of a closure element.
    std::uint32_t image(KeyView t) const;
    // Canonically least target element mapping to source element s.
    Key preimage(std::uint32_t s) const;
    Key preimage(KeyView s) const;
    bool injective() const;
  };

  // Recomputes the closure. Failures (NotFunctional, NotSurjective,
  // SizeLimitExceeded, invalid keys) are recorded in the verdict rather
  // than thrown.
  DivisionWitness verify(DivisionWitness w, std::size_t limit = default_closure_limit);

  // Submonoid of the target traced by the closure (its first coordinates),
  // in closure order; requires the target identity to be in the closure.
  MonoidPtr                  image_submonoid(DivisionWitness const& w);
  std::vector<std::uint32_t> image_map(DivisionWitness const& w, Monoid const& image);

  // Builds pairs (identity, identity) and (preimage(s), s) for the given
  // source generators (default: the source's generators), then verifies.
  DivisionWitness make_witness(std::string                            name,
                               MonoidPtr                              source,
                               CarrierPtr                             target,
                               std::function<Key(std::uint32_t)> const& preimage,
                               nlohmann::json                         step,
                               std::optional<std::vector<std::uint32_t>> gens = std::nullopt,
                               std::size_t limit = default_closure_limit);

  // Whether keys of carrier a and monoid b's elements are the same
  // representation (ignoring enumerated-monoid wrappers).
  bool same_structure(Carrier const& a, Carrier const& b);

  DivisionWitness identity_witness(MonoidPtr const& s);

  DivisionWitness compose(DivisionWitness const& w1,
                          DivisionWitness const& w2,
                          std::size_t            limit = default_closure_limit);

  // C wr A < C wr B from A < B. The target is C wr B' for the traced image
  // B' of w, connected to C wr B by a recorded base restriction. Source
  // generators are keys of C wr A; by default C wr A is enumerated.
  DivisionWitness lift_left(DivisionWitness const&                  w,
                            MonoidPtr const&                        C,
                            std::optional<std::vector<Key>> const& source_gens = std::nullopt,
                            std::size_t limit = default_closure_limit);

  // A wr C < B wr C from A < B.
  DivisionWitness lift_right(DivisionWitness const&                  w,
                             MonoidPtr const&                        C,
                             std::optional<std::vector<Key>> const& source_gens = std::nullopt,
                             std::size_t limit = default_closure_limit);

  DivisionWitness times_to_wreath(MonoidPtr const& A,
                                  MonoidPtr const& B,
                                  std::size_t      limit = default_closure_limit);

  DivisionWitness interchange(MonoidPtr const& A,
                              MonoidPtr const& B,
                              MonoidPtr const& C,
                              MonoidPtr const& D,
                              std::size_t      limit = default_closure_limit);

  // (A wr B) x C < A wr (B x C) via ((f, b), c) -> (f alpha, (b, c)) with
  // (b, c) f alpha = b f. Source generators are keys of (A wr B) x C.
  DivisionWitness absorb(MonoidPtr const&                        A,
                         MonoidPtr const&                        B,
                         MonoidPtr const&                        C,
                         std::optional<std::vector<Key>> const& source_gens = std::nullopt,
                         std::size_t limit = default_closure_limit);

  // The augmented monoid of A (acting faithfully on X) divides X~ wr A.
  DivisionWitness augmentation(MonoidPtr const&                               A,
                               std::vector<std::vector<std::uint32_t>> const& action,
                               std::size_t limit = default_closure_limit);
  DivisionWitness augmentation(MonoidPtr const& A, std::size_t limit = default_closure_limit);

  // T_1(k) < T_1*(k) x U_1.
  DivisionWitness group_with_zero(Ring const& field);

  // A_1 x ... x A_m < B_1 x ... x B_m from verified A_i < B_i.
  DivisionWitness product_witness(std::vector<DivisionWitness> const&      ws,
                                  std::optional<std::vector<Key>> const& source_gens = std::nullopt,
                                  std::size_t limit = default_closure_limit);
  DivisionWitness product_witness(DivisionWitness const& w1,
                                  DivisionWitness const& w2,
                                  std::size_t            limit = default_closure_limit);

  // First coordinates of the pairs, in order.
  std::vector<Key> first_coordinates(DivisionWitness const& w);

  // Generators reproducing m under close_generators in its own carrier.
  std::vector<Key> generator_keys(Monoid const& m);

  // sub < full for a submonoid given by the same keys.
  DivisionWitness inclusion_witness(MonoidPtr const& sub, MonoidPtr const& full);
  // The division w with source replaced by S, a submonoid of w's source.
  DivisionWitness restrict_source(DivisionWitness const& w,
                                  MonoidPtr const&       S,
                                  std::size_t            limit = default_closure_limit);

  // (A wr B) wr C < A wr (B wr C) via ((h_c, g_c)_c, c0) -> (H, (G, c0)) with
  // G(c) = g_c and H(K, c) = h_c(K(1)). The base of the target is the traced
  // submonoid D of B wr C, recorded as a restriction.
  DivisionWitness reassociate(CarrierPtr const&       A,
                              MonoidPtr const&        B,
                              MonoidPtr const&        C,
                              std::vector<Key> const& source_gens,
                              std::size_t             limit = default_closure_limit);

  struct SearchResult {
    std::optional<DivisionWitness> witness;
    std::size_t                    subsemigroups = 0;
    std::size_t                    assignments   = 0;
  };

  // Exhaustive: subsemigroups of T in canonical order, then assignments of
  // their generators into S.
  SearchResult search_division(MonoidPtr const& S,
                               MonoidPtr const& T,
                               std::size_t      target_limit = default_search_limit);

  nlohmann::json  certificate_to_json(DivisionWitness const& w);
  // Rebuilds source and target from their descriptors; verdict is reset.
  DivisionWitness certificate_from_json(nlohmann::json const& j);

}  // namespace semidec

#endif  // SEMIDEC_WITNESS_HPP_
