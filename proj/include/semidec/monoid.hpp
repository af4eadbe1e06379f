#ifndef SEMIDEC_MONOID_HPP_
#define SEMIDEC_MONOID_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "semidec/carrier.hpp"

namespace semidec {

  inline constexpr std::size_t default_monoid_limit = 100000;
  inline constexpr std::size_t table_bound          = 4096;
  inline constexpr std::size_t full_assoc_bound     = 512;

  class Monoid;
  using MonoidPtr = std::shared_ptr<Monoid const>;

  //! An enumerated finite monoid.
  //!
  //! Elements are keys of an underlying carrier, held in a canonical order;
  //! all analyses work on indices into that order. The identity need not be
  //! the identity of the carrier (maximal subgroups, for instance). The
  //! multiplication is tabled up to table_bound elements and otherwise
  //! computed through the carrier with a memo.
  class Monoid {
   public:
    // Verifies distinctness, closure, the identity law and associativity
    // (all triples up to full_assoc_bound elements, 10^4 random triples
    // beyond). generators must generate the monoid; empty means "all".
    static MonoidPtr make(CarrierPtr                 carrier,
                          std::vector<Key>           elements,
                          KeyView                    identity,
                          nlohmann::json             descriptor,
                          std::string                label,
                          std::vector<std::uint32_t> generators = {});

    std::size_t size() const noexcept {
      return keys_.size();
    }
    Key const& key(std::uint32_t i) const {
      return keys_.at(i);
    }
    std::vector<Key> const& keys() const noexcept {
      return keys_;
    }
    std::optional<std::uint32_t> index_of(KeyView k) const;
    std::uint32_t                 at(KeyView k) const;  // throws if absent

    std::uint32_t identity() const noexcept {
      return identity_;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    CarrierPtr const& carrier() const noexcept {
      return carrier_;
    }
    // Carrier view of this monoid: its own identity, tabled multiplication.
    CarrierPtr as_carrier() const;

    nlohmann::json const& descriptor() const noexcept {
      return descriptor_;
    }
    std::string const& label() const noexcept {
      return label_;
    }
    std::vector<std::uint32_t> const& generators() const noexcept {
      return generators_;
    }
    std::string render(std::uint32_t i) const {
      return carrier_->render(keys_.at(i));
    }

   private:
    Monoid() = default;

    CarrierPtr                               carrier_;
    std::vector<Key>                         keys_;
    std::unordered_map<Key, std::uint32_t>   index_;
    std::uint32_t                            identity_ = 0;
    std::vector<std::uint32_t>               table_;
    std::vector<std::uint32_t>               generators_;
    nlohmann::json                           descriptor_;
    std::string                              label_;
    mutable std::mutex                       memo_mutex_;
    mutable std::unordered_map<std::uint64_t, std::uint32_t> memo_;
    std::weak_ptr<Monoid const>              self_;
  };

  //! Carrier backed by an enumerated monoid.
  class MonoidCarrier : public Carrier {
   public:
    explicit MonoidCarrier(MonoidPtr m) : m_(std::move(m)) {}

    Key            identity() const override;
    Key            multiply(KeyView a, KeyView b) const override;
    bool           contains(KeyView k) const override;
    nlohmann::json descriptor() const override;
    std::string    label() const override;
    std::string    render(KeyView k) const override;

    MonoidPtr const& monoid() const noexcept {
      return m_;
    }

   private:
    MonoidPtr m_;
  };

  // Breadth-first closure: generators in input order, then each element (in
  // discovery order) times each generator (in input order). The carrier
  // identity is appended if not reached.
  MonoidPtr close_generators(CarrierPtr              carrier,
                             std::vector<Key> const& generators,
                             std::size_t             limit = default_monoid_limit,
                             std::string             label = "");

  struct GreensReport {
    // Class ids per element, numbered by first occurrence.
    std::vector<std::uint32_t> L, R, J, H;
    std::vector<bool>          regular;
    std::vector<bool>          idempotent;
    std::vector<std::uint32_t> idempotents;
    std::size_t                num_L = 0, num_R = 0, num_J = 0, num_H = 0;

    std::size_t regular_J_count() const;
  };

  GreensReport greens(Monoid const& m);

  MonoidPtr maximal_subgroup(MonoidPtr const& m, std::uint32_t e);
  MonoidPtr maximal_subgroup(MonoidPtr const& m, std::uint32_t e, GreensReport const& g);

  bool is_aperiodic(Monoid const& m);
  bool is_group(Monoid const& m);
  bool is_idempotent(Monoid const& m, std::uint32_t x);

  struct DepthReport {
    std::size_t num_classes = 0;
    // representative element per J-class
    std::vector<std::uint32_t> representative;
    // above[a][b]: class a is strictly J-above class b
    std::vector<std::vector<bool>>                        above;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cover_edges;
    std::vector<bool>                                     essential;
    // -1 for non-essential classes
    std::vector<int>         class_depth;
    std::vector<std::size_t> subgroup_order;  // maximal subgroup order per class (0 if not regular)
    std::size_t              depth = 0;
    std::vector<std::size_t> census;  // essential classes per depth
    // K_i: the essential classes at depth i, whose maximal subgroups form
    // the direct product K_i.
    std::vector<std::vector<std::uint32_t>> k_terms;
  };

  DepthReport depth_report(Monoid const& m);
  DepthReport depth_report(Monoid const& m, GreensReport const& g);

  struct Quotient {
    MonoidPtr                  monoid;
    std::vector<std::uint32_t> projection;
  };

  Quotient quotient_by_central_units(MonoidPtr const&                  m,
                                     std::vector<std::uint32_t> const& central);

  MonoidPtr direct_product(std::vector<MonoidPtr> const& factors,
                           std::size_t                   limit = default_monoid_limit);
  MonoidPtr direct_product(MonoidPtr const& a, MonoidPtr const& b,
                           std::size_t limit = default_monoid_limit);

  inline constexpr std::size_t default_isomorphism_limit = 64;

  // Backtracking over images of a greedy generating set, pruned by
  // element invariants.
  bool isomorphic(Monoid const& a, Monoid const& b,
                  std::size_t limit = default_isomorphism_limit);

  // Greedy monoid generating set in canonical order.
  std::vector<std::uint32_t> small_generating_set(Monoid const& m);

  // Monoid with an explicit Cayley table (TableCarrier).
  MonoidPtr monoid_from_table(std::vector<std::vector<std::uint32_t>> table,
                              std::uint32_t identity,
                              std::string   label);

  // Cyclic group of order n as a Cayley table.
  MonoidPtr cyclic_group(std::size_t n);
  MonoidPtr trivial_monoid();

}  // namespace semidec

#endif  // SEMIDEC_MONOID_HPP_
