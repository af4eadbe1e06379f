#ifndef SEMIDEC_WREATH_HPP_
#define SEMIDEC_WREATH_HPP_

#include <memory>
#include <vector>

#include "json.hpp"

#include "semidec/monoid.hpp"

namespace semidec {

  inline constexpr std::size_t default_wreath_limit = 100000;

  //! An element (f, b) of top wr base: f is a table over the canonical order
  //! of the base monoid.
  struct WreathElement {
    std::vector<Key> table;
    std::uint32_t    base = 0;
  };

  //! The wreath product top wr base, with
  //! (f, a)(g, b) = (t -> f(t) g(t a), ab).
  //!
  //! Only the base needs to be enumerated; the top is any carrier, so
  //! iterated products nest by taking an enumerated (often restricted)
  //! wreath monoid as the base of the next level.
  class WreathCarrier : public Carrier {
   public:
    WreathCarrier(CarrierPtr top, MonoidPtr base);

    static Key    encode(WreathElement const& x);
    WreathElement decode(KeyView k) const;

    Key            identity() const override;
    Key            multiply(KeyView a, KeyView b) const override;
    bool           contains(KeyView k) const override;
    nlohmann::json descriptor() const override;
    std::string    label() const override;
    std::string    render(KeyView k) const override;

    CarrierPtr const& top() const noexcept {
      return top_;
    }
    MonoidPtr const& base() const noexcept {
      return base_;
    }

   private:
    CarrierPtr top_;
    MonoidPtr  base_;
  };

  using WreathContext = std::shared_ptr<WreathCarrier const>;

  WreathContext make_context(CarrierPtr top, MonoidPtr base);
  WreathContext make_context(MonoidPtr const& top, MonoidPtr base);

  // Throws ContextMismatch if either argument is not an element of ctx.
  WreathElement wreath_mul(WreathCarrier const& ctx,
                           WreathElement const& x,
                           WreathElement const& y);

  // Elements ordered by base index, then tables in mixed radix (entry 0
  // most significant) over the top's canonical order.
  MonoidPtr enumerate_wreath(MonoidPtr const& top,
                             MonoidPtr const& base,
                             std::size_t      limit = default_wreath_limit);

  // S_1 wr (S_2 wr (... wr S_k)); inner levels are enumerated.
  WreathContext iterated_context(std::vector<MonoidPtr> const& levels,
                                 std::size_t limit = default_wreath_limit);

  struct Restriction {
    WreathContext  context;
    nlohmann::json step;
  };

  // C wr B' for a submonoid B' of B (same identity, same products). The
  // returned step records the division C wr B' < C wr B given by
  // (f, b) -> (f restricted to B', b) on {(f, b) : b in B'}.
  Restriction restrict_base(WreathCarrier const& ctx, MonoidPtr const& sub);
  // Same, for a base that is only available as a carrier (too large to
  // enumerate); membership and products of B' are checked in that carrier.
  Restriction restrict_base(CarrierPtr const& top,
                            CarrierPtr const& full_base,
                            MonoidPtr const&  sub);

  nlohmann::json wreath_element_json(Carrier const& carrier, KeyView k);

}  // namespace semidec

#endif  // SEMIDEC_WREATH_HPP_
