#ifndef SEMIDEC_CARRIER_HPP_
#define SEMIDEC_CARRIER_HPP_

// A carrier is a monoid given only by a multiplication oracle on canonical
// keys. It need not be enumerable: wreath products over large bases are
// carriers that are only ever explored through closures of generators.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "semidec/key.hpp"
#include "semidec/semiring.hpp"

namespace semidec {

  class Carrier {
   public:
    virtual ~Carrier() = default;

    virtual Key  identity() const                       = 0;
    virtual Key  multiply(KeyView a, KeyView b) const   = 0;
    // Structural validity of a key (never trusts certificate input).
    virtual bool contains(KeyView k) const              = 0;
    // Enough to rebuild an equivalent carrier in another process.
    virtual nlohmann::json descriptor() const           = 0;
    virtual std::string    label() const                = 0;
    virtual std::string    render(KeyView k) const {
      return to_hex(k);
    }
  };

  using CarrierPtr = std::shared_ptr<Carrier const>;

  class MatrixCarrier : public Carrier {
   public:
    MatrixCarrier(Ring ring, std::size_t n);

    Key            identity() const override;
    Key            multiply(KeyView a, KeyView b) const override;
    bool           contains(KeyView k) const override;
    nlohmann::json descriptor() const override;
    std::string    label() const override;
    std::string    render(KeyView k) const override;

    Ring const& ring() const noexcept {
      return ring_;
    }
    std::size_t dim() const noexcept {
      return n_;
    }

   private:
    Ring        ring_;
    std::size_t n_;
  };

  //! Full transformation monoid on {0, ..., degree-1}, maps acting on the
  //! right: (a * b)(x) = b(a(x)).
  class TransformationCarrier : public Carrier {
   public:
    explicit TransformationCarrier(std::size_t degree);

    static Key                        encode(std::vector<std::uint32_t> const& images);
    static std::vector<std::uint32_t> decode(KeyView k);

    Key            identity() const override;
    Key            multiply(KeyView a, KeyView b) const override;
    bool           contains(KeyView k) const override;
    nlohmann::json descriptor() const override;
    std::string    label() const override;
    std::string    render(KeyView k) const override;

    std::size_t degree() const noexcept {
      return degree_;
    }

   private:
    std::size_t degree_;
  };

  //! The identity together with |X| constant maps, kept as abstract symbols
  //! so that |X| = 1 still gives a two-element monoid.
  class ConstantsCarrier : public Carrier {
   public:
    explicit ConstantsCarrier(std::size_t points);

    static Key identity_key();
    static Key constant_key(std::uint32_t x);

    Key            identity() const override;
    Key            multiply(KeyView a, KeyView b) const override;
    bool           contains(KeyView k) const override;
    nlohmann::json descriptor() const override;
    std::string    label() const override;
    std::string    render(KeyView k) const override;

    std::size_t points() const noexcept {
      return points_;
    }

   private:
    std::size_t points_;
  };

  //! Monoid given by an explicit Cayley table on 0..n-1.
  class TableCarrier : public Carrier {
   public:
    TableCarrier(std::vector<std::vector<std::uint32_t>> table,
                 std::uint32_t                           identity,
                 std::string                             label);

    static Key           encode(std::uint32_t i);
    static std::uint32_t decode(KeyView k);

    Key            identity() const override;
    Key            multiply(KeyView a, KeyView b) const override;
    bool           contains(KeyView k) const override;
    nlohmann::json descriptor() const override;
    std::string    label() const override;
    std::string    render(KeyView k) const override;

    std::size_t size() const noexcept {
      return table_.size();
    }

   private:
    std::vector<std::vector<std::uint32_t>> table_;
    std::uint32_t                           identity_;
    std::string                             label_;
  };

  class ProductCarrier : public Carrier {
   public:
    explicit ProductCarrier(std::vector<CarrierPtr> factors);

    static Key           encode(std::vector<Key> const& parts);
    std::vector<KeyView> split(KeyView k) const;

    Key            identity() const override;
    Key            multiply(KeyView a, KeyView b) const override;
    bool           contains(KeyView k) const override;
    nlohmann::json descriptor() const override;
    std::string    label() const override;
    std::string    render(KeyView k) const override;

    std::vector<CarrierPtr> const& factors() const noexcept {
      return factors_;
    }

   private:
    std::vector<CarrierPtr> factors_;
  };

  //! Quotient of a carrier by a central subgroup Z of its units. The key of
  //! a class is the bytewise least key among x*z, z in Z.
  class QuotientCarrier : public Carrier {
   public:
    QuotientCarrier(CarrierPtr base, std::vector<Key> central);

    Key canonical(KeyView x) const;

    Key            identity() const override;
    Key            multiply(KeyView a, KeyView b) const override;
    bool           contains(KeyView k) const override;
    nlohmann::json descriptor() const override;
    std::string    label() const override;
    std::string    render(KeyView k) const override;

    CarrierPtr const& base() const noexcept {
      return base_;
    }

   private:
    CarrierPtr       base_;
    std::vector<Key> central_;
  };

}  // namespace semidec

#endif  // SEMIDEC_CARRIER_HPP_
