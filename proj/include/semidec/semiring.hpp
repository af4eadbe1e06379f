#ifndef SEMIDEC_SEMIRING_HPP_
#define SEMIDEC_SEMIRING_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "semidec/error.hpp"

namespace semidec {

  // Element of a SemiringTable: a dense index 0..size-1.
  using Scalar = std::uint8_t;

  inline constexpr std::size_t max_semiring_size = 255;
  inline constexpr unsigned    default_prime_bound = 13;

  //! A finite semiring with identity given by explicit operation tables.
  //!
  //! Addition is associative and commutative, multiplication associative,
  //! zero is an additive identity and two-sided annihilator, one is a
  //! two-sided multiplicative identity, and multiplication distributes over
  //! addition on both sides. Every instance has passed these checks, so the
  //! only way to obtain one is through the factory functions below.
  class SemiringTable {
   public:
    std::size_t size() const noexcept {
      return size_;
    }
    Scalar zero() const noexcept {
      return zero_;
    }
    Scalar one() const noexcept {
      return one_;
    }
    std::string const& label() const noexcept {
      return label_;
    }
    bool is_field() const noexcept {
      return is_field_;
    }

    Scalar add(Scalar a, Scalar b) const noexcept {
      return add_[a * size_ + b];
    }
    Scalar mul(Scalar a, Scalar b) const noexcept {
      return mul_[a * size_ + b];
    }

    bool is_unit(Scalar a) const noexcept;
    // Two-sided inverse; requires is_unit(a).
    Scalar inverse(Scalar a) const;
    // Additive inverse; requires one to exist.
    Scalar negate(Scalar a) const;

    std::vector<std::vector<Scalar>> add_table() const;
    std::vector<std::vector<Scalar>> mul_table() const;

    bool operator==(SemiringTable const& that) const noexcept {
      return size_ == that.size_ && zero_ == that.zero_ && one_ == that.one_
             && add_ == that.add_ && mul_ == that.mul_;
    }

   private:
    friend std::shared_ptr<SemiringTable const>
    make_from_tables(std::vector<std::vector<Scalar>> const&,
                     std::vector<std::vector<Scalar>> const&,
                     Scalar,
                     Scalar,
                     std::string);

    SemiringTable() = default;

    std::size_t         size_ = 0;
    std::vector<Scalar> add_;
    std::vector<Scalar> mul_;
    Scalar              zero_     = 0;
    Scalar              one_      = 0;
    bool                is_field_ = false;
    std::string         label_;
  };

  using Ring = std::shared_ptr<SemiringTable const>;

  class AxiomViolation : public Error {
   public:
    AxiomViolation(std::string law, std::array<Scalar, 3> witness);

    std::string const& law() const noexcept {
      return law_;
    }
    std::array<Scalar, 3> const& witness() const noexcept {
      return witness_;
    }

   private:
    std::string           law_;
    std::array<Scalar, 3> witness_;
  };

  // Throws AxiomViolation on the first failed law (laws are checked in a
  // fixed order and triples in lexicographic order).
  Ring make_from_tables(std::vector<std::vector<Scalar>> const& add,
                        std::vector<std::vector<Scalar>> const& mul,
                        Scalar                                  zero,
                        Scalar                                  one,
                        std::string label = "R");

  Ring make_prime_field(unsigned p, unsigned bound = default_prime_bound);
  Ring make_boolean_semiring();

  std::vector<Scalar> units(SemiringTable const& ring);

  // "zp:<p>", "bool" or "table:<path>".
  Ring parse_ring_spec(std::string const& spec);

  nlohmann::json ring_to_json(SemiringTable const& ring);
  Ring           ring_from_json(nlohmann::json const& j);

}  // namespace semidec

#endif  // SEMIDEC_SEMIRING_HPP_
