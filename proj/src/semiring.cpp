#include "semidec/semiring.hpp"

#include <fstream>
#include <sstream>

namespace semidec {

  AxiomViolation::AxiomViolation(std::string law, std::array<Scalar, 3> witness)
      : Error(ErrorCode::axiom_violation,
              "AxiomViolation: " + law + " fails at ("
                  + std::to_string(witness[0]) + ", " + std::to_string(witness[1])
                  + ", " + std::to_string(witness[2]) + ")"),
        law_(std::move(law)),
        witness_(witness) {}

  bool SemiringTable::is_unit(Scalar a) const noexcept {
    for (std::size_t y = 0; y < size_; ++y) {
      auto b = static_cast<Scalar>(y);
      if (mul(a, b) == one_ && mul(b, a) == one_) {
        return true;
      }
    }
    return false;
  }

  Scalar SemiringTable::inverse(Scalar a) const {
    for (std::size_t y = 0; y < size_; ++y) {
      auto b = static_cast<Scalar>(y);
      if (mul(a, b) == one_ && mul(b, a) == one_) {
        return b;
      }
    }
    fail(ErrorCode::invalid_argument,
         "element " + std::to_string(a) + " of " + label_ + " is not a unit");
  }

  Scalar SemiringTable::negate(Scalar a) const {
    for (std::size_t y = 0; y < size_; ++y) {
      auto b = static_cast<Scalar>(y);
      if (add(a, b) == zero_) {
        return b;
      }
    }
    fail(ErrorCode::invalid_argument,
         "element " + std::to_string(a) + " of " + label_
             + " has no additive inverse");
  }

  std::vector<std::vector<Scalar>> SemiringTable::add_table() const {
    std::vector<std::vector<Scalar>> out(size_, std::vector<Scalar>(size_));
    for (std::size_t a = 0; a < size_; ++a) {
      for (std::size_t b = 0; b < size_; ++b) {
        out[a][b] = add_[a * size_ + b];
      }
    }
    return out;
  }

  std::vector<std::vector<Scalar>> SemiringTable::mul_table() const {
    std::vector<std::vector<Scalar>> out(size_, std::vector<Scalar>(size_));
    for (std::size_t a = 0; a < size_; ++a) {
      for (std::size_t b = 0; b < size_; ++b) {
        out[a][b] = mul_[a * size_ + b];
      }
    }
    return out;
  }

  namespace {
    void check_square(std::vector<std::vector<Scalar>> const& t,
                      std::size_t                             n,
                      char const*                             name) {
      if (t.size() != n) {
        fail(ErrorCode::invalid_argument,
             std::string(name) + " table has wrong number of rows");
      }
      for (auto const& row : t) {
        if (row.size() != n) {
          fail(ErrorCode::invalid_argument,
               std::string(name) + " table is not square");
        }
        for (Scalar x : row) {
          if (x >= n) {
            fail(ErrorCode::invalid_argument,
                 std::string(name) + " table entry out of range");
          }
        }
      }
    }
  }  // namespace

  Ring make_from_tables(std::vector<std::vector<Scalar>> const& add,
                        std::vector<std::vector<Scalar>> const& mul,
                        Scalar                                  zero,
                        Scalar                                  one,
                        std::string                             label) {
    std::size_t const n = add.size();
    if (n == 0 || n > max_semiring_size) {
      fail(ErrorCode::invalid_argument,
           "semiring size must lie in 1.." + std::to_string(max_semiring_size));
    }
    check_square(add, n, "add");
    check_square(mul, n, "mul");
    if (zero >= n || one >= n) {
      fail(ErrorCode::invalid_argument, "zero/one index out of range");
    }

    auto A = [&](std::size_t a, std::size_t b) { return add[a][b]; };
    auto M = [&](std::size_t a, std::size_t b) { return mul[a][b]; };
    auto violation = [](char const* law, std::size_t a, std::size_t b, std::size_t c) {
      throw AxiomViolation(law,
                           {static_cast<Scalar>(a),
                            static_cast<Scalar>(b),
                            static_cast<Scalar>(c)});
    };

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (A(A(a, b), c) != A(a, A(b, c))) {
            violation("additive associativity", a, b, c);
          }
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (A(a, b) != A(b, a)) {
          violation("additive commutativity", a, b, 0);
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (M(M(a, b), c) != M(a, M(b, c))) {
            violation("associativity", a, b, c);
          }
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (A(zero, a) != a) {
        violation("additive identity", zero, a, 0);
      }
      if (M(zero, a) != zero || M(a, zero) != zero) {
        violation("zero annihilator", zero, a, 0);
      }
      if (M(one, a) != a || M(a, one) != a) {
        violation("multiplicative identity", one, a, 0);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (M(a, A(b, c)) != A(M(a, b), M(a, c))) {
            violation("left distributivity", a, b, c);
          }
          if (M(A(a, b), c) != A(M(a, c), M(b, c))) {
            violation("right distributivity", a, b, c);
          }
        }
      }
    }

    auto ring = std::shared_ptr<SemiringTable>(new SemiringTable());
    ring->size_  = n;
    ring->zero_  = zero;
    ring->one_   = one;
    ring->label_ = std::move(label);
    ring->add_.resize(n * n);
    ring->mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        ring->add_[a * n + b] = add[a][b];
        ring->mul_[a * n + b] = mul[a][b];
      }
    }

    bool field = zero != one;
    for (std::size_t a = 0; a < n && field; ++a) {
      bool has_negative = false;
      for (std::size_t b = 0; b < n; ++b) {
        has_negative = has_negative || A(a, b) == zero;
      }
      field = has_negative && (a == zero || ring->is_unit(static_cast<Scalar>(a)));
    }
    ring->is_field_ = field;
    return ring;
  }

  Ring make_prime_field(unsigned p, unsigned bound) {
    bool prime = p >= 2;
    for (unsigned d = 2; d * d <= p && prime; ++d) {
      prime = p % d != 0;
    }
    if (!prime) {
      fail(ErrorCode::not_prime, std::to_string(p) + " is not prime");
    }
    if (p > bound || p > max_semiring_size) {
      fail(ErrorCode::bound_exceeded,
           "prime " + std::to_string(p) + " exceeds bound "
               + std::to_string(bound));
    }
    std::vector<std::vector<Scalar>> add(p, std::vector<Scalar>(p));
    std::vector<std::vector<Scalar>> mul(p, std::vector<Scalar>(p));
    for (unsigned a = 0; a < p; ++a) {
      for (unsigned b = 0; b < p; ++b) {
        add[a][b] = static_cast<Scalar>((a + b) % p);
        mul[a][b] = static_cast<Scalar>((a * b) % p);
      }
    }
    return make_from_tables(add, mul, 0, 1, "Z_" + std::to_string(p));
  }

  Ring make_boolean_semiring() {
    return make_from_tables({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1, "B");
  }

  std::vector<Scalar> units(SemiringTable const& ring) {
    std::vector<Scalar> out;
    for (std::size_t a = 0; a < ring.size(); ++a) {
      if (ring.is_unit(static_cast<Scalar>(a))) {
        out.push_back(static_cast<Scalar>(a));
      }
    }
    return out;
  }

  nlohmann::json ring_to_json(SemiringTable const& ring) {
    return {{"size", ring.size()},
            {"add", ring.add_table()},
            {"mul", ring.mul_table()},
            {"zero", ring.zero()},
            {"one", ring.one()},
            {"label", ring.label()}};
  }

  Ring ring_from_json(nlohmann::json const& j) {
    try {
      auto add   = j.at("add").get<std::vector<std::vector<Scalar>>>();
      auto mul   = j.at("mul").get<std::vector<std::vector<Scalar>>>();
      auto label = j.value("label", std::string("R"));
      if (j.contains("size") && j.at("size").get<std::size_t>() != add.size()) {
        fail(ErrorCode::invalid_argument, "size does not match tables");
      }
      return make_from_tables(
          add, mul, j.at("zero").get<Scalar>(), j.at("one").get<Scalar>(), label);
    } catch (nlohmann::json::exception const& e) {
      fail(ErrorCode::parse_error, std::string("semiring JSON: ") + e.what());
    }
  }

  Ring parse_ring_spec(std::string const& spec) {
    if (spec == "bool") {
      return make_boolean_semiring();
    }
    if (spec.rfind("zp:", 0) == 0) {
      std::string digits = spec.substr(3);
      if (digits.empty()
          || digits.find_first_not_of("0123456789") != std::string::npos
          || digits.size() > 6) {
        fail(ErrorCode::invalid_argument, "bad ring spec '" + spec + "'");
      }
      return make_prime_field(static_cast<unsigned>(std::stoul(digits)));
    }
    if (spec.rfind("table:", 0) == 0) {
      std::ifstream in(spec.substr(6));
      if (!in) {
        fail(ErrorCode::io_error, "cannot open " + spec.substr(6));
      }
      nlohmann::json j;
      try {
        in >> j;
      } catch (nlohmann::json::exception const& e) {
        fail(ErrorCode::parse_error, e.what());
      }
      return ring_from_json(j);
    }
    fail(ErrorCode::invalid_argument,
         "ring spec must be zp:<p>, bool or table:<path>, got '" + spec + "'");
  }

}  // namespace semidec
