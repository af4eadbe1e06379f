#include "semidec/carrier.hpp"

#include <algorithm>
#include <sstream>

#include "semidec/trimat.hpp"

namespace semidec {

  ////////////////////////////////////////////////////////////////////////
  // MatrixCarrier
  ////////////////////////////////////////////////////////////////////////

  MatrixCarrier::MatrixCarrier(Ring ring, std::size_t n)
      : ring_(std::move(ring)), n_(n) {}

  Key MatrixCarrier::identity() const {
    return TriMatrix::identity(ring_, n_).key();
  }

  Key MatrixCarrier::multiply(KeyView a, KeyView b) const {
    auto const& R = *ring_;
    Key         out(n_ * n_, static_cast<char>(R.zero()));
    auto at = [&](KeyView k, std::size_t i, std::size_t j) {
      return static_cast<Scalar>(k[i * n_ + j]);
    };
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        Scalar acc = R.zero();
        for (std::size_t k = i; k <= j; ++k) {
          acc = R.add(acc, R.mul(at(a, i, k), at(b, k, j)));
        }
        out[i * n_ + j] = static_cast<char>(acc);
      }
    }
    return out;
  }

  bool MatrixCarrier::contains(KeyView k) const {
    if (k.size() != n_ * n_) {
      return false;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        auto x = static_cast<Scalar>(k[i * n_ + j]);
        if (x >= ring_->size() || (j < i && x != ring_->zero())) {
          return false;
        }
      }
    }
    return true;
  }

  nlohmann::json MatrixCarrier::descriptor() const {
    return {{"kind", "matrix"}, {"n", n_}, {"ring", ring_to_json(*ring_)}};
  }

  std::string MatrixCarrier::label() const {
    return "Mat_" + std::to_string(n_) + "(" + ring_->label() + ")";
  }

  std::string MatrixCarrier::render(KeyView k) const {
    return TriMatrix::from_key(ring_, n_, k).to_string();
  }

  ////////////////////////////////////////////////////////////////////////
  // TransformationCarrier
  ////////////////////////////////////////////////////////////////////////

  TransformationCarrier::TransformationCarrier(std::size_t degree) : degree_(degree) {
    if (degree == 0 || degree > 0xFFFF) {
      fail(ErrorCode::invalid_argument, "transformation degree out of range");
    }
  }

  Key TransformationCarrier::encode(std::vector<std::uint32_t> const& images) {
    KeyWriter w;
    for (auto x : images) {
      w.u16(static_cast<std::uint16_t>(x));
    }
    return w.take();
  }

  std::vector<std::uint32_t> TransformationCarrier::decode(KeyView k) {
    KeyReader                  r(k);
    std::vector<std::uint32_t> out;
    out.reserve(k.size() / 2);
    while (!r.done()) {
      out.push_back(r.u16());
    }
    return out;
  }

  Key TransformationCarrier::identity() const {
    std::vector<std::uint32_t> id(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
      id[i] = static_cast<std::uint32_t>(i);
    }
    return encode(id);
  }

  Key TransformationCarrier::multiply(KeyView a, KeyView b) const {
    auto fa = decode(a);
    auto fb = decode(b);
    for (auto& x : fa) {
      x = fb[x];
    }
    return encode(fa);
  }

  bool TransformationCarrier::contains(KeyView k) const {
    if (k.size() != 2 * degree_) {
      return false;
    }
    auto f = decode(k);
    return std::all_of(f.begin(), f.end(), [&](auto x) { return x < degree_; });
  }

  nlohmann::json TransformationCarrier::descriptor() const {
    return {{"kind", "transformation"}, {"degree", degree_}};
  }

  std::string TransformationCarrier::label() const {
    return "Trans(" + std::to_string(degree_) + ")";
  }

  std::string TransformationCarrier::render(KeyView k) const {
    std::ostringstream out;
    out << '[';
    auto f = decode(k);
    for (std::size_t i = 0; i < f.size(); ++i) {
      out << (i == 0 ? "" : ",") << f[i];
    }
    out << ']';
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // ConstantsCarrier
  ////////////////////////////////////////////////////////////////////////

  ConstantsCarrier::ConstantsCarrier(std::size_t points) : points_(points) {
    if (points == 0) {
      fail(ErrorCode::invalid_argument, "constants monoid needs a non-empty set");
    }
  }

  Key ConstantsCarrier::identity_key() {
    return KeyWriter().u32(0).take();
  }

  Key ConstantsCarrier::constant_key(std::uint32_t x) {
    return KeyWriter().u32(x + 1).take();
  }

  Key ConstantsCarrier::identity() const {
    return identity_key();
  }

  Key ConstantsCarrier::multiply(KeyView a, KeyView b) const {
    return KeyReader(b).u32() == 0 ? Key(a) : Key(b);
  }

  bool ConstantsCarrier::contains(KeyView k) const {
    return k.size() == 4 && KeyReader(k).u32() <= points_;
  }

  nlohmann::json ConstantsCarrier::descriptor() const {
    return {{"kind", "constants"}, {"points", points_}};
  }

  std::string ConstantsCarrier::label() const {
    return "Xtilde(" + std::to_string(points_) + ")";
  }

  std::string ConstantsCarrier::render(KeyView k) const {
    auto v = KeyReader(k).u32();
    return v == 0 ? std::string("id") : "c" + std::to_string(v - 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // TableCarrier
  ////////////////////////////////////////////////////////////////////////

  TableCarrier::TableCarrier(std::vector<std::vector<std::uint32_t>> table,
                             std::uint32_t                           identity,
                             std::string                             label)
      : table_(std::move(table)), identity_(identity), label_(std::move(label)) {
    std::size_t const n = table_.size();
    if (n == 0 || identity_ >= n) {
      fail(ErrorCode::invalid_argument, "bad Cayley table");
    }
    for (auto const& row : table_) {
      if (row.size() != n
          || std::any_of(row.begin(), row.end(), [&](auto x) { return x >= n; })) {
        fail(ErrorCode::invalid_argument, "Cayley table is not square or out of range");
      }
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      if (table_[identity_][x] != x || table_[x][identity_] != x) {
        fail(ErrorCode::invalid_argument, "Cayley table identity is not two-sided");
      }
    }
  }

  Key TableCarrier::encode(std::uint32_t i) {
    return KeyWriter().u32(i).take();
  }

  std::uint32_t TableCarrier::decode(KeyView k) {
    return KeyReader(k).u32();
  }

  Key TableCarrier::identity() const {
    return encode(identity_);
  }

  Key TableCarrier::multiply(KeyView a, KeyView b) const {
    return encode(table_[decode(a)][decode(b)]);
  }

  bool TableCarrier::contains(KeyView k) const {
    return k.size() == 4 && decode(k) < table_.size();
  }

  nlohmann::json TableCarrier::descriptor() const {
    return {{"kind", "table"},
            {"table", table_},
            {"identity", identity_},
            {"label", label_}};
  }

  std::string TableCarrier::label() const {
    return label_;
  }

  std::string TableCarrier::render(KeyView k) const {
    return std::to_string(decode(k));
  }

  ////////////////////////////////////////////////////////////////////////
  // ProductCarrier
  ////////////////////////////////////////////////////////////////////////

  ProductCarrier::ProductCarrier(std::vector<CarrierPtr> factors)
      : factors_(std::move(factors)) {
    if (factors_.empty()) {
      fail(ErrorCode::invalid_argument, "product of no factors");
    }
  }

  Key ProductCarrier::encode(std::vector<Key> const& parts) {
    KeyWriter w;
    for (auto const& p : parts) {
      w.nested(p);
    }
    return w.take();
  }

  std::vector<KeyView> ProductCarrier::split(KeyView k) const {
    KeyReader            r(k);
    std::vector<KeyView> out;
    out.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out.push_back(r.nested());
    }
    if (!r.done()) {
      fail(ErrorCode::parse_error, "trailing bytes in product key");
    }
    return out;
  }

  Key ProductCarrier::identity() const {
    std::vector<Key> parts;
    for (auto const& f : factors_) {
      parts.push_back(f->identity());
    }
    return encode(parts);
  }

  Key ProductCarrier::multiply(KeyView a, KeyView b) const {
    auto             xa = split(a);
    auto             xb = split(b);
    std::vector<Key> parts;
    parts.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      parts.push_back(factors_[i]->multiply(xa[i], xb[i]));
    }
    return encode(parts);
  }

  bool ProductCarrier::contains(KeyView k) const {
    try {
      auto parts = split(k);
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (!factors_[i]->contains(parts[i])) {
          return false;
        }
      }
      return true;
    } catch (Error const&) {
      return false;
    }
  }

  nlohmann::json ProductCarrier::descriptor() const {
    nlohmann::json fs = nlohmann::json::array();
    for (auto const& f : factors_) {
      fs.push_back(f->descriptor());
    }
    return {{"kind", "product"}, {"factors", fs}};
  }

  std::string ProductCarrier::label() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out += (i == 0 ? "" : " x ") + factors_[i]->label();
    }
    return "(" + out + ")";
  }

  std::string ProductCarrier::render(KeyView k) const {
    auto        parts = split(k);
    std::string out   = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i == 0 ? "" : ", ") + factors_[i]->render(parts[i]);
    }
    return out + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // QuotientCarrier
  ////////////////////////////////////////////////////////////////////////

  QuotientCarrier::QuotientCarrier(CarrierPtr base, std::vector<Key> central)
      : base_(std::move(base)), central_(std::move(central)) {
    std::sort(central_.begin(), central_.end());
    central_.erase(std::unique(central_.begin(), central_.end()), central_.end());
  }

  Key QuotientCarrier::canonical(KeyView x) const {
    Key best(x);
    for (auto const& z : central_) {
      Key y = base_->multiply(x, z);
      if (y < best) {
        best = std::move(y);
      }
    }
    return best;
  }

  Key QuotientCarrier::identity() const {
    return canonical(base_->identity());
  }

  Key QuotientCarrier::multiply(KeyView a, KeyView b) const {
    return canonical(base_->multiply(a, b));
  }

  bool QuotientCarrier::contains(KeyView k) const {
    return base_->contains(k) && canonical(k) == k;
  }

  nlohmann::json QuotientCarrier::descriptor() const {
    nlohmann::json zs = nlohmann::json::array();
    for (auto const& z : central_) {
      zs.push_back(to_hex(z));
    }
    return {{"kind", "quotient"}, {"base", base_->descriptor()}, {"central", zs}};
  }

  std::string QuotientCarrier::label() const {
    return base_->label() + "/Z" + std::to_string(central_.size());
  }

  std::string QuotientCarrier::render(KeyView k) const {
    return "[" + base_->render(k) + "]";
  }

}  // namespace semidec
