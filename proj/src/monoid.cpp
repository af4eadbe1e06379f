#include "semidec/monoid.hpp"

#include <algorithm>
#include <random>

namespace semidec {

  MonoidPtr Monoid::make(CarrierPtr                 carrier,
                         std::vector<Key>           elements,
                         KeyView                    identity,
                         nlohmann::json             descriptor,
                         std::string                label,
                         std::vector<std::uint32_t> generators) {
    auto m         = std::shared_ptr<Monoid>(new Monoid());
    m->carrier_    = std::move(carrier);
    m->keys_       = std::move(elements);
    m->descriptor_ = std::move(descriptor);
    m->label_      = std::move(label);
    if (m->keys_.empty()) {
      fail(ErrorCode::invalid_argument, "monoid with no elements");
    }
    if (m->keys_.size() > 0xFFFFFFFEu) {
      fail(ErrorCode::size_limit_exceeded, "too many elements");
    }
    m->index_.reserve(m->keys_.size());
    for (std::uint32_t i = 0; i < m->keys_.size(); ++i) {
      if (!m->index_.emplace(m->keys_[i], i).second) {
        fail(ErrorCode::invalid_argument, "duplicate element key " + to_hex(m->keys_[i]));
      }
    }
    auto id = m->index_of(identity);
    if (!id) {
      fail(ErrorCode::invalid_argument, "identity is not an element");
    }
    m->identity_ = *id;
    std::size_t const n = m->keys_.size();
    for (auto g : generators) {
      if (g >= n) {
        fail(ErrorCode::invalid_argument, "generator index out of range");
      }
    }
    if (generators.empty()) {
      generators.resize(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        generators[i] = i;
      }
    }
    m->generators_ = std::move(generators);

    auto product = [&](std::uint32_t a, std::uint32_t b) {
      Key  k  = m->carrier_->multiply(m->keys_[a], m->keys_[b]);
      auto it = m->index_.find(k);
      if (it == m->index_.end()) {
        fail(ErrorCode::not_closed,
             m->label_ + " is not closed under multiplication");
      }
      return it->second;
    };

    if (n <= table_bound) {
      m->table_.resize(n * n);
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          m->table_[a * n + b] = product(a, b);
        }
      }
    }

    for (std::uint32_t x = 0; x < n; ++x) {
      if (m->mul(m->identity_, x) != x || m->mul(x, m->identity_) != x) {
        fail(ErrorCode::invalid_argument, m->label_ + ": identity is not two-sided");
      }
    }
    auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      if (m->mul(m->mul(a, b), c) != m->mul(a, m->mul(b, c))) {
        fail(ErrorCode::invalid_argument,
             m->label_ + ": multiplication is not associative");
      }
    };
    if (n <= full_assoc_bound) {
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          std::uint32_t ab = m->table_[a * n + b];
          for (std::uint32_t c = 0; c < n; ++c) {
            if (m->table_[ab * n + c] != m->table_[a * n + m->table_[b * n + c]]) {
              fail(ErrorCode::invalid_argument,
                   m->label_ + ": multiplication is not associative");
            }
          }
        }
      }
    } else {
      std::mt19937_64                              rng(0x5eedULL);
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
      for (int i = 0; i < 10000; ++i) {
        assoc(pick(rng), pick(rng), pick(rng));
      }
    }
    m->self_ = m;
    return m;
  }

  std::optional<std::uint32_t> Monoid::index_of(KeyView k) const {
    auto it = index_.find(Key(k));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::uint32_t Monoid::at(KeyView k) const {
    auto i = index_of(k);
    if (!i) {
      fail(ErrorCode::invalid_argument, "key " + to_hex(k) + " is not in " + label_);
    }
    return *i;
  }

  std::uint32_t Monoid::mul(std::uint32_t a, std::uint32_t b) const {
    std::size_t const n = keys_.size();
    if (!table_.empty()) {
      return table_[a * n + b];
    }
    std::uint64_t const       slot = static_cast<std::uint64_t>(a) * n + b;
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto                        it = memo_.find(slot);
      if (it != memo_.end()) {
        return it->second;
      }
    }
    Key  k  = carrier_->multiply(keys_[a], keys_[b]);
    auto it = index_.find(k);
    if (it == index_.end()) {
      fail(ErrorCode::not_closed, label_ + " is not closed under multiplication");
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (memo_.size() > (1u << 22)) {
      memo_.clear();
    }
    memo_.emplace(slot, it->second);
    return it->second;
  }

  CarrierPtr Monoid::as_carrier() const {
    return std::make_shared<MonoidCarrier>(self_.lock());
  }

  Key MonoidCarrier::identity() const {
    return m_->key(m_->identity());
  }

  Key MonoidCarrier::multiply(KeyView a, KeyView b) const {
    return m_->key(m_->mul(m_->at(a), m_->at(b)));
  }

  bool MonoidCarrier::contains(KeyView k) const {
    return m_->index_of(k).has_value();
  }

  nlohmann::json MonoidCarrier::descriptor() const {
    return {{"kind", "monoid"}, {"monoid", m_->descriptor()}};
  }

  std::string MonoidCarrier::label() const {
    return m_->label();
  }

  std::string MonoidCarrier::render(KeyView k) const {
    return m_->carrier()->render(k);
  }

  MonoidPtr close_generators(CarrierPtr              carrier,
                             std::vector<Key> const& generators,
                             std::size_t             limit,
                             std::string             label) {
    if (generators.empty()) {
      fail(ErrorCode::invalid_argument, "closure of an empty generator list");
    }
    if (limit < 1) {
      fail(ErrorCode::invalid_argument, "closure limit must be positive");
    }
    std::vector<Key>                       elements;
    std::unordered_map<Key, std::uint32_t> seen;
    std::vector<std::uint32_t>             gen_index;
    auto add = [&](Key k) -> std::uint32_t {
      auto it = seen.find(k);
      if (it != seen.end()) {
        return it->second;
      }
      if (elements.size() >= limit) {
        fail(ErrorCode::size_limit_exceeded,
             "closure exceeds limit " + std::to_string(limit));
      }
      auto i = static_cast<std::uint32_t>(elements.size());
      seen.emplace(k, i);
      elements.push_back(std::move(k));
      return i;
    };
    for (auto const& g : generators) {
      if (!carrier->contains(g)) {
        fail(ErrorCode::invalid_argument,
             "generator " + to_hex(g) + " is not an element of " + carrier->label());
      }
      gen_index.push_back(add(g));
    }
    std::vector<Key> gens_unique;
    for (auto g : gen_index) {
      gens_unique.push_back(elements[g]);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens_unique) {
        add(carrier->multiply(elements[i], g));
      }
    }
    Key id = carrier->identity();
    if (seen.find(id) == seen.end()) {
      if (elements.size() >= limit) {
        fail(ErrorCode::size_limit_exceeded,
             "closure exceeds limit " + std::to_string(limit));
      }
      elements.push_back(id);
    }
    nlohmann::json gens_hex = nlohmann::json::array();
    for (auto const& g : generators) {
      gens_hex.push_back(to_hex(g));
    }
    nlohmann::json desc = {{"kind", "closure"},
                           {"carrier", carrier->descriptor()},
                           {"generators", gens_hex}};
    if (label.empty()) {
      label = "<" + std::to_string(generators.size()) + " gens in " + carrier->label() + ">";
    }
    std::sort(gen_index.begin(), gen_index.end());
    gen_index.erase(std::unique(gen_index.begin(), gen_index.end()), gen_index.end());
    return Monoid::make(std::move(carrier),
                        std::move(elements),
                        id,
                        std::move(desc),
                        std::move(label),
                        std::move(gen_index));
  }

  MonoidPtr monoid_from_table(std::vector<std::vector<std::uint32_t>> table,
                              std::uint32_t                           identity,
                              std::string                             label) {
    std::size_t const n = table.size();
    auto carrier = std::make_shared<TableCarrier>(std::move(table), identity, label);
    std::vector<Key> keys;
    for (std::uint32_t i = 0; i < n; ++i) {
      keys.push_back(TableCarrier::encode(i));
    }
    nlohmann::json desc = {{"kind", "carrier"}, {"carrier", carrier->descriptor()}};
    return Monoid::make(carrier, std::move(keys), TableCarrier::encode(identity),
                        std::move(desc), std::move(label));
  }

  MonoidPtr cyclic_group(std::size_t n) {
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = static_cast<std::uint32_t>((a + b) % n);
      }
    }
    return monoid_from_table(std::move(t), 0, "C_" + std::to_string(n));
  }

  MonoidPtr trivial_monoid() {
    return monoid_from_table({{0}}, 0, "1");
  }

  MonoidPtr direct_product(std::vector<MonoidPtr> const& factors, std::size_t limit) {
    if (factors.empty()) {
      fail(ErrorCode::invalid_argument, "direct product of no factors");
    }
    std::size_t total = 1;
    for (auto const& f : factors) {
      if (total > limit / f->size()) {
        fail(ErrorCode::size_limit_exceeded,
             "direct product exceeds limit " + std::to_string(limit));
      }
      total *= f->size();
    }
    if (total > limit) {
      fail(ErrorCode::size_limit_exceeded,
           "direct product exceeds limit " + std::to_string(limit));
    }
    std::vector<CarrierPtr> carriers;
    nlohmann::json          descs = nlohmann::json::array();
    std::string             label;
    for (auto const& f : factors) {
      carriers.push_back(f->as_carrier());
      descs.push_back(f->descriptor());
      label += (label.empty() ? "" : " x ") + f->label();
    }
    auto carrier = std::make_shared<ProductCarrier>(carriers);

    std::vector<Key>         keys;
    std::vector<std::size_t> digits(factors.size(), 0);
    keys.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
      std::vector<Key> parts;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        parts.push_back(factors[f]->key(static_cast<std::uint32_t>(digits[f])));
      }
      keys.push_back(ProductCarrier::encode(parts));
      for (std::size_t f = factors.size(); f-- > 0;) {
        if (++digits[f] < factors[f]->size()) {
          break;
        }
        digits[f] = 0;
      }
    }
    // generators: each factor's generators, identity elsewhere
    std::vector<std::uint32_t> gens;
    std::size_t                stride = total;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      stride /= factors[f]->size();
      std::size_t id_offset = 0;
      {
        std::size_t s = total;
        for (std::size_t g = 0; g < factors.size(); ++g) {
          s /= factors[g]->size();
          if (g != f) {
            id_offset += factors[g]->identity() * s;
          }
        }
      }
      for (auto g : factors[f]->generators()) {
        gens.push_back(static_cast<std::uint32_t>(id_offset + g * stride));
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Key id = carrier->identity();
    return Monoid::make(carrier,
                        std::move(keys),
                        id,
                        {{"kind", "product"}, {"factors", descs}},
                        factors.size() == 1 ? label : "(" + label + ")",
                        std::move(gens));
  }

  MonoidPtr direct_product(MonoidPtr const& a, MonoidPtr const& b, std::size_t limit) {
    return direct_product(std::vector<MonoidPtr>{a, b}, limit);
  }

  Quotient quotient_by_central_units(MonoidPtr const&                  m,
                                     std::vector<std::uint32_t> const& central) {
    std::size_t const n = m->size();
    if (central.empty()) {
      fail(ErrorCode::invalid_argument, "central subgroup must contain the identity");
    }
    for (auto z : central) {
      if (z >= n) {
        fail(ErrorCode::invalid_argument, "central element out of range");
      }
      bool unit = false;
      for (std::uint32_t y = 0; y < n && !unit; ++y) {
        unit = m->mul(z, y) == m->identity() && m->mul(y, z) == m->identity();
      }
      if (!unit) {
        fail(ErrorCode::invalid_argument, m->render(z) + " is not a unit");
      }
      for (std::uint32_t x = 0; x < n; ++x) {
        if (m->mul(z, x) != m->mul(x, z)) {
          fail(ErrorCode::not_central,
               "(" + m->render(z) + ", " + m->render(x) + ") do not commute");
        }
      }
      for (auto w : central) {
        if (std::find(central.begin(), central.end(), m->mul(z, w)) == central.end()) {
          fail(ErrorCode::invalid_argument, "central set is not a subgroup");
        }
      }
    }
    std::vector<Key> zkeys;
    for (auto z : central) {
      zkeys.push_back(m->key(z));
    }
    auto carrier = std::make_shared<QuotientCarrier>(m->as_carrier(), zkeys);

    std::vector<Key>                       keys;
    std::unordered_map<Key, std::uint32_t> seen;
    std::vector<std::uint32_t>             projection(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      Key  c  = carrier->canonical(m->key(x));
      auto it = seen.find(c);
      if (it == seen.end()) {
        it = seen.emplace(c, static_cast<std::uint32_t>(keys.size())).first;
        keys.push_back(c);
      }
      projection[x] = it->second;
    }
    std::vector<std::uint32_t> gens;
    for (auto g : m->generators()) {
      gens.push_back(projection[g]);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    nlohmann::json zhex = nlohmann::json::array();
    for (auto const& z : zkeys) {
      zhex.push_back(to_hex(z));
    }
    Key  id = carrier->canonical(m->key(m->identity()));
    auto q  = Monoid::make(carrier,
                          std::move(keys),
                          id,
                          {{"kind", "quotient"}, {"monoid", m->descriptor()}, {"central", zhex}},
                          m->label() + "/Z",
                          std::move(gens));
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (projection[m->mul(x, y)] != q->mul(projection[x], projection[y])) {
          fail(ErrorCode::precondition, "projection is not a homomorphism");
        }
      }
    }
    return {q, std::move(projection)};
  }

}  // namespace semidec
