#include "semidec/wreath.hpp"

namespace semidec {

  WreathCarrier::WreathCarrier(CarrierPtr top, MonoidPtr base)
      : top_(std::move(top)), base_(std::move(base)) {
    if (!top_ || !base_) {
      fail(ErrorCode::invalid_argument, "wreath product needs both factors");
    }
  }

  Key WreathCarrier::encode(WreathElement const& x) {
    KeyWriter w;
    w.u32(static_cast<std::uint32_t>(x.table.size()));
    for (auto const& k : x.table) {
      w.nested(k);
    }
    w.u32(x.base);
    return w.take();
  }

  WreathElement WreathCarrier::decode(KeyView k) const {
    KeyReader     r(k);
    WreathElement x;
    std::uint32_t len = r.u32();
    if (len != base_->size()) {
      fail(ErrorCode::context_mismatch,
           "table length " + std::to_string(len) + " does not match base "
               + base_->label());
    }
    x.table.reserve(len);
    for (std::uint32_t i = 0; i < len; ++i) {
      x.table.emplace_back(r.nested());
    }
    x.base = r.u32();
    if (!r.done() || x.base >= base_->size()) {
      fail(ErrorCode::context_mismatch, "malformed wreath element");
    }
    return x;
  }

  Key WreathCarrier::identity() const {
    WreathElement id;
    id.table.assign(base_->size(), top_->identity());
    id.base = base_->identity();
    return encode(id);
  }

  Key WreathCarrier::multiply(KeyView a, KeyView b) const {
    // Works on the encoded form directly to avoid copying tables.
    KeyReader ra(a), rb(b);
    auto const n = base_->size();
    if (ra.u32() != n || rb.u32() != n) {
      fail(ErrorCode::context_mismatch, "table length does not match base");
    }
    std::vector<KeyView> fa(n), fb(n);
    for (std::size_t i = 0; i < n; ++i) {
      fa[i] = ra.nested();
    }
    std::uint32_t const ba = ra.u32();
    for (std::size_t i = 0; i < n; ++i) {
      fb[i] = rb.nested();
    }
    std::uint32_t const bb = rb.u32();
    if (ba >= n || bb >= n) {
      fail(ErrorCode::context_mismatch, "base index out of range");
    }
    KeyWriter w;
    w.u32(static_cast<std::uint32_t>(n));
    for (std::uint32_t t = 0; t < n; ++t) {
      w.nested(top_->multiply(fa[t], fb[base_->mul(t, ba)]));
    }
    w.u32(base_->mul(ba, bb));
    return w.take();
  }

  bool WreathCarrier::contains(KeyView k) const {
    try {
      auto x = decode(k);
      for (auto const& v : x.table) {
        if (!top_->contains(v)) {
          return false;
        }
      }
      return true;
    } catch (Error const&) {
      return false;
    }
  }

  nlohmann::json WreathCarrier::descriptor() const {
    return {{"kind", "wreath"}, {"top", top_->descriptor()}, {"base", base_->descriptor()}};
  }

  std::string WreathCarrier::label() const {
    return top_->label() + " wr " + base_->label();
  }

  std::string WreathCarrier::render(KeyView k) const {
    auto        x   = decode(k);
    std::string out = "([";
    for (std::size_t i = 0; i < x.table.size(); ++i) {
      out += (i == 0 ? "" : ",") + top_->render(x.table[i]);
    }
    return out + "], " + base_->render(x.base) + ")";
  }

  WreathContext make_context(CarrierPtr top, MonoidPtr base) {
    return std::make_shared<WreathCarrier>(std::move(top), std::move(base));
  }

  WreathContext make_context(MonoidPtr const& top, MonoidPtr base) {
    return make_context(top->as_carrier(), std::move(base));
  }

  WreathElement wreath_mul(WreathCarrier const& ctx,
                           WreathElement const& x,
                           WreathElement const& y) {
    Key kx = WreathCarrier::encode(x);
    Key ky = WreathCarrier::encode(y);
    if (!ctx.contains(kx) || !ctx.contains(ky)) {
      fail(ErrorCode::context_mismatch, "element does not belong to " + ctx.label());
    }
    return ctx.decode(ctx.multiply(kx, ky));
  }

  MonoidPtr enumerate_wreath(MonoidPtr const& top, MonoidPtr const& base, std::size_t limit) {
    std::size_t total = base->size();
    for (std::size_t i = 0; i < base->size(); ++i) {
      if (total > limit / top->size()) {
        fail(ErrorCode::size_limit_exceeded,
             "|" + top->label() + "|^|" + base->label() + "| * |" + base->label()
                 + "| exceeds limit " + std::to_string(limit));
      }
      total *= top->size();
    }
    auto                     ctx = make_context(top, base);
    std::vector<Key>         keys;
    keys.reserve(total);
    std::size_t const        n = base->size();
    for (std::uint32_t b = 0; b < n; ++b) {
      std::vector<std::size_t> digits(n, 0);
      std::size_t const        tables = total / n;
      for (std::size_t count = 0; count < tables; ++count) {
        WreathElement x;
        x.base = b;
        for (std::size_t t = 0; t < n; ++t) {
          x.table.push_back(top->key(static_cast<std::uint32_t>(digits[t])));
        }
        keys.push_back(WreathCarrier::encode(x));
        for (std::size_t d = n; d-- > 0;) {
          if (++digits[d] < top->size()) {
            break;
          }
          digits[d] = 0;
        }
      }
    }
    Key id = ctx->identity();
    return Monoid::make(ctx,
                        std::move(keys),
                        id,
                        {{"kind", "wreath"},
                         {"top", top->descriptor()},
                         {"base", base->descriptor()}},
                        "(" + top->label() + " wr " + base->label() + ")");
  }

  WreathContext iterated_context(std::vector<MonoidPtr> const& levels, std::size_t limit) {
    if (levels.size() < 2) {
      fail(ErrorCode::precondition, "an iterated wreath product needs at least two levels");
    }
    MonoidPtr inner = levels.back();
    for (std::size_t i = levels.size() - 1; i-- > 1;) {
      inner = enumerate_wreath(levels[i], inner, limit);
    }
    return make_context(levels.front(), inner);
  }

  Restriction restrict_base(WreathCarrier const& ctx, MonoidPtr const& sub) {
    auto const& base = *ctx.base();
    if (sub->key(sub->identity()) != base.key(base.identity())) {
      fail(ErrorCode::not_closed, "restricted base must share the identity of " + base.label());
    }
    std::vector<std::uint32_t> into(sub->size());
    for (std::uint32_t i = 0; i < sub->size(); ++i) {
      auto j = base.index_of(sub->key(i));
      if (!j) {
        fail(ErrorCode::not_closed,
             "element " + sub->render(i) + " of the restricted base is not in " + base.label());
      }
      into[i] = *j;
    }
    for (std::uint32_t a = 0; a < sub->size(); ++a) {
      for (std::uint32_t b = 0; b < sub->size(); ++b) {
        if (into[sub->mul(a, b)] != base.mul(into[a], into[b])) {
          fail(ErrorCode::not_closed, "restricted base is not a submonoid of " + base.label());
        }
      }
    }
    auto           restricted = make_context(ctx.top(), sub);
    nlohmann::json step       = {{"op", "restrict_base"},
                                 {"full", ctx.label()},
                                 {"restricted", restricted->label()},
                                 {"restricted_size", sub->size()},
                                 {"full_base_size", base.size()}};
    return {restricted, step};
  }

  Restriction restrict_base(CarrierPtr const& top,
                            CarrierPtr const& full_base,
                            MonoidPtr const&  sub) {
    if (sub->key(sub->identity()) != full_base->identity()) {
      fail(ErrorCode::not_closed,
           "restricted base must share the identity of " + full_base->label());
    }
    for (std::uint32_t i = 0; i < sub->size(); ++i) {
      if (!full_base->contains(sub->key(i))) {
        fail(ErrorCode::not_closed,
             "element " + sub->render(i) + " is not in " + full_base->label());
      }
    }
    for (std::uint32_t a = 0; a < sub->size(); ++a) {
      for (std::uint32_t b = 0; b < sub->size(); ++b) {
        if (full_base->multiply(sub->key(a), sub->key(b)) != sub->key(sub->mul(a, b))) {
          fail(ErrorCode::not_closed,
               "restricted base is not a submonoid of " + full_base->label());
        }
      }
    }
    auto restricted = make_context(top, sub);
    return {restricted,
            {{"op", "restrict_base"},
             {"full", top->label() + " wr " + full_base->label()},
             {"restricted", restricted->label()},
             {"restricted_size", sub->size()}}};
  }

  nlohmann::json wreath_element_json(Carrier const& carrier, KeyView k) {
    auto const* w = dynamic_cast<WreathCarrier const*>(&carrier);
    if (w == nullptr) {
      return to_hex(k);
    }
    auto           x     = w->decode(k);
    nlohmann::json table = nlohmann::json::array();
    for (auto const& v : x.table) {
      table.push_back(wreath_element_json(*w->top(), v));
    }
    return nlohmann::json::array({table, x.base});
  }

}  // namespace semidec
