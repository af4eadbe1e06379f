#include "semidec/witness.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "semidec/families.hpp"

namespace semidec {

  namespace {

    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

    std::string describe(Carrier const& c, KeyView k) {
      std::string s = c.render(k);
      if (s.size() > 160) {
        s = s.substr(0, 157) + "...";
      }
      return s;
    }

    Carrier const* unwrap(Carrier const* c) {
      while (auto const* mc = dynamic_cast<MonoidCarrier const*>(c)) {
        c = mc->monoid()->carrier().get();
      }
      return c;
    }

    nlohmann::json structure(Carrier const& carrier) {
      auto const* c = unwrap(&carrier);
      if (auto const* p = dynamic_cast<ProductCarrier const*>(c)) {
        nlohmann::json factors = nlohmann::json::array();
        for (auto const& f : p->factors()) {
          factors.push_back(structure(*f));
        }
        return {{"kind", "product"}, {"factors", factors}};
      }
      if (auto const* w = dynamic_cast<WreathCarrier const*>(c)) {
        return {{"kind", "wreath"}, {"top", structure(*w->top())}, {"base", w->base()->descriptor()}};
      }
      return c->descriptor();
    }

  }  // namespace

  void DivisionWitness::require_verified() const {
    if (!verified() || !closure) {
      fail(ErrorCode::precondition, "witness " + name + " is not verified");
    }
  }

  std::uint32_t DivisionWitness::image(KeyView t) const {
    require_verified();
    auto it = closure->position.find(Key(t));
    if (it == closure->position.end()) {
      fail(ErrorCode::preimage_missing, describe(*target, t) + " is outside the closure of " + name);
    }
    return closure->sources[it->second];
  }

  Key DivisionWitness::preimage(std::uint32_t s) const {
    require_verified();
    if (s >= closure->first_preimage.size() || closure->first_preimage[s] == none) {
      fail(ErrorCode::preimage_missing, "no preimage in " + name);
    }
    return closure->targets[closure->first_preimage[s]];
  }

  Key DivisionWitness::preimage(KeyView s) const {
    auto i = source->index_of(s);
    if (!i) {
      fail(ErrorCode::preimage_missing,
           describe(*source->carrier(), s) + " is not an element of " + source->label());
    }
    return preimage(*i);
  }

  bool DivisionWitness::injective() const {
    require_verified();
    return closure->targets.size() == source->size();
  }

  DivisionWitness verify(DivisionWitness w, std::size_t limit) {
    w.closure.reset();
    w.verdict = {};
    auto failed = [&w](ErrorCode code, std::string reason) {
      w.verdict.status  = VerdictStatus::failed;
      w.verdict.failure = code;
      w.verdict.reason  = std::string(error_code_name(code)) + ": " + std::move(reason);
      return w;
    };
    if (!w.source || !w.target) {
      return failed(ErrorCode::invalid_argument, "witness has no source or target");
    }
    auto const& T = *w.target;
    auto const& S = *w.source;

    std::vector<std::pair<Key, std::uint32_t>> gens;
    for (auto const& [t, s] : w.pairs) {
      if (!T.contains(t)) {
        return failed(ErrorCode::invalid_argument,
                      "pair target " + to_hex(t) + " is not an element of " + T.label());
      }
      auto si = S.index_of(s);
      if (!si) {
        return failed(ErrorCode::invalid_argument,
                      "pair source " + to_hex(s) + " is not an element of " + S.label());
      }
      std::pair<Key, std::uint32_t> g{t, *si};
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) {
        gens.push_back(std::move(g));
      }
    }

    auto        c = std::make_shared<WitnessClosure>();
    std::string clash;
    auto add = [&](Key t, std::uint32_t s) {
      auto [it, inserted] = c->position.emplace(t, static_cast<std::uint32_t>(c->targets.size()));
      if (!inserted) {
        auto prior = c->sources[it->second];
        if (prior != s) {
          clash = describe(T, t) + " maps to both " + S.render(prior) + " and " + S.render(s);
          return false;
        }
        return true;
      }
      c->targets.push_back(std::move(t));
      c->sources.push_back(s);
      return true;
    };

    for (auto const& [t, s] : gens) {
      if (!add(t, s)) {
        return failed(ErrorCode::not_functional, clash);
      }
    }
    for (std::size_t i = 0; i < c->targets.size(); ++i) {
      for (auto const& [gt, gs] : gens) {
        Key           t = T.multiply(c->targets[i], gt);
        std::uint32_t s = S.mul(c->sources[i], gs);
        if (!add(std::move(t), s)) {
          return failed(ErrorCode::not_functional, clash);
        }
        if (c->targets.size() > limit) {
          return failed(ErrorCode::size_limit_exceeded,
                        "closure exceeds " + std::to_string(limit) + " elements");
        }
      }
    }

    c->first_preimage.assign(S.size(), none);
    for (std::uint32_t i = 0; i < c->targets.size(); ++i) {
      auto& slot = c->first_preimage[c->sources[i]];
      if (slot == none) {
        slot = i;
      }
    }
    std::vector<std::string> missing;
    for (std::uint32_t s = 0; s < S.size(); ++s) {
      if (c->first_preimage[s] == none && missing.size() < 4) {
        missing.push_back(S.render(s));
      }
    }
    if (!missing.empty()) {
      std::string list;
      for (auto const& m : missing) {
        list += (list.empty() ? "" : ", ") + m;
      }
      auto covered = std::count_if(c->first_preimage.begin(), c->first_preimage.end(),
                                   [](auto p) { return p != none; });
      return failed(ErrorCode::not_surjective,
                    std::to_string(covered) + " of " + std::to_string(S.size())
                        + " source elements covered; missing " + list);
    }

    w.verdict.status       = VerdictStatus::verified;
    w.verdict.closure_size = c->targets.size();
    w.closure              = std::move(c);
    return w;
  }

  MonoidPtr image_submonoid(DivisionWitness const& w) {
    w.require_verified();
    auto id = w.target->identity();
    if (!w.closure->position.contains(id)) {
      fail(ErrorCode::precondition, "closure of " + w.name + " does not contain the identity");
    }
    std::vector<Key> gens;
    for (auto const& [t, s] : w.pairs) {
      gens.push_back(t);
    }
    auto m = close_generators(w.target, gens, w.closure->targets.size() + 1,
                              "im(" + w.name + ")");
    if (m->size() != w.closure->targets.size()) {
      fail(ErrorCode::precondition, "first coordinates of " + w.name + " do not close up");
    }
    return m;
  }

  std::vector<std::uint32_t> image_map(DivisionWitness const& w, Monoid const& image) {
    std::vector<std::uint32_t> phi(image.size());
    for (std::uint32_t i = 0; i < image.size(); ++i) {
      phi[i] = w.image(image.key(i));
    }
    return phi;
  }

  bool same_structure(Carrier const& a, Carrier const& b) {
    return unwrap(&a) == unwrap(&b) || structure(a) == structure(b);
  }

  DivisionWitness make_witness(std::string                                name,
                               MonoidPtr                                  source,
                               CarrierPtr                                 target,
                               std::function<Key(std::uint32_t)> const&   preimage,
                               nlohmann::json                             step,
                               std::optional<std::vector<std::uint32_t>>  gens,
                               std::size_t                                limit) {
    DivisionWitness w;
    w.name   = std::move(name);
    w.source = std::move(source);
    w.target = std::move(target);
    w.pairs.emplace_back(w.target->identity(), w.source->key(w.source->identity()));
    for (auto g : gens ? *gens : w.source->generators()) {
      w.pairs.emplace_back(preimage(g), w.source->key(g));
    }
    w.steps.push_back(std::move(step));
    w = verify(std::move(w), limit);
    if (!w.verified()) {
      throw Error(w.verdict.failure, w.name + ": " + w.verdict.reason);
    }
    return w;
  }

  DivisionWitness identity_witness(MonoidPtr const& s) {
    return make_witness(s->label() + " < " + s->label(), s, s->as_carrier(),
                        [&](std::uint32_t i) { return s->key(i); },
                        {{"op", "identity"}, {"monoid", s->label()}});
  }

  DivisionWitness compose(DivisionWitness const& w1, DivisionWitness const& w2, std::size_t limit) {
    w2.require_verified();
    if (!same_structure(*w1.target, *w2.source->carrier())) {
      fail(ErrorCode::precondition,
           "target of " + w1.name + " is not the source of " + w2.name);
    }
    DivisionWitness w;
    w.name   = w1.source->label() + " < " + w2.target->label();
    w.source = w1.source;
    w.target = w2.target;
    for (auto const& [t, s] : w1.pairs) {
      w.pairs.emplace_back(w2.preimage(KeyView(t)), s);
    }
    w.steps = w1.steps;
    for (auto const& st : w2.steps) {
      w.steps.push_back(st);
    }
    w.steps.push_back({{"op", "compose"}, {"first", w1.name}, {"second", w2.name}});
    w = verify(std::move(w), limit);
    if (!w.verified()) {
      throw Error(w.verdict.failure, w.name + ": " + w.verdict.reason);
    }
    return w;
  }

  namespace {

    void require(bool ok, std::string const& what) {
      if (!ok) {
        fail(ErrorCode::precondition, what);
      }
    }

    std::vector<KeyView> split(Carrier const& c, KeyView k) {
      auto const* p = dynamic_cast<ProductCarrier const*>(unwrap(&c));
      if (p == nullptr) {
        fail(ErrorCode::context_mismatch, c.label() + " is not a direct product");
      }
      return p->split(k);
    }

    WreathElement decode_wreath(Carrier const& c, KeyView k) {
      auto const* w = dynamic_cast<WreathCarrier const*>(unwrap(&c));
      if (w == nullptr) {
        fail(ErrorCode::context_mismatch, c.label() + " is not a wreath product");
      }
      return w->decode(k);
    }

    MonoidPtr traced_source(CarrierPtr const&                       carrier,
                            std::optional<std::vector<Key>> const& gens,
                            std::size_t                             limit,
                            std::function<MonoidPtr()> const&       full) {
      if (gens) {
        return close_generators(carrier, *gens, limit);
      }
      return full();
    }

  }  // namespace

  DivisionWitness lift_left(DivisionWitness const&                  w,
                            MonoidPtr const&                        C,
                            std::optional<std::vector<Key>> const& source_gens,
                            std::size_t                             limit) {
    w.require_verified();
    auto const& A      = w.source;
    auto        src    = make_context(C, A);
    auto        source = traced_source(src, source_gens, limit,
                                       [&] { return enumerate_wreath(C, A, limit); });
    Key const   c_id   = C->key(C->identity());

    nlohmann::json steps = w.steps;
    MonoidPtr      base;
    // closure position of each base element, or none outside the image
    std::vector<std::uint32_t> phi;
    if (auto const* mc = dynamic_cast<MonoidCarrier const*>(w.target.get())) {
      base = mc->monoid();
      for (auto const& k : base->keys()) {
        auto it = w.closure->position.find(k);
        phi.push_back(it == w.closure->position.end() ? none : w.closure->sources[it->second]);
      }
    } else {
      base        = image_submonoid(w);
      phi         = image_map(w, *base);
      auto restr  = restrict_base(C->as_carrier(), w.target, base);
      steps.push_back(restr.step);
    }
    auto target = make_context(C, base);

    auto lift = [&](std::uint32_t i) {
      auto          x = src->decode(source->key(i));
      WreathElement y;
      for (auto p : phi) {
        y.table.push_back(p == none ? c_id : x.table[p]);
      }
      y.base = base->at(w.preimage(x.base));
      return WreathCarrier::encode(y);
    };
    auto out = make_witness(C->label() + " wr " + A->label() + " < " + target->label(), source,
                            target, lift,
                            {{"op", "lift_left"}, {"inner", w.name}, {"top", C->label()}},
                            std::nullopt, limit);
    for (auto& st : out.steps) {
      steps.push_back(st);
    }
    out.steps = std::move(steps);
    return out;
  }

  DivisionWitness lift_right(DivisionWitness const&                  w,
                             MonoidPtr const&                        C,
                             std::optional<std::vector<Key>> const& source_gens,
                             std::size_t                             limit) {
    w.require_verified();
    auto const& A      = w.source;
    auto        src    = make_context(A, C);
    auto        source = traced_source(src, source_gens, limit,
                                       [&] { return enumerate_wreath(A, C, limit); });
    auto        target = make_context(w.target, C);
    auto lift = [&](std::uint32_t i) {
      auto x = src->decode(source->key(i));
      for (auto& v : x.table) {
        v = w.preimage(KeyView(v));
      }
      return WreathCarrier::encode(x);
    };
    auto out = make_witness(A->label() + " wr " + C->label() + " < " + target->label(), source,
                            target, lift,
                            {{"op", "lift_right"}, {"inner", w.name}, {"base", C->label()}},
                            std::nullopt, limit);
    nlohmann::json steps = w.steps;
    for (auto& st : out.steps) {
      steps.push_back(st);
    }
    out.steps = std::move(steps);
    return out;
  }

  DivisionWitness times_to_wreath(MonoidPtr const& A, MonoidPtr const& B, std::size_t limit) {
    auto source = direct_product(A, B, limit);
    auto target = make_context(A, B);
    auto embed  = [&](std::uint32_t i) {
      auto          parts = split(*source->carrier(), source->key(i));
      WreathElement y;
      y.table.assign(B->size(), Key(parts[0]));
      y.base = B->at(parts[1]);
      return WreathCarrier::encode(y);
    };
    auto w = make_witness(source->label() + " < " + target->label(), source, target, embed,
                          {{"op", "times_to_wreath"}, {"left", A->label()}, {"right", B->label()}},
                          std::nullopt, limit);
    require(w.injective(), "times_to_wreath is not injective");
    return w;
  }

  DivisionWitness interchange(MonoidPtr const& A,
                              MonoidPtr const& B,
                              MonoidPtr const& C,
                              MonoidPtr const& D,
                              std::size_t      limit) {
    auto AB     = enumerate_wreath(A, B, limit);
    auto CD     = enumerate_wreath(C, D, limit);
    auto source = direct_product(AB, CD, limit);
    auto AC     = direct_product(A, C, limit);
    auto BD     = direct_product(B, D, limit);
    auto target = make_context(AC, BD);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> coords;
    for (auto const& k : BD->keys()) {
      auto parts = split(*BD->carrier(), k);
      coords.emplace_back(B->at(parts[0]), D->at(parts[1]));
    }
    auto embed = [&](std::uint32_t i) {
      auto          parts = split(*source->carrier(), source->key(i));
      auto          x     = decode_wreath(*AB->carrier(), parts[0]);
      auto          z     = decode_wreath(*CD->carrier(), parts[1]);
      WreathElement y;
      for (auto [b, d] : coords) {
        y.table.push_back(ProductCarrier::encode({x.table[b], z.table[d]}));
      }
      y.base = BD->at(ProductCarrier::encode({B->key(x.base), D->key(z.base)}));
      return WreathCarrier::encode(y);
    };
    auto w = make_witness(source->label() + " < " + target->label(), source, target, embed,
                          {{"op", "interchange"},
                           {"factors", {A->label(), B->label(), C->label(), D->label()}}},
                          std::nullopt, limit);
    require(w.injective(), "interchange is not injective");
    return w;
  }

  DivisionWitness absorb(MonoidPtr const&                        A,
                         MonoidPtr const&                        B,
                         MonoidPtr const&                        C,
                         std::optional<std::vector<Key>> const& source_gens,
                         std::size_t                             limit) {
    auto ab     = make_context(A, B);
    auto src    = std::make_shared<ProductCarrier>(std::vector<CarrierPtr>{ab, C->as_carrier()});
    auto source = traced_source(src, source_gens, limit, [&] {
      return direct_product(enumerate_wreath(A, B, limit), C, limit);
    });
    auto BC     = direct_product(B, C, limit);
    auto target = make_context(A, BC);

    std::vector<std::uint32_t> alpha;
    for (auto const& k : BC->keys()) {
      alpha.push_back(B->at(split(*BC->carrier(), k)[0]));
    }
    auto psi = [&](std::uint32_t i) {
      auto          parts = split(*source->carrier(), source->key(i));
      auto          x     = ab->decode(parts[0]);
      WreathElement y;
      for (auto b : alpha) {
        y.table.push_back(x.table[b]);
      }
      y.base = BC->at(ProductCarrier::encode({B->key(x.base), Key(parts[1])}));
      return WreathCarrier::encode(y);
    };
    auto w = make_witness(source->label() + " < " + target->label(), source, target, psi,
                          {{"op", "absorb"},
                           {"factors", {A->label(), B->label(), C->label()}}},
                          std::nullopt, limit);
    require(w.injective(), "absorb is not injective");
    return w;
  }

  DivisionWitness augmentation(MonoidPtr const&                               A,
                               std::vector<std::vector<std::uint32_t>> const& action,
                               std::size_t                                    limit) {
    auto           abar   = augmented_monoid(*A, action, limit);
    auto const     points = static_cast<std::uint32_t>(action.at(0).size());
    auto           X      = constants_monoid(points);
    auto           target = make_context(X, A);
    Key const      one    = ConstantsCarrier::identity_key();
    auto const     e      = A->identity();

    DivisionWitness w;
    w.name   = abar->label() + " < " + target->label();
    w.source = abar;
    w.target = target;
    w.pairs.emplace_back(target->identity(), abar->key(abar->identity()));
    for (std::uint32_t a = 0; a < A->size(); ++a) {
      WreathElement y{std::vector<Key>(A->size(), one), a};
      w.pairs.emplace_back(WreathCarrier::encode(y),
                           TransformationCarrier::encode(action[a]));
    }
    for (std::uint32_t x = 0; x < points; ++x) {
      WreathElement y;
      y.base = e;
      for (std::uint32_t b = 0; b < A->size(); ++b) {
        y.table.push_back(ConstantsCarrier::constant_key(action[b][x]));
      }
      w.pairs.emplace_back(WreathCarrier::encode(y),
                           TransformationCarrier::encode(std::vector<std::uint32_t>(points, x)));
    }
    w.steps.push_back({{"op", "augmentation"}, {"monoid", A->label()}, {"points", points}});
    w = verify(std::move(w), limit);
    if (!w.verified()) {
      throw Error(w.verdict.failure, w.name + ": " + w.verdict.reason);
    }
    return w;
  }

  DivisionWitness augmentation(MonoidPtr const& A, std::size_t limit) {
    return augmentation(A, transformation_action(*A), limit);
  }

  DivisionWitness group_with_zero(Ring const& field) {
    if (!field->is_field()) {
      fail(ErrorCode::field_required, field->label() + " is not a field");
    }
    auto T1     = build_family({FamilyKind::T, 1, field});
    auto T1s    = build_family({FamilyKind::T_star, 1, field});
    auto U      = u1();
    auto target = direct_product(T1s, U);
    Key const u_one  = U->key(U->identity());
    Key const u_zero = U->key(1 - U->identity());
    Key const g_one  = T1s->key(T1s->identity());
    auto split_zero = [&](std::uint32_t i) {
      Key const& k = T1->key(i);
      if (T1s->index_of(k)) {
        return ProductCarrier::encode({k, u_one});
      }
      return ProductCarrier::encode({g_one, u_zero});
    };
    std::vector<std::uint32_t> all(T1->size());
    for (std::uint32_t i = 0; i < all.size(); ++i) {
      all[i] = i;
    }
    return make_witness(T1->label() + " < " + target->label(), T1, target->carrier(), split_zero,
                        {{"op", "group_with_zero"}, {"ring", field->label()}}, all);
  }

  DivisionWitness product_witness(std::vector<DivisionWitness> const&      ws,
                                  std::optional<std::vector<Key>> const& source_gens,
                                  std::size_t                             limit) {
    require(!ws.empty(), "product of no witnesses");
    std::vector<MonoidPtr>  sources;
    std::vector<CarrierPtr> src_carriers;
    std::vector<CarrierPtr> targets;
    for (auto const& w : ws) {
      w.require_verified();
      sources.push_back(w.source);
      src_carriers.push_back(w.source->as_carrier());
      targets.push_back(w.target);
    }
    auto source = traced_source(std::make_shared<ProductCarrier>(src_carriers), source_gens, limit,
                                [&] { return direct_product(sources, limit); });
    auto target = std::make_shared<ProductCarrier>(targets);
    auto pre    = [&](std::uint32_t i) {
      auto             parts = split(*source->carrier(), source->key(i));
      std::vector<Key> out;
      for (std::size_t j = 0; j < ws.size(); ++j) {
        out.push_back(ws[j].preimage(parts[j]));
      }
      return ProductCarrier::encode(out);
    };
    nlohmann::json names = nlohmann::json::array();
    nlohmann::json steps = nlohmann::json::array();
    for (auto const& w : ws) {
      names.push_back(w.name);
      for (auto const& st : w.steps) {
        steps.push_back(st);
      }
    }
    auto out = make_witness(source->label() + " < " + target->label(), source, target, pre,
                            {{"op", "product"}, {"factors", names}}, std::nullopt, limit);
    for (auto& st : out.steps) {
      steps.push_back(st);
    }
    out.steps = std::move(steps);
    return out;
  }

  DivisionWitness product_witness(DivisionWitness const& w1,
                                  DivisionWitness const& w2,
                                  std::size_t            limit) {
    return product_witness(std::vector<DivisionWitness>{w1, w2}, std::nullopt, limit);
  }

  SearchResult search_division(MonoidPtr const& S, MonoidPtr const& T, std::size_t target_limit) {
    std::size_t const n = T->size();
    if (n > target_limit || n > 20) {
      fail(ErrorCode::size_limit_exceeded,
           "search needs |" + T->label() + "| <= " + std::to_string(target_limit));
    }
    SearchResult result;
    if (S->size() > n) {
      return result;
    }
    using Mask = std::uint32_t;
    auto close = [&](Mask m) {
      for (bool grown = true; grown;) {
        grown = false;
        for (std::uint32_t a = 0; a < n; ++a) {
          if (!(m >> a & 1U)) continue;
          for (std::uint32_t b = 0; b < n; ++b) {
            if (!(m >> b & 1U)) continue;
            Mask bit = Mask{1} << T->mul(a, b);
            if (!(m & bit)) {
              m |= bit;
              grown = true;
            }
          }
        }
      }
      return m;
    };
    std::vector<Mask>         subs;
    std::unordered_map<Mask, bool> seen;
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      Mask c = close(m);
      if (seen.emplace(c, true).second) {
        subs.push_back(c);
      }
    }
    constexpr std::size_t max_assignments = 2000000;
    auto const            target          = T->as_carrier();
    for (Mask sub : subs) {
      if (static_cast<std::size_t>(std::popcount(sub)) < S->size()) {
        continue;
      }
      ++result.subsemigroups;
      std::vector<std::uint32_t> gens;
      Mask                       reached = 0;
      for (std::uint32_t a = 0; a < n; ++a) {
        if ((sub >> a & 1U) && !(reached >> a & 1U)) {
          gens.push_back(a);
          Mask g = 0;
          for (auto x : gens) g |= Mask{1} << x;
          reached = close(g);
        }
      }
      std::vector<std::uint32_t> images(gens.size(), 0);
      for (;;) {
        if (++result.assignments > max_assignments) {
          fail(ErrorCode::size_limit_exceeded, "division search exceeds its assignment budget");
        }
        DivisionWitness w;
        w.name   = S->label() + " < " + T->label();
        w.source = S;
        w.target = target;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          w.pairs.emplace_back(T->key(gens[i]), S->key(images[i]));
        }
        w.steps.push_back({{"op", "search"}, {"subsemigroup_size", std::popcount(sub)}});
        w = verify(std::move(w), n);
        if (w.verified()) {
          result.witness = std::move(w);
          return result;
        }
        std::size_t i = 0;
        while (i < images.size() && ++images[i] == S->size()) {
          images[i++] = 0;
        }
        if (i == images.size()) {
          break;
        }
      }
    }
    return result;
  }

  std::vector<Key> first_coordinates(DivisionWitness const& w) {
    std::vector<Key> out;
    for (auto const& [t, s] : w.pairs) {
      out.push_back(t);
    }
    return out;
  }

  std::vector<Key> generator_keys(Monoid const& m) {
    auto const& d = m.descriptor();
    if (d.value("kind", "") == "closure") {
      std::vector<Key> out;
      for (auto const& g : d["generators"]) {
        out.push_back(from_hex(g.get<std::string>()));
      }
      return out;
    }
    std::vector<Key> out;
    for (auto g : m.generators()) {
      out.push_back(m.key(g));
    }
    return out;
  }

  DivisionWitness inclusion_witness(MonoidPtr const& sub, MonoidPtr const& full) {
    return make_witness(sub->label() + " < " + full->label(), sub, full->as_carrier(),
                        [&](std::uint32_t i) { return sub->key(i); },
                        {{"op", "inclusion"}, {"sub", sub->label()}, {"full", full->label()}});
  }

  DivisionWitness restrict_source(DivisionWitness const& w, MonoidPtr const& S, std::size_t limit) {
    if (S.get() == w.source.get()) {
      return w;
    }
    return compose(inclusion_witness(S, w.source), w, limit);
  }

  DivisionWitness reassociate(CarrierPtr const&       A,
                              MonoidPtr const&        B,
                              MonoidPtr const&        C,
                              std::vector<Key> const& source_gens,
                              std::size_t             limit) {
    auto ab     = make_context(A, B);
    auto src    = make_context(CarrierPtr(ab), C);
    auto source = close_generators(src, source_gens, limit);
    auto bc     = make_context(B, C);

    auto base_part = [&](WreathElement const& x) {
      WreathElement y;
      y.base = x.base;
      for (auto const& entry : x.table) {
        y.table.push_back(B->key(ab->decode(entry).base));
      }
      return WreathCarrier::encode(y);
    };
    std::vector<Key> d_gens;
    for (auto g : source->generators()) {
      d_gens.push_back(base_part(src->decode(source->key(g))));
    }
    auto D      = close_generators(bc, d_gens, limit, "im(" + bc->label() + ")");
    auto restr  = restrict_base(A, bc, D);
    auto target = restr.context;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> kc;  // (K(1), c) per element of D
    for (auto const& k : D->keys()) {
      auto u = bc->decode(k);
      kc.emplace_back(B->at(u.table[C->identity()]), u.base);
    }
    auto embed = [&](std::uint32_t i) {
      auto x = src->decode(source->key(i));
      std::vector<WreathElement> inner;
      for (auto const& entry : x.table) {
        inner.push_back(ab->decode(entry));
      }
      WreathElement y;
      for (auto [k1, c] : kc) {
        y.table.push_back(inner[c].table[k1]);
      }
      y.base = D->at(base_part(x));
      return WreathCarrier::encode(y);
    };
    auto w = make_witness(source->label() + " < " + target->label(), source, target, embed,
                          {{"op", "reassociate"},
                           {"factors", {A->label(), B->label(), C->label()}}},
                          std::nullopt, limit);
    w.steps.insert(w.steps.begin(), restr.step);
    return w;
  }

}  // namespace semidec
