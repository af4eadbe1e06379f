#include "semidec/decomp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "semidec/serialize.hpp"

namespace semidec {

  char const* tag_name(TermTag tag) noexcept {
    switch (tag) {
      case TermTag::group: return "group";
      case TermTag::aperiodic: return "aperiodic";
      case TermTag::mixed: return "mixed";
    }
    return "mixed";
  }

  TermTag classify_term(Monoid const& m) {
    bool const g = is_group(m);
    bool const a = is_aperiodic(m);
    if (g && a) {
      // the trivial monoid is both; it never adds a group term
      return TermTag::aperiodic;
    }
    return g ? TermTag::group : a ? TermTag::aperiodic : TermTag::mixed;
  }

  void merge_terms(DecompositionPlan& plan) {
    plan.blocks.clear();
    for (std::size_t i = 0; i < plan.terms.size(); ++i) {
      auto tag = plan.terms[i].tag;
      if (plan.blocks.empty() || plan.blocks.back().tag != tag || tag == TermTag::mixed) {
        plan.blocks.push_back({tag, {}});
      }
      plan.blocks.back().terms.push_back(i);
    }
    plan.group_length = 0;
    for (auto const& b : plan.blocks) {
      plan.group_length += b.tag != TermTag::aperiodic;
    }
  }

  namespace {

    MonoidPtr family(FamilyKind kind, std::size_t n, Ring const& ring, std::size_t limit) {
      return build_family({kind, n, ring}, limit);
    }

    PlanTerm term(MonoidPtr const& m) {
      return {m->label(), classify_term(*m), m->size(), m->descriptor()};
    }

    MonoidPtr power(MonoidPtr const& m, std::size_t k, std::size_t limit) {
      if (k == 1) {
        return m;
      }
      return direct_product(std::vector<MonoidPtr>(k, m), limit);
    }

    void check_verified(DivisionWitness const& w) {
      if (!w.verified()) {
        fail(w.verdict.failure, w.name + ": " + w.verdict.reason);
      }
    }

  }  // namespace

  DivisionWitness induction_step(std::size_t n, Ring const& ring, std::size_t limit) {
    if (n < 2) {
      fail(ErrorCode::dimension_too_small, "induction step needs n >= 2");
    }
    auto const& R   = *ring;
    auto        Tn  = family(FamilyKind::T, n, ring, limit);
    auto        Tm  = family(FamilyKind::T, n - 1, ring, limit);
    auto        AS  = family(FamilyKind::AS, n - 1, ring, limit);
    auto        T1  = family(FamilyKind::T, 1, ring, limit);
    auto        ctx = make_context(AS, Tm);
    auto target = std::make_shared<ProductCarrier>(std::vector<CarrierPtr>{ctx, T1->as_carrier()});

    std::vector<TriMatrix> Xs;
    for (auto const& k : Tm->keys()) {
      Xs.push_back(TriMatrix::from_key(ring, n - 1, k));
    }
    auto psi = [&](std::uint32_t i) {
      auto          parts = block_decompose(TriMatrix::from_key(ring, n, Tn->key(i)));
      WreathElement f;
      f.base = Tm->at(parts.M.key());
      for (auto const& X : Xs) {
        std::vector<Scalar> xv(n - 1, R.zero());
        for (std::size_t r = 0; r < n - 1; ++r) {
          for (std::size_t j = r; j < n - 1; ++j) {
            xv[r] = R.add(xv[r], R.mul(X.at(r, j), parts.v[j]));
          }
        }
        Key k = affine_key(ring, AffineMap::scaling(ring, parts.c, xv));
        if (!AS->index_of(k)) {
          fail(ErrorCode::precondition, "f_s is not an affine scaling map");
        }
        f.table.push_back(std::move(k));
      }
      auto c = TriMatrix::from_rows(ring, {{parts.c}});
      return ProductCarrier::encode({WreathCarrier::encode(f), c.key()});
    };
    std::vector<std::uint32_t> all(Tn->size());
    for (std::uint32_t i = 0; i < all.size(); ++i) {
      all[i] = i;
    }
    auto w = make_witness(Tn->label() + " < [" + ctx->label() + "] x " + T1->label(), Tn, target,
                          psi, {{"op", "induction_step"}, {"n", n}, {"ring", R.label()}}, all,
                          limit);
    if (!w.injective()) {
      fail(ErrorCode::not_functional, "induction map is not injective");
    }
    return w;
  }

  EmbeddingCheck check_affine_embedding(std::size_t m, std::size_t n, Ring const& field) {
    if (m + 1 > n) {
      fail(ErrorCode::dimension_mismatch, "AS*_m needs m < n");
    }
    auto const& R  = *field;
    auto        AS = family(FamilyKind::AS_star, m, field, default_monoid_limit);
    auto        Tn = family(FamilyKind::T_star, n, field, default_monoid_limit);
    std::vector<Key> images;
    for (auto const& k : AS->keys()) {
      // recover v -> v lambda + c from the images of 0 and e_1
      auto const          img = TransformationCarrier::decode(k);
      std::vector<Scalar> e1(m, R.zero());
      e1[0]                   = R.one();
      auto const c            = vector_at(R, m, img[0]);
      auto const at_e1        = vector_at(R, m, img[vector_index(R, e1)]);
      Scalar     lambda       = R.zero();
      for (Scalar x = 0; x < R.size(); ++x) {
        if (R.add(x, c[0]) == at_e1[0]) {
          lambda = x;
        }
      }
      auto f = AffineMap::scaling(field, lambda, c);
      if (affine_key(field, f) != k) {
        return {m, AS->size(), false};
      }
      auto                Mf = affine_to_matrix(field, f);
      std::vector<Scalar> entries(n * n, R.zero());
      for (std::size_t i = 0; i < n; ++i) {
        entries[i * n + i] = R.one();
      }
      for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
          entries[i * n + j] = Mf.at(i, j);
        }
      }
      images.push_back(TriMatrix(field, n, std::move(entries)).key());
    }
    EmbeddingCheck out{m, AS->size(), true};
    for (std::uint32_t a = 0; a < AS->size() && out.ok; ++a) {
      out.ok = Tn->index_of(images[a]).has_value();
      for (std::uint32_t b = 0; b < AS->size() && out.ok; ++b) {
        auto prod = mat_mul(TriMatrix::from_key(field, n, images[a]),
                            TriMatrix::from_key(field, n, images[b]));
        out.ok = prod.key() == images[AS->mul(a, b)] && (a == b || images[a] != images[b]);
      }
    }
    return out;
  }

  namespace {

    MonoidPtr monoid_of(CarrierPtr const& c) {
      auto const* mc = dynamic_cast<MonoidCarrier const*>(c.get());
      if (mc == nullptr) {
        fail(ErrorCode::precondition, c->label() + " is not an enumerated monoid");
      }
      return mc->monoid();
    }

    WreathCarrier const* as_wreath(Carrier const& c) {
      return dynamic_cast<WreathCarrier const*>(&c);
    }

    MonoidPtr wreath_base(CarrierPtr const& c) {
      auto const* w = as_wreath(*c);
      if (w == nullptr) {
        fail(ErrorCode::precondition, c->label() + " is not a wreath product");
      }
      return w->base();
    }

    struct Chain {
      std::vector<DivisionWitness>& steps;
      std::size_t                   limit;

      DivisionWitness const& add(DivisionWitness w) {
        check_verified(w);
        steps.push_back(std::move(w));
        return steps.back();
      }
    };

    // B x T_1 < (pushed) with source exactly direct_product(B, T_1): the
    // trailing T_1 is absorbed down to the innermost base, where the
    // product of T_1 factors is flattened.
    DivisionWitness push_inward(MonoidPtr const& B, MonoidPtr const& T1, Chain& chain) {
      auto BC = direct_product(B, T1, chain.limit);
      if (auto const* wc = as_wreath(*B->carrier())) {
        auto A2    = monoid_of(wc->top());
        auto B2    = wc->base();
        auto v     = chain.add(absorb(A2, B2, T1, generator_keys(*BC), chain.limit));
        auto inner = push_inward(B2, T1, chain);
        auto l     = chain.add(lift_left(inner, A2, first_coordinates(v), chain.limit));
        return restrict_source(compose(v, l, chain.limit), BC, chain.limit);
      }
      auto const* pc = dynamic_cast<ProductCarrier const*>(B->carrier().get());
      if (pc == nullptr) {
        return identity_witness(BC);
      }
      auto flat   = direct_product(std::vector<MonoidPtr>(pc->factors().size() + 1, T1),
                                   chain.limit);
      auto const* outer = dynamic_cast<ProductCarrier const*>(BC->carrier().get());
      auto flatten = [&](std::uint32_t i) {
        auto             parts = outer->split(BC->key(i));
        std::vector<Key> out;
        for (auto p : pc->split(parts[0])) {
          out.emplace_back(p);
        }
        out.emplace_back(parts[1]);
        return ProductCarrier::encode(out);
      };
      return chain.add(make_witness(BC->label() + " < " + flat->label(), BC, flat->carrier(),
                                    flatten, {{"op", "flatten"}, {"factors", flat->label()}},
                                    std::nullopt, chain.limit));
    }

    DivisionWitness ring_chain(std::size_t n, Ring const& ring, Chain& chain) {
      auto T1 = family(FamilyKind::T, 1, ring, chain.limit);
      auto w1 = chain.add(induction_step(n, ring, chain.limit));
      if (n == 2) {
        auto AS1 = family(FamilyKind::AS, 1, ring, chain.limit);
        auto ab  = chain.add(absorb(AS1, T1, T1, first_coordinates(w1), chain.limit));
        return compose(w1, ab, chain.limit);
      }
      auto prev = ring_chain(n - 1, ring, chain);
      auto AS   = family(FamilyKind::AS, n - 1, ring, chain.limit);

      auto const*      split_top = dynamic_cast<ProductCarrier const*>(w1.target.get());
      std::vector<Key> tops;
      for (auto const& t : first_coordinates(w1)) {
        tops.emplace_back(split_top->split(t)[0]);
      }
      auto ll = chain.add(lift_left(prev, AS, tops, chain.limit));
      auto pw = chain.add(product_witness({ll, identity_witness(T1)}, first_coordinates(w1),
                                          chain.limit));
      auto c1 = compose(w1, pw, chain.limit);
      auto Bp = wreath_base(ll.target);
      auto ab = chain.add(absorb(AS, Bp, T1, first_coordinates(c1), chain.limit));
      auto c2 = compose(c1, ab, chain.limit);
      auto push = push_inward(Bp, T1, chain);
      auto l2   = chain.add(lift_left(push, AS, first_coordinates(c2), chain.limit));
      return compose(c2, l2, chain.limit);
    }

  }  // namespace

  DecompositionPlan ring_pipeline(std::size_t n, Ring const& ring, std::size_t limit) {
    if (n < 2) {
      fail(ErrorCode::dimension_too_small, "ring pipeline needs n >= 2");
    }
    DecompositionPlan plan;
    plan.pipeline = "ring";
    plan.n        = n;
    plan.ring     = ring;
    Chain chain{plan.chain, limit};
    try {
      plan.composite = ring_chain(n, ring, chain);
      if (plan.composite->verdict.closure_size < plan.composite->source->size()) {
        fail(ErrorCode::not_surjective, "composite does not cover the source");
      }
    } catch (Error const& e) {
      if (e.code() != ErrorCode::size_limit_exceeded) {
        throw;
      }
      plan.composite.reset();
      plan.composite_error = e.what();
    }
    for (std::size_t i = n - 1; i >= 1; --i) {
      plan.terms.push_back(term(family(FamilyKind::AS, i, ring, limit)));
    }
    plan.terms.push_back(term(power(family(FamilyKind::T, 1, ring, limit), n, limit)));
    merge_terms(plan);
    return plan;
  }

  namespace {

    struct FieldParts {
      Ring                                     field;
      std::size_t                              n;
      std::map<std::size_t, DivisionWitness>   augmentations;
    };

    DivisionWitness const& augmentation_for(FieldParts& parts, std::size_t i, Chain& chain) {
      auto it = parts.augmentations.find(i);
      if (it != parts.augmentations.end()) {
        return it->second;
      }
      auto star = family(FamilyKind::AS_star, i, parts.field, chain.limit);
      auto full = family(FamilyKind::AS, i, parts.field, chain.limit);
      auto w    = chain.add(augmentation(star, chain.limit));
      auto a    = w.source->keys();
      auto b    = full->keys();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        fail(ErrorCode::precondition, "AS_i is not the augmented monoid of AS*_i");
      }
      return parts.augmentations.emplace(i, std::move(w)).first->second;
    }

    // T_1^n (traced as B) < T_1*^n wr U_1^n.
    DivisionWitness bottom(MonoidPtr const& B, FieldParts& parts, Chain& chain) {
      auto const n   = parts.n;
      auto       g   = chain.add(group_with_zero(parts.field));
      auto       p   = chain.add(product_witness(std::vector<DivisionWitness>(n, g), std::nullopt,
                                                 chain.limit));
      auto T1s = family(FamilyKind::T_star, 1, parts.field, chain.limit);
      auto Tsn = power(T1s, n, chain.limit);
      auto Un  = power(u1(), n, chain.limit);
      auto sep = direct_product(Tsn, Un, chain.limit);

      auto source = close_generators(p.target, first_coordinates(p), chain.limit);
      auto const* outer = dynamic_cast<ProductCarrier const*>(p.target.get());
      auto const* pair  = dynamic_cast<ProductCarrier const*>(g.target.get());
      auto regroup = [&](std::uint32_t i) {
        std::vector<Key> gs, us;
        for (auto f : outer->split(source->key(i))) {
          auto gu = pair->split(f);
          gs.emplace_back(gu[0]);
          us.emplace_back(gu[1]);
        }
        return ProductCarrier::encode({n == 1 ? gs[0] : ProductCarrier::encode(gs),
                                       n == 1 ? us[0] : ProductCarrier::encode(us)});
      };
      auto r = chain.add(make_witness(source->label() + " < " + sep->label(), source,
                                      sep->carrier(), regroup, {{"op", "regroup"}},
                                      std::nullopt, chain.limit));
      auto t = chain.add(times_to_wreath(Tsn, Un, chain.limit));
      auto v = compose(compose(p, r, chain.limit), t, chain.limit);
      return restrict_source(v, B, chain.limit);
    }

    // X inside AS_i wr B  <  k~^i wr (AS*_i wr (refined B)).
    DivisionWitness refine(MonoidPtr const& X, std::size_t i, FieldParts& parts, Chain& chain) {
      auto const* wc = as_wreath(*X->carrier());
      if (wc == nullptr) {
        fail(ErrorCode::precondition, X->label() + " is not inside a wreath product");
      }
      auto        B   = wc->base();
      auto const& aug = augmentation_for(parts, i, chain);
      auto const* top = as_wreath(*aug.target);
      auto        a   = chain.add(lift_right(aug, B, generator_keys(*X), chain.limit));
      auto        b   = chain.add(
          reassociate(top->top(), top->base(), B, first_coordinates(a), chain.limit));
      auto c1 = compose(a, b, chain.limit);
      auto D  = wreath_base(b.target);

      DivisionWitness v = as_wreath(*B->carrier()) != nullptr
                              ? restrict_source(refine(B, i - 1, parts, chain), B, chain.limit)
                              : bottom(B, parts, chain);
      auto d = chain.add(lift_left(v, top->base(), generator_keys(*D), chain.limit));
      auto e = chain.add(
          lift_left(d, monoid_of(top->top()), first_coordinates(c1), chain.limit));
      return compose(c1, e, chain.limit);
    }

  }  // namespace

  DecompositionPlan field_pipeline(std::size_t n, Ring const& field, std::size_t limit) {
    if (!field->is_field()) {
      fail(ErrorCode::field_required, field->label() + " is not a field");
    }
    if (n < 2) {
      fail(ErrorCode::dimension_too_small, "field pipeline needs n >= 2");
    }
    DecompositionPlan plan;
    plan.pipeline = "field";
    plan.n        = n;
    plan.ring     = field;
    Chain      chain{plan.chain, limit};
    FieldParts parts{field, n, {}};
    try {
      auto ring = ring_chain(n, field, chain);
      auto X    = image_submonoid(ring);
      auto ref  = refine(X, n - 1, parts, chain);
      plan.composite = compose(ring, ref, limit);
      if (plan.composite->verdict.closure_size < plan.composite->source->size()) {
        fail(ErrorCode::not_surjective, "composite does not cover the source");
      }
    } catch (Error const& e) {
      if (e.code() != ErrorCode::size_limit_exceeded) {
        throw;
      }
      plan.composite.reset();
      plan.composite_error = e.what();
    }

    auto const q = field->size();
    std::size_t points = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      points *= q;
    }
    for (std::size_t i = n - 1; i >= 1; --i, points /= q) {
      auto xt = family(FamilyKind::Xtilde, i, field, limit);
      auto as = family(FamilyKind::AS_star, i, field, limit);
      plan.terms.push_back(term(xt));
      plan.terms.push_back(term(as));
      plan.embeddings.push_back(check_affine_embedding(i, n, field));
    }
    plan.terms.push_back(term(power(family(FamilyKind::T_star, 1, field, limit), n, limit)));
    plan.terms.push_back(term(power(u1(), n, limit)));
    merge_terms(plan);
    for (std::size_t t = 0; t < plan.terms.size(); ++t) {
      auto m = Rebuilder(limit).monoid(plan.terms[t].descriptor);
      bool ok = plan.terms[t].tag == TermTag::group ? is_group(*m) : is_aperiodic(*m);
      if (!ok || plan.terms[t].tag == TermTag::mixed) {
        fail(ErrorCode::precondition, "term " + plan.terms[t].label + " has the wrong type");
      }
    }
    for (auto const& e : plan.embeddings) {
      if (!e.ok) {
        fail(ErrorCode::precondition,
             "AS*_" + std::to_string(e.m) + " does not embed in T*_" + std::to_string(n));
      }
    }
    return plan;
  }

  DepthComparison depth_analysis(MonoidPtr const& m, std::optional<FamilySpec> const& family) {
    DepthComparison out;
    out.report = depth_report(*m);
    for (auto const& classes : out.report.k_terms) {
      std::vector<std::size_t> orders;
      std::size_t              product = 1;
      for (auto c : classes) {
        orders.push_back(out.report.subgroup_order[c]);
        product *= out.report.subgroup_order[c];
      }
      out.k_orders.push_back(std::move(orders));
      out.k_product_orders.push_back(product);
    }
    if (family && family->kind == FamilyKind::T && family->ring && family->ring->is_field()
        && family->n >= 2) {
      out.pipeline_group_length = field_pipeline(family->n, family->ring).group_length;
    }
    return out;
  }

  namespace {

    std::size_t binomial(std::size_t n, std::size_t k) {
      std::size_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    FamilyKind star_of(FamilyKind kind) {
      switch (kind) {
        case FamilyKind::T: return FamilyKind::T_star;
        case FamilyKind::UT: return FamilyKind::UT_star;
        case FamilyKind::PT: return FamilyKind::PT_star;
        default: fail(ErrorCode::invalid_argument, "census covers T, UT and PT");
      }
    }

  }  // namespace

  CensusReport verify_census(std::size_t n, Ring const& field, FamilyKind kind) {
    if (!field->is_field()) {
      fail(ErrorCode::field_required, field->label() + " is not a field");
    }
    auto const star = star_of(kind);
    auto       M    = build_family({kind, n, field});
    auto       g    = greens(*M);
    auto       d    = depth_report(*M, g);

    CensusReport out;
    out.kind  = kind;
    out.n     = n;
    out.depth = d.depth;
    out.counts = d.census;
    std::size_t const expected =
        kind == FamilyKind::T && field->size() > 2 ? n : n - 1;
    auto mismatch = [&](std::string what) {
      fail(ErrorCode::census_mismatch,
           family_label({kind, n, field}) + ": " + std::move(what));
    };
    if (d.depth != expected) {
      mismatch("depth " + std::to_string(d.depth) + ", expected " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < d.depth; ++i) {
      if (d.census[i] != binomial(n, i)) {
        mismatch(std::to_string(d.census[i]) + " essential classes at depth " + std::to_string(i)
                 + ", expected " + std::to_string(binomial(n, i)));
      }
      auto H = build_family({star, n - i, field});
      out.subgroup_orders.push_back(H->size());
      for (auto c : d.k_terms[i]) {
        std::uint32_t e = 0;
        while (!(g.J[e] == c && g.idempotent[e])) {
          ++e;
        }
        auto G = maximal_subgroup(M, e, g);
        if (!isomorphic(*G, *H, 1024)) {
          mismatch("maximal subgroup at " + M->render(e) + " is not isomorphic to " + H->label());
        }
      }
    }
    out.ok = true;
    return out;
  }

  nlohmann::json plan_to_json(DecompositionPlan const& plan) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto const& t : plan.terms) {
      terms.push_back({{"label", t.label},
                       {"tag", tag_name(t.tag)},
                       {"order", t.order},
                       {"descriptor", t.descriptor}});
    }
    nlohmann::json blocks = nlohmann::json::array();
    for (auto const& b : plan.blocks) {
      blocks.push_back({{"tag", tag_name(b.tag)}, {"terms", b.terms}});
    }
    nlohmann::json chain = nlohmann::json::array();
    for (auto const& w : plan.chain) {
      chain.push_back(certificate_to_json(w));
    }
    nlohmann::json embeddings = nlohmann::json::array();
    for (auto const& e : plan.embeddings) {
      embeddings.push_back({{"m", e.m}, {"size", e.size}, {"ok", e.ok}});
    }
    auto depth = depth_report(*build_family({FamilyKind::T, plan.n, plan.ring})).depth;
    nlohmann::json j = {
        {"pipeline", plan.pipeline},
        {"n", plan.n},
        {"ring", ring_to_json(*plan.ring)},
        {"terms", terms},
        {"blocks", blocks},
        {"chain", chain},
        {"embeddings", embeddings},
        {"composite", plan.composite ? certificate_to_json(*plan.composite) : nlohmann::json()},
        {"summary",
         {{"group_length", plan.group_length},
          {"depth", depth},
          {"composite_verified", plan.composite && plan.composite->verified()}}}};
    if (!plan.composite_error.empty()) {
      j["composite_error"] = plan.composite_error;
    }
    return j;
  }

  DecompositionPlan plan_from_json(nlohmann::json const& j, std::size_t limit) {
    try {
      DecompositionPlan plan;
      plan.pipeline = j.at("pipeline").get<std::string>();
      plan.n        = j.at("n").get<std::size_t>();
      plan.ring     = ring_from_json(j.at("ring"));
      for (auto const& t : j.at("terms")) {
        PlanTerm term;
        term.label      = t.at("label").get<std::string>();
        auto tag        = t.at("tag").get<std::string>();
        term.tag        = tag == "group"       ? TermTag::group
                          : tag == "aperiodic" ? TermTag::aperiodic
                                               : TermTag::mixed;
        term.order      = t.at("order").get<std::size_t>();
        term.descriptor = t.at("descriptor");
        plan.terms.push_back(std::move(term));
      }
      merge_terms(plan);
      for (auto const& c : j.at("chain")) {
        plan.chain.push_back(verify(certificate_from_json(c), limit));
      }
      if (!j.at("composite").is_null()) {
        plan.composite = verify(certificate_from_json(j["composite"]), limit);
      }
      plan.composite_error = j.value("composite_error", "");
      for (auto const& e : j.at("embeddings")) {
        plan.embeddings.push_back(
            {e.at("m").get<std::size_t>(), e.at("size").get<std::size_t>(), e.at("ok").get<bool>()});
      }
      return plan;
    } catch (nlohmann::json::exception const& e) {
      fail(ErrorCode::parse_error, std::string("malformed plan: ") + e.what());
    }
  }

  std::string plan_to_text(DecompositionPlan const& plan) {
    std::ostringstream os;
    os << plan.pipeline << " pipeline for T_" << plan.n << "(" << plan.ring->label() << ")\n";
    for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
      os << "  [" << tag_name(plan.blocks[b].tag) << "]";
      for (auto t : plan.blocks[b].terms) {
        os << "  " << plan.terms[t].label << " (" << plan.terms[t].order << ")";
      }
      os << "\n";
    }
    std::size_t verified = 0;
    for (auto const& w : plan.chain) {
      verified += w.verified();
    }
    os << "steps verified: " << verified << "/" << plan.chain.size() << "\n";
    if (plan.composite) {
      os << "composite: " << plan.composite->source->label() << " covered, closure "
         << plan.composite->verdict.closure_size << "\n";
    } else {
      os << "composite: omitted (" << plan.composite_error << ")\n";
    }
    for (auto const& e : plan.embeddings) {
      os << "AS*_" << e.m << " into T*_" << plan.n << ": " << (e.ok ? "embeds" : "FAILS") << "\n";
    }
    os << "group_length=" << plan.group_length << "\n";
    return os.str();
  }

}  // namespace semidec
