#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semidec/decomp.hpp"
#include "semidec/serialize.hpp"
#include "semidec/wreath.hpp"

using namespace semidec;

namespace {

  MonoidPtr fam(FamilyKind k, std::size_t n, Ring const& R) {
    return build_family({k, n, R});
  }

  ErrorCode code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::ok;
  }

  void check_plan(DecompositionPlan const& plan, std::size_t source_size) {
    for (auto const& w : plan.chain) {
      INFO(w.name);
      CHECK(w.verified());
    }
    REQUIRE(plan.composite.has_value());
    CHECK(plan.composite->verified());
    CHECK(plan.composite->source->size() == source_size);
  }

  // Tags checked against the terms rebuilt from their descriptors.
  void check_tags(DecompositionPlan const& plan) {
    Rebuilder rebuild;
    for (auto const& t : plan.terms) {
      INFO(t.label);
      auto m = rebuild.monoid(t.descriptor);
      CHECK(m->size() == t.order);
      if (t.tag == TermTag::group) {
        CHECK(is_group(*m));
      } else if (t.tag == TermTag::aperiodic) {
        CHECK(is_aperiodic(*m));
      }
    }
  }

}  // namespace

TEST_CASE("induction step") {
  auto Z2 = make_prime_field(2);
  auto w  = induction_step(2, Z2);
  CHECK(w.verified());
  CHECK(w.verdict.closure_size == 8);
  CHECK(w.injective());

  // s = [[1,1],[0,1]]: f_s sends X = 0 to the identity and X = 1 to v -> v + 1.
  auto s   = TriMatrix::from_rows(Z2, {{1, 1}, {0, 1}});
  auto t   = w.preimage(KeyView(s.key()));
  auto pc  = std::dynamic_pointer_cast<ProductCarrier const>(w.target);
  REQUIRE(pc);
  auto parts = pc->split(t);
  auto wc    = std::dynamic_pointer_cast<WreathCarrier const>(pc->factors()[0]);
  REQUIRE(wc);
  auto x  = wc->decode(parts[0]);
  auto T1 = wc->base();
  auto AS = fam(FamilyKind::AS, 1, Z2);
  REQUIRE(x.table.size() == 2);
  for (std::uint32_t i = 0; i < 2; ++i) {
    auto X      = TriMatrix::from_key(Z2, 1, T1->key(i)).at(0, 0);
    auto expect = AffineMap::scaling(Z2, 1, {X});
    CHECK(Key(x.table[i]) == affine_key(Z2, expect));
    CHECK(AS->index_of(x.table[i]).has_value());
  }
  CHECK(T1->key(x.base) == TriMatrix::from_rows(Z2, {{1}}).key());  // M_s
  CHECK(Key(parts[1]) == TriMatrix::from_rows(Z2, {{1}}).key());   // c_s

  auto Z3 = make_prime_field(3);
  CHECK(induction_step(2, Z3).verdict.closure_size == 27);
  CHECK(induction_step(2, make_boolean_semiring()).verdict.closure_size == 8);
  CHECK(induction_step(3, Z2).verdict.closure_size == 64);
  CHECK(code_of([&] { induction_step(1, Z2); }) != ErrorCode::ok);
}

TEST_CASE("induction step formula against block decomposition") {
  // For every s in T_2(Z_3): f_s(X) = (v -> v c_s + X v_s), M_s, c_s.
  auto Z3 = make_prime_field(3);
  auto w  = induction_step(2, Z3);
  auto T  = fam(FamilyKind::T, 2, Z3);
  auto pc = std::dynamic_pointer_cast<ProductCarrier const>(w.target);
  auto wc = std::dynamic_pointer_cast<WreathCarrier const>(pc->factors()[0]);
  for (auto const& key : T->keys()) {
    auto s     = TriMatrix::from_key(Z3, 2, key);
    auto b     = block_decompose(s);
    auto t     = w.preimage(KeyView(key));
    auto parts = pc->split(t);
    auto x     = wc->decode(parts[0]);
    CHECK(wc->base()->key(x.base) == b.M.key());
    CHECK(Key(parts[1]) == TriMatrix::from_rows(Z3, {{b.c}}).key());
    for (std::uint32_t i = 0; i < wc->base()->size(); ++i) {
      auto X = TriMatrix::from_key(Z3, 1, wc->base()->key(i)).at(0, 0);
      auto f = AffineMap::scaling(Z3, b.c, {Z3->mul(X, b.v[0])});
      CHECK(Key(x.table[i]) == affine_key(Z3, f));
    }
  }
}

TEST_CASE("ring pipeline") {
  auto Z2 = make_prime_field(2);
  auto p  = ring_pipeline(2, Z2);
  check_plan(p, 8);
  REQUIRE(p.terms.size() == 2);
  CHECK(p.terms[0].label == "AS_1(Z_2)");
  CHECK(p.terms[1].order == 4);

  check_plan(ring_pipeline(2, make_boolean_semiring()), 8);
  check_plan(ring_pipeline(2, make_prime_field(3)), 27);

  auto p3 = ring_pipeline(3, Z2);
  check_plan(p3, 64);
  REQUIRE(p3.terms.size() == 3);
  CHECK(p3.terms[0].label == "AS_2(Z_2)");
  CHECK(p3.terms[1].label == "AS_1(Z_2)");
  CHECK(p3.terms[2].order == 8);
  bool restricted = false;
  for (auto const& w : p3.chain) {
    for (auto const& step : w.steps) {
      restricted |= step.value("op", "") == "restrict_base";
    }
  }
  CHECK(restricted);

  auto tight = ring_pipeline(3, Z2, 40);
  CHECK_FALSE(tight.composite.has_value());
  CHECK_FALSE(tight.composite_error.empty());
}

TEST_CASE("field pipeline") {
  auto Z2 = make_prime_field(2);
  auto p  = field_pipeline(2, Z2);
  check_plan(p, 8);
  check_tags(p);
  CHECK(p.group_length == 1);
  REQUIRE(p.terms.size() == 4);
  CHECK(p.terms[0].tag == TermTag::aperiodic);
  CHECK(p.terms[1].label == "AS*_1(Z_2)");
  CHECK(p.terms[1].tag == TermTag::group);
  CHECK(p.terms[2].tag == TermTag::aperiodic);  // T*_1(Z_2)^2 is trivial
  CHECK(p.terms[3].order == 4);

  auto Z3 = make_prime_field(3);
  auto q  = field_pipeline(2, Z3);
  check_plan(q, 27);
  check_tags(q);
  CHECK(q.group_length == 1);
  // The group block is AS*_1(Z_3) then T*_1(Z_3)^2, orders 6 and 4.
  std::size_t group_order = 1;
  for (auto const& b : q.blocks) {
    if (b.tag == TermTag::group) {
      for (auto t : b.terms) {
        group_order *= q.terms[t].order;
      }
    }
  }
  CHECK(group_order == 24);

  auto r = field_pipeline(3, Z2);
  check_plan(r, 64);
  check_tags(r);
  CHECK(r.group_length == 2);
  REQUIRE(r.embeddings.size() == 2);
  for (auto const& e : r.embeddings) {
    CHECK(e.ok);
  }

  CHECK(code_of([] { field_pipeline(2, make_boolean_semiring()); })
        == ErrorCode::field_required);
}

TEST_CASE("ring and field plans share a skeleton") {
  auto Z2    = make_prime_field(2);
  auto ring  = ring_pipeline(3, Z2);
  auto field = field_pipeline(3, Z2);
  std::vector<std::string> affine;
  for (auto const& t : field.terms) {
    if (t.label.rfind("AS*_", 0) == 0) {
      affine.push_back("AS_" + t.label.substr(4));
    }
  }
  REQUIRE(affine.size() == 2);
  CHECK(affine[0] == ring.terms[0].label);
  CHECK(affine[1] == ring.terms[1].label);
}

TEST_CASE("affine embeddings") {
  auto Z3 = make_prime_field(3);
  auto e  = check_affine_embedding(1, 2, Z3);
  CHECK(e.ok);
  CHECK(e.size == 6);
  auto Z2 = make_prime_field(2);
  CHECK(check_affine_embedding(2, 3, Z2).ok);
  CHECK(check_affine_embedding(1, 3, Z2).ok);
}

TEST_CASE("census") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);
  auto t  = verify_census(3, Z2, FamilyKind::T);
  CHECK(t.ok);
  CHECK(t.depth == 2);
  CHECK(t.counts == std::vector<std::size_t>{1, 3});
  CHECK(t.subgroup_orders == std::vector<std::size_t>{8, 2});

  auto pt = verify_census(2, Z3, FamilyKind::PT);
  CHECK(pt.depth == 1);
  CHECK(pt.subgroup_orders == std::vector<std::size_t>{6});

  auto ut = verify_census(2, Z2, FamilyKind::UT);
  CHECK(ut.depth == 1);
  CHECK(isomorphic(*fam(FamilyKind::UT_star, 2, Z2), *cyclic_group(2)));

  auto t2 = verify_census(2, Z3, FamilyKind::T);
  CHECK(t2.depth == 2);
  CHECK(t2.counts == std::vector<std::size_t>{1, 2});
  CHECK(t2.subgroup_orders == std::vector<std::size_t>{12, 2});

  CHECK(verify_census(3, Z2, FamilyKind::UT).ok);
  CHECK(code_of([] { verify_census(2, make_boolean_semiring(), FamilyKind::T); })
        == ErrorCode::field_required);
}

TEST_CASE("depth against group length") {
  auto Z2 = make_prime_field(2);
  auto Z3 = make_prime_field(3);

  auto a = depth_analysis(fam(FamilyKind::T, 2, Z3), FamilySpec{FamilyKind::T, 2, Z3});
  CHECK(a.report.depth == 2);
  REQUIRE(a.pipeline_group_length.has_value());
  CHECK(*a.pipeline_group_length == 1);
  CHECK(a.k_product_orders == std::vector<std::size_t>{12, 4});

  auto b = depth_analysis(fam(FamilyKind::UT, 3, Z2));
  CHECK(b.report.depth == 2);
  CHECK(b.report.census == std::vector<std::size_t>{1, 3});
  CHECK(b.k_orders[0] == std::vector<std::size_t>{8});
  CHECK_FALSE(b.pipeline_group_length.has_value());

  auto c = depth_analysis(fam(FamilyKind::T, 2, Z2), FamilySpec{FamilyKind::T, 2, Z2});
  CHECK(c.report.depth == 1);
  CHECK(*c.pipeline_group_length == 1);
}

TEST_CASE("merging and tags") {
  DecompositionPlan p;
  auto add = [&](TermTag tag) {
    PlanTerm t;
    t.tag = tag;
    p.terms.push_back(t);
  };
  for (auto tag : {TermTag::aperiodic, TermTag::group, TermTag::group, TermTag::aperiodic,
                   TermTag::mixed, TermTag::mixed, TermTag::group}) {
    add(tag);
  }
  merge_terms(p);
  CHECK(p.blocks.size() == 6);
  CHECK(p.blocks[1].terms == std::vector<std::size_t>{1, 2});
  CHECK(p.group_length == 4);

  CHECK(classify_term(*cyclic_group(3)) == TermTag::group);
  CHECK(classify_term(*u1()) == TermTag::aperiodic);
  CHECK(classify_term(*trivial_monoid()) == TermTag::aperiodic);
  CHECK(classify_term(*fam(FamilyKind::AS, 1, make_prime_field(2))) == TermTag::mixed);
  CHECK(std::string(tag_name(TermTag::group)) == "group");
}

TEST_CASE("plan json and text") {
  auto p = field_pipeline(2, make_prime_field(2));
  auto j = plan_to_json(p);
  CHECK(j["summary"]["group_length"] == 1);
  CHECK(j["summary"]["depth"] == 1);
  CHECK(j["summary"]["composite_verified"] == true);
  CHECK(j["terms"].size() == p.terms.size());
  CHECK(j["chain"].size() == p.chain.size());
  auto back = certificate_from_json(j["chain"][0]);
  CHECK(verify(back).verified());
  auto text = plan_to_text(p);
  CHECK(text.find("group_length=1") != std::string::npos);
}
