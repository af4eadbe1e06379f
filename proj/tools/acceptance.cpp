// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: semidec_acceptance <path to semidec cli> [scratch dir]
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "semidec/crosscheck.hpp"
#include "semidec/decomp.hpp"
#include "semidec/serialize.hpp"
#include "semidec/wreath.hpp"

using namespace semidec;
namespace fs = std::filesystem;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;

    void expect(bool cond, std::string const& what) {
      if (!cond) {
        ok = false;
        if (!detail.empty()) {
          detail += "; ";
        }
        detail += what;
      }
    }
  };

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
  }

  MonoidPtr fam(FamilyKind k, std::size_t n, Ring const& R) {
    return build_family({k, n, R});
  }

  std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  bool tags_hold(DecompositionPlan const& plan, std::string& why) {
    Rebuilder rebuild;
    for (auto const& t : plan.terms) {
      auto m = rebuild.monoid(t.descriptor);
      if (m->size() != t.order) {
        why = t.label + " order";
        return false;
      }
      if (t.tag == TermTag::group && !is_group(*m)) {
        why = t.label + " is not a group";
        return false;
      }
      if (t.tag == TermTag::aperiodic && !is_aperiodic(*m)) {
        why = t.label + " is not aperiodic";
        return false;
      }
    }
    return true;
  }

  bool all_steps_verified(DecompositionPlan const& plan) {
    for (auto const& w : plan.chain) {
      if (!w.verified()) {
        return false;
      }
    }
    return true;
  }

  // |T_n(q)| = q^{n(n+1)/2}
  Outcome induction_closures() {
    Outcome o;
    struct Case {
      std::size_t n;
      Ring        R;
    };
    std::vector<Case> cases = {{2, make_prime_field(2)},
                               {2, make_prime_field(3)},
                               {2, make_boolean_semiring()},
                               {3, make_prime_field(2)}};
    for (auto const& c : cases) {
      auto const t0     = Clock::now();
      auto       w      = induction_step(c.n, c.R);
      auto const dt     = seconds_since(t0);
      auto const expect = ipow(c.R->size(), c.n * (c.n + 1) / 2);
      auto const tag    = "n=" + std::to_string(c.n) + " " + c.R->label();
      o.expect(w.verified(), tag + " not verified: " + w.verdict.reason);
      o.expect(w.verified() && w.injective(), tag + " not injective");
      o.expect(w.verdict.closure_size == expect,
               tag + " closure " + std::to_string(w.verdict.closure_size));
      o.expect(dt < 10.0, tag + " took " + fmt_seconds(dt));
      o.detail += (o.detail.empty() ? "" : ", ") + tag + ":" + std::to_string(w.verdict.closure_size)
                  + "/" + fmt_seconds(dt);
    }
    return o;
  }

  Outcome ring_composites() {
    Outcome    o;
    auto const t0 = Clock::now();
    for (unsigned p : {2u, 3u}) {
      auto R    = make_prime_field(p);
      auto plan = ring_pipeline(2, R);
      auto tag  = "n=2 " + R->label();
      o.expect(all_steps_verified(plan), tag + " step failed");
      o.expect(plan.composite && plan.composite->verified(), tag + " composite failed");
      if (plan.composite) {
        o.expect(plan.composite->source->size() == ipow(p, 3), tag + " coverage");
        auto target = plan.composite->target->label();
        o.expect(target.find("AS_1") != std::string::npos
                     && target.find("T_1") != std::string::npos,
                 tag + " target " + target);
      }
      o.expect(plan.terms.size() == 2 && plan.terms[1].order == ipow(p, 2),
               tag + " expected AS_1 wr T_1^2");
    }
    auto plan = ring_pipeline(3, make_prime_field(2));
    o.expect(all_steps_verified(plan), "n=3 step failed");
    o.expect(plan.composite && plan.composite->verified()
                 && plan.composite->source->size() == 64,
             "n=3 composite: " + plan.composite_error);
    auto const dt = seconds_since(t0);
    o.expect(dt < 60.0, "took " + fmt_seconds(dt));
    o.detail += (o.detail.empty() ? "" : ", ") + std::string("8/27/64 covered in ") + fmt_seconds(dt);
    return o;
  }

  Outcome field_group_lengths() {
    Outcome o;
    struct Case {
      std::size_t n;
      unsigned    p;
    };
    for (auto c : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
      auto R    = make_prime_field(c.p);
      auto plan = field_pipeline(c.n, R);
      auto tag  = "n=" + std::to_string(c.n) + " " + R->label();
      std::string why;
      o.expect(plan.group_length == c.n - 1,
               tag + " group length " + std::to_string(plan.group_length));
      o.expect(all_steps_verified(plan), tag + " step failed");
      o.expect(tags_hold(plan, why), tag + " " + why);
      std::size_t affine_terms = 0;
      for (auto const& t : plan.terms) {
        affine_terms += t.label.rfind("AS*_", 0) == 0;
      }
      o.expect(plan.embeddings.size() == affine_terms, tag + " embedding count");
      for (auto const& e : plan.embeddings) {
        o.expect(e.ok, tag + " AS*_" + std::to_string(e.m) + " embedding");
      }
      o.detail += (o.detail.empty() ? "" : ", ") + tag + ":" + std::to_string(plan.group_length);
    }
    return o;
  }

  Outcome census() {
    Outcome o;
    for (unsigned p : {2u, 3u}) {
      auto R = make_prime_field(p);
      for (auto kind : {FamilyKind::T, FamilyKind::UT, FamilyKind::PT}) {
        for (std::size_t n = 1; n <= 3; ++n) {
          auto tag = std::string(kind_name(kind)) + "_" + std::to_string(n) + "(" + R->label() + ")";
          try {
            auto c = verify_census(n, R, kind);
            std::size_t depth = (kind == FamilyKind::T && p > 2) ? n : n - 1;
            o.expect(c.ok, tag + " not ok");
            o.expect(c.depth == depth, tag + " depth " + std::to_string(c.depth));
            for (std::size_t i = 0; i < c.counts.size(); ++i) {
              o.expect(c.counts[i] == binomial(n, i), tag + " count at " + std::to_string(i));
            }
          } catch (Error const& e) {
            o.expect(false, tag + ": " + e.what());
          }
        }
      }
    }
    // (q-1)^n q^{n(n-1)/2} for T*, divided by q-1 for PT*, q^{n(n-1)/2} for UT*
    struct Order {
      FamilyKind  kind;
      std::size_t n;
      unsigned    p;
      std::size_t expect;
    };
    for (auto c : {Order{FamilyKind::T, 2, 3, ipow(2, 2) * 3},
                   Order{FamilyKind::T, 3, 2, ipow(2, 3)},
                   Order{FamilyKind::PT, 2, 3, 2 * 3},
                   Order{FamilyKind::UT, 2, 2, 2}}) {
      auto R   = make_prime_field(c.p);
      auto rep = verify_census(c.n, R, c.kind);
      auto tag = std::string(kind_name(c.kind)) + "*_" + std::to_string(c.n);
      o.expect(!rep.subgroup_orders.empty() && rep.subgroup_orders[0] == c.expect,
               tag + " order");
      o.detail += (o.detail.empty() ? "" : ", ") + tag + "(Z_" + std::to_string(c.p)
                  + ")=" + std::to_string(rep.subgroup_orders.empty() ? 0 : rep.subgroup_orders[0]);
    }
    return o;
  }

  Outcome crosschecks() {
    Outcome     o;
    std::size_t checked = 0;
    for (auto const& c : standard_crosschecks()) {
      checked += c.checked;
      o.expect(c.ok(), c.name + " on " + c.subject + ": " + c.first_violation);
    }
    o.expect(checked > 0, "nothing checked");
    if (o.ok) {
      o.detail = std::to_string(checked) + " cases, 0 violations";
    }
    return o;
  }

  // U_1 < C_2 x U_1 by projection onto the second factor.
  DivisionWitness projection() {
    auto C2 = cyclic_group(2);
    auto U  = u1();
    auto P  = direct_product(C2, U);
    DivisionWitness w;
    w.name   = "projection";
    w.source = U;
    w.target = P->as_carrier();
    Key g1   = C2->key(C2->identity());
    w.pairs  = {{ProductCarrier::encode({g1, U->key(0)}), U->key(0)},
                {ProductCarrier::encode({g1, U->key(1)}), U->key(1)}};
    return verify(w);
  }

  // 1 < B through the identity of B.
  DivisionWitness trivial_into(MonoidPtr const& B) {
    auto one = trivial_monoid();
    DivisionWitness w;
    w.name   = "trivial";
    w.source = one;
    w.target = B->as_carrier();
    w.pairs  = {{B->key(B->identity()), one->key(0)}};
    return verify(w);
  }

  Outcome combinators() {
    Outcome o;
    auto    U   = u1();
    auto    C2  = cyclic_group(2);
    auto    one = trivial_monoid();
    auto    Z2  = make_prime_field(2);
    auto    Z3  = make_prime_field(3);
    auto    run = [&](std::string const& name, std::function<DivisionWitness()> const& f,
                   std::function<bool(DivisionWitness const&)> const& extra) {
      try {
        auto w = f();
        o.expect(w.verified() && extra(w), name + ": " + w.verdict.reason);
      } catch (Error const& e) {
        o.expect(false, name + ": " + e.what());
      }
    };
    auto any = [](DivisionWitness const&) { return true; };

    run("times_to_wreath(U1,U1)", [&] { return times_to_wreath(U, U); },
        [](auto const& w) { return w.verdict.closure_size == 4; });
    run("times_to_wreath(C2,U1)", [&] { return times_to_wreath(C2, U); },
        [](auto const& w) { return w.verdict.closure_size == 4; });
    run("times_to_wreath(AS*_1(Z_3),C2)",
        [&] { return times_to_wreath(fam(FamilyKind::AS_star, 1, Z3), C2); },
        [](auto const& w) { return w.verdict.closure_size == 12; });

    run("interchange(U1^4)", [&] { return interchange(U, U, U, U); },
        [](auto const& w) { return w.source->size() == 64 && w.injective(); });
    run("interchange(C2,U1,U1,U1)", [&] { return interchange(C2, U, U, U); }, any);
    run("interchange(C2,1,U1,1)", [&] { return interchange(C2, one, U, one); }, any);

    run("absorb(U1,U1,U1)", [&] { return absorb(U, U, U); },
        [](auto const& w) { return w.injective(); });
    run("absorb(AS_1,T_1,T_1)",
        [&] {
          auto T1 = fam(FamilyKind::T, 1, Z2);
          return absorb(fam(FamilyKind::AS, 1, Z2), T1, T1);
        },
        any);
    run("absorb(U1,U1,1)", [&] { return absorb(U, U, one); },
        [](auto const& w) { return w.injective(); });

    // X~ wr A restricted to constant tables: |X~| * |A| = 3 * 2
    auto aug_oracle = constants_monoid(2)->size() * fam(FamilyKind::AS_star, 1, Z2)->size();
    std::size_t aug_closure = 0;
    run("augmentation(AS*_1(Z_2))",
        [&] { return augmentation(fam(FamilyKind::AS_star, 1, Z2)); },
        [&](auto const& w) {
          aug_closure = w.verdict.closure_size;
          return aug_closure == aug_oracle;
        });
    run("augmentation(AS*_1(Z_3))",
        [&] { return augmentation(fam(FamilyKind::AS_star, 1, Z3)); },
        [](auto const& w) { return w.source->size() == 9; });
    run("augmentation(trivial)",
        [&] {
          return augmentation(close_generators(std::make_shared<TransformationCarrier>(2),
                                                 {TransformationCarrier::encode({0, 1})}));
        },
        [](auto const& w) { return isomorphic(*w.source, *constants_monoid(2)); });

    run("group_with_zero(Z_3)", [&] { return group_with_zero(Z3); },
        [](auto const& w) { return w.source->size() == 3; });
    run("group_with_zero(Z_2)", [&] { return group_with_zero(Z2); },
        [](auto const& w) { return w.source->size() == 2; });
    try {
      group_with_zero(make_boolean_semiring());
      o.expect(false, "group_with_zero(B) accepted");
    } catch (Error const& e) {
      o.expect(e.code() == ErrorCode::field_required, std::string("group_with_zero(B): ") + e.what());
    }

    run("lift_left(id,U1)", [&] { return lift_left(identity_witness(C2), U); },
        [](auto const& w) { return w.injective(); });
    run("lift_left(proj,U1)", [&] { return lift_left(projection(), U); },
        [](auto const& w) { return w.source->size() == 8; });
    run("lift_left(1<C2,U1)", [&] { return lift_left(trivial_into(C2), U); },
        [&](auto const& w) { return isomorphic(*w.source, *U); });
    run("lift_right(id,U1)", [&] { return lift_right(identity_witness(C2), U); },
        [](auto const& w) { return w.injective(); });
    run("lift_right(proj,U1)", [&] { return lift_right(projection(), U); },
        [](auto const& w) { return w.source->size() == 8; });
    run("lift_right(proj,1)", [&] { return lift_right(projection(), one); },
        [&](auto const& w) { return isomorphic(*w.source, *U); });

    o.detail += (o.detail.empty() ? "" : ", ") + std::string("augmentation closure ")
                + std::to_string(aug_closure) + " (oracle " + std::to_string(aug_oracle) + ")";
    return o;
  }

  Outcome negative_controls() {
    Outcome o;
    // Swap the images of two generator pairs of the induction certificate.
    auto cert  = certificate_to_json(induction_step(2, make_prime_field(3)));
    auto& pairs = cert["pairs"];
    bool  swapped = false;
    for (std::size_t i = 1; i < pairs.size() && !swapped; ++i) {
      if (pairs[0][1] != pairs[i][1]) {
        std::swap(pairs[0][1], pairs[i][1]);
        swapped = true;
      }
    }
    o.expect(swapped, "no pair to swap");
    auto bad = verify(certificate_from_json(cert));
    o.expect(bad.verdict.failure == ErrorCode::not_functional,
             std::string("corrupted certificate gave ") + error_code_name(bad.verdict.failure));
    o.expect(bad.verdict.reason.rfind("NotFunctional", 0) == 0, "reason " + bad.verdict.reason);

    auto found = search_division(u1(), cyclic_group(2));
    o.expect(!found.witness, "U_1 divides C_2");

    // Z_2 addition, a * b = a and not b: (1*0)*1 = 0 but 1*(0*1) = 1.
    std::vector<std::vector<Scalar>> add = {{0, 1}, {1, 0}};
    std::vector<std::vector<Scalar>> mul = {{0, 0}, {1, 0}};
    try {
      make_from_tables(add, mul, 0, 1);
      o.expect(false, "non-associative table accepted");
    } catch (AxiomViolation const& e) {
      auto [a, b, c] = e.witness();
      o.expect(e.law() == "associativity", "law " + e.law());
      o.expect(mul[mul[a][b]][c] != mul[a][mul[b][c]], "triple does not violate associativity");
      if (o.ok) {
        o.detail = "NotFunctional, NotFound, triple (" + std::to_string(a) + ","
                   + std::to_string(b) + "," + std::to_string(c) + ")";
      }
    }
    return o;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  int run_cli(std::string const& cli, std::string const& args, fs::path const& log) {
    auto cmd = "\"" + cli + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    int  rc  = std::system(cmd.c_str());
    return rc == 0 ? 0 : (WIFEXITED(rc) ? WEXITSTATUS(rc) : -1);
  }

  Outcome determinism(std::string const& cli, fs::path const& dir) {
    Outcome o;
    fs::create_directories(dir);
    std::vector<fs::path> certs = {dir / "run1.json", dir / "run2.json"};
    for (std::size_t i = 0; i < certs.size(); ++i) {
      fs::remove(certs[i]);
      int rc = run_cli(cli, "decompose --pipeline field --n 2 --ring zp:3 --cert \"" + certs[i].string() + "\"",
                       dir / ("run" + std::to_string(i + 1) + ".log"));
      o.expect(rc == 0, "run " + std::to_string(i + 1) + " exited " + std::to_string(rc));
    }
    auto a = slurp(certs[0]);
    auto b = slurp(certs[1]);
    o.expect(!a.empty(), "empty certificate");
    o.expect(a == b, "certificates differ");
    int rc = run_cli(cli, "verify \"" + certs[0].string() + "\"", dir / "verify.log");
    o.expect(rc == 0, "fresh verify exited " + std::to_string(rc));
    if (o.ok) {
      o.detail = std::to_string(a.size()) + " identical bytes, verified in a fresh process";
    }
    return o;
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " <semidec cli> [scratch dir]\n";
    return 2;
  }
  std::string cli = argv[1];
  fs::path    dir = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "semidec_acceptance";

  struct Criterion {
    char const*              name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"induction step closures", induction_closures},
      {"ring pipeline composites", ring_composites},
      {"field pipeline group lengths", field_group_lengths},
      {"unit group census", census},
      {"structure cross-checks", crosschecks},
      {"combinator examples", combinators},
      {"negative controls", negative_controls},
      {"deterministic certificates", [&] { return determinism(cli, dir); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o.ok     = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all &= o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].name;
    if (!o.detail.empty()) {
      std::cout << ": " << o.detail;
    }
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
