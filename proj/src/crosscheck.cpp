#include "semidec/crosscheck.hpp"

#include <deque>
#include <functional>
#include <set>

namespace semidec {

  namespace {

    using Step = std::function<std::vector<TriMatrix>(TriMatrix const&)>;

    std::vector<TriMatrix> matrices(Monoid const& m, Ring const& ring, std::size_t n) {
      std::vector<TriMatrix> out;
      for (auto const& k : m.keys()) {
        out.push_back(TriMatrix::from_key(ring, n, k));
      }
      return out;
    }

    // Elementary operations of both types, each as a list.
    std::vector<ElementaryOp> elementary_ops(SemiringTable const& R, std::size_t n, bool rows) {
      std::vector<ElementaryOp> ops;
      for (std::size_t a = 0; a < n; ++a) {
        for (Scalar f = 0; f < R.size(); ++f) {
          ops.push_back({ElementaryOp::Kind::scale, a, a, f});
          for (std::size_t b = 0; b < n; ++b) {
            if (rows ? a < b : a > b) {
              ops.push_back({ElementaryOp::Kind::add_multiple, a, b, f});
            }
          }
        }
      }
      return ops;
    }

    Step row_step(FamilySpec const& spec, std::vector<TriMatrix> const& family) {
      if (spec.kind == FamilyKind::UT) {
        return [family](TriMatrix const& x) {
          std::vector<TriMatrix> out;
          for (auto const& u : family) {
            out.push_back(mat_mul(u, x));
          }
          return out;
        };
      }
      auto ops = elementary_ops(*spec.ring, spec.n, true);
      return [ops](TriMatrix const& x) {
        std::vector<TriMatrix> out;
        for (auto const& op : ops) {
          out.push_back(apply_row_op(x, op));
        }
        return out;
      };
    }

    Step col_step(FamilySpec const& spec, std::vector<TriMatrix> const& family) {
      if (spec.kind == FamilyKind::UT) {
        return [family](TriMatrix const& x) {
          std::vector<TriMatrix> out;
          for (auto const& u : family) {
            out.push_back(mat_mul(x, u));
          }
          return out;
        };
      }
      auto ops = elementary_ops(*spec.ring, spec.n, false);
      return [ops](TriMatrix const& x) {
        std::vector<TriMatrix> out;
        for (auto const& op : ops) {
          out.push_back(apply_col_op(x, op));
        }
        return out;
      };
    }

    // reach[x] = indices reachable from x by repeated steps.
    std::vector<std::vector<bool>> reachability(Monoid const&                 m,
                                                std::vector<TriMatrix> const& mats,
                                                std::vector<Step> const&      steps) {
      std::size_t const              N = mats.size();
      std::vector<std::vector<bool>> reach(N, std::vector<bool>(N, false));
      for (std::uint32_t x = 0; x < N; ++x) {
        std::deque<std::uint32_t> queue{x};
        reach[x][x] = true;
        while (!queue.empty()) {
          auto y = queue.front();
          queue.pop_front();
          for (auto const& step : steps) {
            for (auto const& z : step(mats[y])) {
              auto i = m.index_of(z.key());
              if (!i) {
                fail(ErrorCode::not_closed, z.to_string() + " left the family");
              }
              if (!reach[x][*i]) {
                reach[x][*i] = true;
                queue.push_back(*i);
              }
            }
          }
        }
      }
      return reach;
    }

    void require_matrix_family(FamilySpec const& spec) {
      if (spec.kind != FamilyKind::T && spec.kind != FamilyKind::UT) {
        fail(ErrorCode::invalid_argument, "cross-checks cover T and UT families");
      }
    }

  }  // namespace

  CrossCheck check_green_operations(FamilySpec const& spec) {
    require_matrix_family(spec);
    auto M    = build_family(spec);
    auto mats = matrices(*M, spec.ring, spec.n);
    auto g    = greens(*M);
    auto rs   = row_step(spec, mats);
    auto cs   = col_step(spec, mats);
    auto L    = reachability(*M, mats, {rs});
    auto R    = reachability(*M, mats, {cs});
    auto J    = reachability(*M, mats, {rs, cs});

    CrossCheck out;
    out.name    = "green_operations";
    out.subject = family_label(spec);
    auto record = [&](char const* rel, std::uint32_t x, std::uint32_t y) {
      if (out.violations++ == 0) {
        out.first_violation = std::string(rel) + " disagrees on " + M->render(x) + ", "
                              + M->render(y);
      }
    };
    for (std::uint32_t x = 0; x < M->size(); ++x) {
      for (std::uint32_t y = 0; y < M->size(); ++y) {
        ++out.checked;
        if ((g.L[x] == g.L[y]) != (L[x][y] && L[y][x])) {
          record("L", x, y);
        }
        if ((g.R[x] == g.R[y]) != (R[x][y] && R[y][x])) {
          record("R", x, y);
        }
        if ((g.J[x] == g.J[y]) != (J[x][y] && J[y][x])) {
          record("J", x, y);
        }
      }
    }
    return out;
  }

  CrossCheck check_regularity(FamilySpec const& spec) {
    require_matrix_family(spec);
    if (!spec.ring->is_field()) {
      fail(ErrorCode::field_required, "regularity check needs a field");
    }
    auto M    = build_family(spec);
    auto mats = matrices(*M, spec.ring, spec.n);
    auto g    = greens(*M);

    std::set<std::uint32_t> subidentity_classes;
    for (std::uint32_t x = 0; x < M->size(); ++x) {
      if (classify(mats[x]).subidentity) {
        subidentity_classes.insert(g.J[x]);
      }
    }

    CrossCheck out;
    out.name    = "regularity";
    out.subject = family_label(spec);
    for (std::uint32_t x = 0; x < M->size(); ++x) {
      bool inverse = false;
      for (auto const& y : mats) {
        inverse |= mat_mul(mat_mul(mats[x], y), mats[x]) == mats[x];
      }
      bool const views[] = {g.regular[x],
                            inverse,
                            row_span_condition(mats[x]),
                            column_span_condition(mats[x]),
                            subidentity_classes.count(g.J[x]) > 0};
      ++out.checked;
      for (bool v : views) {
        if (v != views[0]) {
          if (out.violations++ == 0) {
            out.first_violation = "characterizations disagree on " + M->render(x);
          }
          break;
        }
      }
    }
    return out;
  }

  CrossCheck check_projective(std::size_t n, Ring const& field) {
    auto T = build_family({FamilyKind::T, n, field});
    std::vector<std::uint32_t> scalars;
    for (Scalar lambda : units(*field)) {
      std::vector<Scalar> e(n * n, field->zero());
      for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = lambda;
      }
      scalars.push_back(T->at(TriMatrix(field, n, e).key()));
    }
    auto q  = quotient_by_central_units(T, scalars);
    auto gT = greens(*T);
    auto gP = greens(*q.monoid);
    auto const& p = q.projection;

    CrossCheck out;
    out.name    = "projective";
    out.subject = family_label({FamilyKind::T, n, field});
    auto record = [&](std::string what) {
      if (out.violations++ == 0) {
        out.first_violation = std::move(what);
      }
    };
    for (std::uint32_t x = 0; x < T->size(); ++x) {
      ++out.checked;
      if (gT.regular[x] != gP.regular[p[x]]) {
        record("regularity differs at " + T->render(x));
      }
      for (std::uint32_t y = 0; y < T->size(); ++y) {
        ++out.checked;
        if ((gT.L[x] == gT.L[y]) != (gP.L[p[x]] == gP.L[p[y]])
            || (gT.R[x] == gT.R[y]) != (gP.R[p[x]] == gP.R[p[y]])
            || (gT.J[x] == gT.J[y]) != (gP.J[p[x]] == gP.J[p[y]])) {
          record("relations differ at " + T->render(x) + ", " + T->render(y));
        }
      }
    }
    return out;
  }

  std::vector<CrossCheck> standard_crosschecks() {
    auto Z2 = make_prime_field(2);
    auto Z3 = make_prime_field(3);
    std::vector<FamilySpec> specs = {
        {FamilyKind::T, 2, Z2}, {FamilyKind::T, 2, Z3}, {FamilyKind::UT, 3, Z2}};
    std::vector<CrossCheck> out;
    for (auto const& s : specs) {
      out.push_back(check_green_operations(s));
      out.push_back(check_regularity(s));
    }
    out.push_back(check_projective(2, Z3));
    return out;
  }

  nlohmann::json crosscheck_to_json(CrossCheck const& c) {
    nlohmann::json j = {{"name", c.name},
                        {"subject", c.subject},
                        {"checked", c.checked},
                        {"violations", c.violations}};
    if (!c.first_violation.empty()) {
      j["first_violation"] = c.first_violation;
    }
    return j;
  }

}  // namespace semidec
