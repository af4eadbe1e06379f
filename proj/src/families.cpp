#include "semidec/families.hpp"

#include <algorithm>
#include <unordered_set>

namespace semidec {

  namespace {
    struct KindName {
      FamilyKind  kind;
      char const* name;
    };
    constexpr KindName kind_names[] = {
        {FamilyKind::T, "T"},           {FamilyKind::UT, "UT"},
        {FamilyKind::PT, "PT"},         {FamilyKind::T_star, "T*"},
        {FamilyKind::UT_star, "UT*"},   {FamilyKind::PT_star, "PT*"},
        {FamilyKind::A, "A"},           {FamilyKind::AT, "AT"},
        {FamilyKind::AS, "AS"},         {FamilyKind::A_star, "A*"},
        {FamilyKind::AT_star, "AT*"},   {FamilyKind::AS_star, "AS*"},
        {FamilyKind::Xtilde, "Xtilde"}, {FamilyKind::U1, "U1"},
        {FamilyKind::augmented, "augmented"},
    };

    bool is_unit_kind(FamilyKind k) {
      return k == FamilyKind::T_star || k == FamilyKind::UT_star
             || k == FamilyKind::PT_star || k == FamilyKind::A_star
             || k == FamilyKind::AT_star || k == FamilyKind::AS_star;
    }

    std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
      std::size_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (out > limit / base) {
          fail(ErrorCode::size_limit_exceeded,
               std::to_string(base) + "^" + std::to_string(exp) + " exceeds limit "
                   + std::to_string(limit));
        }
        out *= base;
      }
      return out;
    }

    nlohmann::json family_descriptor(FamilySpec const& spec) {
      nlohmann::json d = {{"kind", "family"},
                          {"family", kind_name(spec.kind)},
                          {"n", spec.n}};
      if (spec.ring) {
        d["ring"] = ring_to_json(*spec.ring);
      }
      return d;
    }

    MonoidPtr relabel(MonoidPtr const& m, FamilySpec const& spec) {
      return Monoid::make(m->carrier(),
                          m->keys(),
                          m->key(m->identity()),
                          family_descriptor(spec),
                          family_label(spec),
                          m->generators());
    }

    MonoidPtr triangular_family(FamilySpec const& spec, std::size_t limit) {
      auto const&       R     = *spec.ring;
      std::size_t const n     = spec.n;
      std::size_t const slots = n * (n + 1) / 2;
      std::size_t const total = checked_power(R.size(), slots, limit);

      auto keep = [&](std::vector<Scalar> const& e) {
        for (std::size_t i = 0; i < n; ++i) {
          Scalar d = e[i * n + i];
          switch (spec.kind) {
            case FamilyKind::UT:
              if (d != R.zero() && d != R.one()) {
                return false;
              }
              break;
            case FamilyKind::T_star:
              if (!R.is_unit(d)) {
                return false;
              }
              break;
            case FamilyKind::UT_star:
              if (d != R.one()) {
                return false;
              }
              break;
            default: break;
          }
        }
        return true;
      };

      std::vector<Key>         keys;
      std::vector<std::size_t> digits(slots, 0);
      for (std::size_t count = 0; count < total; ++count) {
        std::vector<Scalar> e(n * n, R.zero());
        std::size_t         s = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            e[i * n + j] = static_cast<Scalar>(digits[s++]);
          }
        }
        if (keep(e)) {
          keys.emplace_back(e.begin(), e.end());
        }
        for (std::size_t d = slots; d-- > 0;) {
          if (++digits[d] < R.size()) {
            break;
          }
          digits[d] = 0;
        }
      }
      auto carrier = std::make_shared<MatrixCarrier>(spec.ring, n);
      return Monoid::make(carrier, std::move(keys), carrier->identity(),
                          family_descriptor(spec), family_label(spec));
    }

    MonoidPtr projective_family(FamilySpec const& spec, std::size_t limit) {
      if (!spec.ring->is_field()) {
        fail(ErrorCode::field_required,
             kind_name(spec.kind) + " needs a field, got " + spec.ring->label());
      }
      FamilySpec base = spec;
      base.kind = spec.kind == FamilyKind::PT ? FamilyKind::T : FamilyKind::T_star;
      MonoidPtr                  t = triangular_family(base, limit);
      std::vector<std::uint32_t> scalars;
      for (Scalar lambda : units(*spec.ring)) {
        std::vector<Scalar> e(spec.n * spec.n, spec.ring->zero());
        for (std::size_t i = 0; i < spec.n; ++i) {
          e[i * spec.n + i] = lambda;
        }
        scalars.push_back(t->at(Key(e.begin(), e.end())));
      }
      return relabel(quotient_by_central_units(t, scalars).monoid, spec);
    }

    MonoidPtr affine_family(FamilySpec const& spec, std::size_t limit) {
      auto const&       R      = *spec.ring;
      std::size_t const dim    = spec.n;
      std::size_t const points = point_count(R, dim);
      FamilyKind        base   = spec.kind;
      if (base == FamilyKind::A_star) {
        base = FamilyKind::A;
      } else if (base == FamilyKind::AT_star) {
        base = FamilyKind::AT;
      } else if (base == FamilyKind::AS_star) {
        base = FamilyKind::AS;
      }
      // linear-part slots: (row, col) positions that vary
      std::vector<std::pair<std::size_t, std::size_t>> linear_slots;
      if (base == FamilyKind::A) {
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            linear_slots.emplace_back(i, j);
          }
        }
      } else if (base == FamilyKind::AT) {
        for (std::size_t i = 0; i < dim; ++i) {
          for (std::size_t j = i; j < dim; ++j) {
            linear_slots.emplace_back(i, j);
          }
        }
      }
      std::size_t const params = (base == FamilyKind::AS ? 1 : linear_slots.size()) + dim;
      std::size_t const total  = checked_power(R.size(), params, limit);

      std::vector<Key>                 keys;
      std::unordered_set<Key>          seen;
      std::vector<std::size_t>         digits(params, 0);
      std::vector<std::vector<Scalar>> pts(points);
      for (std::uint32_t p = 0; p < points; ++p) {
        pts[p] = vector_at(R, dim, p);
      }
      for (std::size_t count = 0; count < total; ++count) {
        std::vector<Scalar> X(dim * dim, R.zero());
        std::size_t         d = 0;
        if (base == FamilyKind::AS) {
          for (std::size_t i = 0; i < dim; ++i) {
            X[i * dim + i] = static_cast<Scalar>(digits[0]);
          }
          d = 1;
        } else {
          for (auto [i, j] : linear_slots) {
            X[i * dim + j] = static_cast<Scalar>(digits[d++]);
          }
        }
        std::vector<std::uint32_t> images(points);
        for (std::uint32_t p = 0; p < points; ++p) {
          std::vector<Scalar> w(dim, R.zero());
          for (std::size_t j = 0; j < dim; ++j) {
            Scalar acc = R.zero();
            for (std::size_t i = 0; i < dim; ++i) {
              acc = R.add(acc, R.mul(pts[p][i], X[i * dim + j]));
            }
            w[j] = R.add(acc, static_cast<Scalar>(digits[d + j]));
          }
          images[p] = vector_index(R, w);
        }
        Key k = TransformationCarrier::encode(images);
        if (seen.insert(k).second) {
          keys.push_back(std::move(k));
        }
        for (std::size_t q = params; q-- > 0;) {
          if (++digits[q] < R.size()) {
            break;
          }
          digits[q] = 0;
        }
      }
      auto       carrier = std::make_shared<TransformationCarrier>(points);
      FamilySpec full    = spec;
      full.kind          = base;
      auto m = Monoid::make(carrier, std::move(keys), carrier->identity(),
                            family_descriptor(full), family_label(full));
      if (base == spec.kind) {
        return m;
      }
      return relabel(unit_group(m), spec);
    }

  }  // namespace

  std::string kind_name(FamilyKind kind) {
    for (auto const& k : kind_names) {
      if (k.kind == kind) {
        return k.name;
      }
    }
    return "?";
  }

  FamilyKind parse_kind(std::string const& name) {
    for (auto const& k : kind_names) {
      if (name == k.name) {
        return k.kind;
      }
    }
    fail(ErrorCode::invalid_argument, "unknown family kind '" + name + "'");
  }

  std::string family_label(FamilySpec const& spec) {
    std::string const r = spec.ring ? spec.ring->label() : "";
    std::string const n = std::to_string(spec.n);
    switch (spec.kind) {
      case FamilyKind::Xtilde: return "X~(" + r + "^" + n + ")";
      case FamilyKind::U1: return "U_1";
      case FamilyKind::augmented: return "Abar(AS*_" + n + "(" + r + "))";
      default: break;
    }
    std::string name = kind_name(spec.kind);
    if (is_unit_kind(spec.kind)) {
      return name.substr(0, name.size() - 1) + "*_" + n + "(" + r + ")";
    }
    return name + "_" + n + "(" + r + ")";
  }

  MonoidPtr build_family(FamilySpec const& spec, std::size_t limit) {
    if (spec.kind == FamilyKind::U1) {
      return u1();
    }
    if (!spec.ring) {
      fail(ErrorCode::invalid_argument, "family needs a ring");
    }
    if (spec.n == 0) {
      fail(ErrorCode::invalid_argument, "family degree must be positive");
    }
    switch (spec.kind) {
      case FamilyKind::T:
      case FamilyKind::UT:
      case FamilyKind::T_star:
      case FamilyKind::UT_star: return triangular_family(spec, limit);
      case FamilyKind::PT:
      case FamilyKind::PT_star: return projective_family(spec, limit);
      case FamilyKind::Xtilde:
        return relabel(constants_monoid(point_count(*spec.ring, spec.n)), spec);
      case FamilyKind::augmented: {
        FamilySpec group = spec;
        group.kind       = FamilyKind::AS_star;
        return relabel(augmented_monoid(*build_family(group, limit), limit), spec);
      }
      default: return affine_family(spec, limit);
    }
  }

  MonoidPtr constants_monoid(std::size_t points) {
    auto             carrier = std::make_shared<ConstantsCarrier>(points);
    std::vector<Key> keys{ConstantsCarrier::identity_key()};
    for (std::uint32_t x = 0; x < points; ++x) {
      keys.push_back(ConstantsCarrier::constant_key(x));
    }
    auto m = Monoid::make(carrier, std::move(keys), ConstantsCarrier::identity_key(),
                          {{"kind", "carrier"}, {"carrier", carrier->descriptor()}},
                          "X~(" + std::to_string(points) + ")");
    if (!is_aperiodic(*m)) {
      fail(ErrorCode::precondition, "constants monoid is not aperiodic");
    }
    return m;
  }

  MonoidPtr u1() {
    return monoid_from_table({{0, 1}, {1, 1}}, 0, "U_1");
  }

  std::vector<std::vector<std::uint32_t>> transformation_action(Monoid const& A) {
    if (dynamic_cast<TransformationCarrier const*>(A.carrier().get()) == nullptr) {
      fail(ErrorCode::invalid_argument, A.label() + " is not a transformation monoid");
    }
    std::vector<std::vector<std::uint32_t>> out;
    for (auto const& k : A.keys()) {
      out.push_back(TransformationCarrier::decode(k));
    }
    return out;
  }

  MonoidPtr augmented_monoid(Monoid const& A, std::size_t limit) {
    return augmented_monoid(A, transformation_action(A), limit);
  }

  MonoidPtr augmented_monoid(Monoid const&                                  A,
                             std::vector<std::vector<std::uint32_t>> const& action,
                             std::size_t                                    limit) {
    if (action.size() != A.size() || action.empty() || action[0].empty()) {
      fail(ErrorCode::invalid_argument, "action table does not match the monoid");
    }
    std::size_t const points = action[0].size();
    for (auto const& row : action) {
      if (row.size() != points
          || std::any_of(row.begin(), row.end(), [&](auto x) { return x >= points; })) {
        fail(ErrorCode::invalid_argument, "action table is malformed");
      }
    }
    for (std::uint32_t a = 0; a < A.size(); ++a) {
      for (std::uint32_t b = 0; b < A.size(); ++b) {
        for (std::uint32_t x = 0; x < points; ++x) {
          if (action[A.mul(a, b)][x] != action[b][action[a][x]]) {
            fail(ErrorCode::invalid_argument, "table is not a right action");
          }
        }
        if (a < b && action[a] == action[b]) {
          fail(ErrorCode::action_not_faithful,
               A.render(a) + " and " + A.render(b) + " act identically");
        }
      }
    }
    auto             carrier = std::make_shared<TransformationCarrier>(points);
    std::vector<Key> gens;
    for (auto g : A.generators()) {
      gens.push_back(TransformationCarrier::encode(action[g]));
    }
    for (std::uint32_t x = 0; x < points; ++x) {
      gens.push_back(TransformationCarrier::encode(std::vector<std::uint32_t>(points, x)));
    }
    return close_generators(carrier, gens, limit, "Abar(" + A.label() + ")");
  }

  MonoidPtr unit_group(MonoidPtr const& m, std::string label) {
    std::vector<Key> keys;
    for (std::uint32_t x = 0; x < m->size(); ++x) {
      for (std::uint32_t y = 0; y < m->size(); ++y) {
        if (m->mul(x, y) == m->identity() && m->mul(y, x) == m->identity()) {
          keys.push_back(m->key(x));
          break;
        }
      }
    }
    nlohmann::json hex = nlohmann::json::array();
    for (auto const& k : keys) {
      hex.push_back(to_hex(k));
    }
    if (label.empty()) {
      label = "units(" + m->label() + ")";
    }
    return Monoid::make(m->carrier(), std::move(keys), m->key(m->identity()),
                        {{"kind", "elements"},
                         {"monoid", m->descriptor()},
                         {"elements", hex},
                         {"identity", to_hex(m->key(m->identity()))}},
                        std::move(label));
  }

  std::size_t point_count(SemiringTable const& ring, std::size_t dim) {
    return checked_power(ring.size(), dim, 0xFFFF);
  }

  std::uint32_t vector_index(SemiringTable const& ring, std::vector<Scalar> const& v) {
    std::uint32_t out = 0;
    for (Scalar x : v) {
      out = out * static_cast<std::uint32_t>(ring.size()) + x;
    }
    return out;
  }

  std::vector<Scalar> vector_at(SemiringTable const& ring, std::size_t dim, std::uint32_t index) {
    std::vector<Scalar> v(dim);
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<Scalar>(index % ring.size());
      index /= static_cast<std::uint32_t>(ring.size());
    }
    return v;
  }

  Key affine_key(Ring const& ring, AffineMap const& f) {
    std::size_t const          points = point_count(*ring, f.dim);
    std::vector<std::uint32_t> images(points);
    for (std::uint32_t p = 0; p < points; ++p) {
      images[p] = vector_index(*ring, f.apply(*ring, vector_at(*ring, f.dim, p)));
    }
    return TransformationCarrier::encode(images);
  }

}  // namespace semidec
