#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "semidec/monoid.hpp"

namespace semidec {

  namespace {

    using Graph = std::vector<std::vector<std::uint32_t>>;

    // Strongly connected components (iterative Tarjan), renumbered by the
    // smallest vertex in each component.
    std::vector<std::uint32_t> scc(Graph const& g, std::size_t& count) {
      std::size_t const          n = g.size();
      std::vector<std::int64_t>  index(n, -1), low(n, 0);
      std::vector<bool>          on_stack(n, false);
      std::vector<std::uint32_t> stack, comp(n, 0);
      std::int64_t               next = 0;
      std::uint32_t              ncomp = 0;
      struct Frame {
        std::uint32_t v;
        std::size_t   edge;
      };
      for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != -1) {
          continue;
        }
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          auto& f = call.back();
          if (f.edge < g[f.v].size()) {
            std::uint32_t w = g[f.v][f.edge++];
            if (index[w] == -1) {
              index[w] = low[w] = next++;
              stack.push_back(w);
              on_stack[w] = true;
              call.push_back({w, 0});
            } else if (on_stack[w]) {
              low[f.v] = std::min(low[f.v], index[w]);
            }
          } else {
            std::uint32_t v = f.v;
            if (low[v] == index[v]) {
              std::uint32_t w;
              do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w]     = ncomp;
              } while (w != v);
              ++ncomp;
            }
            call.pop_back();
            if (!call.empty()) {
              low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
          }
        }
      }
      std::vector<std::int64_t>  renum(ncomp, -1);
      std::uint32_t              c = 0;
      for (std::uint32_t v = 0; v < n; ++v) {
        if (renum[comp[v]] == -1) {
          renum[comp[v]] = c++;
        }
        comp[v] = static_cast<std::uint32_t>(renum[comp[v]]);
      }
      count = c;
      return comp;
    }

    std::vector<std::uint32_t> renumber(std::vector<std::uint64_t> const& labels,
                                        std::size_t&                      count) {
      std::map<std::uint64_t, std::uint32_t> ids;
      std::vector<std::uint32_t>             out(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = ids.emplace(labels[i], static_cast<std::uint32_t>(ids.size())).first;
        out[i]  = it->second;
      }
      count = ids.size();
      return out;
    }

  }  // namespace

  bool is_idempotent(Monoid const& m, std::uint32_t x) {
    return m.mul(x, x) == x;
  }

  std::size_t GreensReport::regular_J_count() const {
    std::set<std::uint32_t> classes;
    for (std::size_t x = 0; x < J.size(); ++x) {
      if (regular[x]) {
        classes.insert(J[x]);
      }
    }
    return classes.size();
  }

  GreensReport greens(Monoid const& m) {
    std::size_t const n = m.size();
    auto const&       gens = m.generators();
    Graph             right(n), left(n), both(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (auto g : gens) {
        right[x].push_back(m.mul(x, g));
        left[x].push_back(m.mul(g, x));
      }
      both[x] = right[x];
      both[x].insert(both[x].end(), left[x].begin(), left[x].end());
    }
    GreensReport rep;
    rep.R = scc(right, rep.num_R);
    rep.L = scc(left, rep.num_L);
    rep.J = scc(both, rep.num_J);
    std::vector<std::uint64_t> hl(n);
    for (std::size_t x = 0; x < n; ++x) {
      hl[x] = (static_cast<std::uint64_t>(rep.L[x]) << 32) | rep.R[x];
    }
    rep.H = renumber(hl, rep.num_H);

    rep.idempotent.assign(n, false);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (is_idempotent(m, x)) {
        rep.idempotent[x] = true;
        rep.idempotents.push_back(x);
      }
    }
    std::vector<bool> j_has_idem(rep.num_J, false);
    for (auto e : rep.idempotents) {
      j_has_idem[rep.J[e]] = true;
    }
    rep.regular.assign(n, false);
    for (std::uint32_t x = 0; x < n; ++x) {
      bool reg = false;
      for (std::uint32_t y = 0; y < n && !reg; ++y) {
        reg = m.mul(m.mul(x, y), x) == x;
      }
      if (reg != j_has_idem[rep.J[x]]) {
        fail(ErrorCode::precondition,
             "regularity disagrees with idempotent J-class at " + m.render(x));
      }
      rep.regular[x] = reg;
    }
    return rep;
  }

  MonoidPtr maximal_subgroup(MonoidPtr const& m, std::uint32_t e) {
    return maximal_subgroup(m, e, greens(*m));
  }

  MonoidPtr maximal_subgroup(MonoidPtr const& m, std::uint32_t e, GreensReport const& g) {
    if (e >= m->size() || !is_idempotent(*m, e)) {
      fail(ErrorCode::not_idempotent, "element " + std::to_string(e) + " is not idempotent");
    }
    std::vector<Key>  keys;
    nlohmann::json    hex = nlohmann::json::array();
    for (std::uint32_t x = 0; x < m->size(); ++x) {
      if (g.H[x] == g.H[e]) {
        keys.push_back(m->key(x));
        hex.push_back(to_hex(m->key(x)));
      }
    }
    nlohmann::json desc = {{"kind", "elements"},
                           {"monoid", m->descriptor()},
                           {"elements", hex},
                           {"identity", to_hex(m->key(e))}};
    return Monoid::make(m->as_carrier(), std::move(keys), m->key(e), std::move(desc),
                        "H(" + m->render(e) + ") in " + m->label());
  }

  bool is_group(Monoid const& m) {
    for (std::uint32_t x = 0; x < m.size(); ++x) {
      bool inv = false;
      for (std::uint32_t y = 0; y < m.size() && !inv; ++y) {
        inv = m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity();
      }
      if (!inv) {
        return false;
      }
    }
    return true;
  }

  bool is_aperiodic(Monoid const& m) {
    std::size_t const n = m.size();
    // route 1: x^k = x^(k+1) for some k <= |M|
    bool powers = true;
    for (std::uint32_t x = 0; x < n && powers; ++x) {
      std::uint32_t p     = x;
      bool          found = false;
      for (std::size_t k = 1; k <= n && !found; ++k) {
        std::uint32_t q = m.mul(p, x);
        found           = q == p;
        p               = q;
      }
      powers = found;
    }
    // route 2: every maximal subgroup is trivial
    GreensReport g = greens(m);
    std::vector<std::size_t> h_size(g.num_H, 0);
    for (std::size_t x = 0; x < n; ++x) {
      ++h_size[g.H[x]];
    }
    bool trivial_groups = std::all_of(g.idempotents.begin(), g.idempotents.end(),
                                      [&](auto e) { return h_size[g.H[e]] == 1; });
    if (powers != trivial_groups) {
      fail(ErrorCode::precondition, "aperiodicity tests disagree on " + m.label());
    }
    return powers;
  }

  DepthReport depth_report(Monoid const& m) {
    return depth_report(m, greens(m));
  }

  DepthReport depth_report(Monoid const& m, GreensReport const& g) {
    std::size_t const n = m.size();
    std::size_t const C = g.num_J;
    DepthReport       rep;
    rep.num_classes = C;
    rep.representative.assign(C, 0);
    std::vector<bool> seen(C, false);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (!seen[g.J[x]]) {
        seen[g.J[x]]                 = true;
        rep.representative[g.J[x]] = x;
      }
    }
    std::vector<std::set<std::uint32_t>> edges(C);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (auto s : m.generators()) {
        for (auto y : {m.mul(x, s), m.mul(s, x)}) {
          if (g.J[y] != g.J[x]) {
            edges[g.J[x]].insert(g.J[y]);
          }
        }
      }
    }
    rep.above.assign(C, std::vector<bool>(C, false));
    for (std::uint32_t a = 0; a < C; ++a) {
      std::vector<std::uint32_t> todo(edges[a].begin(), edges[a].end());
      while (!todo.empty()) {
        auto b = todo.back();
        todo.pop_back();
        if (rep.above[a][b]) {
          continue;
        }
        rep.above[a][b] = true;
        todo.insert(todo.end(), edges[b].begin(), edges[b].end());
      }
      if (rep.above[a][a]) {
        fail(ErrorCode::precondition, "J-order has a cycle");
      }
    }
    for (std::uint32_t a = 0; a < C; ++a) {
      for (std::uint32_t b = 0; b < C; ++b) {
        if (!rep.above[a][b]) {
          continue;
        }
        bool cover = true;
        for (std::uint32_t c = 0; c < C && cover; ++c) {
          cover = !(rep.above[a][c] && rep.above[c][b]);
        }
        if (cover) {
          rep.cover_edges.emplace_back(a, b);
        }
      }
    }

    std::vector<std::size_t> h_size(g.num_H, 0);
    for (std::size_t x = 0; x < n; ++x) {
      ++h_size[g.H[x]];
    }
    rep.subgroup_order.assign(C, 0);
    for (auto e : g.idempotents) {
      rep.subgroup_order[g.J[e]] = h_size[g.H[e]];
    }
    rep.essential.assign(C, false);
    for (std::size_t c = 0; c < C; ++c) {
      rep.essential[c] = rep.subgroup_order[c] > 1;
    }

    std::vector<std::uint32_t> order(C);
    std::vector<std::size_t>   n_above(C, 0);
    for (std::uint32_t c = 0; c < C; ++c) {
      order[c] = c;
      for (std::uint32_t a = 0; a < C; ++a) {
        n_above[c] += rep.above[a][c] ? 1 : 0;
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return n_above[a] < n_above[b]; });
    rep.class_depth.assign(C, -1);
    int max_depth = -1;
    for (auto c : order) {
      if (!rep.essential[c]) {
        continue;
      }
      int d = 0;
      for (std::uint32_t a = 0; a < C; ++a) {
        if (rep.above[a][c] && rep.essential[a]) {
          d = std::max(d, rep.class_depth[a] + 1);
        }
      }
      rep.class_depth[c] = d;
      max_depth          = std::max(max_depth, d);
    }
    rep.depth = static_cast<std::size_t>(max_depth + 1);
    rep.census.assign(rep.depth, 0);
    rep.k_terms.assign(rep.depth, {});
    for (std::uint32_t c = 0; c < C; ++c) {
      if (rep.essential[c]) {
        ++rep.census[rep.class_depth[c]];
        rep.k_terms[rep.class_depth[c]].push_back(c);
      }
    }
    return rep;
  }

  std::vector<std::uint32_t> small_generating_set(Monoid const& m) {
    std::size_t const          n = m.size();
    std::vector<bool>          in(n, false);
    std::vector<std::uint32_t> gens;
    in[m.identity()] = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (in[x]) {
        continue;
      }
      gens.push_back(x);
      std::fill(in.begin(), in.end(), false);
      std::vector<std::uint32_t> queue{m.identity()};
      in[m.identity()] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto g : gens) {
          auto y = m.mul(queue[i], g);
          if (!in[y]) {
            in[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    return gens;
  }

  namespace {

    using Invariant = std::tuple<bool, std::size_t, std::size_t, std::size_t,
                                 std::size_t, std::size_t>;

    std::vector<Invariant> invariants(Monoid const& m) {
      std::size_t const      n = m.size();
      std::vector<Invariant> out(n);
      for (std::uint32_t x = 0; x < n; ++x) {
        // index and period of x
        std::map<std::uint32_t, std::size_t> pos;
        std::uint32_t                        p = x;
        std::size_t                          k = 1;
        while (pos.find(p) == pos.end()) {
          pos[p] = k++;
          p      = m.mul(p, x);
        }
        std::size_t index  = pos[p];
        std::size_t period = k - index;
        std::size_t centralizer = 0;
        std::set<std::uint32_t> right, left;
        for (std::uint32_t y = 0; y < n; ++y) {
          centralizer += m.mul(x, y) == m.mul(y, x) ? 1 : 0;
          right.insert(m.mul(x, y));
          left.insert(m.mul(y, x));
        }
        out[x] = {is_idempotent(m, x), index, period, centralizer, right.size(), left.size()};
      }
      return out;
    }

  }  // namespace

  bool isomorphic(Monoid const& a, Monoid const& b, std::size_t limit) {
    if (a.size() > limit || b.size() > limit) {
      fail(ErrorCode::size_limit_exceeded,
           "isomorphism test limited to " + std::to_string(limit) + " elements");
    }
    if (a.size() != b.size()) {
      return false;
    }
    std::size_t const n    = a.size();
    auto              inv_a = invariants(a);
    auto              inv_b = invariants(b);
    {
      auto sa = inv_a, sb = inv_b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return false;
      }
    }
    auto const gens = small_generating_set(a);
    std::vector<std::vector<std::uint32_t>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (inv_b[y] == inv_a[gens[i]]) {
          candidates[i].push_back(y);
        }
      }
    }

    constexpr std::uint32_t    unset = 0xFFFFFFFF;
    std::vector<std::uint32_t> image(gens.size(), unset);

    // Extends the identity map along the first `assigned` generators;
    // returns the partial map, or nothing on a contradiction.
    auto extend = [&](std::size_t assigned) -> std::optional<std::vector<std::uint32_t>> {
      std::vector<std::uint32_t> f(n, unset), used(n, unset);
      f[a.identity()]    = b.identity();
      used[b.identity()] = a.identity();
      std::vector<std::uint32_t> queue{a.identity()};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto x = queue[i];
        for (std::size_t g = 0; g < assigned; ++g) {
          auto y  = a.mul(x, gens[g]);
          auto fy = b.mul(f[x], image[g]);
          if (f[y] == unset) {
            if (used[fy] != unset) {
              return std::nullopt;
            }
            f[y]     = fy;
            used[fy] = y;
            queue.push_back(y);
          } else if (f[y] != fy) {
            return std::nullopt;
          }
        }
      }
      return f;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
      if (depth == gens.size()) {
        auto f = extend(depth);
        if (!f) {
          return false;
        }
        // f is defined everywhere (gens generate a) and injective; check
        // multiplicativity on all pairs.
        for (std::uint32_t x = 0; x < n; ++x) {
          for (std::uint32_t y = 0; y < n; ++y) {
            if ((*f)[a.mul(x, y)] != b.mul((*f)[x], (*f)[y])) {
              return false;
            }
          }
        }
        return true;
      }
      for (auto c : candidates[depth]) {
        image[depth] = c;
        if (extend(depth + 1) && search(depth + 1)) {
          return true;
        }
      }
      image[depth] = unset;
      return false;
    };
    return search(0);
  }

}  // namespace semidec
