#include "semidec/serialize.hpp"

#include <fstream>
#include <sstream>

#include "semidec/families.hpp"
#include "semidec/witness.hpp"
#include "semidec/wreath.hpp"

namespace semidec {

  namespace {

    std::string field_string(nlohmann::json const& j, char const* name) {
      if (!j.is_object() || !j.contains(name) || !j[name].is_string()) {
        fail(ErrorCode::parse_error, std::string("missing string field \"") + name + "\"");
      }
      return j[name].get<std::string>();
    }

    nlohmann::json const& field(nlohmann::json const& j, char const* name) {
      if (!j.is_object() || !j.contains(name)) {
        fail(ErrorCode::parse_error, std::string("missing field \"") + name + "\"");
      }
      return j[name];
    }

    std::vector<Key> hex_list(nlohmann::json const& j) {
      if (!j.is_array()) {
        fail(ErrorCode::parse_error, "expected an array of hex keys");
      }
      std::vector<Key> out;
      for (auto const& x : j) {
        out.push_back(from_hex(x.get<std::string>()));
      }
      return out;
    }

    template <class F>
    auto parsing(F&& f) {
      try {
        return f();
      } catch (nlohmann::json::exception const& e) {
        fail(ErrorCode::parse_error, e.what());
      }
    }

  }  // namespace

  MonoidPtr Rebuilder::monoid(nlohmann::json const& d) {
    auto key = d.dump();
    if (auto it = monoids_.find(key); it != monoids_.end()) {
      return it->second;
    }
    auto m = parsing([&] { return build_monoid(d); });
    monoids_.emplace(std::move(key), m);
    return m;
  }

  CarrierPtr Rebuilder::carrier(nlohmann::json const& d) {
    auto key = d.dump();
    if (auto it = carriers_.find(key); it != carriers_.end()) {
      return it->second;
    }
    auto c = parsing([&] { return build_carrier(d); });
    carriers_.emplace(std::move(key), c);
    return c;
  }

  MonoidPtr Rebuilder::build_monoid(nlohmann::json const& d) {
    auto const kind = field_string(d, "kind");
    if (kind == "family") {
      FamilySpec spec;
      spec.kind = parse_kind(field_string(d, "family"));
      spec.n    = field(d, "n").get<std::size_t>();
      if (d.contains("ring")) {
        spec.ring = ring_from_json(d["ring"]);
      }
      return build_family(spec, limit_);
    }
    if (kind == "closure") {
      return close_generators(carrier(field(d, "carrier")), hex_list(field(d, "generators")),
                              limit_);
    }
    if (kind == "carrier") {
      auto const& c  = field(d, "carrier");
      auto const  ck = field_string(c, "kind");
      if (ck == "table") {
        return monoid_from_table(field(c, "table").get<std::vector<std::vector<std::uint32_t>>>(),
                                 field(c, "identity").get<std::uint32_t>(),
                                 field_string(c, "label"));
      }
      if (ck == "constants") {
        return constants_monoid(field(c, "points").get<std::size_t>());
      }
      fail(ErrorCode::unsupported_format, "carrier monoid of kind " + ck);
    }
    if (kind == "product") {
      std::vector<MonoidPtr> factors;
      for (auto const& f : field(d, "factors")) {
        factors.push_back(monoid(f));
      }
      return direct_product(factors, limit_);
    }
    if (kind == "quotient") {
      auto                       m = monoid(field(d, "monoid"));
      std::vector<std::uint32_t> central;
      for (auto const& k : hex_list(field(d, "central"))) {
        central.push_back(m->at(k));
      }
      return quotient_by_central_units(m, central).monoid;
    }
    if (kind == "elements") {
      auto m = monoid(field(d, "monoid"));
      return Monoid::make(m->as_carrier(), hex_list(field(d, "elements")),
                          from_hex(field_string(d, "identity")), d,
                          "{" + m->label() + "}");
    }
    if (kind == "wreath") {
      return enumerate_wreath(monoid(field(d, "top")), monoid(field(d, "base")), limit_);
    }
    fail(ErrorCode::unsupported_format, "monoid descriptor of kind " + kind);
  }

  CarrierPtr Rebuilder::build_carrier(nlohmann::json const& d) {
    auto const kind = field_string(d, "kind");
    if (kind == "matrix") {
      return std::make_shared<MatrixCarrier>(ring_from_json(field(d, "ring")),
                                             field(d, "n").get<std::size_t>());
    }
    if (kind == "transformation") {
      return std::make_shared<TransformationCarrier>(field(d, "degree").get<std::size_t>());
    }
    if (kind == "constants") {
      return std::make_shared<ConstantsCarrier>(field(d, "points").get<std::size_t>());
    }
    if (kind == "table") {
      return std::make_shared<TableCarrier>(
          field(d, "table").get<std::vector<std::vector<std::uint32_t>>>(),
          field(d, "identity").get<std::uint32_t>(), field_string(d, "label"));
    }
    if (kind == "product") {
      std::vector<CarrierPtr> factors;
      for (auto const& f : field(d, "factors")) {
        factors.push_back(carrier(f));
      }
      return std::make_shared<ProductCarrier>(std::move(factors));
    }
    if (kind == "quotient") {
      return std::make_shared<QuotientCarrier>(carrier(field(d, "base")),
                                               hex_list(field(d, "central")));
    }
    if (kind == "monoid") {
      return monoid(field(d, "monoid"))->as_carrier();
    }
    if (kind == "wreath") {
      return make_context(carrier(field(d, "top")), monoid(field(d, "base")));
    }
    fail(ErrorCode::unsupported_format, "carrier descriptor of kind " + kind);
  }

  nlohmann::json monoid_to_json(Monoid const& m) {
    nlohmann::json elements = nlohmann::json::array();
    nlohmann::json render   = nlohmann::json::array();
    for (std::uint32_t i = 0; i < m.size(); ++i) {
      elements.push_back(to_hex(m.key(i)));
      render.push_back(m.render(i));
    }
    return {{"label", m.label()},
            {"size", m.size()},
            {"identity", m.identity()},
            {"descriptor", m.descriptor()},
            {"elements", elements},
            {"render", render}};
  }

  MonoidPtr monoid_from_json(nlohmann::json const& j, std::size_t limit) {
    Rebuilder rb(limit);
    auto      m = rb.monoid(field(j, "descriptor"));
    if (j.contains("elements")) {
      auto keys = parsing([&] { return hex_list(j["elements"]); });
      if (keys != m->keys()) {
        fail(ErrorCode::parse_error, "element list does not match the descriptor");
      }
    }
    if (j.contains("identity") && j["identity"] != m->identity()) {
      fail(ErrorCode::parse_error, "identity does not match the descriptor");
    }
    if (j.contains("label") && j["label"].is_string()) {
      m = Monoid::make(m->carrier(), m->keys(), m->key(m->identity()), m->descriptor(),
                       j["label"].get<std::string>(), m->generators());
    }
    return m;
  }

  nlohmann::json analysis_to_json(Monoid const& m, std::vector<std::string> const& reports) {
    auto           g   = greens(m);
    nlohmann::json out = {{"label", m.label()}, {"size", m.size()}};
    for (auto const& r : reports) {
      if (r == "greens") {
        out["greens"] = {{"L", g.num_L},
                         {"R", g.num_R},
                         {"J", g.num_J},
                         {"H", g.num_H},
                         {"regular_J", g.regular_J_count()},
                         {"idempotents", g.idempotents.size()},
                         {"J_of", g.J}};
      } else if (r == "depth") {
        auto           d       = depth_report(m, g);
        nlohmann::json classes = nlohmann::json::array();
        for (std::uint32_t c = 0; c < d.num_classes; ++c) {
          classes.push_back({{"representative", m.render(d.representative[c])},
                             {"essential", d.essential[c]},
                             {"depth", d.class_depth[c]},
                             {"subgroup_order", d.subgroup_order[c]}});
        }
        nlohmann::json k = nlohmann::json::array();
        for (auto const& terms : d.k_terms) {
          nlohmann::json orders = nlohmann::json::array();
          for (auto c : terms) {
            orders.push_back(d.subgroup_order[c]);
          }
          k.push_back(orders);
        }
        out["depth"] = {{"depth", d.depth},
                        {"census", d.census},
                        {"K", k},
                        {"classes", classes},
                        {"cover_edges", d.cover_edges}};
      } else if (r == "properties") {
        out["properties"] = {{"aperiodic", is_aperiodic(m)}, {"group", is_group(m)}};
      } else {
        fail(ErrorCode::unsupported_format, "unknown report " + r);
      }
    }
    return out;
  }

  std::string analysis_to_text(nlohmann::json const& a) {
    std::ostringstream os;
    os << a.at("label").get<std::string>() << ", order " << a.at("size") << "\n";
    if (a.contains("greens")) {
      auto const& g = a["greens"];
      os << "L " << g["L"] << "  R " << g["R"] << "  J " << g["J"] << "  H " << g["H"]
         << "  regular J " << g["regular_J"] << "  idempotents " << g["idempotents"] << "\n";
    }
    if (a.contains("depth")) {
      auto const& d = a["depth"];
      os << "depth " << d["depth"] << "  census " << d["census"].dump() << "  K "
         << d["K"].dump() << "\n";
    }
    if (a.contains("properties")) {
      auto const& p = a["properties"];
      os << "aperiodic " << p["aperiodic"] << "  group " << p["group"] << "\n";
    }
    return os.str();
  }

  std::string j_order_dot(Monoid const& m) {
    auto               g = greens(m);
    auto               d = depth_report(m, g);
    std::ostringstream os;
    os << "digraph J {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::uint32_t c = 0; c < d.num_classes; ++c) {
      std::size_t size = 0;
      for (auto j : g.J) {
        size += j == c;
      }
      os << "  J" << c << " [label=\"" << m.render(d.representative[c]) << "\\n|J|=" << size;
      if (d.subgroup_order[c] > 0) {
        os << " |G|=" << d.subgroup_order[c];
      }
      if (d.essential[c]) {
        os << " depth=" << d.class_depth[c] << "\", style=filled, fillcolor=lightgrey";
      } else {
        os << "\"";
      }
      os << "];\n";
    }
    for (auto [a, b] : d.cover_edges) {
      os << "  J" << a << " -> J" << b << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  nlohmann::json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      fail(ErrorCode::io_error, "cannot open " + path);
    }
    return parsing([&] { return nlohmann::json::parse(in); });
  }

  void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      fail(ErrorCode::io_error, "cannot write " + path);
    }
  }

  std::string dump(nlohmann::json const& j) {
    return j.dump(2) + "\n";
  }

  nlohmann::json certificate_to_json(DivisionWitness const& w) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto const& [t, s] : w.pairs) {
      pairs.push_back({to_hex(t), to_hex(s)});
    }
    nlohmann::json verdict;
    switch (w.verdict.status) {
      case VerdictStatus::verified:
        verdict = {{"status", "verified"}, {"closure_size", w.verdict.closure_size}};
        break;
      case VerdictStatus::failed:
        verdict = {{"status", "failed"}, {"reason", w.verdict.reason}};
        break;
      case VerdictStatus::unverified: verdict = {{"status", "unverified"}}; break;
    }
    return {{"name", w.name},
            {"source",
             {{"label", w.source->label()},
              {"size", w.source->size()},
              {"descriptor", w.source->descriptor()}}},
            {"target", {{"label", w.target->label()}, {"descriptor", w.target->descriptor()}}},
            {"pairs", pairs},
            {"steps", w.steps},
            {"verdict", verdict}};
  }

  DivisionWitness certificate_from_json(nlohmann::json const& j) {
    return parsing([&] {
      Rebuilder       rb;
      DivisionWitness w;
      w.name   = j.value("name", "");
      w.source = rb.monoid(field(field(j, "source"), "descriptor"));
      w.target = rb.carrier(field(field(j, "target"), "descriptor"));
      for (auto const& p : field(j, "pairs")) {
        if (!p.is_array() || p.size() != 2) {
          fail(ErrorCode::parse_error, "pairs must be [target, source] arrays");
        }
        w.pairs.emplace_back(from_hex(p[0].get<std::string>()), from_hex(p[1].get<std::string>()));
      }
      w.steps = j.value("steps", nlohmann::json::array());
      return w;
    });
  }

}  // namespace semidec
