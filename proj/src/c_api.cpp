#include "semidec/semidec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "semidec/crosscheck.hpp"
#include "semidec/decomp.hpp"
#include "semidec/serialize.hpp"

using namespace semidec;

struct semidec_ring {
  Ring ring;
};

struct semidec_monoid {
  MonoidPtr monoid;
};

struct semidec_plan {
  DecompositionPlan plan;
};

namespace {

  thread_local std::string last_error;

  template <class F>
  semidec_status guard(F&& f) {
    try {
      last_error.clear();
      f();
      return SEMIDEC_OK;
    } catch (Error const& e) {
      last_error = e.what();
      return static_cast<semidec_status>(e.code());
    } catch (std::bad_alloc const&) {
      last_error = "out of memory";
    } catch (std::exception const& e) {
      last_error = e.what();
    }
    return SEMIDEC_INTERNAL;
  }

  void require(void const* p, char const* what) {
    if (p == nullptr) {
      fail(ErrorCode::invalid_argument, std::string(what) + " is null");
    }
  }

  char* copy(std::string const& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  void emit(char** out, std::string const& s) {
    require(out, "output pointer");
    *out = copy(s);
  }

  std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::stringstream        in(s);
    std::string              item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

  nlohmann::json verdict_json(DivisionWitness const& w) {
    nlohmann::json j = {{"name", w.name}, {"status", w.verified() ? "verified" : "failed"}};
    if (w.verified()) {
      j["closure_size"] = w.verdict.closure_size;
    } else {
      j["reason"] = w.verdict.reason;
    }
    return j;
  }

}  // namespace

extern "C" {

const char* semidec_last_error(void) {
  return last_error.c_str();
}

const char* semidec_status_name(semidec_status status) {
  if (status == SEMIDEC_INTERNAL) {
    return "Internal";
  }
  return error_code_name(static_cast<ErrorCode>(status));
}

void semidec_string_free(char* s) {
  std::free(s);
}

size_t semidec_default_limit(void) {
  if (char const* env = std::getenv("SEMIDEC_LIMIT")) {
    char*              end = nullptr;
    unsigned long long v   = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<size_t>(v);
    }
  }
  return default_monoid_limit;
}

semidec_status semidec_ring_parse(const char* spec, semidec_ring** out) {
  return guard([&] {
    require(spec, "ring spec");
    require(out, "output pointer");
    *out = new semidec_ring{parse_ring_spec(spec)};
  });
}

void semidec_ring_free(semidec_ring* ring) {
  delete ring;
}

semidec_status semidec_family_build(const char*         kind,
                                    size_t              n,
                                    const semidec_ring* ring,
                                    size_t              limit,
                                    semidec_monoid**    out) {
  return guard([&] {
    require(kind, "kind");
    require(ring, "ring");
    require(out, "output pointer");
    *out = new semidec_monoid{build_family({parse_kind(kind), n, ring->ring}, limit)};
  });
}

semidec_status semidec_monoid_load(const char* path, size_t limit, semidec_monoid** out) {
  return guard([&] {
    require(path, "path");
    require(out, "output pointer");
    *out = new semidec_monoid{monoid_from_json(read_json_file(path), limit)};
  });
}

void semidec_monoid_free(semidec_monoid* m) {
  delete m;
}

size_t semidec_monoid_size(const semidec_monoid* m) {
  return m == nullptr ? 0 : m->monoid->size();
}

semidec_status semidec_monoid_json(const semidec_monoid* m, char** out) {
  return guard([&] {
    require(m, "monoid");
    emit(out, dump(monoid_to_json(*m->monoid)));
  });
}

semidec_status semidec_monoid_analyze(const semidec_monoid* m, const char* reports, char** out) {
  return guard([&] {
    require(m, "monoid");
    auto list = split_list(reports == nullptr ? "greens,depth" : reports);
    emit(out, dump(analysis_to_json(*m->monoid, list)));
  });
}

semidec_status semidec_monoid_export(const semidec_monoid* m, const char* format, char** out) {
  return guard([&] {
    require(m, "monoid");
    require(format, "format");
    std::string f = format;
    if (f == "json") {
      emit(out, dump(monoid_to_json(*m->monoid)));
    } else if (f == "text") {
      emit(out, analysis_to_text(
                    analysis_to_json(*m->monoid, {"greens", "depth", "properties"})));
    } else if (f == "dot") {
      emit(out, j_order_dot(*m->monoid));
    } else {
      fail(ErrorCode::unsupported_format, "unknown format " + f);
    }
  });
}

semidec_status semidec_decompose(const char*         pipeline,
                                 size_t              n,
                                 const semidec_ring* ring,
                                 size_t              limit,
                                 semidec_plan**      out) {
  return guard([&] {
    require(pipeline, "pipeline");
    require(ring, "ring");
    require(out, "output pointer");
    std::string p = pipeline;
    if (p == "ring") {
      *out = new semidec_plan{ring_pipeline(n, ring->ring, limit)};
    } else if (p == "field") {
      *out = new semidec_plan{field_pipeline(n, ring->ring, limit)};
    } else {
      fail(ErrorCode::invalid_argument, "pipeline must be ring or field, got " + p);
    }
  });
}

semidec_status semidec_plan_load(const char* path, size_t limit, semidec_plan** out) {
  return guard([&] {
    require(path, "path");
    require(out, "output pointer");
    *out = new semidec_plan{plan_from_json(read_json_file(path), limit)};
  });
}

void semidec_plan_free(semidec_plan* plan) {
  delete plan;
}

size_t semidec_plan_group_length(const semidec_plan* plan) {
  return plan == nullptr ? 0 : plan->plan.group_length;
}

int semidec_plan_verified(const semidec_plan* plan) {
  if (plan == nullptr) {
    return 0;
  }
  for (auto const& w : plan->plan.chain) {
    if (!w.verified()) {
      return 0;
    }
  }
  return !plan->plan.composite || plan->plan.composite->verified();
}

semidec_status semidec_plan_export(const semidec_plan* plan, const char* format, char** out) {
  return guard([&] {
    require(plan, "plan");
    require(format, "format");
    std::string f = format;
    if (f == "json") {
      emit(out, dump(plan_to_json(plan->plan)));
    } else if (f == "text") {
      emit(out, plan_to_text(plan->plan));
    } else {
      fail(ErrorCode::unsupported_format, "unknown plan format " + f);
    }
  });
}

semidec_status semidec_verify_file(const char* path, size_t limit, char** out_report) {
  semidec_status first = SEMIDEC_OK;
  std::string    first_error;
  auto status = guard([&] {
    require(path, "path");
    auto j = read_json_file(path);
    std::vector<nlohmann::json> certs;
    if (j.contains("chain")) {
      for (auto const& c : j.at("chain")) {
        certs.push_back(c);
      }
      if (j.contains("composite") && !j["composite"].is_null()) {
        certs.push_back(j["composite"]);
      }
    } else {
      certs.push_back(j);
    }
    nlohmann::json results = nlohmann::json::array();
    for (auto const& c : certs) {
      nlohmann::json r;
      try {
        auto w = verify(certificate_from_json(c), limit);
        r      = verdict_json(w);
        if (!w.verified() && first == SEMIDEC_OK) {
          first       = static_cast<semidec_status>(w.verdict.failure);
          first_error = w.verdict.reason;
        }
      } catch (Error const& e) {
        r = {{"name", c.value("name", "")}, {"status", "failed"}, {"reason", e.what()}};
        if (first == SEMIDEC_OK) {
          first       = static_cast<semidec_status>(e.code());
          first_error = e.what();
        }
      }
      results.push_back(r);
    }
    nlohmann::json report = {{"certificates", results}, {"verified", first == SEMIDEC_OK}};
    if (out_report != nullptr) {
      *out_report = copy(dump(report));
    }
  });
  if (status != SEMIDEC_OK) {
    return status;
  }
  last_error = first_error;
  return first;
}

semidec_status semidec_induction_certificate(size_t              n,
                                             const semidec_ring* ring,
                                             size_t              limit,
                                             char**              out) {
  return guard([&] {
    require(ring, "ring");
    emit(out, dump(certificate_to_json(induction_step(n, ring->ring, limit))));
  });
}

semidec_status semidec_search(const semidec_monoid* source,
                              const semidec_monoid* target,
                              size_t                limit,
                              char**                out) {
  return guard([&] {
    require(source, "source");
    require(target, "target");
    auto r = search_division(source->monoid, target->monoid, limit);
    if (!r.witness) {
      fail(ErrorCode::not_found, "no division of " + source->monoid->label() + " into "
                                     + target->monoid->label() + " after "
                                     + std::to_string(r.subsemigroups) + " subsemigroups");
    }
    emit(out, dump(certificate_to_json(*r.witness)));
  });
}

semidec_status semidec_census(size_t n, const semidec_ring* field, const char* kind, char** out) {
  return guard([&] {
    require(field, "field");
    require(kind, "kind");
    auto c = verify_census(n, field->ring, parse_kind(kind));
    emit(out, dump({{"kind", kind_name(c.kind)},
                    {"n", c.n},
                    {"depth", c.depth},
                    {"counts", c.counts},
                    {"subgroup_orders", c.subgroup_orders},
                    {"ok", c.ok}}));
  });
}

semidec_status semidec_depth_comparison(size_t n, const semidec_ring* field, char** out) {
  return guard([&] {
    require(field, "field");
    FamilySpec spec{FamilyKind::T, n, field->ring};
    auto       d = depth_analysis(build_family(spec), spec);
    nlohmann::json j = {{"family", family_label(spec)},
                        {"depth", d.report.depth},
                        {"census", d.report.census},
                        {"K_orders", d.k_orders},
                        {"K_product_orders", d.k_product_orders}};
    if (d.pipeline_group_length) {
      j["pipeline_group_length"] = *d.pipeline_group_length;
    }
    emit(out, dump(j));
  });
}

semidec_status semidec_crosschecks(char** out) {
  return guard([&] {
    nlohmann::json j = nlohmann::json::array();
    for (auto const& c : standard_crosschecks()) {
      j.push_back(crosscheck_to_json(c));
    }
    emit(out, dump(j));
  });
}

}  // extern "C"
