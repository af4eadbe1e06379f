// semidec command-line front end. Uses only the C interface.
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "semidec/semidec.h"

namespace {

  constexpr int exit_ok      = 0;
  constexpr int exit_failure = 1;
  constexpr int exit_usage   = 2;

  struct Failure {
    semidec_status status;
  };

  int exit_code(semidec_status s) {
    switch (s) {
      case SEMIDEC_OK: return exit_ok;
      case SEMIDEC_INVALID_ARGUMENT:
      case SEMIDEC_UNSUPPORTED_FORMAT:
      case SEMIDEC_NOT_PRIME:
      case SEMIDEC_BOUND_EXCEEDED:
      case SEMIDEC_PARSE_ERROR:
      case SEMIDEC_IO_ERROR: return exit_usage;
      default: return exit_failure;
    }
  }

  void check(semidec_status s) {
    if (s != SEMIDEC_OK) {
      throw Failure{s};
    }
  }

  template <class T, void (*Free)(T*)>
  struct Deleter {
    void operator()(T* p) const {
      Free(p);
    }
  };
  using RingPtr   = std::unique_ptr<semidec_ring, Deleter<semidec_ring, semidec_ring_free>>;
  using MonoidPtr = std::unique_ptr<semidec_monoid, Deleter<semidec_monoid, semidec_monoid_free>>;
  using PlanPtr   = std::unique_ptr<semidec_plan, Deleter<semidec_plan, semidec_plan_free>>;

  // Takes ownership of a string from the library.
  std::string take(char* s) {
    std::string out = s == nullptr ? "" : s;
    semidec_string_free(s);
    return out;
  }

  RingPtr ring(std::string const& spec) {
    semidec_ring* r = nullptr;
    check(semidec_ring_parse(spec.c_str(), &r));
    return RingPtr(r);
  }

  MonoidPtr load_monoid(std::string const& path, std::size_t limit) {
    semidec_monoid* m = nullptr;
    check(semidec_monoid_load(path.c_str(), limit, &m));
    return MonoidPtr(m);
  }

  void write(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "error: cannot write " << path << "\n";
      throw Failure{SEMIDEC_IO_ERROR};
    }
  }

  bool is_plan(std::string const& path) {
    std::ifstream in(path);
    std::string   head((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return head.find("\"chain\"") != std::string::npos;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular matrix semigroups and certified wreath product decompositions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t limit = semidec_default_limit();
  app.add_option("--limit", limit, "Closure and enumeration limit (env SEMIDEC_LIMIT)")
      ->check(CLI::PositiveNumber);

  std::string ring_spec = "zp:2";
  std::string out_path;
  std::size_t n = 2;

  auto* family = app.add_subcommand("family", "Build a named monoid and write its JSON");
  std::string kind = "T";
  family->add_option("--kind", kind, "T UT PT T* UT* PT* A AT AS A* AT* AS* Xtilde U1 augmented");
  family->add_option("--n", n, "Degree or dimension")->check(CLI::PositiveNumber);
  family->add_option("--ring", ring_spec, "zp:<p>, bool or table:<path>");
  family->add_option("--out", out_path, "Output file (default stdout)");

  auto*       analyze = app.add_subcommand("analyze", "Green's relations and depth of a monoid");
  std::string input;
  std::string reports = "greens,depth";
  std::string dot_path;
  analyze->add_option("input", input, "Monoid JSON")->required();
  analyze->add_option("--report", reports, "greens,depth,properties");
  analyze->add_option("--dot", dot_path, "Write the J-order as DOT");
  analyze->add_option("--out", out_path, "Output file (default stdout)");

  auto*       decompose = app.add_subcommand("decompose", "Run a decomposition pipeline");
  std::string pipeline  = "field";
  std::string cert_path;
  decompose->add_option("--pipeline", pipeline, "ring or field")
      ->check(CLI::IsMember({"ring", "field"}));
  decompose->add_option("--n", n, "Matrix degree")->check(CLI::Range(2, 16));
  decompose->add_option("--ring", ring_spec, "zp:<p>, bool or table:<path>");
  decompose->add_option("--cert", cert_path, "Write the plan and its certificates");

  auto* verify = app.add_subcommand("verify", "Re-verify a certificate or plan file");
  verify->add_option("input", input, "Certificate or plan JSON")->required();

  auto*       search = app.add_subcommand("search", "Exhaustive division search S < T");
  std::string source_path, target_path;
  std::size_t search_limit = 12;
  search->add_option("--source", source_path, "Monoid JSON for S")->required();
  search->add_option("--target", target_path, "Monoid JSON for T")->required();
  search->add_option("--max-target", search_limit, "Largest target order searched");
  search->add_option("--out", out_path, "Write the certificate");

  auto*       exporter = app.add_subcommand("export", "Render a monoid or plan");
  std::string format   = "json";
  exporter->add_option("input", input, "Monoid or plan JSON")->required();
  exporter->add_option("--format", format, "json, dot or text");
  exporter->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (family->parsed()) {
      auto            r = ring(ring_spec);
      semidec_monoid* m = nullptr;
      check(semidec_family_build(kind.c_str(), n, r.get(), limit, &m));
      MonoidPtr owned(m);
      char*     json = nullptr;
      check(semidec_monoid_json(m, &json));
      write(out_path, take(json));
      if (!out_path.empty()) {
        std::cout << "order " << semidec_monoid_size(m) << "\n";
      }
    } else if (analyze->parsed()) {
      auto  m    = load_monoid(input, limit);
      char* json = nullptr;
      check(semidec_monoid_analyze(m.get(), reports.c_str(), &json));
      write(out_path, take(json));
      if (!dot_path.empty()) {
        char* dot = nullptr;
        check(semidec_monoid_export(m.get(), "dot", &dot));
        write(dot_path, take(dot));
      }
    } else if (decompose->parsed()) {
      auto          r = ring(ring_spec);
      semidec_plan* p = nullptr;
      check(semidec_decompose(pipeline.c_str(), n, r.get(), limit, &p));
      PlanPtr owned(p);
      if (!cert_path.empty()) {
        char* json = nullptr;
        check(semidec_plan_export(p, "json", &json));
        write(cert_path, take(json));
      }
      char* text = nullptr;
      check(semidec_plan_export(p, "text", &text));
      std::cout << take(text);
      if (!semidec_plan_verified(p)) {
        return exit_failure;
      }
    } else if (verify->parsed()) {
      char* report = nullptr;
      auto  s      = semidec_verify_file(input.c_str(), limit, &report);
      std::cout << take(report);
      if (s != SEMIDEC_OK) {
        std::cerr << semidec_last_error() << "\n";
        return exit_code(s);
      }
    } else if (search->parsed()) {
      auto  S    = load_monoid(source_path, limit);
      auto  T    = load_monoid(target_path, limit);
      char* cert = nullptr;
      check(semidec_search(S.get(), T.get(), search_limit, &cert));
      write(out_path, take(cert));
    } else if (exporter->parsed()) {
      char* text = nullptr;
      if (is_plan(input)) {
        semidec_plan* p = nullptr;
        check(semidec_plan_load(input.c_str(), limit, &p));
        PlanPtr owned(p);
        check(semidec_plan_export(p, format.c_str(), &text));
      } else {
        auto m = load_monoid(input, limit);
        check(semidec_monoid_export(m.get(), format.c_str(), &text));
      }
      write(out_path, take(text));
    }
  } catch (Failure const& f) {
    if (*semidec_last_error() != '\0') {
      std::cerr << "error: " << semidec_last_error() << "\n";
    }
    return exit_code(f.status);
  }
  return exit_ok;
}
