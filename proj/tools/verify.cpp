#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gh/suites.hpp"
#include "gh/algebras.hpp"

using namespace gh;

namespace {

std::string error_kind(const std::exception& e) {
#define GH_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  GH_KIND(UnknownSuite)
  GH_KIND(UnknownGroup)
  GH_KIND(MalformedDefinition)
  GH_KIND(UnsupportedGroup)
  GH_KIND(GroupAxiomViolation)
  GH_KIND(DegeneratePairing)
  GH_KIND(FiltrationExceeded)
  GH_KIND(NotSmooth)
  GH_KIND(JacobiViolation)
  GH_KIND(NonTerminating)
#undef GH_KIND
  return "Error";
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw MalformedDefinition("cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || (args[0] != "verify" && args[0] != "list" && args[0] != "explain" && args[0] != "-h" &&
                       args[0] != "--help"))
    args.insert(args.begin(), "verify");
  std::reverse(args.begin(), args.end());

  CLI::App app{"Exact verification of graded Hopf algebra identities"};
  app.require_subcommand(1);
  SuiteSpec spec;
  std::string format = "json", out, target, check_id;
  auto add_spec = [&](CLI::App* c) {
    c->add_option("--suite", spec.suite, "suite name (see `list suites`)");
    c->add_option("--group", spec.group, "group or Lie algebra id (see `list groups`)");
    c->add_option("--algebra", spec.algebra, "restrict hopf-axioms or confluence to one algebra");
    c->add_option("--bound", spec.bound, "filtration bound N")->check(CLI::PositiveNumber);
    c->add_option("--degree", spec.degree, "degree bound")->check(CLI::PositiveNumber);
    c->add_option("--samples", spec.samples, "random samples")->check(CLI::PositiveNumber);
    c->add_option("--seed", spec.seed, "random seed");
    c->add_option("--out", out, "write the report here instead of standard output");
    c->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* verify = app.add_subcommand("verify", "run a suite");
  add_spec(verify);
  auto* list = app.add_subcommand("list", "list groups, suites or algebras");
  list->add_option("target", target, "groups | suites | algebras")->required()->check(
      CLI::IsMember({"groups", "suites", "algebras"}));
  auto* explain = app.add_subcommand("explain", "run the check with this id and describe it");
  explain->add_option("check-id", check_id, "e.g. braiding/s3/yang-baxter")->required();
  add_spec(explain);

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*list) {
      if (target == "groups")
        for (const auto& id : corpus_ids()) {
          GroupModel g = load_group(id);
          std::cout << id << "\t" << (g.is_unipotent() ? "unipotent" : "finite") << "\t" << g.description() << "\n";
        }
      if (target == "suites")
        for (const auto& s : suite_registry()) std::cout << s.name << "\t" << s.description << "\t[" << s.anchor << "]\n";
      if (target == "algebras")
        for (const auto& a : algebra_registry())
          std::cout << a.tag << "\t" << a.description << "\t[" << a.anchor << "]\n";
      return 0;
    }
    if (*explain) {
      auto slash = check_id.find('/');
      spec.suite = check_id.substr(0, slash);
      if (slash != std::string::npos) {
        auto rest = check_id.substr(slash + 1);
        spec.group = rest.substr(0, rest.find('/'));
      }
      if (slash == std::string::npos) {
        for (const auto& s : suite_registry())
          if (s.name == spec.suite) {
            std::cout << s.name << ": " << s.description << " [" << s.anchor << "]\n";
            return 0;
          }
        throw UnknownSuite("unknown suite '" + spec.suite + "'");
      }
      Report rep = run_suite(spec);
      for (const auto& r : rep.records())
        if (r.id == check_id) {
          std::cout << r.id << (r.control ? " (control)" : "") << "\n"
                    << "  identity: " << r.identity << "\n  topic:    " << r.anchor << "\n  inputs:   " << r.inputs
                    << "\n  expected: " << r.expected << "\n  got:      " << r.got
                    << "\n  status:   " << (r.pass ? "pass" : "fail") << "\n";
          return r.pass ? 0 : 1;
        }
      std::cerr << "error: UnknownCheck: no check '" << check_id << "' in suite " << spec.suite << " for "
                << spec.group << "\n";
      return 2;
    }
    auto t0 = std::chrono::steady_clock::now();
    Report rep = run_suite(spec);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (format == "json")
      emit(report_document(spec, rep, secs).dump(2) + "\n", out);
    else
      emit(rep.text(), out);
    return rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "error: " << error_kind(e) << ": " << msg << "\n";
    return 2;
  }
}
