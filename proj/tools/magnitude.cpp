#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "magnitude/cli.hpp"

int main(int argc, char** argv) {
  using namespace magnitude;
  CLI::App app{"Magnitude homology and cohomology of finite quasimetric spaces and digraphs"};
  app.require_subcommand(1);

  JobSpec job;
  std::string lmax = "3";
  std::string kind;
  std::string coefficients;

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check the axioms of a digraph, space or module file"},
      {"mh", "magnitude homology table from the chain complex"},
      {"tor", "Tor over the distance algebra from the bar resolution"},
      {"ext", "Ext over the distance algebra from the bar resolution"},
      {"crosscheck", "compare the chain and derived-functor pipelines"},
      {"ring", "structure constants of the magnitude cohomology ring"},
      {"relations", "bound-quiver relations of a digraph"},
      {"inv", "invariants of a distance module"},
      {"coinv", "coinvariants of a distance module"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", job.input, "digraph, space or module JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--kind", kind, "input kind: digraph, space or module (detected by default)");
    sub->add_option("--nmax", job.n_max, "largest homological degree")->capture_default_str();
    sub->add_option("--lmax", lmax, "largest grade, an exact rational such as 3/2")->capture_default_str();
    sub->add_option("--field", job.field, "Z, Q or Fp:P");
    sub->add_option("--format", job.format, "json, csv or table")->capture_default_str();
    sub->add_option("--coefficients", coefficients, "distance-module JSON file");
  }
  auto* gen = app.add_subcommand("gen", "emit a seeded random test instance");
  gen->add_option("--seed", job.seed, "random seed")->capture_default_str();
  gen->add_option("--kind", kind, "space, digraph or module")->capture_default_str();
  gen->add_option("--points", job.points, "number of points")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  job.command = app.get_subcommands().front()->get_name();
  RunResult result;
  try {
    job.l_max = parse_rational(lmax);
    if (!kind.empty()) job.kind = parse_input_kind(kind);
    if (!coefficients.empty()) job.coefficients = coefficients;
    result = run(job);
  } catch (const Error& e) {
    result = {2, "", error_json(e).dump(2) + "\n"};
  }
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
