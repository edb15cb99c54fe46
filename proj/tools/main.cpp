#include <iostream>

#include <CLI11.hpp>

#include "structmat/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"structural matrix algebra toolkit"};
  app.require_subcommand(1);

  structmat::JobSpec spec;
  struct Entry {
    const char* name;
    const char* blurb;
  };
  const Entry entries[] = {
      {"analyze", "classes, order, cover arrows, components, antichain and automorphism counts"},
      {"lattice", "antichain lattice with meet and join tables"},
      {"aut", "automorphism group data over a prime field"},
      {"triviality", "vertex-weight triviality of group labelings"},
      {"classify", "orbits of degree tuples under the relabeling action"},
      {"oracle", "brute-force cross-checks against the closed forms"},
  };
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.blurb);
    sub->add_option("--preorder", spec.preorder, "preorder file path, or - for stdin");
    sub->add_option("--field", spec.field, "prime field modulus");
    sub->add_option("--group", spec.group, "group spec, e.g. Z2, S3, D4, Z2xZ3, table:FILE");
    sub->add_option("--budget", spec.budget, "enumeration budget");
    sub->add_option("--format", spec.format, "text or json");
    sub->add_option("--seed", spec.seed, "seed for sampled property checks");
    sub->add_option("--jobs", spec.jobs, "worker cap for parallel scans");
    sub->callback([&spec, &e] { spec.command = e.name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto r = structmat::run_command(spec);
  std::cout << structmat::emit_report(r, spec.format);
  return r.status;
}
