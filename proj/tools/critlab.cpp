#include <iostream>

#include "CLI11.hpp"

#include "critlab/error.hpp"
#include "critlab/harness.hpp"

int main(int argc, char** argv) {
  using namespace critlab;
  CLI::App app{"Edge-coloring criticality and even-factor laboratory"};
  app.set_version_flag("--version", "critlab 0.1.0");

  std::string command;
  JobSpec spec;
  std::vector<std::string> names;
  for (Subcommand s : {Subcommand::color, Subcommand::chi, Subcommand::critical, Subcommand::evenfactor,
                       Subcommand::barrier, Subcommand::normalize, Subcommand::lemma1, Subcommand::lemma2,
                       Subcommand::audit, Subcommand::theorem2_xcheck}) {
    names.emplace_back(to_string(s));
  }
  app.add_option("subcommand", command, "What to run on every input graph")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("graphs", spec.graphs, "graph6 strings (instead of --in)");
  app.add_option("--in", spec.input, "graph6 file, one graph per line; '-' or omitted reads stdin");
  app.add_option("--jobs,-j", spec.jobs, "Worker threads (1 = sequential reference)")->check(CLI::PositiveNumber);
  app.add_option("--budget-color", spec.budgets.color, "Color search nodes per search")->check(CLI::PositiveNumber);
  app.add_option("--budget-factor", spec.budgets.factor, "Even factor search nodes")->check(CLI::PositiveNumber);
  app.add_option("--budget-barrier", spec.budgets.barrier, "Barrier subsets examined")->check(CLI::PositiveNumber);
  app.add_option("--json", spec.json_out, "Write the JSON report here");
  app.add_option("--csv", spec.csv_out, "Write the CSV summary here");
  app.add_option("--falsification-dir", spec.falsification_dir, "Directory for falsification bundles");
  app.add_option("--filter-n-min", spec.filters.n_min, "Smallest order kept");
  app.add_option("--filter-n-max", spec.filters.n_max, "Largest order kept");
  app.add_option("--filter-delta-min", spec.filters.delta_min, "Smallest maximum degree kept");
  app.add_option("--filter-delta-max", spec.filters.delta_max, "Largest maximum degree kept");
  app.add_flag("--filter-class2", spec.filters.class2_only, "Keep only class 2 graphs");
  app.add_flag("--filter-critical", spec.filters.critical_only, "Keep only k-critical graphs");
  CLI11_PARSE(app, argc, argv);

  try {
    spec.command = *parse_subcommand(command);
    spec.budgets = spec.budgets.scaled(budget_scale_from_env());
    spec.validate();
    const RunReport report = run(spec);
    write_outputs(spec, report);
    if (spec.json_out.empty() && spec.csv_out.empty()) std::cout << report.to_json().dump(2) << '\n';
    for (const InputError& e : report.malformed) {
      std::cerr << "line " << e.line << ": malformed graph6: " << e.message << '\n';
    }
    const RunSummary& s = report.summary;
    std::cerr << "read " << s.read << ", processed " << s.processed << ", filtered " << s.filtered_out
              << ", falsifications " << s.falsifications << ", budget exhausted " << s.budget_exhausted
              << ", errors " << s.errors + s.malformed << '\n';
    return report.exit_code();
  } catch (const UsageError& e) {
    std::cerr << "critlab: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "critlab: " << e.what() << '\n';
    return 1;
  }
}
