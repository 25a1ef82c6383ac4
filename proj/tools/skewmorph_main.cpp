#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skewmorph/commands.hpp"

int main(int argc, char** argv) {
  using namespace skewmorph;

  CLI::App app{"skew-morphism toolkit: enumerate, classify and analyze "
               "skew-morphisms of finite groups"};
  app.require_subcommand(1);

  std::string out_name = "text";
  int max_order = default_max_order();
  int threads = 1;
  app.add_option("--out", out_name, "Output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--max-order", max_order,
                 "Largest group order the enumerator accepts")
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for the enumeration")
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List all skew-morphisms of a group");
  std::string group_spec;
  std::string filter_text;
  enumerate->add_option("--group", group_spec, "cyclic:<n>, dihedral:<n> or table:<path>")
      ->required();
  enumerate->add_option(
      "--filter", filter_text,
      "smooth | kernel-preserving | automorphism | kernel=<a|a2|a2b|a2ab|list>");

  auto* classify = app.add_subcommand(
      "classify", "Catalog of the smooth skew-morphisms of a dihedral group");
  int n = 0;
  bool cross_check = false;
  classify->add_option("--n", n, "Dihedral parameter (group order is 2n)")->required();
  classify->add_flag("--cross-check", cross_check,
                     "Compare the catalog against the exhaustive enumeration");

  auto* analyze =
      app.add_subcommand("analyze", "Invariant report for one candidate permutation");
  std::string analyze_group, perm_text;
  analyze->add_option("--group", analyze_group, "cyclic:<n>, dihedral:<n> or table:<path>")
      ->required();
  analyze->add_option("--perm", perm_text, "Permutation in cycle notation")->required();

  CLI11_PARSE(app, argc, argv);

  const std::optional<OutFormat> fmt = parse_out_format(out_name);
  if (!fmt) {
    std::cerr << "error: unknown output format: " << out_name << "\n";
    return kExitUsage;
  }
  CliOptions opt;
  opt.out = *fmt;
  opt.max_order = max_order;
  opt.threads = threads;

  if (enumerate->parsed()) {
    std::optional<std::string> filter;
    if (!filter_text.empty()) filter = filter_text;
    return cmd_enumerate(group_spec, filter, opt, std::cout, std::cerr);
  }
  if (classify->parsed()) return cmd_classify(n, cross_check, opt, std::cout, std::cerr);
  if (analyze->parsed()) return cmd_analyze(analyze_group, perm_text, opt, std::cout, std::cerr);
  return kExitUsage;
}
