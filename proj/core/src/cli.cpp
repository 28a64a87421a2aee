#include "permdesign/cli.hpp"

#include "permdesign/charlier.hpp"
#include "permdesign/constructions.hpp"
#include "permdesign/design.hpp"
#include "permdesign/errors.hpp"
#include "permdesign/permset_io.hpp"
#include "permdesign/report_json.hpp"
#include "permdesign/search.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

namespace permdesign {

namespace {

SearchBudget budget_from_env() {
  SearchBudget budget;
  if (const char* raw = std::getenv("PERMDESIGN_BUDGET")) {
    try {
      budget.max_nodes = std::stoull(raw);
    } catch (const std::exception&) {
      throw error("PERMDESIGN_BUDGET must be an unsigned integer, got '" +
                  std::string(raw) + "'");
    }
    if (budget.max_nodes == 0)
      throw error("PERMDESIGN_BUDGET must be positive");
  }
  return budget;
}

const char* verdict_text(Verdict verdict) {
  switch (verdict) {
  case Verdict::yes:
    return "yes";
  case Verdict::no:
    return "no";
  case Verdict::not_applicable:
    return "n/a";
  }
  return "?";
}

void print_report_text(const DesignReport& report, std::ostream& out) {
  out << "n: " << report.n << "\n";
  out << "size: " << report.size << "\n";
  out << "frequencies:";
  for (int i = 0; i <= report.n; ++i)
    out << " f" << i << "="
        << to_string(report.freq.f[static_cast<std::size_t>(i)]);
  out << "\n";
  for (const auto& cmp : report.moments)
    out << "moment " << cmp.i << ": " << to_string(cmp.value) << " vs space "
        << to_string(cmp.space_value)
        << (cmp.equal ? " (equal)" : " (differs)") << "\n";
  if (report.t <= report.n / 2) {
    out << "dual frequencies:";
    for (const auto& dual : report.dual_frequencies)
      out << " g" << dual.k << "=" << to_string(dual.value);
    out << "\n";
  } else {
    out << "dual frequencies: n/a (t > n/2)\n";
  }
  out << "criteria: moments=" << verdict_text(report.criterion_moments)
      << " dual=" << verdict_text(report.criterion_dual)
      << " tcrit=" << verdict_text(report.criterion_tcrit) << "\n";
  out << "bounds: sm=" << to_string(report.sm_bound)
      << " cor2(t=2)=" << to_string(report.cor2_bound_t2)
      << " meets_sm_equality=" << (report.meets_sm_equality ? "yes" : "no")
      << "\n";
  out << "transitivity: max_t=" << report.max_transitivity
      << " sharp=" << (report.sharply_transitive ? "yes" : "no")
      << " group=" << (report.group ? "yes" : "no") << "\n";
  out << report.t << "-design: " << (report.is_design() ? "YES" : "NO")
      << "\n";
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw error("cannot write '" + path + "'");
  file << text;
  if (!file)
    throw error("failed writing '" + path + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact t-design verification in the symmetric group under "
               "the fixed-point metric"};
  app.require_subcommand(1);

  std::string verify_path;
  int verify_t = 1;
  std::string verify_format = "text";
  bool verify_strict = false;
  int verify_workers = 1;
  auto* verify_cmd =
      app.add_subcommand("verify", "evaluate all design criteria for a set");
  verify_cmd->add_option("file", verify_path, "permutation-set file")
      ->required();
  verify_cmd->add_option("--t", verify_t, "design strength to test")
      ->required();
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--strict", verify_strict,
                       "exit 1 when the set is not a t-design");
  verify_cmd->add_option("--workers", verify_workers, "histogram worker count")
      ->check(CLI::PositiveNumber);

  std::string freq_path;
  std::string freq_format = "text";
  int freq_workers = 1;
  auto* freq_cmd =
      app.add_subcommand("freq", "print the exact frequency vector of a set");
  freq_cmd->add_option("file", freq_path, "permutation-set file")->required();
  freq_cmd->add_option("--format", freq_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  freq_cmd->add_option("--workers", freq_workers, "histogram worker count")
      ->check(CLI::PositiveNumber);

  int charlier_k = 0;
  std::optional<int> charlier_n;
  std::string charlier_format = "text";
  auto* charlier_cmd =
      app.add_subcommand("charlier", "print a Charlier polynomial");
  charlier_cmd->add_option("--k", charlier_k, "polynomial index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  charlier_cmd->add_option(
      "--n", charlier_n, "print the reversal c_k(n - x) instead of c_k(x)");
  charlier_cmd->add_option("--format", charlier_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int orthogonality_n = 0;
  std::string orthogonality_format = "text";
  auto* orthogonality_cmd = app.add_subcommand(
      "orthogonality",
      "check reversed-Charlier orthogonality for all r,s <= n/2");
  orthogonality_cmd->add_option("--n", orthogonality_n, "degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  orthogonality_cmd
      ->add_option("--format", orthogonality_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int bounds_n = 0;
  int bounds_t = 0;
  std::string bounds_format = "text";
  auto* bounds_cmd =
      app.add_subcommand("bounds", "print design size bounds for (n, t)");
  bounds_cmd->add_option("--n", bounds_n, "degree")->required();
  bounds_cmd->add_option("--t", bounds_t, "design strength")->required();
  bounds_cmd->add_option("--format", bounds_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string construct_family;
  int construct_n = 0;
  int construct_q = 0;
  std::string construct_from;
  std::uint64_t construct_cap = default_closure_cap;
  std::string construct_output;
  auto* construct_cmd =
      app.add_subcommand("construct", "emit one of the built-in families");
  construct_cmd
      ->add_option("family", construct_family,
                   "cyclic | latin5-nongroup | affine | twisted9 | pgl2 | "
                   "closure")
      ->required();
  construct_cmd->add_option("--n", construct_n, "degree (cyclic)");
  construct_cmd->add_option("--q", construct_q, "field order (affine, pgl2)");
  construct_cmd->add_option("--from", construct_from,
                            "generator file (closure)");
  construct_cmd->add_option("--cap", construct_cap,
                            "closure size cap (closure)");
  construct_cmd->add_option("-o,--output", construct_output,
                            "write to file instead of stdout");

  std::string search_mode;
  int search_n = 0;
  int search_t = 1;
  int search_max_size = 0;
  int search_workers = 1;
  std::string search_format = "text";
  std::string search_output;
  bool search_strict = false;
  auto* search_cmd = app.add_subcommand(
      "search", "sharp-set or minimal-design searches with certificates");
  search_cmd->add_option("mode", search_mode, "sharp | min-design")
      ->required()
      ->check(CLI::IsMember({"sharp", "min-design"}));
  search_cmd->add_option("--n", search_n, "degree")->required();
  search_cmd->add_option("--t", search_t, "design strength / transitivity");
  search_cmd->add_option("--max-size", search_max_size,
                         "largest subset size (min-design)");
  search_cmd->add_option("--workers", search_workers, "branch worker count")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--format", search_format,
                         "text (set only) or json (certificate)")
      ->check(CLI::IsMember({"text", "json"}));
  search_cmd->add_option("-o,--output", search_output,
                         "write to file instead of stdout");
  search_cmd->add_flag("--strict", search_strict,
                       "exit 1 unless the search found a set");

  std::string convert_direction;
  std::string convert_input;
  std::string convert_output;
  auto* convert_cmd = app.add_subcommand(
      "convert", "translate between Latin squares and permutation sets");
  convert_cmd->add_option("direction", convert_direction, "to-latin | to-perms")
      ->required()
      ->check(CLI::IsMember({"to-latin", "to-perms"}));
  convert_cmd->add_option("file", convert_input, "input file")->required();
  convert_cmd->add_option("-o,--output", convert_output,
                          "write to file instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("permdesign");
  for (const auto& arg : args)
    argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(verify_cmd)) {
      PermSet set = load_permset(verify_path);
      if (verify_t < 1 || verify_t > set.degree())
        throw error("--t must be in [1.." + std::to_string(set.degree()) +
                    "] for this set");
      DesignReport report = analyze(set, verify_t, verify_workers);
      if (verify_format == "json")
        out << design_report_json(report);
      else
        print_report_text(report, out);
      return (verify_strict && !report.is_design()) ? 1 : 0;
    }

    if (app.got_subcommand(freq_cmd)) {
      FrequencyVector freq =
          frequencies(load_permset(freq_path), freq_workers);
      if (freq_format == "json") {
        out << frequencies_json(freq);
      } else {
        for (int i = 0; i <= freq.n; ++i)
          out << "f" << i << " = "
              << to_string(freq.f[static_cast<std::size_t>(i)]) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(charlier_cmd)) {
      if (charlier_n && *charlier_n < 0)
        throw error("--n must be nonnegative");
      if (charlier_format == "json") {
        out << charlier_json(charlier_k, charlier_n);
      } else {
        IntPolynomial poly = charlier_n
                                 ? reversed_charlier(charlier_k, *charlier_n)
                                 : charlier(charlier_k);
        out << poly.to_string() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(orthogonality_cmd)) {
      OrthogonalityReport report = verify_orthogonality(orthogonality_n);
      if (orthogonality_format == "json") {
        out << orthogonality_report_json(report);
      } else {
        for (const auto& entry : report.entries)
          out << "r=" << entry.r << " s=" << entry.s
              << " value=" << to_string(entry.value)
              << " expected=" << to_string(entry.expected)
              << (entry.pass ? " PASS" : " FAIL") << "\n";
        out << (report.all_pass ? "all pairs pass" : "FAILURES present")
            << "\n";
      }
      return report.all_pass ? 0 : 1;
    }

    if (app.got_subcommand(bounds_cmd)) {
      if (bounds_format == "json") {
        out << bounds_json(bounds_n, bounds_t);
      } else {
        out << "sm bound (n=" << bounds_n << ", t=" << bounds_t
            << "): " << to_string(design_bound(bounds_n, bounds_t)) << "\n";
        out << "cor2 bound (t=2): " << to_string(cor2_bound(bounds_n)) << "\n";
        if (bounds_t == 2)
          out << "sm bound strictly exceeds cor2: "
              << (sm_bound_exceeds_cor2(bounds_n) ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(construct_cmd)) {
      PermSet set = [&]() -> PermSet {
        if (construct_family == "cyclic")
          return cyclic_group(construct_n);
        if (construct_family == "latin5-nongroup")
          return nongroup_latin5();
        if (construct_family == "affine")
          return affine_group(construct_q);
        if (construct_family == "twisted9")
          return twisted_affine_9();
        if (construct_family == "pgl2")
          return pgl2(construct_q);
        if (construct_family == "closure") {
          if (construct_from.empty())
            throw error("closure needs --from <generator file>");
          return group_closure(load_permset(construct_from), construct_cap);
        }
        throw error("unknown family '" + construct_family + "'");
      }();
      write_output(format_permset(set), construct_output, out);
      return 0;
    }

    if (app.got_subcommand(search_cmd)) {
      SearchBudget budget = budget_from_env();
      if (search_mode == "sharp") {
        SharpSearchResult result =
            search_sharp_set(search_n, search_t, search_workers, budget);
        if (search_format == "json") {
          write_output(sharp_search_certificate_json(result), search_output,
                       out);
        } else if (result.set) {
          write_output(format_permset(*result.set), search_output, out);
        } else {
          out << "status: "
              << (result.status == SearchStatus::exhausted ? "exhausted"
                                                           : "inconclusive")
              << " (nodes=" << result.nodes << ")\n";
        }
        return (search_strict && result.status != SearchStatus::found) ? 1 : 0;
      }
      if (search_max_size < 1)
        throw error("--max-size is required for min-design");
      MinDesignSearchResult result =
          exhaustive_min_design(search_n, search_t, search_max_size, budget);
      if (search_format == "json") {
        write_output(min_design_certificate_json(result), search_output, out);
      } else if (result.design) {
        write_output(format_permset(*result.design), search_output, out);
      } else {
        out << "status: "
            << (result.status == SearchStatus::exhausted ? "exhausted"
                                                         : "inconclusive")
            << " (subsets checked: " << result.subsets_checked << ")\n";
      }
      return (search_strict && result.status != SearchStatus::found) ? 1 : 0;
    }

    if (app.got_subcommand(convert_cmd)) {
      if (convert_direction == "to-latin") {
        PermSet set = load_permset(convert_input);
        write_output(format_latin_square(to_latin_square(set)), convert_output,
                     out);
      } else {
        auto rows = load_latin_square(convert_input);
        write_output(format_permset(from_latin_square(rows)), convert_output,
                     out);
      }
      return 0;
    }

    throw error("no subcommand given");
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace permdesign
