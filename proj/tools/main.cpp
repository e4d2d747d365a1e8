// Command-line driver.  All mathematics goes through the public C API; this
// file only parses flags, shuttles JSON, and maps statuses to exit codes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffdioph.h"

namespace {

using Json = nlohmann::ordered_json;

int exit_code_for(ffd_status status) {
  switch (status) {
    case FFD_OK: return 0;
    case FFD_ERR_PARSE: return 1;
    case FFD_ERR_BUDGET: return 2;
    case FFD_ERR_HYPOTHESIS: return 3;
    case FFD_ERR_UNSOLVED: return 4;
    case FFD_ERR_INVALID: return 1;
    case FFD_ERR_INTERNAL: return 5;
  }
  return 5;
}

void print_error(const std::string& what) {
  std::cerr << "error: " << what;
  const char* detail = ffd_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
}

bool write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return false;
  }
  out << text;
  return true;
}

bool split_prime_power(uint64_t q, uint64_t& p, uint32_t& e) {
  if (q < 2) return false;
  uint64_t least = q;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      least = d;
      break;
    }
  }
  p = least;
  e = 0;
  uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return m == 1;
}

struct FieldArgs {
  uint64_t q = 0;
  uint64_t p = 0;
  uint32_t e = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--q", q, "Field size as a prime power (alternative to --p/--e)");
    cmd->add_option("--p", p, "Field characteristic");
    cmd->add_option("--e", e, "Extension degree over the prime field")->default_val(1);
  }

  bool resolve() {
    if (q != 0) {
      if (p != 0) {
        std::cerr << "error: give either --q or --p/--e, not both\n";
        return false;
      }
      if (!split_prime_power(q, p, e)) {
        std::cerr << "error: --q must be a prime power\n";
        return false;
      }
      return true;
    }
    if (p == 0) {
      std::cerr << "error: a field is required (--q or --p/--e)\n";
      return false;
    }
    return true;
  }
};

struct RunArgs {
  std::string input;
  std::string out_path;
  std::optional<long long> eps_ord;
  std::optional<long long> nu;
  long long budget = 1ll << 24;
  int workers = 1;
  bool refined = false;
};

int do_run(const RunArgs& args, const std::string& expected_variant) {
  ffd_instance* inst = nullptr;
  ffd_status status;
  if (args.eps_ord.has_value() || args.nu.has_value()) {
    // Patch the target in front of the library so overrides round-trip
    // through the same parser as everything else.
    std::ifstream in(args.input, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open " << args.input << "\n";
      return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();
    Json j;
    try {
      j = Json::parse(text.str());
    } catch (const std::exception& ex) {
      std::cerr << "error: " << ex.what() << "\n";
      return 1;
    }
    Json target;
    if (args.eps_ord.has_value()) target["eps_ord"] = *args.eps_ord;
    if (args.nu.has_value()) target["nu"] = *args.nu;
    j["target"] = target;
    status = ffd_instance_from_json(j.dump().c_str(), &inst);
  } else {
    status = ffd_instance_from_file(args.input.c_str(), &inst);
  }
  if (status != FFD_OK) {
    print_error("failed to load " + args.input);
    return exit_code_for(status);
  }

  const char* variant = ffd_instance_variant(inst);
  if (expected_variant != variant) {
    std::cerr << "error: " << args.input << " has variant \"" << variant
              << "\" but this subcommand expects \"" << expected_variant << "\"\n";
    ffd_instance_free(inst);
    return 1;
  }

  ffd_run_options opts;
  ffd_run_options_init(&opts);
  opts.budget = args.budget;
  opts.workers = args.workers;
  opts.refined = args.refined ? 1 : 0;

  ffd_report* rep = nullptr;
  status = ffd_run(inst, &opts, &rep);
  int code = exit_code_for(status);

  if (rep) {
    char* json_text = nullptr;
    if (ffd_report_json(rep, &json_text) == FFD_OK) {
      if (!write_output(json_text, args.out_path) && code == 0) code = 1;
      ffd_string_free(json_text);
    }
    ffd_report_free(rep);
  }
  if (status != FFD_OK) print_error("no verified certificate");
  ffd_instance_free(inst);
  return code;
}

void add_run_flags(CLI::App* cmd, RunArgs& args, bool with_eps, bool with_nu,
                   bool with_refined) {
  cmd->add_option("--input", args.input, "Problem file")->required();
  if (with_eps)
    cmd->add_option("--eps-ord", args.eps_ord,
                    "Override the target exponent: solutions with ord below this");
  if (with_nu)
    cmd->add_option("--nu", args.nu, "Override the size exponent: witnesses of ord <= nu");
  cmd->add_option("--budget", args.budget, "Max solver point evaluations")
      ->default_val(1ll << 24);
  cmd->add_option("--workers", args.workers, "Solver threads (1 = deterministic)")
      ->default_val(1);
  if (with_refined)
    cmd->add_flag("--refined", args.refined, "Use the power-sum variable count");
  cmd->add_option("--out", args.out_path, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for diophantine inequalities over GF(q)((1/t))"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(ffd_version()); });

  RunArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve a general-forms instance");
  add_run_flags(solve, solve_args, /*with_eps=*/true, /*with_nu=*/false, /*with_refined=*/true);

  RunArgs diag_args;
  CLI::App* diagonal = app.add_subcommand("diagonal", "Solve a diagonal-forms instance");
  add_run_flags(diagonal, diag_args, true, false, false);

  RunArgs dist_args;
  CLI::App* distmod = app.add_subcommand("distmod", "Push values close to GF(q)[t]");
  add_run_flags(distmod, dist_args, false, true, false);

  FieldArgs lb_field;
  int lb_d = 1, lb_r = 1, lb_s = 2, lb_h = 1, lb_samples = 50;
  long long lb_probe = -1, lb_budget = 1ll << 24;
  uint64_t lb_seed = 1;
  std::string lb_out, lb_instance_out;
  CLI::App* lowerbound =
      app.add_subcommand("lowerbound", "Construct a sharpness instance and probe it");
  lb_field.add_to(lowerbound);
  lowerbound->add_option("--d", lb_d, "Form degree")->required();
  lowerbound->add_option("--r", lb_r, "Number of forms")->required();
  lowerbound->add_option("--s", lb_s, "Number of variables")->required();
  lowerbound->add_option("--h-mult", lb_h, "Irreducible multiplicity per coefficient")
      ->default_val(1);
  lowerbound->add_option("--probe", lb_probe,
                         "Exhaustive search up to this coordinate degree (-1 = off)")
      ->default_val(-1);
  lowerbound->add_option("--samples", lb_samples, "Kernel solutions to sample")
      ->default_val(50);
  lowerbound->add_option("--seed", lb_seed, "Sample seed")->default_val(1);
  lowerbound->add_option("--budget", lb_budget, "Probe evaluation budget")
      ->default_val(1ll << 24);
  lowerbound->add_option("--out", lb_out, "Write the report here instead of stdout");
  lowerbound->add_option("--instance-out", lb_instance_out,
                         "Also write the instance as a problem file");

  FieldArgs norm_field;
  int norm_degree = 2;
  std::string norm_out;
  CLI::App* normic = app.add_subcommand("normic", "Print the degree-d norm form");
  norm_field.add_to(normic);
  normic->add_option("--degree", norm_degree, "Form degree")->required();
  normic->add_option("--out", norm_out, "Write the form here instead of stdout");

  FieldArgs irr_field;
  uint32_t irr_degree = 1;
  bool irr_count_only = false;
  std::string irr_out;
  CLI::App* irreducibles =
      app.add_subcommand("irreducibles", "List or count monic irreducibles of a degree");
  irr_field.add_to(irreducibles);
  irreducibles->add_option("--degree", irr_degree, "Exact degree")->required();
  irreducibles->add_flag("--count", irr_count_only, "Report only the count");
  irreducibles->add_option("--out", irr_out, "Write the result here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) return do_run(solve_args, "general");
  if (diagonal->parsed()) return do_run(diag_args, "diagonal");
  if (distmod->parsed()) return do_run(dist_args, "distmod");

  if (lowerbound->parsed()) {
    if (!lb_field.resolve()) return 1;
    ffd_report* rep = nullptr;
    const ffd_status status =
        ffd_lower_bound(lb_field.p, lb_field.e, lb_d, lb_r, lb_s, lb_h, lb_probe,
                        lb_budget, lb_samples, lb_seed, &rep);
    int code = exit_code_for(status);
    if (rep) {
      char* json_text = nullptr;
      if (ffd_report_json(rep, &json_text) == FFD_OK) {
        if (!write_output(json_text, lb_out) && code == 0) code = 1;
        ffd_string_free(json_text);
      }
      ffd_report_free(rep);
    }
    if (status != FFD_OK) {
      print_error("lower-bound run failed");
      return code;
    }
    if (!lb_instance_out.empty()) {
      char* file_text = nullptr;
      const ffd_status file_status = ffd_lower_bound_form_file(
          lb_field.p, lb_field.e, lb_d, lb_r, lb_s, lb_h, &file_text);
      if (file_status != FFD_OK) {
        print_error("instance export failed");
        return exit_code_for(file_status);
      }
      const bool ok = write_output(file_text, lb_instance_out);
      ffd_string_free(file_text);
      if (!ok) return 1;
    }
    return code;
  }

  if (normic->parsed()) {
    if (!norm_field.resolve()) return 1;
    char* json_text = nullptr;
    const ffd_status status =
        ffd_normic_form_json(norm_field.p, norm_field.e, norm_degree, &json_text);
    if (status != FFD_OK) {
      print_error("norm form construction failed");
      return exit_code_for(status);
    }
    const bool ok = write_output(json_text, norm_out);
    ffd_string_free(json_text);
    return ok ? 0 : 1;
  }

  if (irreducibles->parsed()) {
    if (!irr_field.resolve()) return 1;
    char* json_text = nullptr;
    const ffd_status status = ffd_irreducibles_json(
        irr_field.p, irr_field.e, irr_degree, irr_count_only ? 0 : 1, &json_text);
    if (status != FFD_OK) {
      print_error("enumeration failed");
      return exit_code_for(status);
    }
    const bool ok = write_output(json_text, irr_out);
    ffd_string_free(json_text);
    return ok ? 0 : 1;
  }

  return 0;
}
