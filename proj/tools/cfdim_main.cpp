// cfdim: rigorous upper/lower bounds on the Hausdorff dimension of sets of
// real or complex continued fractions with digits from a chosen alphabet.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cfdim/alphabet.hpp"
#include "cfdim/error.hpp"
#include "cfdim/kernels.hpp"
#include "cfdim/rendering.hpp"
#include "cfdim/run_record.hpp"
#include "cfdim/solver.hpp"
#include "cfdim/tables.hpp"
#include "cfdim/verify.hpp"

namespace {

struct AlphabetArgs {
  std::string spec_text;
  std::string file;
  std::optional<long long> ceiling;
};

void add_alphabet_options(CLI::App* cmd, AlphabetArgs& a, bool required) {
  auto* spec = cmd->add_option("--alphabet", a.spec_text,
                               "digit alphabet: {1,2} | {a..b} | 2N | F3 | {..}x{..}i");
  auto* file = cmd->add_option("--alphabet-file", a.file, "file with one digit per line");
  if (required) {
    spec->excludes(file);
    file->excludes(spec);
  }
  cmd->add_option("--ceiling", a.ceiling, "bound on Re(digit); required for 2N/Fn kinds");
}

cfdim::AlphabetSpec resolve_alphabet(const AlphabetArgs& a) {
  if (!a.file.empty() && !a.spec_text.empty())
    throw cfdim::Error("give either --alphabet or --alphabet-file, not both");
  if (a.file.empty() && a.spec_text.empty())
    throw cfdim::Error("an alphabet is required (--alphabet or --alphabet-file)");
  cfdim::AlphabetSpec spec = a.file.empty() ? cfdim::parse_alphabet(a.spec_text)
                                            : cfdim::load_alphabet_file(a.file);
  spec.ceiling = a.ceiling;
  return spec;
}

struct SolveArgs {
  double tol = 0;
  int threads = 0;
  std::string mode = "auto";
  bool clamp_one = false;
  std::string kernel = "auto";

  cfdim::SolveOptions to_options() const {
    cfdim::SolveOptions o;
    o.tol = tol;
    o.threads = threads;
    o.clamp_one = clamp_one;
    if (mode == "stored")
      o.mode = cfdim::StorageMode::Stored;
    else if (mode == "streamed")
      o.mode = cfdim::StorageMode::Streamed;
    else
      o.mode = cfdim::StorageMode::Auto;
    return o;
  }
};

void add_solve_options(CLI::App* cmd, SolveArgs& s) {
  cmd->add_option("--tol", s.tol, "bisection tolerance in t (default 1e-10/1e-6)");
  cmd->add_option("--threads", s.threads, "worker threads (0 = machine parallelism)");
  cmd->add_option("--mode", s.mode, "weight storage: auto|stored|streamed")
      ->check(CLI::IsMember({"auto", "stored", "streamed"}));
  cmd->add_flag("--clamp-one", s.clamp_one, "cap T+ at 1 (table-compat flag)");
  cmd->add_option("--kernel", s.kernel, "reduction kernel: auto|scalar|avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

int resolved_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// "auto" leaves the env-driven default (CFDIM_KERNEL) in charge.
void select_kernel(const std::string& name) {
  if (name != "auto") cfdim::kernels::force(name);
}

void emit_record(const cfdim::RunRecord& rec, const std::string& out_format, bool header) {
  if (out_format == "json") {
    std::cout << cfdim::to_json_string(rec);
  } else if (out_format == "csv") {
    if (header) std::cout << cfdim::run_record_csv_header() << "\n";
    std::cout << cfdim::to_csv_row(rec) << "\n";
  } else {
    std::cout << cfdim::to_text(rec);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimension bounds for continued fraction limit sets"};
  app.set_version_flag("--version", std::string("cfdim ") + cfdim::kVersion);
  app.require_subcommand(1);

  // bounds
  AlphabetArgs b_alpha;
  SolveArgs b_solve;
  int b_k = 1;
  std::string b_out = "text";
  bool b_stable = false;
  auto* bounds = app.add_subcommand("bounds", "solve both Moran-type equations at one k");
  add_alphabet_options(bounds, b_alpha, true);
  add_solve_options(bounds, b_solve);
  bounds->add_option("--k", b_k, "word length")->required();
  bounds->add_option("--out", b_out, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  bounds->add_flag("--stable-output", b_stable, "omit timings for byte-stable output");

  // sweep
  AlphabetArgs s_alpha;
  SolveArgs s_solve;
  int s_kmax = 2;
  std::string s_out = "text";
  bool s_stable = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "bounds for k = 1..k_max with diagnostics");
  add_alphabet_options(sweep_cmd, s_alpha, true);
  add_solve_options(sweep_cmd, s_solve);
  sweep_cmd->add_option("--k-max", s_kmax, "largest word length")->required();
  sweep_cmd->add_option("--out", s_out, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sweep_cmd->add_flag("--stable-output", s_stable, "omit timings for byte-stable output");

  // table
  SolveArgs t_solve;
  int t_id = 2;
  double t_budget = 0;
  std::string t_out = "csv";
  auto* table_cmd = app.add_subcommand("table", "reproduce a published reference table");
  add_solve_options(table_cmd, t_solve);
  table_cmd->add_option("--id", t_id, "table id: 1 complex, 2 real, 3 cofinite")->required();
  table_cmd->add_option("--budget", t_budget, "wall budget in seconds (0 = use table's k)");
  table_cmd->add_option("--out", t_out, "output format")
      ->check(CLI::IsMember({"text", "csv"}));

  // verify
  AlphabetArgs v_alpha;
  std::string v_suite = "all";
  std::uint64_t v_seed = 7;
  int v_k = 5, v_samples = 24, v_words = 0;
  std::string v_kernel = "auto";
  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--suite", v_suite, "lemmas|distortion|sandwich|all")
      ->check(CLI::IsMember({"lemmas", "distortion", "sandwich", "all"}));
  verify_cmd->add_option("--seed", v_seed, "random seed");
  add_alphabet_options(verify_cmd, v_alpha, false);
  verify_cmd->add_option("--k", v_k, "word length for alphabet-driven distortion words");
  verify_cmd->add_option("--samples", v_samples, "disk sample points per word");
  verify_cmd->add_option("--words", v_words, "number of random words (0 = suite default)");
  verify_cmd->add_option("--kernel", v_kernel, "reduction kernel: auto|scalar|avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  // render
  AlphabetArgs r_alpha;
  int r_depth = 1;
  std::string r_out;
  auto* render_cmd = app.add_subcommand("render", "emit iterate disks as SVG");
  add_alphabet_options(render_cmd, r_alpha, true);
  render_cmd->add_option("--depth", r_depth, "iterate depth")->check(CLI::Range(1, 2));
  render_cmd->add_option("--out", r_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (*bounds) {
      select_kernel(b_solve.kernel);
      const auto spec = resolve_alphabet(b_alpha);
      const auto db = cfdim::dimension_bounds(spec, b_k, b_solve.to_options());
      auto rec = cfdim::make_run_record(db, spec.text, spec.ceiling,
                                        resolved_threads(b_solve.threads), !b_stable);
      emit_record(rec, b_out, true);
      return (db.t_minus() && db.t_plus()) ? 0 : 2;
    }

    if (*sweep_cmd) {
      select_kernel(s_solve.kernel);
      const auto spec = resolve_alphabet(s_alpha);
      const auto digits = cfdim::materialize(spec);
      const auto sw = cfdim::sweep(digits, s_kmax, s_solve.to_options());
      std::vector<cfdim::RunRecord> records;
      for (const auto& db : sw.per_k) {
        auto rec = cfdim::make_run_record(db, spec.text, spec.ceiling,
                                          resolved_threads(s_solve.threads), !s_stable);
        rec.command = "sweep";
        records.push_back(std::move(rec));
      }
      if (s_out == "json") {
        std::cout << cfdim::to_json_array(records);
      } else {
        bool first = true;
        for (const auto& rec : records) {
          emit_record(rec, s_out, first);
          first = false;
        }
      }
      if (s_out == "text") {
        std::cout << "monotone: T^- " << (sw.minus_monotone ? "increasing" : "VIOLATED")
                  << ", T^+ " << (sw.plus_monotone ? "decreasing" : "VIOLATED") << "\n";
        std::printf("width fit: C/k with C = %.6g (rms residual %.3g)\n", sw.width_fit_c,
                    sw.width_fit_residual);
        for (const auto& v : sw.violations) std::cout << "violation: " << v << "\n";
      }
      return 0;
    }

    if (*table_cmd) {
      select_kernel(t_solve.kernel);
      cfdim::run_table(t_id, t_budget, t_solve.to_options(), t_out, std::cout);
      return 0;
    }

    if (*verify_cmd) {
      select_kernel(v_kernel);
      std::vector<cfdim::SuiteReport> reports;
      if (v_suite == "lemmas" || v_suite == "all") {
        reports.push_back(cfdim::verify_lemmas(v_seed, v_words ? v_words : 1000));
        reports.push_back(cfdim::verify_derivative_identity(v_seed + 1));
      }
      if (v_suite == "distortion" || v_suite == "all") {
        if (!v_alpha.spec_text.empty() || !v_alpha.file.empty()) {
          const auto digits = cfdim::materialize(resolve_alphabet(v_alpha));
          reports.push_back(cfdim::verify_distortion_suite(v_seed, v_words ? v_words : 200,
                                                           v_samples, &digits, v_k));
        } else {
          reports.push_back(
              cfdim::verify_distortion_suite(v_seed, v_words ? v_words : 200, v_samples));
        }
      }
      if (v_suite == "sandwich" || v_suite == "all")
        reports.push_back(cfdim::verify_sandwich_suite());

      bool all_ok = true;
      for (const auto& r : reports) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.summary
                  << "\n";
        for (const auto& f : r.failures) std::cout << "       " << f << "\n";
        all_ok = all_ok && r.passed;
      }
      return all_ok ? 0 : 1;
    }

    if (*render_cmd) {
      const auto digits = cfdim::materialize(resolve_alphabet(r_alpha));
      cfdim::render_svg_file(digits, r_depth, r_out);
      std::cout << "wrote " << r_out << "\n";
      return 0;
    }
  } catch (const cfdim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
