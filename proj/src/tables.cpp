#include "cfdim/tables.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "cfdim/error.hpp"

namespace cfdim {

namespace {

// The first three complex rows disagree with the q^-2t sums beyond 5e-3
// (an independent brute-force implementation reproduces our values, not the
// published ones), so they are reported with deltas but marked flagged.
const std::vector<PaperRow> kTable1 = {
    {"{2..5}x{-8..8}i", std::nullopt, 3, 1.28512, 1.47856, true, false},
    {"{2,3}x{-2..2}i", std::nullopt, 5, 1.01264, 1.13546, true, false},
    {"{3..5}x{-8..8}i", std::nullopt, 3, 1.13013, 1.22647, true, false},
    {"{5..8}x{2..5}i", std::nullopt, 4, 0.684495, 0.707564, false, false},
    {"{10,11}x{10,11}i", std::nullopt, 4, 0.255398, 0.258506, false, false},
};

const std::vector<PaperRow> kTable2 = {
    {"{1,2}", std::nullopt, 20, 0.52417, 0.562868, false, false},
    {"{2,3}", std::nullopt, 20, 0.334398, 0.344864, false, false},
    {"{5..8}", std::nullopt, 12, 0.368563, 0.373438, false, false},
    {"{10,11}", std::nullopt, 16, 0.146668, 0.147231, false, false},
    // conflicts with the q^-2t convention (see README); deltas reported only
    {"{100..104}", std::nullopt, 10, 0.193454, 0.193556, true, false},
    {"2N", 1000000, 1, 0.688063, 0.856625, false, false},
    {"3N", 1000000, 1, 0.626338, 0.662808, false, false},
    {"4N", 1000000, 1, 0.593185, 0.609052, false, false},
    {"7N", 1000000, 1, 0.544423, 0.54838, false, false},
    {"10N", 500000, 1, 0.518104, 0.519956, false, false},
    {"100N", 500000, 1, 0.417934, 0.417959, false, false},
};

const std::vector<PaperRow> kTable3 = {
    {"F2", 1000000, 1, 0.791291, 1.0, false, true},
    {"F3", 1000000, 1, 0.759746, 0.841966, false, false},
    {"F5", 1000000, 1, 0.728387, 0.757026, false, false},
    {"F11", 1000000, 1, 0.692645, 0.700367, false, false},
    {"F37", 1000000, 1, 0.655331, 0.656722, false, false},
    {"F1000", 1000000, 1, 0.596801, 0.596828, false, false},
};

int resolved_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Rough wall-clock model used only for budget-driven k reduction.
double estimated_seconds(std::uint64_t terms, int threads) {
  return static_cast<double>(terms) * 5e-7 / static_cast<double>(resolved_threads(threads));
}

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

const std::vector<PaperRow>& paper_table(int table_id) {
  switch (table_id) {
    case 1:
      return kTable1;
    case 2:
      return kTable2;
    case 3:
      return kTable3;
    default:
      throw Error("table id must be 1, 2 or 3");
  }
}

TableRowResult run_table_row(const PaperRow& row, const SolveOptions& opts,
                             double budget_seconds) {
  AlphabetSpec spec = parse_alphabet(row.alphabet);
  if (row.ceiling) spec.ceiling = row.ceiling;
  const auto digits = materialize(spec);

  int k = row.k;
  if (budget_seconds > 0) {
    while (k > 1) {
      auto terms = word_count(digits.size(), k);
      if (terms && estimated_seconds(*terms, opts.threads) <= budget_seconds) break;
      --k;
    }
  }

  const DimensionBounds db = dimension_bounds(spec, k, opts);

  TableRowResult out;
  out.row = row;
  out.used_k = k;
  out.record = make_run_record(db, spec.text, spec.ceiling, resolved_threads(opts.threads),
                               /*include_timing=*/true);
  if (db.t_minus()) out.delta_minus = *db.t_minus() - row.ref_minus;
  if (db.t_plus()) out.delta_plus = *db.t_plus() - row.ref_plus;

  std::string flag;
  auto add_flag = [&](const char* f) {
    if (!flag.empty()) flag += ';';
    flag += f;
  };
  if (row.flagged) add_flag("flagged");
  if (k < row.k) add_flag("reduced-k");
  if (db.plus_result.clamped) add_flag("clamped");
  if (!db.t_minus() || !db.t_plus()) add_flag("no-root");
  out.flag = flag;
  return out;
}

void run_table(int table_id, double budget_seconds, const SolveOptions& opts,
               const std::string& format, std::ostream& os) {
  const auto& rows = paper_table(table_id);
  const bool csv = format != "text";
  if (csv)
    os << "alphabet,ceiling,k,t_minus,t_plus,paper_t_minus,paper_t_plus,delta_minus,"
          "delta_plus,flag\n";
  double remaining = budget_seconds;
  for (const PaperRow& row : rows) {
    const TableRowResult r = run_table_row(row, opts, budget_seconds > 0 ? remaining : 0);
    if (budget_seconds > 0 && r.record.wall_ms)
      remaining = std::max(1.0, remaining - *r.record.wall_ms / 1e3);
    const auto& rec = r.record;
    if (csv) {
      os << '"' << row.alphabet << '"' << ',';
      if (row.ceiling) os << *row.ceiling;
      os << ',' << r.used_k << ',';
      if (rec.t_minus) os << fmt6(*rec.t_minus);
      os << ',';
      if (rec.t_plus) os << fmt6(*rec.t_plus);
      os << ',' << fmt6(row.ref_minus) << ',' << fmt6(row.ref_plus) << ',';
      if (r.delta_minus) os << fmt6(*r.delta_minus);
      os << ',';
      if (r.delta_plus) os << fmt6(*r.delta_plus);
      os << ',' << r.flag << '\n';
    } else {
      os << row.alphabet;
      if (row.ceiling) os << " (ceiling " << *row.ceiling << ")";
      os << "  k=" << r.used_k << "  computed (";
      os << (rec.t_minus ? fmt6(*rec.t_minus) : std::string("no-root")) << ", ";
      os << (rec.t_plus ? fmt6(*rec.t_plus) : std::string("no-root")) << ")  reference ("
         << fmt6(row.ref_minus) << ", " << fmt6(row.ref_plus) << ")";
      if (!r.flag.empty()) os << "  [" << r.flag << "]";
      os << "\n";
    }
  }
}

}  // namespace cfdim
