#include "cfdim/run_record.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace cfdim {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string opt_str(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string();
}

using nlohmann::json;

void put_opt(json& j, const char* key, const std::optional<double>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

void put_opt(json& j, const char* key, const std::optional<long long>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

RunRecord make_run_record(const DimensionBounds& db, const std::string& alphabet_text,
                          std::optional<long long> ceiling, int threads,
                          bool include_timing) {
  RunRecord r;
  r.alphabet = alphabet_text;
  r.ceiling = ceiling;
  r.k = db.k;
  r.t_minus = db.minus_result.root;
  r.t_minus_reason = db.minus_result.no_root_reason;
  r.t_plus = db.plus_result.root;
  r.t_plus_reason = db.plus_result.no_root_reason;
  r.offending_minus = db.minus_result.offending_terms;
  r.offending_plus = db.plus_result.offending_terms;
  r.plus_clamped = db.plus_result.clamped;
  r.tolerance = db.tolerance;
  r.term_count = db.term_count;
  r.threads = threads;
  r.mode = db.stored ? "stored" : "streamed";
  r.iterations_minus = db.minus_result.diag.iterations;
  r.iterations_plus = db.plus_result.diag.iterations;
  if (db.plus_result.root) r.mu_sum_at_plus = db.mu_sum_at_plus;
  r.tail_estimate = db.tail_estimate;
  if (include_timing) r.wall_ms = db.wall_seconds * 1e3;
  return r;
}

namespace {

json record_json(const RunRecord& r) {
  json j;
  j["schema"] = "cfdim.run/1";
  j["command"] = r.command;
  j["alphabet"] = r.alphabet;
  put_opt(j, "ceiling", r.ceiling);
  j["k"] = r.k;
  put_opt(j, "t_minus", r.t_minus);
  j["t_minus_reason"] = r.t_minus_reason;
  put_opt(j, "t_plus", r.t_plus);
  j["t_plus_reason"] = r.t_plus_reason;
  j["offending_minus"] = r.offending_minus;
  j["offending_plus"] = r.offending_plus;
  j["plus_clamped"] = r.plus_clamped;
  j["tolerance"] = r.tolerance;
  j["term_count"] = r.term_count;
  j["threads"] = r.threads;
  j["mode"] = r.mode;
  j["iterations_minus"] = r.iterations_minus;
  j["iterations_plus"] = r.iterations_plus;
  put_opt(j, "mu_sum_at_plus", r.mu_sum_at_plus);
  put_opt(j, "tail_estimate", r.tail_estimate);
  put_opt(j, "wall_ms", r.wall_ms);
  j["version"] = r.version;
  j["convention"] = r.convention;
  return j;
}

}  // namespace

std::string to_json_string(const RunRecord& r) { return record_json(r).dump(2) + "\n"; }

std::string to_json_array(const std::vector<RunRecord>& records) {
  json arr = json::array();
  for (const RunRecord& r : records) arr.push_back(record_json(r));
  return arr.dump(2) + "\n";
}

RunRecord run_record_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.alphabet = j.at("alphabet").get<std::string>();
  r.ceiling = get_opt<long long>(j, "ceiling");
  r.k = j.at("k").get<int>();
  r.t_minus = get_opt<double>(j, "t_minus");
  r.t_minus_reason = j.at("t_minus_reason").get<std::string>();
  r.t_plus = get_opt<double>(j, "t_plus");
  r.t_plus_reason = j.at("t_plus_reason").get<std::string>();
  r.offending_minus = j.at("offending_minus").get<std::uint64_t>();
  r.offending_plus = j.at("offending_plus").get<std::uint64_t>();
  r.plus_clamped = j.at("plus_clamped").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  r.term_count = j.at("term_count").get<std::uint64_t>();
  r.threads = j.at("threads").get<int>();
  r.mode = j.at("mode").get<std::string>();
  r.iterations_minus = j.at("iterations_minus").get<int>();
  r.iterations_plus = j.at("iterations_plus").get<int>();
  r.mu_sum_at_plus = get_opt<double>(j, "mu_sum_at_plus");
  r.tail_estimate = get_opt<double>(j, "tail_estimate");
  r.wall_ms = get_opt<double>(j, "wall_ms");
  r.version = j.at("version").get<std::string>();
  r.convention = j.at("convention").get<std::string>();
  return r;
}

std::string run_record_csv_header() {
  return "alphabet,ceiling,k,t_minus,t_plus,t_minus_reason,t_plus_reason,tolerance,"
         "term_count,threads,mode,convention,wall_ms";
}

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream os;
  os << '"' << r.alphabet << '"' << ',';
  if (r.ceiling) os << *r.ceiling;
  os << ',' << r.k << ',' << opt_str(r.t_minus) << ',' << opt_str(r.t_plus) << ',' << '"'
     << r.t_minus_reason << '"' << ',' << '"' << r.t_plus_reason << '"' << ','
     << fmt_double(r.tolerance) << ',' << r.term_count << ',' << r.threads << ',' << r.mode
     << ',' << r.convention << ',' << opt_str(r.wall_ms);
  return os.str();
}

std::string to_text(const RunRecord& r) {
  std::ostringstream os;
  os << "alphabet      " << r.alphabet;
  if (r.ceiling) os << "   (ceiling " << *r.ceiling << ")";
  os << "\n";
  os << "k             " << r.k << "   terms " << r.term_count << "   mode " << r.mode
     << "   threads " << r.threads << "\n";
  if (r.t_minus)
    os << "T_k^-         " << fmt_double(*r.t_minus) << "   (" << r.iterations_minus
       << " iterations)\n";
  else
    os << "T_k^-         no root: " << r.t_minus_reason << "\n";
  if (r.t_plus) {
    os << "T_k^+         " << fmt_double(*r.t_plus);
    if (r.plus_clamped) os << "   (clamped to 1)";
    os << "   (" << r.iterations_plus << " iterations)\n";
  } else {
    os << "T_k^+         no root: " << r.t_plus_reason << "\n";
  }
  os << "tolerance     " << fmt_double(r.tolerance) << "   convention " << r.convention
     << "\n";
  if (r.mu_sum_at_plus)
    os << "mu check      sum |b|^(-2 T+) = " << fmt_double(*r.mu_sum_at_plus)
       << (*r.mu_sum_at_plus <= 1.0 ? "  (<= 1)" : "  (> 1: k=1 caveat for small digits)")
       << "\n";
  if (r.tail_estimate)
    os << "tail estimate " << fmt_double(*r.tail_estimate)
       << "  (weight omitted beyond the ceiling; diagnostic only)\n";
  if (r.wall_ms) os << "wall time     " << fmt_double(*r.wall_ms) << " ms\n";
  return os.str();
}

}  // namespace cfdim
