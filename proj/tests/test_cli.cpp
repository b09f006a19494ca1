#define DOCTEST_CONFIG_IMPLEMENT
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "cfdim/run_record.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

std::string g_binary = "./tools/cfdim";

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cmd(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  CmdResult res{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("bounds: singleton alphabet gives (0,0) and exit 0") {
  const CmdResult r = run_cmd("bounds --alphabet \"{2}\" --k 3 --out json");
  CHECK(r.exit_code == 0);
  const auto rec = cfdim::run_record_from_json(r.out);
  REQUIRE(rec.t_minus);
  REQUIRE(rec.t_plus);
  CHECK(*rec.t_minus == 0.0);
  CHECK(*rec.t_plus == 0.0);
  CHECK(rec.term_count == 1);
}

TEST_CASE("bounds: {1,2} at k=1 reports no plus root with exit 2") {
  const CmdResult r = run_cmd("bounds --alphabet \"{1,2}\" --k 1 --out json");
  CHECK(r.exit_code == 2);
  const auto rec = cfdim::run_record_from_json(r.out);
  CHECK(rec.t_minus);
  CHECK_FALSE(rec.t_plus);
  CHECK(rec.offending_plus == 1);
  CHECK(rec.t_plus_reason.find("increase k") != std::string::npos);
}

TEST_CASE("bounds: json output round-trips through the schema") {
  const CmdResult r = run_cmd("bounds --alphabet \"{2,3}\" --k 4 --out json --threads 1");
  REQUIRE(r.exit_code == 0);
  const auto rec = cfdim::run_record_from_json(r.out);
  CHECK(cfdim::run_record_from_json(cfdim::to_json_string(rec)) == rec);
  CHECK(rec.convention == "q^-2t");
  CHECK(rec.mode == "stored");
}

TEST_CASE("bounds: stable output is byte-identical across runs") {
  const std::string args =
      "bounds --alphabet \"{2,3}\" --k 6 --threads 1 --stable-output --out json";
  const CmdResult a = run_cmd(args);
  const CmdResult b = run_cmd(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK((a.out.find("wall_ms") == std::string::npos ||
         a.out.find("\"wall_ms\": null") != std::string::npos));
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cmd("").exit_code == 1);
  CHECK(run_cmd("bounds --k 2").exit_code == 1);                  // missing alphabet
  CHECK(run_cmd("bounds --alphabet \"{1,2}\"").exit_code == 1);   // missing k
  CHECK(run_cmd("nonsense").exit_code == 1);
  CHECK(run_cmd("bounds --alphabet \"{1,2\" --k 2").exit_code == 1);  // parse error
  CHECK(run_cmd("bounds --alphabet \"2N\" --k 1").exit_code == 1);    // missing ceiling
}

TEST_CASE("render writes an svg") {
  const char* path = "cfdim_cli_render.svg";
  const CmdResult r = run_cmd(std::string("render --alphabet \"{1,2}\" --depth 2 --out ") + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first.find("<?xml") == 0);
  std::remove(path);
}

TEST_CASE("verify subcommand runs the suites") {
  const CmdResult r = run_cmd("verify --suite sandwich --seed 11");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS] sandwich") != std::string::npos);

  const CmdResult d = run_cmd(
      "verify --suite distortion --alphabet \"{1,2}\" --k 5 --samples 12 --words 40");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("[PASS] distortion") != std::string::npos);
}

TEST_CASE("table command emits the comparison csv columns") {
  const CmdResult r = run_cmd("table --id 1 --budget 2 --threads 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("alphabet,ceiling,k,t_minus,t_plus,paper_t_minus,paper_t_plus,"
                   "delta_minus,delta_plus,flag") == 0);
  // five data rows
  std::size_t lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 6);
  CHECK(r.out.find("flagged") != std::string::npos);
}

TEST_CASE("sweep prints per-k records and a fit") {
  const CmdResult r = run_cmd("sweep --alphabet \"{2,3}\" --k-max 4 --threads 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("width fit") != std::string::npos);
  CHECK(r.out.find("monotone: T^- increasing, T^+ decreasing") != std::string::npos);
}

int main(int argc, char** argv) {
  std::vector<char*> pass;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--cfdim-bin=", 0) == 0)
      g_binary = arg.substr(std::string("--cfdim-bin=").size());
    else
      pass.push_back(argv[i]);
  }
  doctest::Context ctx(static_cast<int>(pass.size()), pass.data());
  return ctx.run();
}
