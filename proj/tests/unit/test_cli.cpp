#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = jetlie::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("table command") {
  auto r = cli({"table", "--algebra", "ecga"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass  table.ecga") != std::string::npos);
  CHECK(cli({"table", "--algebra", "cga_general", "--n", "3", "--lowest", "-2", "--highest", "2"}).code == 0);
  auto bad = cli({"table", "--algebra", "cga_general", "--n", "5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("BadParams") != std::string::npos);
}

TEST_CASE("invariance command") {
  auto r = cli({"invariance", "--system", "sys_4_2", "--field", "ecga:X1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("residual") != std::string::npos);
  CHECK(r.out.find("witness") != std::string::npos);
  CHECK(cli({"invariance", "--system", "sys_4_2", "--algebra", "ea3"}).code == 0);
  CHECK(cli({"invariance", "--algebra", "ecga", "--invariant", "Ustar", "--invariant", "Vstar"}).code == 0);
  CHECK(cli({"invariance", "--field", "cga2:Y11", "--invariant", "WII", "--expect-fail"}).code == 0);
  CHECK(cli({"invariance", "--system", "wi_equation", "--field", "cga2:X1", "--condition", "WIII", "--solve-for",
                "u_xx"})
            .code == 0);
  CHECK(cli({"invariance", "--system", "wi_equation", "--field", "cga2:X1"}).code == 1);
  CHECK(cli({"invariance", "--field", "cga2_pair:X1", "--invariant", "Zuv", "--system", "pair_condition"}).code == 0);
  CHECK(cli({"invariance", "--field", "cga2_pair:X1", "--invariant", "Zuv"}).code == 1);
  auto lone = cli({"invariance", "--field", "cga2_pair:X1", "--invariant", "Zuv", "--condition", "Zuv_condition",
                   "--solve-for", "u_xx"});
  CHECK(lone.code == 2);
  CHECK(lone.err.find("--condition") != std::string::npos);
  CHECK(cli({"invariance", "--system", "wi_equation", "--field", "cga2:X1", "--solve-for", "u_xx"}).code == 2);
}

TEST_CASE("prolong, bracket, rank") {
  auto p = cli({"prolong", "--field", "cga2:X1", "--order", "2"});
  CHECK(p.code == 0);
  CHECK(p.out.find("u_xx: 4*t*u_xx") != std::string::npos);
  auto b = cli({"bracket", "--field", "ecga:Y10", "--field", "ecga:Y20"});
  CHECK(b.out.find("= @u3") != std::string::npos);
  CHECK(cli({"rank", "--algebra", "ea1", "--order", "1", "--expect", "8"}).code == 0);
  CHECK(cli({"rank", "--algebra", "ea1", "--order", "1", "--expect", "9"}).code == 1);
}

TEST_CASE("transform command") {
  CHECK(cli({"transform", "--transformation", "rotation"}).code == 0);
  CHECK(cli({"transform", "--transformation", "ecga_projective", "--lhs", "W3", "--rhs", "(1 - p*t)^2*W3"}).code == 0);
  CHECK(cli({"transform", "--transformation", "ecga_projective", "--lhs", "W3", "--rhs", "W3"}).code == 1);
  CHECK(cli({"transform", "--transformation", "nope"}).code == 2);
}

TEST_CASE("user DSL files") {
  auto path = temp_file("jetlie_cli_heat.jl", R"(
space heat { independent t, x; dependent u; order 2 }
field T on heat = -@t;
field G on heat = -t*@x + x/2*u*@u;
field D on heat = -2*t*@t - x*@x;
expr lap on heat = u_xx;
system heat_eq on heat { eq E: u_t - u_xx; solve u_t from E; }
)");
  CHECK(cli({"invariance", "--file", path, "--system", "heat_eq", "--field", "T", "--field", "G", "--field", "D"}).code == 0);
  auto bad = cli({"invariance", "--file", path, "--system", "heat_eq", "--field", "Q"});
  CHECK(bad.code == 2);
  auto broken = temp_file("jetlie_cli_broken.jl", "space tiny { independent t; dependent u; order 1 }\nexpr e on tiny = u_t +;\n");
  auto r = cli({"invariance", "--file", broken, "--system", "x", "--field", "a:b"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  CHECK(r.err.find("2:") != std::string::npos);
}

TEST_CASE("verify-paper with filters and reports") {
  auto path = (std::filesystem::temp_directory_path() / "jetlie_cli_report.jsonl").string();
  auto r = cli({"verify-paper", "--only", "theorem7", "--report", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("9 pass, 0 fail, 0 error") != std::string::npos);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("\"record\":\"header\"") != std::string::npos);
  CHECK(cli({"verify-paper", "--only", "nonsense"}).code == 2);
  CHECK(cli({"verify-paper", "--seed", "notanumber"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
