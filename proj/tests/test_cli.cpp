#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bautin/vector_field.hpp"
#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bautin-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = bautin::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string field(const char* name) { return std::string(BAUTIN_DATA_DIR) + "/fields/" + name; }

}  // namespace

TEST_CASE("lyapunov command") {
  const auto r = run({"lyapunov", "-n", field("cubic_f30.vf"), "-J", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "L_1 = 3/8\n");
  CHECK(r.err.empty());

  const auto j = run({"lyapunov", field("hamiltonian.vf"), "-J", "6", "--output", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == "bautin-lab/1");
  REQUIRE(doc["L"].size() == 6);
  for (const auto& L : doc["L"]) CHECK(L["value"] == "0");

  const auto missing = run({"lyapunov", "missing.vf"});
  CHECK(missing.code == 1);
  CHECK(missing.out.empty());
  CHECK(!missing.err.empty());
}

TEST_CASE("lyapunov output formats") {
  const auto csv = run({"lyapunov", field("cubic_f30.vf"), "-J", "2", "--output", "csv"});
  CHECK(csv.out == "index,value\n1,3/8\n2,0\n");
  const auto fl = run({"lyapunov", field("cubic_f30.vf"), "-J", "1", "--mode", "float", "--precision", "30"});
  CHECK(fl.code == 0);
  CHECK(fl.out.rfind("L_1 = 3.75", 0) == 0);
  const auto v = run({"lyapunov", field("cubic_f30.vf"), "-J", "1", "--show-v"});
  CHECK(v.out.find("V_4 = (-5/8)*x^3*y + (-3/8)*x*y^3") != std::string::npos);
  const auto js = run({"lyapunov", field("cubic_f30.vf"), "-J", "1", "--show-v", "--output", "json"});
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["V"][2]["coefficients"][1] == "-5/8");
  CHECK(run({"lyapunov", field("cubic_f30.vf"), "--output", "xml"}).code == 1);
  CHECK(run({"lyapunov", field("cubic_f30.vf"), "-J", "0"}).code == 1);
  CHECK(run({"lyapunov"}).code == 1);
}

TEST_CASE("bad field text gives exit 1 with the line") {
  const std::string path = "bad_field.vf";
  {
    std::ofstream f(path);
    f << "n 2\nF 5 0 1\n";
  }
  const auto r = run({"lyapunov", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("gaps command") {
  const auto q4 = run({"gaps", field("quartic.vf")});
  CHECK(q4.code == 0);
  CHECK(q4.out.find("observed first nonzero:  L_3") != std::string::npos);
  CHECK(q4.out.find("predicted first nonzero: L_3") != std::string::npos);
  const auto q5 = run({"gaps", field("quintic.vf"), "--output", "json"});
  CHECK(q5.code == 0);
  const auto doc = nlohmann::json::parse(q5.out);
  CHECK(doc["observed_first_nonzero"] == 2);
  CHECK(doc["match"] == true);
  const auto h = run({"gaps", field("hamiltonian_cubic.vf")});
  CHECK(h.code == 0);
  CHECK(h.out.find("all zero (partial center condition)") != std::string::npos);
  CHECK(run({"gaps", field("general_cubic.vf")}).code == 1);
}

TEST_CASE("center-check command") {
  const auto h = run({"center-check", field("hamiltonian.vf")});
  CHECK((h.code == 0 || h.code == 6));
  const auto c = run({"center-check", field("cubic_f30.vf"), "--output", "json"});
  CHECK(c.code == 5);
  const auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["weak_focus_order"] == 1);
  CHECK(doc["constants"][0]["value"] == "3/8");
  const auto g = run({"center-check", field("general_cubic.vf")});
  CHECK(g.code == 5);
  CHECK(g.out.find("W = 1") != std::string::npos);
  const auto jl = run({"center-check", "--jl-root", "1"});
  CHECK(jl.code == 5);
  CHECK(jl.out.find("W = 8") != std::string::npos);
  CHECK(jl.out.find("bound attained") != std::string::npos);
}

TEST_CASE("example-jl command") {
  const auto r = run({"example-jl", "--root", "1", "--b4", "-1", "--precision", "60", "--output", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& rep = doc["reports"][0];
  CHECK(rep["sigma"].get<std::string>().rfind("-6.8666282005542388204349525264340219551", 0) == 0);
  CHECK(rep["L8_over_b4_8"].get<std::string>().rfind("-4.79335120006176746491530450475227536", 0) == 0);
  CHECK(rep["P"]["columns"][0] == "v0,3");
  CHECK(rep["P"]["display"].size() == 8);
  CHECK(rep["det_P"].is_string());
  const auto t = run({"example-jl", "--root", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.find("L_8 / b4^8 = -2.1597168095184527721952") != std::string::npos);
  const auto bad = run({"example-jl", "--b4", "0.5"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("negative") != std::string::npos);
  CHECK(run({"example-jl", "--precision", "20"}).code == 1);
}

TEST_CASE("random-field command") {
  const auto a = run({"random-field", "--kind", "divergence-free", "-d", "3", "--seed", "7"});
  const auto b = run({"random-field", "--kind", "divergence-free", "-d", "3", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto vf = bautin::parse_vector_field(a.out);
  CHECK(vf.degree() == 3);
  const auto lyap_path = "random_field.vf";
  {
    std::ofstream f(lyap_path);
    f << a.out;
  }
  const auto l = run({"lyapunov", lyap_path, "-J", "4", "--output", "csv"});
  CHECK(l.out == "index,value\n1,0\n2,0\n3,0\n4,0\n");
  std::remove(lyap_path);
}

TEST_CASE("help and unknown commands") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
}
