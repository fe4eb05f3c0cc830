#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

struct Run {
  int status = -1;
  std::string out;
  json parsed() const { return json::parse(out); }
};

Run omega_run(const std::string& args) {
  std::string const cmd = std::string(OMEGA_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int const raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(OMEGA_DATA) + "/" + name; }

}  // namespace

TEST_CASE("validate") {
  auto ok = omega_run("validate " + data("walking_iso.json"));
  CHECK(ok.status == 0);
  CHECK(ok.parsed()["kind"] == "category");
  CHECK(ok.parsed()["report"]["ok"] == true);

  auto bad = omega_run("validate " + data("broken_iso.json"));
  CHECK(bad.status == 1);
  CHECK(bad.parsed()["report"]["ok"] == false);
  CHECK_FALSE(bad.parsed()["report"]["violations"].empty());

  CHECK(omega_run("validate " + data("witness_1_2.json")).parsed()["kind"] == "polygraph");
  CHECK(omega_run("validate " + data("point_into_iso.json")).parsed()["kind"] == "functor");
}

TEST_CASE("equivs") {
  auto r = omega_run("equivs " + data("walking_iso.json"));
  REQUIRE(r.status == 0);
  auto j = r.parsed();
  CHECK(j["counts"]["phi"] == 4);
  CHECK(j["counts"]["psi"] == 4);
  CHECK(j["diff"].empty());
  auto g = omega_run("equivs " + data("globe1.json")).parsed();
  CHECK(g["counts"]["phi"] == 2);
}

TEST_CASE("check-fib") {
  auto t = omega_run("check-fib " + data("iso_to_terminal.json") + " --mode trivfib");
  CHECK(t.status == 0);
  CHECK(t.parsed()["holds"] == true);
  auto p = omega_run("check-fib " + data("point_into_iso.json") + " --mode trivfib");
  CHECK(p.status == 1);
  CHECK(p.parsed()["counterexample"]["dim"] == 0);
  CHECK(omega_run("check-fib " + data("point_into_iso.json") + " --mode weq").status == 0);
  CHECK(omega_run("check-fib " + data("walking_iso.json") + " --mode gaunt").status == 1);
  CHECK(omega_run("check-fib " + data("globe1.json") + " --mode gaunt").status == 0);
  CHECK(omega_run("check-fib " + data("iso_to_terminal.json") + " --mode sideways").status == 2);
}

TEST_CASE("gen-walking census") {
  auto r = omega_run("gen-walking --model witness --n 1 --dim 4");
  REQUIRE(r.status == 0);
  auto j = r.parsed();
  CHECK(j["census"]["marked"] == json::parse("[0,1,2,4,8]"));
  CHECK(j["census"]["total"] == json::parse("[2,3,6,12,24]"));
  auto l = omega_run("gen-walking --model ladder --n 1 --dim 4").parsed();
  CHECK(l["census"] == j["census"]);
  CHECK(omega_run("gen-walking --model or --n 2 --dim 4").status == 0);
}

TEST_CASE("solve-lift") {
  auto r = omega_run("solve-lift --pres " + data("witness_1_2.json") + " --functor " +
                     data("iso_to_terminal.json") + " --target " + data("target_terminal.json"));
  CHECK(r.status == 0);
  CHECK(r.parsed()["lift"].is_object());
}

TEST_CASE("cylinder and quotient") {
  auto c = omega_run("cylinder " + data("walking_iso.json") + " --level 0");
  CHECK(c.status == 0);
  CHECK(c.parsed()["count"] == 4);
  CHECK(omega_run("cylinder " + data("walking_iso.json") + " --level 1 --check-projections")
            .status == 0);
  auto q = omega_run("quotient " + data("walking_iso.json") + " --level 1");
  CHECK(q.status == 0);
  CHECK(omega_run("quotient " + data("suspended_iso.json") + " --level 2").status == 0);
  CHECK(omega_run("quotient " + data("walking_iso.json") + " --level 3").status == 2);
}

TEST_CASE("corpus") {
  auto r = omega_run("corpus --seed 7 --check trivfib-decomposition");
  CHECK(r.status == 0);
  CHECK(r.parsed()["holds"] == true);
  auto s = omega_run("corpus --check valid --spec " + data("corpus.json"));
  CHECK(s.status == 0);
  CHECK(omega_run("corpus --check nonsense").status == 2);
}

TEST_CASE("errors") {
  CHECK(omega_run("equivs --nope").status == 2);
  CHECK(omega_run("").status == 2);
  CHECK(omega_run("--help").status == 0);
  auto m = omega_run("validate " + data("malformed.json"));
  CHECK(m.status == 2);
  CHECK(m.parsed()["error"] == "invalid-input");
  auto b = omega_run("--budget 10 cylinder " + data("flat_demo.json") + " --level 2");
  CHECK(b.status == 2);
  CHECK(b.parsed()["error"] == "budget-exceeded");
}

TEST_CASE("output is deterministic") {
  for (std::string const& args : std::vector<std::string>{"corpus --seed 3 --check closure", "gen-walking --model witness --n 2 --dim 4",
        "cylinder " + data("flat_demo.json") + " --level 1"}) {
    auto a = omega_run(args), b = omega_run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}
