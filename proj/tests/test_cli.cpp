#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string("PICARD3_NO_COLOR=1 '") + PICARD3_BIN + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// "key: value" lines of the text rendering.
std::map<std::string, std::string> text_fields(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find(": ");
    if (pos != std::string::npos) out[line.substr(0, pos)] = line.substr(pos + 2);
  }
  return out;
}

}  // namespace

TEST_CASE("analyze: Wehler fixture") {
  Run r = run("analyze --n 2");
  CHECK(r.code == 0);
  auto f = text_fields(r.out);
  CHECK(f["index in Pi"] == "6");
  CHECK(f["signature"] == "(1,2)");
  CHECK(f["m"] == "2");
  CHECK(r.out.find("\x1b[") == std::string::npos);
}

TEST_CASE("analyze: G_8 as JSON") {
  Run r = run("analyze --k 8 --l -8 --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == "picard3-aut/1");
  CHECK(j["congruence"]["index_in_Pi"] == 192);
  CHECK(j["congruence"]["free_rank"] == 17);
  CHECK(j["congruence"]["delta_n"] == 2);
  CHECK(j["bounds"]["search"] == 20);
  CHECK(j["bounds"]["cap"] == 1000);
  for (const auto& s : j["samples"]) {
    CHECK(s["checks"]["isometry"] == true);
    CHECK(s["checks"]["discriminant_kernel"] == true);
    CHECK(s["checks"]["positive_cone"] == true);
    CHECK(s["checks"]["lift_roundtrip"] == true);
  }
}

TEST_CASE("analyze: text and JSON agree") {
  for (const char* spec : {"--n 2", "--n 3", "--k 5 --l -7", "--n 8 --bound 12"}) {
    CAPTURE(spec);
    Run t = run(std::string("analyze ") + spec);
    Run js = run(std::string("analyze ") + spec + " --format json");
    REQUIRE(t.code == 0);
    REQUIRE(js.code == 0);
    auto f = text_fields(t.out);
    json j = json::parse(js.out);
    CHECK(f["disc"] == j["disc"].dump());
    CHECK(f["m"] == j["m"].dump());
    CHECK(f["bounds"] == "search " + j["bounds"]["search"].dump() + ", cap " + j["bounds"]["cap"].dump());
    CHECK(f["antisymplectic exists"] == (j["antisymplectic_exists"].get<bool>() ? "yes" : "no"));
    if (j.contains("congruence")) {
      CHECK(f["index in Pi"] == j["congruence"]["index_in_Pi"].dump());
      CHECK(f["delta_n"] == j["congruence"]["delta_n"].dump());
      if (!j["congruence"]["free_rank"].is_null()) CHECK(f["free rank"] == j["congruence"]["free_rank"].dump());
    }
    for (const auto& s : j["samples"]) {
      std::string a = s["alpha"].dump();
      auto pos = t.out.find("sample " + a + ": A = " + s["salem"]["A"].dump());
      CHECK(pos != std::string::npos);
    }
  }
}

TEST_CASE("analyze: lattice input") {
  Run r = run(R"(analyze --lattice '{"family":"U(k)+<2l>","k":3,"l":-3}' --format json)");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["congruence"]["index_in_Pi"] == 24);
  Run m = run(R"(analyze --lattice '{"family":"M_n","n":2}')");
  CHECK(m.code == 0);
  CHECK(run(R"(analyze --lattice '{"gram":[[0,2,2],[2,0,2],[2,2,0]]}')").code == 1);
  CHECK(run(R"(analyze --lattice '{not json')").code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run("analyze --k 0 --l 1").code == 1);
  CHECK(run("analyze").code == 1);
  CHECK(run("analyze --n 2 --k 2 --l -2").code == 1);
  CHECK(run("analyze --n 2 --bound 0").code == 1);
  CHECK(run("analyze --n 2 --format yaml").code == 1);
  CHECK(run("bogus").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("analyze --k 1 --l 1").code == 2);  // signature (2,1)
  CHECK(run("analyze --k 1 --l -1").code == 2);  // U + <-2> has roots
  CHECK(run("salem --matrix 1,2,x").code == 1);
  CHECK(run("salem --matrix 1,2,3").code == 1);
  CHECK(run("salem --matrix 1,2,2,9").code == 2);  // det 5
  CHECK(run("congruence --n 0").code == 1);
  CHECK(run("verify --suite nope").code == 1);
  CHECK(run("verify --trials 0").code == 1);
}

TEST_CASE("salem") {
  Run r = run("salem --matrix 1,2,4,9");
  CHECK(r.code == 0);
  auto f = text_fields(r.out);
  CHECK(f["salem"] == "yes");
  CHECK(r.out.find("A = 98") != std::string::npos);
  Run id = run("salem --matrix 1,0,0,1");
  CHECK(id.code == 0);
  CHECK(text_fields(id.out)["salem"] == "no");
  Run js = run("salem --matrix 1,2,4,9 --format json");
  json j = json::parse(js.out);
  CHECK(j["A"] == 98);
  CHECK(j["is_salem"] == true);
  CHECK(j["char_poly"] == json::array({1, -99, 99, -1}));
  CHECK(f["char poly"] == "t^3 - 99 t^2 + 99 t - 1");
}

TEST_CASE("congruence") {
  Run r = run("congruence --n 8");
  CHECK(r.code == 0);
  auto f = text_fields(r.out);
  CHECK(f["index in Pi"] == "192");
  CHECK(f["delta_n"] == "2");
  CHECK(f["free rank"] == "17");
  json j = json::parse(run("congruence --n 8 --format json").out);
  CHECK(j["index_in_Pi"] == 192);
  CHECK(j["free_rank"] == 17);
  CHECK(j["schema"] == "picard3-aut/1");
  json j2 = json::parse(run("congruence --n 2 --bound 3 --format json").out);
  CHECK(j2["free_rank"].is_null());
  CHECK_FALSE(j2["torsion_bounded_search"]["found"].empty());
}

TEST_CASE("verify") {
  Run a = run("verify --seed 7");
  Run b = run("verify --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("PASS clifford") != std::string::npos);
  CHECK(a.out.find("PASS exterior") != std::string::npos);
  CHECK(a.out.find("PASS roundtrip") != std::string::npos);
  Run e = run("verify --suite exterior --trials 10");
  CHECK(e.code == 0);
  CHECK(e.out.find("exterior") != std::string::npos);
  CHECK(e.out.find("clifford") == std::string::npos);
  CHECK(e.out.find("roundtrip") == std::string::npos);
  Run big = run("verify --trials 100 --seed 7");
  CHECK(big.code == 0);
  CHECK(big.out.find("FAIL") == std::string::npos);
  Run js = run("verify --trials 2 --format json");
  REQUIRE(js.code == 0);
  json j = json::parse(js.out);
  CHECK(j["schema"] == "picard3-aut/1");
}
