#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rayclass");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rayclass::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("field and degree payloads") {
  const Run field = invoke({"field", "--dk", "-39"});
  REQUIRE(field.code == 0);
  const auto j = parse(field);
  CHECK(j["result"]["theta"] == "(-1+sqrt(-39))/2");
  CHECK(j["result"]["h"] == 4);
  for (const char* key : {"dk", "level", "precision_bits", "eps", "tool_version"}) CHECK(j.contains(key));
  CHECK(j["dk"] == -39);

  const auto deg = parse(invoke({"degree", "--dk", "-7", "--level", "3"}));
  CHECK(deg["result"]["degree"] == 4);
  CHECK(deg["result"]["factorization"][0]["splitting"] == "inert");

  const auto forms = parse(invoke({"forms", "--dk", "-39"}));
  CHECK(forms["result"]["forms"].size() == 4);
  CHECK(forms["result"]["forms"][1]["theta_Q"] == "(1+sqrt(-39))/4");
}

TEST_CASE("exit codes") {
  CHECK(invoke({"field", "--dk", "-12"}).code == 2);
  CHECK(invoke({"field", "--dk", "5"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"degree", "--dk", "-7"}).code == 2);
  CHECK(invoke({"degree", "--dk", "-4", "--level", "3"}).code == 2);
  CHECK(invoke({"--precision", "64", "--eps", "1e-40", "field", "--dk", "-7"}).code == 2);
  CHECK(invoke({"--threads", "zero", "field", "--dk", "-7"}).code == 2);
  CHECK(invoke({"minpoly", "--dk", "-7", "--level", "3", "--descriptor", "pair"}).code == 2);
  CHECK(invoke({"eval", "y", "--tau", "0,1"}).code == 2);

  const Run low = invoke({"eval", "j", "--tau", "0,0.05"});
  CHECK(low.code == 3);
  CHECK(parse(low)["error"]["kind"] == "ImTooSmall");

  const Run pass = invoke({"check", "curve", "--dk", "-39", "--level", "8"});
  CHECK(pass.code == 0);
  CHECK(parse(pass)["result"]["pass"] == true);
}

TEST_CASE("eval") {
  const auto j = parse(invoke({"--precision", "128", "--eps", "1e-30", "eval", "j", "--tau", "0,1"}));
  const std::string re = j["result"]["value"][0];
  CHECK(std::stod(re) == doctest::Approx(1728.0).epsilon(1e-12));
  const auto y = parse(invoke({"eval", "y", "--tau", "0.1,1.3", "--r", "0/8,1/8"}));
  CHECK(y["result"]["r"].is_string());
  CHECK(y["result"]["value"].size() == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"conjugates", "--dk", "-39", "--level", "3", "--descriptor", "y4"},
      {"minpoly", "--dk", "-7", "--level", "3", "--descriptor", "y4"},
      {"hcp", "--dk", "-23"},
      {"check", "lemma52", "--dk", "-39", "--level", "8"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd.front());
    const Run a = invoke(cmd);
    const Run b = invoke(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    // Thread count does not leak into the payload.
    std::vector<std::string> threaded = cmd;
    threaded.insert(threaded.begin(), {"--threads", "3"});
    CHECK(invoke(threaded).out == a.out);
  }
  // Elapsed time only appears on request.
  CHECK(invoke({"field", "--dk", "-7"}).out.find("elapsed") == std::string::npos);
  CHECK(invoke({"--timing", "field", "--dk", "-7"}).out.find("elapsed") != std::string::npos);
}

TEST_CASE("text output") {
  const Run r = invoke({"--output", "text", "field", "--dk", "-7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("theta: (-1+sqrt(-7))/2") != std::string::npos);
}
