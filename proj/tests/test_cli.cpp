// End-to-end checks of the command-line interface: exit codes, JSON
// output, witness replay, and byte-stable output across runs.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "omegacanon/errors.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(OMEGACANON_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string example(const std::string& name) {
  return std::string(OMEGACANON_EXAMPLES_DIR) + "/" + name;
}

nlohmann::json parse(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  REQUIRE_FALSE(j.is_discarded());
  return j;
}

}  // namespace

TEST_CASE("wagner verb") {
  RunResult r = run_cli("wagner " + example("dma_inf_aa_fin_bb.json"));
  CHECK(r.exit_code == 0);
  nlohmann::json j = parse(r.stdout_text);
  CHECK(j["m_plus"] == 2);
  CHECK(j["m_minus"] == 3);
  CHECK(j["class"]["k"] == 3);
  CHECK(j["class"]["polarity"] == "minus");
  // byte-identical across runs
  CHECK(run_cli("wagner " + example("dma_inf_aa_fin_bb.json")).stdout_text == r.stdout_text);
}

TEST_CASE("wagner capacity and input errors") {
  CHECK(run_cli("wagner --cap 3 " + example("dma_inf_aa_fin_bb.json")).exit_code == 3);
  CHECK(run_cli("wagner /nonexistent.json").exit_code == 2);
  CHECK(run_cli("wagner " + example("fdfa_all_words.json")).exit_code == 2);
}

TEST_CASE("diameter verb") {
  nlohmann::json j =
      parse(run_cli("diameter " + example("fdfa_n_inf_aa_fin_bb.json")).stdout_text);
  CHECK(j["d_plus"] == 2);
  CHECK(j["d_minus"] == 3);
  nlohmann::json k = parse(run_cli("diameter " + example("fdfa_all_words.json")).stdout_text);
  CHECK(k["d_plus"] == 1);
  CHECK(k["d_minus"] == 0);
}

TEST_CASE("color verb") {
  std::string aut = example("dma_inf_aa_fin_bb.json");
  CHECK(parse(run_cli("color " + aut + " -u \"\" -v aa").stdout_text)["color"] == 2);
  CHECK(parse(run_cli("color " + aut + " -u \"\" -v a").stdout_text)["color"] == 3);
  nlohmann::json inf = parse(run_cli("color --infinite " + aut + " -u \"\" -v ab").stdout_text);
  CHECK(inf["color"] == 3);
  // irrelevant period: bottom color, clamped to the class minimum
  nlohmann::json irr =
      parse(run_cli("color " + example("dba_prefix_a.json") + " -u \"\" -v a").stdout_text);
  CHECK(irr["color"] == "-inf");
  CHECK(irr["clamped"] == 0);
}

TEST_CASE("colorful verb emits the six-state progress") {
  nlohmann::json j =
      parse(run_cli("colorful " + example("dma_inf_aa_fin_bb.json")).stdout_text);
  CHECK(j["leading_states"] == 1);
  CHECK(j["progress"]["0"]["states"] == 6);
  std::vector<int> colors = j["progress"]["0"]["colors"].get<std::vector<int>>();
  std::sort(colors.begin(), colors.end());
  CHECK(colors == std::vector<int>{1, 2, 2, 3, 3, 3});
}

TEST_CASE("fdfa-ops verbs") {
  std::string fs = example("fdfa_n_inf_aa_fin_bb.json");
  std::string fc = example("fdfa_duo_inf_aa_fin_bb.json");
  std::string all = example("fdfa_all_words.json");
  SUBCASE("equivalence across modes") {
    RunResult r = run_cli("fdfa-ops equiv " + fs + " " + fc);
    CHECK(r.exit_code == 0);
    CHECK(parse(r.stdout_text)["equivalent"] == true);
  }
  SUBCASE("failing containment exits 1 with a replayable witness") {
    RunResult r = run_cli("fdfa-ops contains " + fc + " " + all);
    CHECK(r.exit_code == 1);
    nlohmann::json j = parse(r.stdout_text);
    CHECK(j["contains"] == false);
    std::string u = j["witness"]["u"], v = j["witness"]["v"];
    // witness is accepted by the second operand and rejected by the first
    nlohmann::json in_all =
        parse(run_cli("accepts " + all + " -u \"" + u + "\" -v \"" + v + "\"").stdout_text);
    nlohmann::json in_fc =
        parse(run_cli("accepts " + fc + " -u \"" + u + "\" -v \"" + v + "\"").stdout_text);
    CHECK(in_all["accepts"] == true);
    CHECK(in_fc["accepts"] == false);
  }
  SUBCASE("empty of intersection with complement") {
    RunResult comp = run_cli("fdfa-ops complement " + fc + " --out /tmp/oc_comp.json");
    CHECK(comp.exit_code == 0);
    RunResult inter =
        run_cli("fdfa-ops intersect " + fc + " /tmp/oc_comp.json --out /tmp/oc_inter.json");
    CHECK(inter.exit_code == 0);
    RunResult empty = run_cli("fdfa-ops empty /tmp/oc_inter.json");
    CHECK(empty.exit_code == 0);
    nlohmann::json j = parse(empty.stdout_text);
    CHECK(j["empty"] == true);
    CHECK_FALSE(j.contains("witness"));
  }
}

TEST_CASE("accepts verb on both document kinds") {
  nlohmann::json aut = parse(
      run_cli("accepts " + example("dma_inf_aa_fin_bb.json") + " -u \"\" -v abaa").stdout_text);
  CHECK(aut["accepts"] == true);
  nlohmann::json fdfa = parse(
      run_cli("accepts " + example("fdfa_duo_inf_aa_fin_bb.json") + " -u \"\" -v bb").stdout_text);
  CHECK(fdfa["accepts"] == false);
}

TEST_CASE("bw verb") {
  SUBCASE("builds an equivalent acceptor") {
    RunResult r =
        run_cli("bw dba " + example("dba_inf_aa.json") + " --out /tmp/oc_bw.json");
    CHECK(r.exit_code == 0);
    nlohmann::json check = parse(run_cli("accepts /tmp/oc_bw.json -u \"\" -v aa").stdout_text);
    CHECK(check["accepts"] == true);
    nlohmann::json reject = parse(run_cli("accepts /tmp/oc_bw.json -u \"\" -v ab").stdout_text);
    CHECK(reject["accepts"] == false);
  }
  SUBCASE("rejects a three-color language") {
    CHECK(run_cli("bw dba " + example("dma_inf_aa_fin_bb.json")).exit_code == 2);
  }
}

TEST_CASE("dot verb") {
  RunResult r = run_cli("dot " + example("dma_inf_aa_fin_bb.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("digraph") == 0);
  CHECK(std::count(r.stdout_text.begin(), r.stdout_text.end(), '{') ==
        std::count(r.stdout_text.begin(), r.stdout_text.end(), '}'));
}

TEST_CASE("selftest verb") {
  RunResult ok = run_cli("selftest --bounds 1,3");
  CHECK(ok.exit_code == 0);
  CHECK(parse(ok.stdout_text)["violations"].empty());
  RunResult bug = run_cli("selftest --inject-bug");
  CHECK(bug.exit_code == 1);
  CHECK_FALSE(parse(bug.stdout_text)["violations"].empty());
  CHECK(run_cli("selftest --bounds 0,3").exit_code == 2);
}
