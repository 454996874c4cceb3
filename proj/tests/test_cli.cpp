#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

// End-to-end runs of the installed subcommands against the fixture corpus,
// checking exit codes and the load-bearing report lines.

namespace {

const std::string kCli = RELGRAPH_CLI_PATH;
const std::filesystem::path kFixtures{RELGRAPH_FIXTURE_DIR};

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) {
    res.output += buf.data();
  }
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string fx(const std::string& name) {
  return (kFixtures / name).string();
}

}  // namespace

TEST_CASE("analyze") {
  RunResult r = run("analyze " + fx("twin_bundles_e.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("regular: {}") != std::string::npos);
  CHECK(r.output.find("infinite receivers: {u}") != std::string::npos);
  CHECK(r.output.find("sources: {v,w}") != std::string::npos);
  CHECK(r.output.find("status: valid") != std::string::npos);
}

TEST_CASE("analyze rejects a bad CK set") {
  RunResult r = run("analyze " + fx("twin_bundles_left.json"));
  CHECK(r.exit_code == 0);
  // now force an invalid CK vertex through a temp file
  std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "relgraph_bad_a.json";
  std::string text = R"({"vertices": ["u", "v"],
    "edges": [{"name": "e", "src": "v", "rng": "u", "card": "inf"}],
    "A": ["u"]})";
  {
    FILE* f = fopen(tmp.string().c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(text.c_str(), f);
    fclose(f);
  }
  RunResult bad = run("analyze " + tmp.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("status: invalid") != std::string::npos);
}

TEST_CASE("check-morphism") {
  RunResult ok = run("check-morphism " + fx("one_bundle_apex.json") + " " +
                     fx("one_bundle_left.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("morphism: ok") != std::string::npos);

  RunResult bad = run("check-morphism " + fx("one_bundle_left.json") + " " +
                      fx("twin_bundles_e.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("morphism: invalid") != std::string::npos);
}

TEST_CASE("pushout") {
  std::filesystem::path out =
      std::filesystem::temp_directory_path() / "relgraph_pushout_out.json";
  RunResult r = run("pushout " + fx("one_bundle_apex.json") + " " +
                    fx("one_bundle_left.json") + " " + fx("one_bundle_right.json") +
                    " --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("vertices: {u,v,w}") != std::string::npos);
  CHECK(r.output.find("A: {}") != std::string::npos);
  RunResult check = run("analyze " + out.string());
  CHECK(check.exit_code == 0);
}

TEST_CASE("ideals") {
  RunResult r = run("ideals " + fx("loop.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("codes: 3") != std::string::npos);

  RunResult rel = run("ideals " + fx("loop.json") + " --A v");
  CHECK(rel.exit_code == 0);
  CHECK(rel.output.find("codes: 2") != std::string::npos);

  std::filesystem::path dot =
      std::filesystem::temp_directory_path() / "relgraph_lattice.dot";
  RunResult with_dot =
      run("ideals " + fx("loop.json") + " --dot " + dot.string());
  CHECK(with_dot.exit_code == 0);
  CHECK(std::filesystem::exists(dot));
}

TEST_CASE("admissible") {
  RunResult f7 = run("admissible " + fx("twin_bundles_apex.json") + " " +
                     fx("twin_bundles_left.json") + " " + fx("twin_bundles_right.json"));
  CHECK(f7.exit_code == 1);
  CHECK(f7.output.find("not admissible") != std::string::npos);
  CHECK(f7.output.find("witness: u") != std::string::npos);

  RunResult f8 = run("admissible " + fx("one_bundle_apex.json") + " " +
                     fx("one_bundle_left.json") + " " + fx("one_bundle_right.json"));
  CHECK(f8.exit_code == 0);
  CHECK(f8.output.find("admissible") != std::string::npos);

  RunResult suggest = run("admissible " + fx("twin_bundles_apex.json") + " " +
                          fx("twin_bundles_left.json") + " " + fx("twin_bundles_right.json") +
                          " --suggest");
  CHECK(suggest.exit_code == 1);
  CHECK(suggest.output.find("suggested A0: {}") != std::string::npos);

  // apex edge e is a single edge, the left leg declares it as a bundle
  RunResult bad = run("admissible " + fx("one_bundle_left.json") + " " +
                      fx("twin_bundles_left.json") + " " + fx("twin_bundles_right.json"));
  CHECK(bad.exit_code == 2);

  RunResult missing = run("admissible missing.json missing.json missing.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("fock") {
  RunResult r = run("fock " + fx("chain2_rel.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("dimension: 4") != std::string::npos);
  CHECK(r.output.find("relations: ok") != std::string::npos);

  RunResult dump = run("fock " + fx("chain2.json") + " --dump-matrices");
  CHECK(dump.exit_code == 0);
  CHECK(dump.output.find("dimension: 5") != std::string::npos);
  CHECK(dump.output.find("matrix P_u:") != std::string::npos);
  CHECK(dump.output.find("matrix S_e:") != std::string::npos);

  RunResult cyclic = run("fock " + fx("loop.json"));
  CHECK(cyclic.exit_code == 2);
  CHECK(cyclic.output.find("cycle") != std::string::npos);
}

TEST_CASE("verify-pullback") {
  RunResult good = run("verify-pullback " + fx("vp1_apex.json") + " " +
                       fx("vp1_left.json") + " " + fx("vp1_right.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("pullback: yes") != std::string::npos);
  CHECK(good.output.find("algebra dim: 9 = 4 + 4 + 1") != std::string::npos);

  RunResult bad = run("verify-pullback " + fx("vp2_apex.json") + " " +
                      fx("vp2_left.json") + " " + fx("vp2_right.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("pullback: no") != std::string::npos);
  CHECK(bad.output.find("algebra dim: 13 = 4 + 4 + 5") != std::string::npos);
}

TEST_CASE("json output is stable") {
  std::string cmd = "--json admissible " + fx("one_bundle_apex.json") + " " +
                    fx("one_bundle_left.json") + " " + fx("one_bundle_right.json");
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"admissible\": true") != std::string::npos);
  CHECK(a.output.find("\"ideals_match\": true") != std::string::npos);
}
