// End-to-end tests of the chiy binary: spawns the real executable and
// checks output and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "chiy/catalog.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CHIY_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("compute for a builtin manifold") {
    const RunResult r = run("compute --manifold cp:2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1 - y + y^2") != std::string::npos);
    CHECK(r.output.find("todd:      1") != std::string::npos);
    CHECK(r.output.find("euler:     3") != std::string::npos);
    CHECK(r.output.find("signature: 1") != std::string::npos);
    CHECK(r.output.find("serre=ok") != std::string::npos);
    CHECK(r.output.find("hodge-oracle=ok") != std::string::npos);
}

TEST_CASE("compute emits the documented JSON record") {
    const RunResult r = run("compute --manifold hyp:2:4 --json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("name") == "hyp:2:4");
    CHECK(j.at("dim") == 2);
    CHECK(j.at("chi_y") == nlohmann::json::array({"2", "-20", "2"}));
    CHECK(j.at("todd") == "2");
    CHECK(j.at("euler") == "24");
    CHECK(j.at("signature") == "-16");
    CHECK(j.at("checks").at("serre") == true);
    CHECK(j.at("checks").at("euler_top_chern") == true);
    CHECK(j.at("checks").at("hodge_oracle").is_null());

    // round-trip: recomputing the record yields identical bytes
    const RunResult again = run("compute --manifold hyp:2:4 --json");
    CHECK(again.output == r.output);

    // and recomputing from the parsed name agrees with the emitted values
    const chiy::ChernData data =
        chiy::realize(chiy::parse_manifold_id(j.at("name").get<std::string>()));
    const chiy::GenusPoly g = chiy::chi_y(data);
    for (int i = 0; i <= g.dim(); ++i)
        CHECK(g.coeff(i).str() == j.at("chi_y").at(i).get<std::string>());
}

TEST_CASE("compute from a spec file") {
    const auto path = write_temp(
        "chiy_k3.json", R"({"kind":"explicit","dim":2,"chern":{"1,1":0,"2":24},"name":"K3"})");
    const RunResult r = run("compute --spec-file " + path.string() + " --json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("name") == "K3");
    CHECK(j.at("euler") == "24");
    std::filesystem::remove(path);
}

TEST_CASE("compute exit codes") {
    CHECK(run("compute --spec-file /nonexistent/missing.json").exit_code == 2);
    CHECK(run("compute").exit_code == 1);
    CHECK(run("compute --manifold cp:2 --spec-file x.json").exit_code == 1);
    CHECK(run("compute --manifold torus:1").exit_code == 1);

    const auto bad = write_temp("chiy_bad.json",
                                R"({"kind":"explicit","dim":2,"chern":{"3":1}})");
    const RunResult r = run("compute --spec-file " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("chern") != std::string::npos);  // message names the field
    CHECK(r.output.find("weight 3") != std::string::npos);
    std::filesystem::remove(bad);
}

TEST_CASE("verify subcommand") {
    const RunResult bogus = run("verify --suite bogus");
    CHECK(bogus.exit_code == 1);
    CHECK(bogus.output.find("unknown suite") != std::string::npos);

    const RunResult sym = run("verify --suite symbolic");
    CHECK(sym.exit_code == 0);
    CHECK(sym.output.find("PASS") != std::string::npos);
    CHECK(sym.output.find("FAIL") == std::string::npos);

    const RunResult modes = run("verify --suite modesum --n-max 1000");
    CHECK(modes.exit_code == 0);
    CHECK(modes.output.find("PASS mode-sum error ratio") != std::string::npos);
}
