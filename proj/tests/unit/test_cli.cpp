#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;
using tdual::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "tdual");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = tdual::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("tdual-cli-test-" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("verify passes and writes its report") {
    const auto dir = scratch("verify");
    const auto r = invoke({"verify", "--n", "2", "--out", dir.string()});
    CHECK(r.code == 0);
    const auto report = Json::parse(slurp(dir / "tdual-verify.json"));
    CHECK(report["pass"] == true);
    CHECK(report["checks"][0]["check"] == "equivalence");
    CHECK(report["checks"][0]["details"]["nu_bijective"] == true);
    CHECK(report["checks"][0]["details"]["nu_homomorphism"] == true);
    CHECK(report["checks"][1]["check"] == "strong-exceptional");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({"oracle", "--n", "3", "--out", scratch("u1").string()}).code == 2);
    CHECK(invoke({"verify"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate", "--n", "1"}).code == 2);
    CHECK(invoke({"verify", "--n", "0"}).code == 2);
    CHECK(invoke({"verify", "--n", "two"}).code == 2);
    CHECK(invoke({"verify", "--n", "1", "--format", "xml"}).code == 2);
    CHECK(invoke({"verify", "--n", "1", "--format", "dot", "--out", scratch("u2").string()}).code == 2);
    CHECK(invoke({"oracle", "--n", "1", "--epsilon", "abc", "--out", scratch("u3").string()}).code == 2);
    CHECK(invoke({"oracle", "--n", "1", "--epsilon", "1/0", "--out", scratch("u4").string()}).code == 2);
    CHECK(invoke({"oracle", "--n", "1", "--epsilon", "-1/8", "--out", scratch("u5").string()}).code == 2);
    CHECK(invoke({"branes", "--n", "1", "--fd-step", "-1", "--out", scratch("u6").string()}).code == 2);
    // An epsilon too large for the arrangement is rejected by the oracle.
    CHECK(invoke({"oracle", "--n", "1", "--epsilon", "1/2", "--out", scratch("u7").string()}).code == 2);
}

TEST_CASE("help exits cleanly") {
    const auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("quiver dot export for n = 1") {
    const auto dir = scratch("dot");
    const auto r = invoke({"quiver", "--n", "1", "--format", "dot", "--out", dir.string()});
    CHECK(r.code == 0);
    const auto dot = slurp(dir / "quiver-cells.dot");
    CHECK(dot == r.out);
    std::size_t arrows = 0;
    for (auto p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
    CHECK(arrows == 2);
    CHECK(fs::exists(dir / "quiver-sheaves.dot"));
    CHECK(fs::exists(dir / "tdual-quiver.json"));
}

TEST_CASE("check failures exit with 1 and carry a witness") {
    const auto dir = scratch("fail");
    const auto r = invoke({"branes", "--n", "2", "--literal-potential", "--graph-grid", "12", "--samples", "200",
                           "--out", dir.string()});
    CHECK(r.code == 1);
    const auto report = Json::parse(slurp(dir / "tdual-branes.json"));
    CHECK(report["pass"] == false);
    bool found = false;
    for (const auto& c : report["checks"]) {
        if (c["pass"] == false) {
            CHECK(c.contains("witness"));
            CHECK(c["check"] == "graph");
            found = true;
        }
    }
    CHECK(found);

    // Impossible tolerance on an otherwise passing check.
    CHECK(invoke({"branes", "--n", "1", "--graph-tol", "1e-30", "--samples", "100", "--out", dir.string()}).code ==
          1);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const std::string cmd : {"geometry", "branes", "oracle", "verify", "quiver"}) {
        const auto a = scratch("det-a");
        const auto b = scratch("det-b");
        std::vector<std::string> extra = cmd == "branes" ? std::vector<std::string>{"--samples", "300", "--graph-grid", "20"}
                                                        : std::vector<std::string>{};
        auto args_a = std::vector<std::string>{cmd, "--n", "2", "--out", a.string()};
        auto args_b = std::vector<std::string>{cmd, "--n", "2", "--out", b.string()};
        args_a.insert(args_a.end(), extra.begin(), extra.end());
        args_b.insert(args_b.end(), extra.begin(), extra.end());
        const auto ra = invoke(args_a);
        const auto rb = invoke(args_b);
        CAPTURE(cmd);
        CHECK(ra.code == 0);
        CHECK(rb.code == 0);
        const auto name = "tdual-" + cmd + ".json";
        CHECK(slurp(a / name) == slurp(b / name));
        CHECK_FALSE(slurp(a / name).empty());
    }
}

TEST_CASE("seed is read from the environment") {
    const auto dir = scratch("seed");
    ::setenv("TDUAL_SEED", "17", 1);
    const auto r = invoke({"geometry", "--n", "1", "--fibers", "10", "--format", "json", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["config"]["seed"] == 17);
    ::setenv("TDUAL_SEED", "not-a-number", 1);
    CHECK(invoke({"geometry", "--n", "1", "--out", dir.string()}).code == 2);
    ::unsetenv("TDUAL_SEED");
    const auto d = invoke({"geometry", "--n", "1", "--fibers", "10", "--format", "json", "--out", dir.string()});
    CHECK(Json::parse(d.out)["config"]["seed"] == tdual::cli::kDefaultSeed);
}

TEST_CASE("oracle command compares against the combinatorial count") {
    const auto dir = scratch("oracle");
    const auto r = invoke({"oracle", "--n", "2", "--epsilon", "1/10", "--format", "json", "--out", dir.string()});
    CHECK(r.code == 0);
    const auto report = Json::parse(r.out);
    CHECK(report["config"]["epsilon"] == "1/10");
    CHECK(report["checks"][0]["details"]["pairs"].size() == 9);
}
