#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(NCQM_LAB_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("classify") {
    const auto r = run("--alpha 1 --beta 1 --gamma 1 classify 0,0,0,0,1,1,2");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "ncqm-lab/1");
    CHECK(j["class"] == "Generic4D");
    CHECK(j["dim"] == 4);

    const auto p = nlohmann::json::parse(run("classify 5,6,7,8,0,0,0").out);
    CHECK(p["class"] == "Point0D");
    CHECK(p["labels"] == nlohmann::json::array({5, 6, 7, 8}));
    CHECK(p["dim"] == 0);

    CHECK(run("classify 1,2,3,4,5,6").code == 2);
}

TEST_CASE("exit code contract") {
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 2);
    CHECK(run("verify nonsense").code == 2);
    CHECK(run("--alpha x verify group").code == 2);
    CHECK(run("--config /nonexistent.json verify group").code == 2);
    CHECK(run("verify torus --alpha 1 --beta 0.5 --gamma 0.5").code == 3);
    CHECK(run("verify gauge --alpha 1 --beta 1 --gamma 1 --l 1.0").code == 3);
    CHECK(run("verify gauge --alpha 1 --beta 1 --gamma 1 --l 2.0").code == 0);
    CHECK(run("verify group --tol-associativity 1e-300").code == 1);
    CHECK(run("--alpha 0 classify 0,0,0,0,1,1,2").code == 3);
}

TEST_CASE("verify is byte-for-byte deterministic") {
    const auto a = run("verify all --seed 5");
    const auto b = run("verify all --seed 5");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run("verify all --seed 6").out);
}

TEST_CASE("report, gauge-scan and torus") {
    const std::string path = "ncqm_cli_test_report.json";
    CHECK(run("verify group --out " + path).code == 0);
    const auto r = run("report " + path);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["pass"] == true);
    std::remove(path.c_str());

    const auto scan = nlohmann::json::parse(run("gauge-scan --m-values -1,0,0.25 --B 3").out);
    CHECK(scan["rows"].size() == 3);

    const auto torus = run("torus --case Cone2D --params 0.3,2,1,-1");
    CHECK(torus.code == 0);
    CHECK(nlohmann::json::parse(torus.out)["results"][0]["case"] == "Cone2D");
    CHECK(run("torus --case Cone2D --params 0.3").code == 2);
    CHECK(run("torus --case Klein --params 1").code == 2);
}
