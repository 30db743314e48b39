#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result cli(const std::string &args)
{
    std::string cmd = std::string(K3GM_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), n);
    }
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("emit period for e7 at K = 1")
{
    Result r = cli("emit period X0 --model e7 -K 1");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"0,0":"1","1,0":"12"})"));
}

TEST_CASE("emit form A at level 3")
{
    Result r = cli("emit form A --level 3 --qorder 5");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["level"] == 3);
    CHECK(j["form"] == "A");
    CHECK(j["qmax"] == 5);
    CHECK(j["pole_order"] == 0);
    CHECK(j["coeffs"][0] == "1");
    CHECK(j["coeffs"][1] == "6");
}

TEST_CASE("emit mirror map for e8 at K = 0 has identity leading terms")
{
    Result r = cli("emit mirror-map --model e8 -K 0");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["q_over_z"][0] == nlohmann::json::parse(R"({"0,0":"1"})"));
    CHECK(j["q_over_z"][1] == nlohmann::json::parse(R"({"0,0":"1"})"));
}

TEST_CASE("j form has a simple pole")
{
    auto j = nlohmann::json::parse(cli("form --form j --level 1 --qorder 4").out);
    CHECK(j["pole_order"] == 1);
    CHECK(j["coeffs"][0] == "1");
    CHECK(j["coeffs"][1] == "744");
    CHECK(j["coeffs"][2] == "196884");
}

TEST_CASE("exit codes")
{
    CHECK(cli("--model all --suite lie").code == 0);
    CHECK(cli("verify lie --model all").code == 0);
    CHECK(cli("lie").code == 0);
    CHECK(cli("verify factorization --model e6 -K 8 --qorder 16").code == 0);
    CHECK(cli("verify flatness --model e6 -K 4 --qorder 8").code == 1);
    CHECK(cli("verify yukawa --model e8").code == 1);
    CHECK(cli("--model e6 --suite unknown").code == 2);
    CHECK(cli("verify unknown").code == 2);
    CHECK(cli("--model e9 --suite lie").code == 2);
    CHECK(cli("--suite lie -K 1").code == 2);
    CHECK(cli("--suite lie -K 4 --qorder 7").code == 2);
    CHECK(cli("--suite lie --format xml").code == 2);
    CHECK(cli("--no-such-flag").code == 2);
    CHECK(cli("emit form C --level 2").code == 2);
    CHECK(cli("emit period X9 --model e6").code == 2);
    CHECK(cli("emit nothing").code == 2);
    CHECK(cli("periods --model all").code == 2);
}

TEST_CASE("reports are deterministic and ordered")
{
    const std::string args = "--model all --suite pairing -K 3 --qorder 6";
    Result a = cli(args);
    Result b = cli(args);
    CHECK(a.code == 1);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["passed"] == false);
    std::string prev_model, prev_check;
    for (const auto &r : j["reports"]) {
        std::string model = r["model"];
        CHECK(model >= prev_model);
        prev_model = model;
        prev_check.clear();
        for (const auto &c : r["checks"]) {
            std::string name = c["name"];
            CHECK(name >= prev_check);
            prev_check = name;
            if (c["status"] == "fail") {
                CHECK(c.contains("first_discrepancy"));
            }
        }
    }
}

TEST_CASE("out flag writes the same bytes")
{
    const std::string path = "cli_out_test.json";
    Result direct = cli("gm --model e7 --source picard-fuchs");
    CHECK(cli("gm --model e7 --source picard-fuchs --out " + path).code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("matrix and series schemas")
{
    auto gm = nlohmann::json::parse(cli("gm --model e6").out);
    CHECK(gm["source"] == "printed");
    CHECK(gm["G1"].size() == 4);
    CHECK(gm["G1"][0][1]["num"] == nlohmann::json::parse(R"({"0,0":"1"})"));
    CHECK(gm["G1"][0][1]["den"] == nlohmann::json::parse(R"({"0,0":"1"})"));
    auto y = nlohmann::json::parse(cli("yukawa --model e6 --source derived").out);
    CHECK(y["Q"][0][3]["num"].is_object());
    auto ps = nlohmann::json::parse(cli("periods --model e6 -K 2").out);
    CHECK(ps["X0"]["2,1"] == "180");
    CHECK(ps["Shat1"]["1,0"] == "15");
    auto fr = nlohmann::json::parse(cli("frame --model e6 -K 2").out);
    CHECK(fr["S"][0][0]["0,0"] == "1");
}

TEST_CASE("text format")
{
    Result r = cli("verify lie --model e6 --format text");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("E6 lie: PASS", 0) == 0);
}
