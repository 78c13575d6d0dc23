#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("LKWB_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) res.out.append(buf.data(), got);
    int status = pclose(p);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("certify exits cleanly at n = 4") {
    auto r = run("certify --n 4 --r 2/1");
    CHECK(r.code == 0);
    CHECK(r.out.find("ALL PASS") != std::string::npos);
}

TEST_CASE("symbolic relations at n = 5") {
    auto r = run("relations --n 5 --symbolic");
    CHECK(r.code == 0);
    CHECK(r.out.find("fail") == std::string::npos);
}

TEST_CASE("scan output is deterministic") {
    auto a = run("scan --n 5 --r 3/2 --seed 42");
    auto b = run("scan --n 5 --r 3/2 --seed 42");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run("scan --n 5 --r 3/2 --seed 43");
    CHECK(c.code == 0);
    CHECK(c.out != a.out);
}

TEST_CASE("json and text agree on verdicts") {
    auto text = run("scan --n 4 --r 2/1 --seed 5");
    auto js = run("scan --n 4 --r 2/1 --seed 5 --format json");
    REQUIRE(js.code == 0);
    auto doc = nlohmann::json::parse(js.out);
    std::set<std::string> from_json, from_text;
    for (auto& rec : doc["results"]) {
        std::string verdict = rec["reducible"].get<bool>() ? "reducible" : "irreducible";
        from_json.insert(rec["locus"].get<std::string>() + " " + verdict);
        CHECK(rec["match"].get<bool>());
    }
    std::size_t pos = 0;
    while ((pos = text.out.find("\n  ok   ", pos)) != std::string::npos) {
        pos += 8;
        auto end = text.out.find(' ', pos);
        std::string locus = text.out.substr(pos, end - pos);
        auto line_end = text.out.find('\n', end);
        std::string line = text.out.substr(end, line_end - end);
        from_text.insert(locus + (line.find(" irreducible") != std::string::npos ? " irreducible" : " reducible"));
    }
    CHECK(from_json == from_text);
    CHECK(from_json.size() == 10);
}

TEST_CASE("certify json marks sampled and probabilistic methods") {
    auto r = run("certify --n 4 --r 2/1 --format json");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    bool sampled = false;
    for (auto& rec : doc["loci"])
        if (rec["method"] == "sampled") sampled = true;
    CHECK(sampled);
}

TEST_CASE("exit codes") {
    CHECK(run("det --n 2").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("det --n 4 --r 1.5").code == 2);
    CHECK(run("det --n 4 --locus nowhere").code == 2);
    CHECK(run("det --n 6 --locus l=r --mode symbolic").code == 2);
    CHECK(run("kernel --n 4 --r cyclotomic:4").code == 2);
    CHECK(run("certify --n 3 --r 2/1 --out /nonexistent/dir/out.txt").code == 3);
    CHECK(run("kernel --n 4 --r 2/1 --locus l=r").code == 0);
}

TEST_CASE("export writes a parseable matrix") {
    auto r = run("export --n 3 --r 2/1 --locus l=-r3 --what e --format json");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["matrices"].size() == 2);
    CHECK(doc["matrices"][0]["matrix"].size() == 3);
}
