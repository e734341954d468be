#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = tdcodes::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

const char* kExampleSpec = R"({"s":2,"m":3,"base_modulus":[1,1,1],"ext_modulus":[[2],[1],[1],[1]]})";

}  // namespace

TEST_CASE("construct") {
    const Result r = run({"construct", "--q", "4", "--m", "2", "--parity", "1"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["k"] == 7);
    CHECK(j["n"] == 15);
    CHECK(j["parity"] == 1);
    CHECK(j["generator_poly"].size() == 9);
    CHECK(j["generator_poly"].back() == 1);
    // Byte-identical on repeat.
    CHECK(run({"construct", "--q", "4", "--m", "2", "--parity", "1"}).out == r.out);
}

TEST_CASE("construct reproduces the example over the published field") {
    const auto spec = temp_file("td_example_spec.json", kExampleSpec);
    const Result r = run({"construct", "--field-spec", spec.string(), "--parity", "0", "--pretty"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("[63, 32]") != std::string::npos);
    CHECK(r.out.find("g(x) = x^31 + x^30 + w^2 x^29 + x^27 + w^2 x^26") != std::string::npos);
    const Result j = run({"construct", "--field-spec", spec.string(), "--q", "4", "--m", "3"});
    REQUIRE(j.code == 0);
    CHECK(j.json()["generator_poly"][0] == 1);
    CHECK(run({"construct", "--field-spec", spec.string(), "--q", "8"}).code == 2);
}

TEST_CASE("construct variants") {
    const auto ext = run({"construct", "--q", "4", "--m", "3", "--variant", "extended"}).json();
    CHECK(ext["length"] == 64);
    CHECK(ext["k"] == 32);
    CHECK(ext["self_dual"] == true);
    CHECK(run({"construct", "--q", "4", "--m", "3", "--variant", "even_like"}).json()["k"] == 31);
    CHECK(run({"construct", "--q", "4", "--m", "2", "--variant", "dual"}).json()["k"] == 6);
    CHECK(run({"construct", "--q", "4", "--m", "2", "--variant", "bogus"}).code == 2);
    const Result binary = run({"construct", "--q", "2", "--m", "3"});
    CHECK(binary.code == 0);
    CHECK(binary.err.find("warning") != std::string::npos);
}

TEST_CASE("verify") {
    const Result thm2 = run({"verify", "--id", "thm2", "--q", "4", "--m", "3"});
    CHECK(thm2.code == 0);
    const auto j = thm2.json();
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() >= 4);
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
    CHECK(run({"verify", "--id", "thm8", "--q", "4", "--m", "2"}).code == 2);
    CHECK(run({"verify", "--id", "thm3", "--q", "4", "--m", "3"}).code == 2);
    CHECK(run({"verify", "--id", "lemma7", "--q", "2", "--m", "3"}).code == 2);
    CHECK(run({"verify", "--id", "nope", "--q", "4", "--m", "3"}).code == 2);
    const Result l1 = run({"verify", "--id", "lemma1", "--q", "8", "--m", "2", "--pretty"});
    CHECK(l1.code == 0);
    CHECK(l1.out.find("(30 == 30)") != std::string::npos);
    CHECK(l1.out.find("(32 == 32)") != std::string::npos);
    for (const char* id : {"thm3", "thm12", "thm18", "lemma5", "lemma6", "lemma9", "lemma11"})
        CHECK(run({"verify", "--id", id, "--q", "4", "--m", "6"}).code == 0);
    for (const char* id : {"thm8", "thm16", "lemma7"}) CHECK(run({"verify", "--id", id, "--q", "4", "--m", "3"}).code == 0);
    for (const char* id : {"thm15", "lemma13", "lemma14"}) CHECK(run({"verify", "--id", id, "--q", "4", "--m", "4"}).code == 0);
}

TEST_CASE("usage and field errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"construct", "--q", "4"}).code == 2);
    CHECK(run({"construct", "--q", "6", "--m", "2"}).code == 2);
    CHECK(run({"construct", "--q", "4", "--m", "2", "--parity", "3"}).code == 2);
    CHECK(run({"construct", "--q", "4", "--m", "2", "--frobnicate"}).code == 2);
    const auto bad = temp_file("td_bad_spec.json",
                               R"({"s":2,"m":3,"base_modulus":[1,1,1],"ext_modulus":[[1],[1],[1],[1]]})");
    CHECK(run({"construct", "--field-spec", bad.string()}).code == 3);
    const auto junk = temp_file("td_junk_spec.json", "{not json");
    CHECK(run({"construct", "--field-spec", junk.string()}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("TD_MAX_N caps the length") {
    ::setenv("TD_MAX_N", "100", 1);
    CHECK(run({"construct", "--q", "4", "--m", "4"}).code == 2);
    CHECK(run({"construct", "--q", "4", "--m", "3"}).code == 0);
    ::unsetenv("TD_MAX_N");
    CHECK(run({"construct", "--q", "4", "--m", "4"}).code == 0);
}

TEST_CASE("bound") {
    const auto j = run({"bound", "--q", "4", "--m", "3"}).json();
    CHECK(j["delta"] == 11);
    CHECK(j["b"] == 32);
    CHECK(j["a"] == 5);
    CHECK(j["i_lo"] == -3);
    CHECK(j["i_hi"] == 6);
    CHECK(j["source"] == "lemma7");
    CHECK(run({"bound", "--q", "4", "--m", "4", "--id", "lemma13"}).json()["a"] == 86);
    CHECK(run({"bound", "--q", "8", "--m", "6", "--method", "closed"}).json()["delta"] == 114);
    CHECK(run({"bound", "--q", "4", "--m", "3", "--method", "search"}).json()["delta"].get<int>() >= 11);
}

TEST_CASE("distance") {
    const auto j = run({"distance", "--q", "4", "--m", "2", "--parity", "1"}).json();
    CHECK(j["method"] == "exhaustive");
    CHECK(j["exact"].get<int>() >= 3);
    CHECK(j["lower"] == j["exact"]);
    const Result s = run({"distance", "--q", "4", "--m", "3", "--seed", "3"});
    REQUIRE(s.code == 0);
    const auto sj = s.json();
    CHECK(sj["method"] == "sampled");
    CHECK(sj["exact"].is_null());
    CHECK(sj["seed"] == 3);
    CHECK(sj["lower"] == 11);
    CHECK(sj["upper"].get<int>() <= 15);
    CHECK(sj["witness"].size() == 63);
    CHECK(run({"distance", "--q", "4", "--m", "3", "--seed", "3"}).out == s.out);
    CHECK(run({"distance", "--q", "4", "--m", "3", "--method", "exact"}).code == 2);
}

TEST_CASE("inspect") {
    const auto j = run({"inspect", "--q", "4", "--m", "2"}).json();
    CHECK(j["lcd"] == true);
    CHECK(j["hull_dimension"] == 0);
    CHECK(j["k"] == 9);
}

TEST_CASE("table") {
    const auto t16 = run({"table", "--section", "16", "--q", "4", "--m", "3"}).json();
    REQUIRE(t16["rows"].size() == 3);
    CHECK(t16["rows"][0]["n"] == 63);
    CHECK(t16["rows"][0]["k"] == 32);
    CHECK(t16["rows"][0]["bound"] == 11);
    CHECK(t16["rows"][1]["n"] == 64);
    const auto t18 = run({"table", "--section", "18", "--q", "4", "--m", "2"}).json();
    REQUIRE(t18["rows"].size() == 2);
    CHECK(t18["rows"][0]["k"] == 9);
    CHECK(t18["rows"][1]["k"] == 7);
    CHECK(t18["rows"][0]["bound"] == 3);
    CHECK(t18["rows"][1]["bound"] == 3);
    const auto t18b = run({"table", "--section", "18", "--q", "4", "--m", "4"}).json();
    CHECK(t18b["rows"][0]["n"] == 255);
    CHECK(t18b["rows"][0]["k"] == 129);
    CHECK(t18b["rows"][1]["k"] == 127);
    CHECK(t18b["rows"][1]["bound"] == 5);
    CHECK(run({"table", "--section", "17"}).code == 2);
}

TEST_CASE("--out writes the report to a file") {
    const auto p = std::filesystem::temp_directory_path() / "td_out.json";
    std::filesystem::remove(p);
    const Result r = run({"construct", "--q", "4", "--m", "2", "--out", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(p);
    CHECK(nlohmann::json::parse(in)["k"] == 9);
}
