#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "fsrec/cache.hpp"
#include "fsrec/cli.hpp"

using namespace fsrec;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("fsrec_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("enumerate") {
    const auto r = run({"enumerate", "--ell", "1", "--K", "1,0", "--max-degree", "4"});
    CHECK(r.code == exit_code::ok);
    CHECK(count_lines(r.out) == 6);
    CHECK(count_lines(run({"enumerate", "--ell", "1", "--K", "1,0", "--max-degree", "0"}).out) == 1);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"enumerate", "--ell", "2", "--K", "1,1", "--max-degree", "3"}).code == exit_code::usage);
    CHECK(run({"enumerate", "--ell", "1", "--k", "3", "--K", "1,1", "--max-degree", "3"}).code == exit_code::usage);
    CHECK(run({"enumerate", "--ell", "1", "--K", "1,x", "--max-degree", "3"}).code == exit_code::usage);
    CHECK(run({"character", "--ell", "1", "--K", "1,0"}).code == exit_code::usage);
    CHECK(run({"no-such-command"}).code == exit_code::usage);
    CHECK(run({}).code == exit_code::usage);
}

TEST_CASE("resource cap exits with 3") {
    CHECK(run({"enumerate", "--ell", "2", "--K", "2,1,0", "--max-degree", "9", "--cap", "10"}).code ==
          exit_code::resource_cap);
}

TEST_CASE("character by both methods") {
    const auto r = run({"character", "--ell", "1", "--K", "1,0", "--M", "5", "--method", "both"});
    CHECK(r.code == exit_code::ok);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["verdict"] == "match");
    CHECK(doc["enum"] == doc["solve"]);

    const auto zero = nlohmann::json::parse(run({"character", "--ell", "2", "--K", "1,0,1", "--M", "0"}).out);
    CHECK(zero["table"].size() == 1);
    CHECK(zero["table"][0]["n"] == nlohmann::json::array({0, 0}));
    CHECK(zero["table"][0]["poly"]["coeffs"] == nlohmann::json::array({1}));

    CHECK(run({"solve", "--ell", "1", "--K", "1,0", "--M", "5"}).out ==
          run({"character", "--ell", "1", "--K", "1,0", "--M", "5", "--method", "enum"}).out);
}

TEST_CASE("cache hits are byte identical and corruption is a miss") {
    const auto dir = fresh_dir("cache");
    const std::vector<std::string> args{"character", "--ell", "2", "--K", "1,1,0", "--M", "6", "--cache-dir", dir.string()};
    const auto first = run(args);
    CHECK(first.err.find("cache: stored") != std::string::npos);
    const auto second = run(args);
    CHECK(second.err.find("cache: hit") != std::string::npos);
    CHECK(second.out == first.out);

    std::string file;
    for (const auto& entry : fs::directory_iterator(dir)) file = entry.path().string();
    REQUIRE_FALSE(file.empty());
    nlohmann::json doc;
    {
        std::ifstream in(file);
        doc = nlohmann::json::parse(in);
    }
    doc["payload"] = doc["payload"].get<std::string>() + " ";
    {
        std::ofstream out(file, std::ios::trunc);
        out << doc.dump();
    }
    const auto third = run(args);
    CHECK(third.err.find("cache: stored") != std::string::npos);
    CHECK(third.out == first.out);

    {
        std::ofstream out(file, std::ios::trunc);
        out << "{not json";
    }
    CHECK(run(args).out == first.out);

    // a different method is a different key
    const auto solved = run({"character", "--ell", "2", "--K", "1,1,0", "--M", "6", "--method", "solve", "--cache-dir",
                             dir.string()});
    CHECK(solved.err.find("cache: stored") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("cache keys are content addressed") {
    ResultCache cache("/tmp/x");
    CHECK(cache.path_for("a").filename().string() == sha256_hex("a") + ".json");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("verification commands") {
    const auto rec = run({"verify-recurrence", "--ell", "2", "--k", "2", "--M", "10"});
    CHECK(rec.code == exit_code::ok);
    CHECK(nlohmann::json::parse(rec.out)["compositions"].size() == 6);

    const auto ex = run({"verify-exactness", "--ell", "2", "--k", "2", "--max-degree", "8"});
    CHECK(ex.code == exit_code::ok);
    CHECK(nlohmann::json::parse(ex.out)["sequences"].size() == 6);

    const auto csv = run({"verify-exactness", "--ell", "2", "--K", "1,1,0", "--max-degree", "4", "--format", "csv"});
    CHECK(csv.code == exit_code::ok);
    CHECK(csv.out.rfind("K,degree,weight,dims,ranks,euler_sum,passed\n", 0) == 0);

    CHECK(run({"lemmas", "--ell", "2", "--k", "3", "--max-degree", "6"}).code == exit_code::ok);
}

TEST_CASE("repeated runs give identical bytes") {
    const std::vector<std::vector<std::string>> commands{
        {"enumerate", "--ell", "2", "--K", "1,1,0", "--max-degree", "5"},
        {"character", "--ell", "2", "--K", "0,1,1", "--M", "6", "--method", "both"},
        {"verify-recurrence", "--ell", "1", "--k", "2", "--M", "8"},
        {"verify-exactness", "--ell", "2", "--K", "2,0,0", "--max-degree", "5"},
        {"lemmas", "--ell", "1", "--k", "2", "--max-degree", "5"},
    };
    for (const auto& args : commands) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == exit_code::ok);
        CHECK(a.out == b.out);
    }
}
