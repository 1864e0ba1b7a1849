#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oscount/cli.hpp"
#include "oscount/io.hpp"

using namespace oscount;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "oscount");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("oscount_cli_" + name);
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("compute")
{
    auto r = run({"compute", "--space", "5,6", "--beta", "3,4"});
    CHECK(r.code == 0);
    CHECK(r.out == "12376517721901538931574978120540650000000\n");

    auto j = run({"compute", "--space", "3", "--beta", "2", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out == "{\"space\":[3],\"beta\":[2],\"oc\":\"27\",\"integral\":true}\n");

    auto c = run({"compute", "--space", "2,2", "--beta", "1,1", "--format", "csv"});
    CHECK(c.out == "beta_1,beta_2,oc\n1,1,20\n");

    auto z = run({"compute", "--space", "2,2", "--beta", "0,2", "--format", "json"});
    CHECK(z.code == 0);
    CHECK(z.out.find("\"zero_component\":true") != std::string::npos);
}

TEST_CASE("json output round-trips byte for byte")
{
    for (auto args : std::vector<std::vector<std::string>>{
             {"compute", "--space", "3", "--beta", "2", "--format", "json"},
             {"table", "--space", "2,3", "--beta", "2,2", "--format", "json"},
             {"breakdown", "--space", "2,2", "--beta", "2,1", "--format", "json"},
             {"gw", "--space", "1", "--beta", "3", "--format", "json"}}) {
        auto r = run(args);
        REQUIRE(r.code == 0);
        std::string body = r.out.substr(0, r.out.size() - 1);
        CHECK(io::Json::parse(body).dump() == body);
    }
}

TEST_CASE("gw")
{
    auto r = run({"gw", "--space", "1", "--beta", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/4\n");
    CHECK(run({"gw", "--space", "3", "--beta", "2"}).out == "1/16\n");
}

TEST_CASE("table and breakdown")
{
    auto t = run({"table", "--space", "1", "--beta", "3", "--format", "csv"});
    CHECK(t.code == 0);
    CHECK(t.out == "beta_1,oc\n1,1\n2,0\n3,0\n");

    auto b = run({"breakdown", "--space", "3", "--beta", "2"});
    CHECK(b.code == 0);
    CHECK(b.out.find("leading 45") != std::string::npos);
    CHECK(b.out.find("[(1)x2]  weight 1/2  product 36  total 18") != std::string::npos);
    CHECK(b.out.find("result  27") != std::string::npos);
}

TEST_CASE("table then compute reuses the cache")
{
    auto cache = temp_path("reuse.json");
    auto t = run({"table", "--space", "2,3", "--beta", "3,2", "--cache", cache.string()});
    REQUIRE(t.code == 0);
    CHECK(std::filesystem::exists(cache));

    auto c = run({"compute", "--space", "2,3", "--beta", "3,2", "--cache", cache.string(), "--format", "json"});
    REQUIRE(c.code == 0);
    auto doc = io::Json::parse(c.out);
    CHECK(doc["computed"] == 0);
    CHECK(doc["cache_hits"].get<int>() >= 1);

    auto fresh = run({"compute", "--space", "2,3", "--beta", "3,2"});
    CHECK(doc["oc"].get<std::string>() + "\n" == fresh.out);

    // gw reads OC values straight from the cache.
    auto g = run({"gw", "--space", "2,3", "--beta", "3,2", "--cache", cache.string()});
    CHECK(g.code == 0);
    CHECK(g.out == "1/" + std::to_string(6 * 6 * 6 * 2 * 2 * 2 * 2) + "\n");

    // A cache for another space is refused.
    CHECK(run({"compute", "--space", "2,2", "--beta", "1,1", "--cache", cache.string()}).code == 1);
    std::filesystem::remove(cache);
}

TEST_CASE("descriptor spaces")
{
    auto path = temp_path("descriptor.json");
    std::ofstream(path) << R"({"chern": [4], "invariants": {"1": "1", "2": "1/16"}})";
    auto r = run({"compute", "--descriptor", path.string(), "--beta", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "27\n");
    auto missing = run({"compute", "--descriptor", path.string(), "--beta", "3"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("(3)") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("argument errors exit 1 and name the input")
{
    auto mismatch = run({"compute", "--space", "2,3", "--beta", "1"});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.err.find("'1'") != std::string::npos);

    CHECK(run({"compute", "--space", "0", "--beta", "1"}).code == 1);
    CHECK(run({"compute", "--space", "2", "--beta", "0"}).code == 1);
    CHECK(run({"compute", "--space", "2", "--beta", "x"}).code == 1);
    CHECK(run({"compute", "--beta", "1"}).code == 1);
    CHECK(run({"compute", "--space", "2", "--beta", "1", "--format", "xml"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("budget errors exit 2")
{
    auto r = run({"compute", "--space", "2", "--beta", "9", "--max-partitions", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("class (") != std::string::npos);
    CHECK(run({"compute", "--space", "5,6", "--beta", "3,4", "--max-bits", "32"}).code == 2);
}
