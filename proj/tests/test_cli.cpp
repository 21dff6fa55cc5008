#include "gkm/cli.hpp"
#include "gkm/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace gkm;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("gkm_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("table of invariant classes for A2")
{
    Run r = run({"table", "--type", "A", "--rank", "2", "--basis"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "word\toneline\tc[0,0]\tc[0,1]\tc[1,0]\tc[1,1]\tc[2,0]\tc[2,1]\n"
          "id\t1,2,3\t1\tx2\tx1\tx1*x2\tx1^2\tx1^2*x2\n"
          "s1\t2,1,3\t1\tx1\tx2\tx1*x2\tx2^2\tx1*x2^2\n"
          "s2\t1,3,2\t1\tx3\tx1\tx1*x3\tx1^2\tx1^2*x3\n"
          "s1s2\t2,3,1\t1\tx3\tx2\tx2*x3\tx2^2\tx2^2*x3\n"
          "s2s1\t3,1,2\t1\tx1\tx3\tx1*x3\tx3^2\tx1*x3^2\n"
          "s1s2s1\t3,2,1\t1\tx2\tx3\tx2*x3\tx3^2\tx2*x3^2\n");
}

TEST_CASE("bundle verification")
{
    Run r = run({"bundle", "--type", "A", "--rank", "3", "--sigma2", "1,3", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("RESULT: PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"verify", "--graph", "missing.json"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"build", "--type", "A"}).code == 2);
    CHECK(run({"build", "--type", "E", "--rank", "2"}).code == 2);
    CHECK(run({"build", "--type", "A", "--rank", "2", "--sigma1", "x"}).code == 2);
    CHECK(run({"build", "--type", "A", "--rank", "2", "--bogus"}).code == 2);
    CHECK(run({"build", "--type", "A", "--rank", "9", "--max-group-order", "100"}).code == 2);
    CHECK(run({"export", "--type", "A", "--rank", "2", "--format", "png"}).code == 2);
}

TEST_CASE("export and verify a graph file")
{
    std::string path = tmp("s3.json");
    CHECK(run({"export", "--type", "A", "--rank", "2", "--what", "graph", "--out", path}).code == 0);
    Run v = run({"verify", "--graph", path});
    CHECK(v.code == 0);
    auto g = graph_from_json(Json::parse(read_text_file(path)));
    CHECK(g->vertex_count() == 6);

    Run b = run({"build", "--type", "A", "--rank", "2"});
    CHECK(b.code == 0);

    std::string cpath = tmp("c11.json");
    CHECK(run({"export", "--type", "A", "--rank", "2", "--what", "class", "--index", "1,1", "--out", cpath}).code == 0);
    CHECK(run({"verify", "--graph", path, "--class", cpath}).code == 0);

    Json cj = Json::parse(read_text_file(cpath));
    cj["values"]["1,2,3"] = "x1";
    write_text_file(cpath, cj.dump());
    Run bad = run({"verify", "--graph", path, "--class", cpath});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("CHECK class: FAIL") != std::string::npos);
    std::filesystem::remove(path);
    std::filesystem::remove(cpath);
}

TEST_CASE("DOT export of K3")
{
    Run r = run({"export", "--type", "A", "--rank", "2", "--sigma1", "2", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("graph G {", 0) == 0);
    for (const char* l : {"x1 - x2", "x1 - x3", "x2 - x3"})
        CHECK(r.out.find(l) != std::string::npos);
}

TEST_CASE("bundle JSON export round trip")
{
    std::string path = tmp("bundle.json");
    CHECK(run({"bundle", "--type", "B", "--rank", "2", "--out", path}).code == 0);
    BundleMap b = bundle_from_json(Json::parse(read_text_file(path)));
    CHECK(bundle_to_json(b).dump(2) + "\n" == read_text_file(path));
    std::filesystem::remove(path);
}

TEST_CASE("verbs report and exit cleanly")
{
    CHECK(run({"holonomy", "--type", "A", "--rank", "3"}).code == 0);
    CHECK(run({"holonomy", "--type", "A", "--rank", "2", "--base-point", "[3,1,2]", "--exhaustive"}).code == 0);
    CHECK(run({"holonomy", "--type", "A", "--rank", "2", "--base-point", "nowhere"}).code == 2);
    Run s = run({"schubert", "--type", "A", "--rank", "2", "--check"});
    CHECK(s.code == 0);
    CHECK(s.out.find("RESULT: PASS") != std::string::npos);
    CHECK(run({"schubert", "--type", "B", "--rank", "2", "--matrix"}).code == 0);
    CHECK(run({"table", "--type", "B", "--rank", "2", "--schubert"}).code == 0);
    CHECK(run({"express", "--type", "A", "--rank", "2", "--index", "1,1"}).code == 0);
    CHECK(run({"express", "--type", "A", "--rank", "2"}).code == 2);
    Run basis = run({"basis", "--type", "D", "--rank", "3", "--invariants", "3"});
    CHECK(basis.code == 0);
    CHECK(basis.out.rfind("{\"independent\":true,\"spanning\":true", 0) == 0);
}

TEST_CASE("fixed seed gives identical reports")
{
    Run a = run({"express", "--type", "A", "--rank", "2", "--random-degree", "4", "--seed", "5"});
    Run b = run({"express", "--type", "A", "--rank", "2", "--random-degree", "4", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run c = run({"express", "--type", "A", "--rank", "2", "--random-degree", "4", "--seed", "6"});
    CHECK(c.out != a.out);
    CHECK(run({"basis", "--type", "A", "--rank", "3", "--seed", "3"}).out ==
          run({"basis", "--type", "A", "--rank", "3", "--seed", "3"}).out);
}
