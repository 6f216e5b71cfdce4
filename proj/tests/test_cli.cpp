#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "matchorient/catalog.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    json out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = matchorient::cli::run(args, out, err);
    CliResult r{code, json(), err.str()};
    if (!out.str().empty()) r.out = json::parse(out.str());
    return r;
}

}  // namespace

TEST_CASE("orient on the wagner rim factor is infeasible with a 5-cycle certificate") {
    auto r = run({"orient", "catalog:wagner", "--factor", "1 2,3 4,5 6,7 8", "--target", "even"});
    CHECK(r.code == 1);
    CHECK(r.out["exists"] == false);
    CHECK(r.out["certificate"]["cycles"].size() == 5);
    CHECK(r.out["certificate"]["class"] == "odd");
}

TEST_CASE("orient even on k33 succeeds with a witness") {
    auto r = run({"orient", "catalog:k33", "--target", "even"});
    CHECK(r.code == 0);
    CHECK(r.out["exists"] == true);
    CHECK(r.out["witness"].size() == 9);
}

TEST_CASE("pfaffian verdicts and exit codes") {
    CHECK(run({"pfaffian", "catalog:petersen"}).code == 1);
    CHECK(run({"pfaffian", "catalog:petersen"}).out["pfaffian"] == false);
    CHECK(run({"pfaffian", "catalog:wagner"}).code == 0);
}

TEST_CASE("matchings and extendible commands") {
    auto r = run({"matchings", "catalog:petersen"});
    CHECK(r.code == 0);
    CHECK(r.out["count"] == 6);
    CHECK(run({"extendible", "catalog:wagner"}).code == 0);
}

TEST_CASE("bad and wagner subcommands") {
    CHECK(run({"bad", "catalog:petersen"}).code == 0);
    CHECK(run({"bad", "catalog:wagner"}).code == 1);
    auto r = run({"wagner", "catalog:w_star"});
    CHECK(r.code == 0);
    CHECK(r.out["member"] == true);
    CHECK(r.out["certificate"]["removed_pair"].size() == 2);
    CHECK(r.out["certificate"]["removed_pair"][0].is_array());
    CHECK(r.out["certificate"]["skew_cycles"].size() == 2);
    CHECK(run({"wagner", "catalog:k33"}).code == 1);
}

TEST_CASE("split and glue round-trip through the cli") {
    auto split = run({"split", "catalog:w_star", "--edge", "x y", "--special"});
    CHECK(split.code == 0);
    CHECK(split.out["simple"] == true);
    CHECK(split.out["choice"] == "r1");
    CHECK(split.out["graph"]["vertices"].size() == 8);
    auto glue = run({"glue", "catalog:wagner", "--edges", "5 1,6 2"});
    CHECK(glue.code == 0);
    CHECK(glue.out["graph"]["vertices"].size() == 10);
}

TEST_CASE("catalog round-trips through the graph parser") {
    using matchorient::Graph;
    auto r = run({"catalog", "wagner"});
    CHECK(r.code == 0);
    Graph parsed = Graph::parse(r.out["graph"].dump());
    CHECK(parsed == matchorient::catalog_find("wagner")->graph);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"frobnicate", "catalog:wagner"}).code == 2);
    CHECK(run({"orient"}).code == 2);
    CHECK(run({"orient", "catalog:nosuch"}).code == 2);
    CHECK(run({"orient", "catalog:wagner", "--target", "sideways"}).code == 2);
    CHECK(run({"matchings", "/nonexistent/file"}).code == 2);
}

TEST_CASE("cuts, bricks, earify and zerosum produce structured output") {
    auto cuts = run({"cuts", "catalog:petersen"});
    CHECK(cuts.code == 0);
    for (const auto& c : cuts.out["tight"]) CHECK(c["trivial"] == true);
    CHECK(cuts.out["barrier"].empty());
    CHECK(cuts.out["two_separation"].empty());

    auto bricks = run({"bricks", "catalog:wagner"});
    CHECK(bricks.code == 0);
    CHECK(bricks.out["pieces"].size() == 1);
    CHECK(bricks.out["pieces"][0]["kind"] == "brick");

    auto ears = run({"earify", "catalog:wagner", "--factor", "1 5,2 6,3 7,4 8"});
    CHECK(ears.code == 0);
    CHECK(ears.out["stages"].size() >= 2);

    auto zs = run({"zerosum", "catalog:wagner", "--factor", "1 2,3 4,5 6,7 8"});
    CHECK(zs.code == 0);
    CHECK(!zs.out["basis"].empty());
}

TEST_CASE("altcycles defaults to the first factor") {
    auto r = run({"altcycles", "catalog:k33"});
    CHECK(r.code == 0);
    CHECK(r.out["count"] == 5);
}
