#include "fss/cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace fss;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FSS_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int parse_error_line(const std::string& text, bool braid)
{
    std::istringstream in(text);
    try {
        if (braid)
            (void)parse_braid(in);
        else
            (void)parse_map(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("map files")
{
    std::istringstream in("# tau\nmap 2 2\n\ne2\ne2 e1 E2\n");
    const GraphMap phi = parse_map(in);
    CHECK(phi.n == 2);
    CHECK(phi.word(2).str() == "e2 e1 E2");
    std::istringstream empty("map 1 3\n1\n");
    CHECK(parse_map(empty).word(1).empty());
    std::istringstream reduce("map 1 2\ne1 E1 e2\n");
    CHECK(parse_map(reduce).word(1).str() == "e2");

    CHECK(parse_error_line("map 2 2\ne2\ne3\n", false) == 3);
    CHECK(parse_error_line("map 2 2\ne2\n", false) == 2);
    CHECK(parse_error_line("mop 2 2\ne1\ne2\n", false) == 1);
    CHECK(parse_error_line("# c\nmap 1 1\nf1\n", false) == 3);
    CHECK(parse_error_line("map 1 1\n1 e1\n", false) == 2);
    CHECK(parse_error_line("map x 1\ne1\n", false) == 1);
    CHECK(parse_error_line("", false) == 0);
}

TEST_CASE("braid files")
{
    std::istringstream in("braid 3\ns1 s2'\n\ns1\n");
    const BraidWord b = parse_braid(in);
    CHECK(b.n == 3);
    CHECK(b.str() == "s1 s2' s1");
    std::istringstream bare("braid 2\n");
    CHECK(parse_braid(bare).letters.empty());
    CHECK(parse_error_line("braid 3\ns1\ns3\n", true) == 3);
    CHECK(parse_error_line("braid 3\nt1\n", true) == 2);
    CHECK(parse_error_line("braid\n", true) == 1);
}

TEST_CASE("ranges and formats")
{
    CHECK(parse_range("1..20").lo == 1);
    CHECK(parse_range("1..20").hi == 20);
    CHECK(parse_range("7").hi == 7);
    CHECK_THROWS_AS((void)parse_range("3..2"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_range("0..2"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_range("a..b"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_format("xml"), std::invalid_argument);

    Grid g;
    g.corner = "row/col";
    g.column_labels = {"(1,2)", "x"};
    g.row_labels = {"(0,3)"};
    g.cells = {{Integer("123456789012345678901234567890"), Integer(-2)}};
    std::ostringstream table, csv, json;
    write_grid(table, g, Format::Table);
    write_grid(csv, g, Format::Csv);
    write_grid(json, g, Format::Json);
    CHECK(table.str() == "row/col\t(1,2)\tx\n(0,3)\t123456789012345678901234567890\t-2\n");
    CHECK(csv.str() == "row/col,\"(1,2)\",x\n\"(0,3)\",123456789012345678901234567890,-2\n");
    const auto parsed = nlohmann::json::parse(json.str());
    CHECK(parsed["values"][0][0] == "123456789012345678901234567890");
    CHECK(parsed["columns"][0] == "(1,2)");
}

TEST_CASE("betti command")
{
    const auto full = run({"betti", "--k-range", "1..20", "--n-range", "1..10"});
    CHECK(full.code == 0);
    CHECK(full.out == slurp(data("table1.tsv")));
    CHECK(run({"betti", "--k-range", "1..20", "--n-range", "1..10", "--mode", "genfun"}).out == full.out);
    CHECK(run({"betti", "--k", "3", "--n", "3", "--mode", "complex"}).out == "k/n\t3\n3\t7\n");
    CHECK(run({"betti", "--k", "10", "--n", "6", "--mode", "genfun"}).out == "k/n\t6\n10\t1791\n");
    CHECK(run({"betti", "--k-range", "1..8", "--n-range", "1..5", "--mode", "complex"}).out ==
          run({"betti", "--k-range", "1..8", "--n-range", "1..5"}).out);
    const auto json = nlohmann::json::parse(run({"betti", "--k", "20", "--n", "10", "--format", "json"}).out);
    CHECK(json["values"][0][0] == "5911762");
    CHECK(json["mode"] == "formula");

    CHECK(run({"betti", "--k", "11", "--n", "3", "--mode", "complex"}).code == 3);
    CHECK(run({"betti", "--k", "11", "--n", "3", "--mode", "complex", "--allow-large"}).out == "k/n\t3\n11\t43\n");
    CHECK(run({"betti", "--k", "3"}).code == 2);
    CHECK(run({"betti", "--k", "3", "--n", "3", "--mode", "guess"}).code == 2);
    CHECK(run({"betti", "--k-range", "5..1", "--n", "2"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("homology command")
{
    const auto u = run({"homology", "--k", "4", "--n", "2", "--space", "unbased", "--format", "json"});
    REQUIRE(u.code == 0);
    const auto j = nlohmann::json::parse(u.out);
    CHECK(j["groups"][3]["rank"] == "3");
    CHECK(j["groups"][4]["rank"] == "2");
    CHECK(j["groups"][4]["basis_size"] == "2");
    CHECK(j["torsion_free"] == true);
    for (const auto& g : j["groups"])
        if (g["dim"] != 3 && g["dim"] != 4) CHECK(g["rank"] == "0");

    const auto b = nlohmann::json::parse(run({"homology", "--k", "2", "--n", "5", "--space", "based", "--format", "json"}).out);
    CHECK(b["groups"][1]["rank"] == "5");
    const auto one = nlohmann::json::parse(run({"homology", "--k", "1", "--n", "3", "--format", "json"}).out);
    CHECK(one["groups"][0]["rank"] == "0");
    CHECK(one["groups"][1]["rank"] == "3");
    CHECK(run({"homology", "--k", "4", "--n", "7"}).code == 3);
    CHECK(run({"homology", "--k", "4", "--n", "2", "--space", "odd"}).code == 2);
    CHECK(run({"homology", "--k", "4", "--n", "2", "--format", "csv"}).out.find("dim,rank,torsion,basis\n") != std::string::npos);
}

TEST_CASE("map-matrix command")
{
    CHECK(run({"map-matrix", data("degree3.map"), "--k", "3"}).out.find("(4)\t9\n") != std::string::npos);
    const auto tau = nlohmann::json::parse(run({"map-matrix", data("tau.map"), "--k", "3", "--format", "json"}).out);
    const auto swap = nlohmann::json::parse(run({"map-matrix", data("swap.map"), "--k", "3", "--format", "json"}).out);
    CHECK(tau["matrix"] == swap["matrix"]);
    CHECK(tau["matrix"]["values"].size() == 3);
    CHECK(tau["matrix"]["columns"][0] == "(0,4)");
    CHECK(run({"map-matrix", data("missing.map"), "--k", "3"}).code == 2);
    CHECK(run({"map-matrix", data("tau.map")}).code == 2);
    CHECK(run({"map-matrix", data("tau.map"), "--k", "13"}).code == 3);
}

TEST_CASE("braid command")
{
    const auto s1 = run({"braid", data("s1.braid"), "--k", "3", "--checks"});
    CHECK(s1.code == 0);
    CHECK(s1.out.find("v\t-1\t-2\t0\t0\nw1\t0\t0\t1\t0\nw2\t0\t1\t0\t0\nw3\t0\t0\t0\t1\n") != std::string::npos);
    CHECK(s1.out.find("sigma\t-2\n") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"braid", data("s1.braid"), "--k", "3", "--format", "json", "--checks"}).out);
    CHECK(j["pure"] == false);
    CHECK(j["checks"]["passed"] == true);
    CHECK(j["restricted"]["values"][0][1] == "-2");
    CHECK(j["permutation"] == nlohmann::json::array({2, 1, 3}));
}

TEST_CASE("verify command")
{
    const auto r = run({"verify", "ring"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["suite"] == "ring");
    CHECK(j["checks"].size() >= 3);
    CHECK(run({"verify", "braid", "--format", "table"}).out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "nope"}).code == 2);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"braid", data("s1.braid"), "--k", "3", "--format", "json", "--checks"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> betti{"betti", "--k-range", "1..6", "--n-range", "1..4", "--mode", "complex"};
    CHECK(run(betti).out == run(betti).out);
}
