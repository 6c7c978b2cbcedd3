#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "boole/json_io.hpp"
#include "cli.hpp"

using boole::Json;
using boole::LaurentPoly;
using boole::Rat;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = boole::cli::main_with_args(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("numbers csv") {
    auto r = run({"numbers", "--family", "boole", "--n-max", "3", "--format", "csv"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "n,value");
    CHECK(rows[1] == "0,1/2");
    CHECK(rows[2] == "1,-1/4*l");
    CHECK(rows[3] == "2,1/4*l");
    CHECK(rows[4] == "3,-1/2*l+1/8*l^3");
}

TEST_CASE("triangle json") {
    auto r = run({"triangle", "--N-max", "2", "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("rows").at(2) == Json::array({"1+l", "-1-3*l", "2*l"}));
    auto rows = boole::triangle_rows_from_json(j);
    CHECK(rows[2][1] == LaurentPoly(0, {-1, -3}));
}

TEST_CASE("triangle csv") {
    auto r = run({"triangle", "--N-max", "2", "--format", "csv"});
    auto rows = lines(r.out);
    CHECK(rows.front() == "N,k,a");
    CHECK(rows.back() == "2,2,2*l");
    CHECK(rows[1] == "0,0,l^-1");
}

TEST_CASE("verify exits 0 and lists every family") {
    auto r = run({"verify", "--all", "--N-max", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("8/8 identity families passed") != std::string::npos);
    for (const char* id : {"ODE", "THM3", "EQ32", "EQ34", "EQ36", "EQ38", "THM4", "CHANGHEE"})
        CHECK(r.out.find(id) != std::string::npos);
}

TEST_CASE("verify json output re-parses into the same reports") {
    auto r = run({"verify", "--identity", "THM3", "--identity", "eq36", "--N-max", "3", "--k-max", "4", "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("passed") == true);
    REQUIRE(j.at("reports").size() == 2);
    for (const auto& rep : j.at("reports")) CHECK(boole::to_json(boole::report_from_json(rep)) == rep);
    CHECK(j.at("reports").at(0).at("identity") == "THM3");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"numbers", "--lambda", "0"}).code == 2);
    CHECK(run({"numbers", "--lambda", "0/5"}).code == 2);
    CHECK(run({"numbers", "--lambda", "one"}).code == 2);
    CHECK(run({"numbers", "--lambda", "1/0"}).code == 2);
    CHECK(run({"numbers", "--family", "bernoulli"}).code == 2);
    CHECK(run({"numbers", "--n-max", "-3"}).code == 2);
    CHECK(run({"verify", "--N-max", "8", "--order", "9"}).code == 2);
    CHECK(run({"verify", "--identity", "NOPE"}).code == 2);
    CHECK(run({"triangle", "--N-max", "0"}).code == 2);
    CHECK(run({"numbers", "--format", "xml"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    auto r = run({"numbers", "--lambda", "0"});
    CHECK(r.err.find("nonzero") != std::string::npos);
    CHECK(r.out.empty());
    // a small order is fine when ODE is not selected
    CHECK(run({"verify", "--identity", "EQ32", "--N-max", "8", "--order", "3", "--n-max", "4"}).code == 0);
    CHECK(run({"all", "--format", "csv"}).code == 2);
    CHECK(run({"numbers", "--help"}).code == 0);
}

TEST_CASE("--lambda output is the symbolic output specialized") {
    const Rat q(-2, 3);
    auto sym = Json::parse(run({"numbers", "--family", "boole", "--n-max", "8", "--r", "2", "--format", "json"}).out);
    auto fix = Json::parse(
        run({"numbers", "--family", "boole", "--n-max", "8", "--r", "2", "--format", "json", "--lambda", "-2/3"}).out);
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(sym.at("values").at(n).get<LaurentPoly>().evaluate(q) == fix.at("values").at(n).get<Rat>());

    auto psym = Json::parse(run({"numbers", "--family", "boole-poly", "--x", "3/2", "--n-max", "6", "--format", "json"}).out);
    auto pfix = Json::parse(run({"numbers", "--family", "boole-poly", "--x", "3/2", "--n-max", "6", "--format", "json",
                                 "--lambda", "-2/3"})
                                .out);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(psym.at("values").at(n).get<LaurentPoly>().evaluate(q) == pfix.at("values").at(n).get<Rat>());

    auto tsym = Json::parse(run({"triangle", "--N-max", "5", "--format", "json"}).out);
    auto tfix = Json::parse(run({"triangle", "--N-max", "5", "--format", "json", "--lambda", "-2/3"}).out);
    auto rows = boole::triangle_rows_from_json(tsym);
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(rows[n][k].evaluate(q) == tfix.at("rows").at(n).at(k).get<Rat>());

    auto ssym = Json::parse(run({"series", "--function", "F", "--order", "7", "--format", "json"}).out);
    auto sfix = Json::parse(run({"series", "--function", "F", "--order", "7", "--format", "json", "--lambda", "-2/3"}).out);
    auto s1 = boole::series_from_json<LaurentPoly>(ssym.at("series"));
    auto s2 = boole::series_from_json<Rat>(sfix.at("series"));
    for (int n = 0; n < 7; ++n) CHECK(s1[n].evaluate(q) == s2[n]);

    // λ-free families are unchanged
    for (const char* fam : {"euler", "stirling1", "stirling2"})
        CHECK(run({"numbers", "--family", fam, "--n-max", "6", "--format", "json"}).out ==
              run({"numbers", "--family", fam, "--n-max", "6", "--format", "json", "--lambda", "-2/3"}).out);

    auto vfix = run({"verify", "--N-max", "3", "--k-max", "3", "--n-max", "6", "--order", "6", "--lambda", "-2/3"});
    CHECK(vfix.code == 0);
}

TEST_CASE("series and pretty output") {
    auto r = run({"series", "--function", "log1p", "--order", "4", "--format", "csv"});
    CHECK(lines(r.out) == std::vector<std::string>{"n,coeff", "0,0", "1,1", "2,-1/2", "3,1/3"});
    auto p = run({"numbers", "--family", "euler", "--n-max", "3"});
    CHECK(p.out.find("E_1 = -1/2  [approx -0.5]") != std::string::npos);
    auto s = run({"numbers", "--family", "stirling2", "--n-max", "3", "--format", "csv"});
    CHECK(lines(s.out).back() == "3,3,1");
    auto all = run({"all", "--N-max", "3", "--k-max", "3", "--n-max", "6", "--order", "6"});
    CHECK(all.code == 0);
    CHECK(all.out.find("== Identity verification") != std::string::npos);
    auto all_json = run({"all", "--N-max", "3", "--k-max", "3", "--n-max", "6", "--order", "6", "--format", "json"});
    CHECK(Json::parse(all_json.out).at("passed") == true);
}

TEST_CASE("--out writes a file") {
    auto path = std::filesystem::temp_directory_path() / "boole_cli_test_out.csv";
    auto r = run({"numbers", "--n-max", "2", "--format", "csv", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(lines(buf.str()).at(1) == "0,1/2");
    std::filesystem::remove(path);
    CHECK(run({"numbers", "--out", "/nonexistent-dir/x.csv"}).code == 2);
}
