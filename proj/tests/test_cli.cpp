#include "catch_amalgamated.hpp"

#include <sstream>

#include "dhloc/cli.hpp"

using namespace dhloc;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "dhloc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval") {
    CHECK(run({"eval", "--model", "builtin:s4", "--point", "1/2"}).out == "1\n");
    CHECK(run({"eval", "--model", "builtin:s4", "--point", "3/2"}).out == "-1\n");
    CHECK(run({"eval", "--model", "builtin:s4", "--point", "-5/2"}).out == "-1\n");
    CHECK(run({"eval", "--model", "builtin:woodward", "--point", "1/3,1/3"}).out == "1\n");
    CHECK(run({"eval", "--point", "0.75", "--decimal"}).out == "1\n");
    auto wall = run({"eval", "--point", "1"});
    CHECK(wall.code == cli::kDomainError);
    CHECK(wall.err.find("NonGenericPoint") != std::string::npos);
    CHECK(run({"eval", "--point", "1,2"}).code == cli::kDomainError);
    CHECK(run({"eval"}).code == cli::kUsage);
}

TEST_CASE("terms") {
    auto t = run({"terms", "--model", "builtin:s4", "--beta", "0"});
    CHECK(t.code == 0);
    CHECK(t.out == "-2 · δ_(0) ⋆ H_(-1)\n");
    auto a = run({"terms", "--model", "builtin:woodward", "--beta", "1/4,1/4"});
    CHECK(a.out == "+1 · δ_(1/4,1/4) ⋆ H_(1/2,1/2) ⊗ Leb[(1,-1)]\n");
    CHECK(run({"terms", "--beta", "1/3"}).code == cli::kDomainError);
    auto empty = run({"terms", "--window", "1:0"});
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
    CHECK(run({"terms"}).code == cli::kDomainError);
}

TEST_CASE("sum") {
    auto s = run({"sum", "--window", "-13/5:18/5"});
    REQUIRE(s.code == 0);
    auto d = distribution_from_json(json::parse(s.out));
    CHECK(d.terms().size() == 7);
    CHECK(density_at(d, Vec{frac(5, 2)}) == 1);
    auto s6 = run({"sum", "--model", "builtin:woodward", "--count", "6"});
    CHECK(distribution_from_json(json::parse(s6.out)).terms().size() == 6);
    auto sb = run({"sum", "--model", "builtin:woodward", "--betas", "1/4,1/4;1/2,-1/4"});
    CHECK(distribution_from_json(json::parse(sb.out)).terms().size() == 2);
    CHECK(run({"sum", "--model", "builtin:woodward", "--count", "5"}).code == cli::kDomainError);
}

TEST_CASE("raster") {
    auto one = run({"raster", "--model", "builtin:s4", "--window", "0:1", "--res", "1"});
    REQUIRE(one.code == 0);
    auto first = one.out.find("\r\n") + 2;
    auto comma = one.out.find(',', first);
    REQUIRE(comma != std::string::npos);
    std::string x = one.out.substr(first, comma - first);
    std::string v = one.out.substr(comma + 1, one.out.find("\r\n", comma) - comma - 1);
    CHECK(one.out.rfind("x,value\r\n", 0) == 0);
    CHECK(run({"eval", "--model", "builtin:s4", "--point", x}).out == v + "\n");

    std::vector<std::string> args{"raster", "--model", "builtin:woodward", "--window", "-2,-2:2,2",
                                  "--res", "16,12", "--count", "12", "--seed", "3"};
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::size_t rows = 0;
    for (char ch : a.out) rows += ch == '\n';
    CHECK(rows == 1 + 16 * 12);

    args.push_back("--format");
    args.push_back("svg");
    auto svg = run(args);
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(svg.out.find("#d3d3d3") != std::string::npos);
    CHECK(svg.out.find("#000000") != std::string::npos);

    CHECK(run({"raster", "--window", "0:1", "--res", "0"}).code == cli::kDomainError);
    CHECK(run({"raster", "--window", "0:1", "--format", "png"}).code == cli::kUsage);
    CHECK(run({"raster", "--window", "0,0:1,1"}).code == cli::kDomainError);
}

TEST_CASE("check") {
    auto s = run({"check", "s4-golden"});
    CHECK(s.code == 0);
    CHECK(s.out.find("\"pass\":false") == std::string::npos);
    CHECK(run({"check", "algebra"}).code == 0);
    CHECK(run({"check", "nope"}).code == cli::kUsage);
}

TEST_CASE("export") {
    auto e = run({"export", "s4"});
    CHECK(e.out == dump(model_json(builtin_s4())));
    CHECK(run({"export", "e8"}).code == cli::kUsage);
}

TEST_CASE("usage") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == 0);
}
