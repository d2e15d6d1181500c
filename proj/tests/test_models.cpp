#include "catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dhloc/models.hpp"

using namespace dhloc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool has_path(const std::vector<Diagnostic>& ds, const std::string& prefix) {
    for (const auto& d : ds)
        if (d.path.rfind(prefix, 0) == 0) return true;
    return false;
}

} // namespace

TEST_CASE("builtin models validate and round-trip") {
    for (const Model& m : {builtin_s4(), builtin_woodward_su3()}) {
        json j = model_json(m);
        CHECK(validate(j).empty());
        Model back = model_from_json(j);
        CHECK(dump(model_json(back)) == dump(j));
        for (const auto& d : back.data) CHECK(eul_series_check(d));
    }
}

TEST_CASE("shipped model files match the builtins") {
    const std::string dir = DHLOC_MODELS_DIR;
    CHECK(slurp(dir + "/s4.json") == dump(model_json(builtin_s4())));
    CHECK(slurp(dir + "/woodward_su3.json") == dump(model_json(builtin_woodward_su3())));
    for (const char* name : {"/s4.json", "/woodward_su3.json"}) {
        Model m = load_model(dir + name);
        auto tmp = std::filesystem::temp_directory_path() / ("dhloc_roundtrip_" + std::string(name + 1));
        save_model(m, tmp.string());
        CHECK(slurp(tmp.string()) == slurp(dir + name));
        std::filesystem::remove(tmp);
    }
}

TEST_CASE("weight not orthogonal to its wall") {
    json j = model_json(builtin_woodward_su3());
    j["data"][0]["weights"][0]["vector"] = json::array({"1", "0"});
    auto ds = validate(j);
    REQUIRE_FALSE(ds.empty());
    CHECK(has_path(ds, "$.data[0].weights[0].vector"));
    CHECK_THROWS_AS(model_from_json(j), ModelError);
}

TEST_CASE("Chern entry above the cap") {
    json j = model_json(builtin_s4());
    j["data"][1]["chern_table"].push_back({{"chern", json::array({json::array({0, 1})})}, {"xi", json::array()}, {"value", "3"}});
    auto ds = validate(j);
    CHECK(has_path(ds, "$.data[1].chern_table[1].chern"));
}

TEST_CASE("diagnostics are collected, not stopped at the first") {
    json j = model_json(builtin_s4());
    j["data"][1]["sgn_g"] = 3;
    j["data"][2]["base_orientation"] = 0;
    j["window_default"]["lo"] = json::array({"9"});
    auto ds = validate(j);
    CHECK(has_path(ds, "$.data[1].sgn_g"));
    CHECK(has_path(ds, "$.data[2].base_orientation"));
    CHECK(has_path(ds, "$.window_default"));
}

TEST_CASE("structural errors") {
    json j = model_json(builtin_s4());
    j["root_datum"] = "G2";
    CHECK(has_path(validate(j), "$.root_datum"));

    json k = model_json(builtin_s4());
    k.erase("gamma");
    CHECK(has_path(validate(k), "$.gamma"));

    json v = model_json(builtin_s4());
    v["schema_version"] = 99;
    CHECK(has_path(validate(v), "$.schema_version"));

    json r = model_json(builtin_s4());
    r["gamma"] = json::array({"1/0"});
    CHECK_FALSE(validate(r).empty());

    CHECK_THROWS_AS(parse_json_text("{ not json", "inline"), Error);
    CHECK_THROWS_AS(load_model("/nonexistent/model.json"), Error);
}

TEST_CASE("load_model accepts builtin names") {
    CHECK(load_model("builtin:s4").name == "s4");
    CHECK(load_model("builtin:woodward").name == "woodward_su3");
}

TEST_CASE("distribution serialization round-trips") {
    Model m = builtin_s4();
    auto d = partial_sum(m, Box{Vec{-2}, Vec{3}});
    auto back = distribution_from_json(distribution_json(d));
    REQUIRE(back.terms().size() == d.terms().size());
    for (std::size_t i = 0; i < d.terms().size(); ++i) CHECK(to_string(back.terms()[i]) == to_string(d.terms()[i]));
    std::vector<Vec> pts;
    for (long n = -7; n <= 11; ++n) pts.push_back(Vec{frac(2 * n + 1, 4)});
    CHECK(equal_on_samples(d, back, pts));
}
