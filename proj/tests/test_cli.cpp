#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "uqsl/serialize.hpp"

using namespace uqsl;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = uqslcat::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("uqslcat_test_" + name)).string();
}

}  // namespace

TEST_CASE("documented examples") {
    Result r = call({"ext", "--p", "2", "--from", "X+:1", "--to", "X-:1", "--deg", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    r = call({"center", "--p", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");

    const std::string reg = temp_path("reg.json");
    REQUIRE(call({"build", "--p", "2", "--module", "Reg", "--output", reg}).code == 0);
    r = call({"decompose", "--p", "2", "--input", reg});
    CHECK(r.code == 0);
    CHECK(r.out == "{P+_1:1, P-_1:1, X+_2:2, X-_2:2}\n");
    std::remove(reg.c_str());
}

TEST_CASE("text and json carry the same content") {
    const std::vector<std::vector<std::string>> cmds = {
        {"ext", "--p", "3", "--from", "X+:1", "--to", "X-:2", "--deg", "3"},
        {"hom", "--p", "2", "--from", "P+:1", "--to", "X+:1"},
        {"center", "--p", "2"},
    };
    for (const auto& cmd : cmds) {
        const Result t = call(cmd);
        auto with = cmd;
        with.insert(with.end(), {"--format", "json"});
        const Result j = call(with);
        REQUIRE(t.code == 0);
        REQUIRE(j.code == 0);
        const Json parsed = Json::parse(j.out);
        const int value = parsed.contains("dim") ? parsed["dim"].get<int>() : parsed["center_dim"].get<int>();
        CHECK(t.out == std::to_string(value) + "\n");
    }

    const Result t = call({"decompose", "--p", "3", "--module", "O+:1:2:1/q"});
    const Result j = call({"decompose", "--p", "3", "--module", "O+:1:2:1/q", "--format", "json"});
    REQUIRE(t.code == 0);
    REQUIRE(j.code == 0);
    const DecompReport back = decomp_from_json(Json::parse(j.out));
    REQUIRE(back.entries.size() == 1);
    const ModuleLabel want{Family::O, 1, 1, 2, CP1::affine(qpow(3, 1))};
    CHECK(back.entries[0].label == want);
    CHECK(t.out == "{" + want.to_string() + ":1}\n");
}

TEST_CASE("built modules round trip through the json output") {
    const Result r = call({"build", "--p", "3", "--module", "M-:2:3", "--format", "json"});
    REQUIRE(r.code == 0);
    const QMod m = qmod_from_json(Json::parse(r.out));
    const QMod want = build_named(3, ModuleLabel{Family::M, -1, 2, 3});
    CHECK(m.E() == want.E());
    CHECK(m.F() == want.F());
    CHECK(m.weights() == want.weights());
}

TEST_CASE("label grammar") {
    CHECK(uqslcat::parse_module("W-:1:3", 2).label == (ModuleLabel{Family::W, -1, 1, 3}));
    CHECK(uqslcat::parse_module("O+:2:1:0/1", 3).label.z == CP1::infinity());
    CHECK(uqslcat::parse_module("O+:2:1:2/2q", 3).label.z == CP1::affine(qpow(3, 1)));
    CHECK(uqslcat::parse_module("Reg", 3).regular);
    CHECK(uqslcat::parse_field_element("1 - q^2 + 3q^-1", 3) ==
          CycNum(6, 1L) - qpow(3, 2) + qpow(3, -1) * CycNum(6, 3L));
    CHECK_THROWS_AS(uqslcat::parse_module("X+:3", 2), std::domain_error);
    CHECK_THROWS_AS(uqslcat::parse_module("P+:2", 2), std::domain_error);
    CHECK_THROWS_AS(uqslcat::parse_module("W+:1:1", 2), std::domain_error);
    CHECK_THROWS_AS(uqslcat::parse_module("O+:1:1:0/0", 2), std::domain_error);
    CHECK_THROWS_AS(uqslcat::parse_module("Q+:1", 2), std::domain_error);
    CHECK_THROWS_AS(uqslcat::parse_field_element("q^", 2), std::domain_error);
}

TEST_CASE("exit codes") {
    CHECK(call({}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"ext", "--p", "2", "--from", "P+:1", "--to", "X+:1"}).code == 1);
    CHECK(call({"center", "--p", "9"}).code == 1);
    CHECK(call({"center", "--p", "7", "--max-p", "7"}).code == 0);
    CHECK(call({"braid-check", "--p", "3"}).code == 1);
    CHECK(call({"decompose", "--input", "/nonexistent/file.json"}).code == 1);
    const Result e = call({"hom", "--p", "2", "--from", "X+:5", "--to", "X+:1"});
    CHECK(e.code == 1);
    CHECK(e.err.find("1 <= s <= 2") != std::string::npos);

    // a golden-ratio pencil does not split over Q: classification failure
    const std::string path = temp_path("golden.json");
    {
        Json one = to_json(CycNum(1, 1L)), zero = to_json(CycNum());
        const Json rep = {{"d0", 2},
                          {"d1", 2},
                          {"r", Json::array({Json::array({one, zero}), Json::array({zero, one})})},
                          {"rbar", Json::array({Json::array({one, one}), Json::array({one, zero})})}};
        std::ofstream(path) << rep.dump();
    }
    const Result g = call({"kron-classify", "--input", path});
    CHECK(g.code == 2);
    CHECK(g.err.find("eigenvalue-outside-field") != std::string::npos);
    CHECK(call({"kron-classify", "--input", path, "--field-order", "5"}).code == 0);
    std::remove(path.c_str());
}

TEST_CASE("analysis verbs") {
    Result r = call({"resolve", "--p", "2", "--module", "X+:1", "--length", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "P_0 = P+_1\nP_1 = P-_1 + P-_1\nP_2 = P+_1 + P+_1 + P+_1\nverified\n");
    r = call({"yoneda", "--p", "2", "--word", "x-1,x+2"});
    CHECK(r.out == "degree 2: X+_1 -> X+_1, nonzero\n");
    r = call({"yoneda", "--p", "2", "--word", "x+1,x+2"});
    CHECK(r.out == "degree 2: X+_1 -> X-_1, zero\n");
    r = call({"blocks", "--p", "2", "--module", "Reg"});
    CHECK(r.out == "beta_0: dim 4\nbeta_1: dim 8\nbeta_2: dim 4\n");
    r = call({"verify", "--p", "3", "--module", "P-:2"});
    CHECK(r.out == "ok\n");
    r = call({"braid-check", "--p", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["ok"] == true);
    r = call({"verify", "--hopf", "--p", "2"});
    CHECK(r.code == 0);
}
