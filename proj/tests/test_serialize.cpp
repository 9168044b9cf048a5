#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "uqsl/braiding.hpp"
#include "uqsl/serialize.hpp"

using namespace uqsl;

namespace {

/// Round trip through the textual form, not just the Json object.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

CycNum random_element(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<mpq_class> c;
    for (int k = 0; k < euler_phi(order); ++k) c.push_back(mpq_class(num(rng), den(rng)));
    return CycNum(order, c);
}

}  // namespace

TEST_CASE("field elements keep exact values") {
    std::mt19937 rng(5);
    for (int order : {1, 4, 6, 8, 10}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CycNum x = random_element(rng, order);
            CHECK(cycnum_from_json(reparse(to_json(x))) == x);
        }
    }
    const Json j = to_json(CycNum(6, mpq_class(2, 4)));
    CHECK(j["order"] == 6);
    CHECK(j["coeffs"] == Json::array({"1/2"}));
    CHECK(cycnum_from_json(to_json(CycNum())).is_zero());
    CHECK(parse_fraction("-6/4") == mpq_class(-3, 2));
    CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("x"), std::invalid_argument);
    CHECK_THROWS_AS(cycnum_from_json(Json::parse(R"({"order": 4, "coeffs": ["1", "2", "3"]})")), std::invalid_argument);
}

TEST_CASE("modules round trip") {
    for (int p = 2; p <= 3; ++p)
        for (int a : {1, -1})
            for (int s = 1; s < p; ++s) {
                for (const QMod& m : {build_P(p, a, s), build_W2(p, a, s),
                                      build_O1(p, a, s, CP1::affine(qpow(p, 1))), irreducible(p, a, p)}) {
                    const QMod back = qmod_from_json(reparse(to_json(m)));
                    CHECK(back.p() == m.p());
                    CHECK(back.weights() == m.weights());
                    CHECK(back.E() == m.E());
                    CHECK(back.F() == m.F());
                    CHECK(back.label() == m.label());
                }
            }
    Json bad = to_json(irreducible(2, 1, 2));
    bad["K"] = Json::array();
    CHECK_THROWS_AS(qmod_from_json(bad), std::invalid_argument);
    Json shape = to_json(irreducible(2, 1, 2));
    shape["weights"] = Json::array({0});
    CHECK_THROWS_AS(qmod_from_json(shape), std::invalid_argument);
}

TEST_CASE("quiver representations round trip") {
    const CycNum w = CycNum::zeta(6, 1);
    const QuiverRep rep = QuiverRep::rho(2) + QuiverRep::regular(2, CP1::affine(w));
    const Json j = reparse(to_json(rep));
    CHECK(j["d0"] == 5);
    CHECK(j["d1"] == 4);
    CHECK(quiver_from_json(j) == rep);
}

TEST_CASE("decomposition reports round trip with labels and z") {
    DecompReport r;
    ModuleLabel o{Family::O, 1, 1, 2, CP1::affine(qpow(3, 2))};
    ModuleLabel inf{Family::O, -1, 2, 1, CP1::infinity()};
    r.entries = {{ModuleLabel{Family::P, 1, 1}, 1}, {o, 2}, {inf, 1}, {ModuleLabel{Family::W, -1, 1, 3}, 1}};
    const Json j = to_json(r);
    CHECK(j[0]["label"] == "P+_1");
    CHECK(j[0]["mult"] == 1);
    CHECK_FALSE(j[0].contains("n"));
    CHECK(j[2]["z"] == Json::array({"0", "1"}));
    const DecompReport back = decomp_from_json(reparse(j));
    REQUIRE(back.entries.size() == r.entries.size());
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        CHECK(back.entries[i].label == r.entries[i].label);
        CHECK(back.entries[i].mult == r.entries[i].mult);
    }

    const DecompReport real = decompose(regular_module(2));
    const DecompReport again = decomp_from_json(reparse(to_json(real, true)));
    CHECK(again.certificate == real.certificate);
    CHECK(again.summands.size() == real.summands.size());
}

TEST_CASE("algebra and tensor elements round trip") {
    const AlgElem c = casimir_element(PBWAlgebra::restricted(3));
    CHECK(alg_elem_from_json(reparse(to_json(c))) == c);
    const AlgElem v = ribbon_element(2);
    CHECK(alg_elem_from_json(reparse(to_json(v))) == v);
    const TensorElem R = r_matrix(2);
    const Json j = reparse(to_json(R));
    CHECK(j["extended"] == true);
    CHECK(tensor_elem_from_json(j) == R);
}
