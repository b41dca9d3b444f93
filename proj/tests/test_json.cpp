#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qsa/json_io.hpp"

using namespace qsa;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

#ifndef QSA_GOLDEN_DIR
#define QSA_GOLDEN_DIR "tests/golden"
#endif

} // namespace

TEST_CASE("laurent serialization schema") {
    LaurentPoly p = LaurentPoly::term(make_rat(3, 2), 2) - LaurentPoly::term(Rat(1), -1);
    Json j = to_json(p);
    CHECK(j.dump() == R"({"terms":[[-1,"-1"],[2,"3/2"]]})");
    RationalFunction f(p, LaurentPoly::variable() + LaurentPoly::one());
    Json jf = to_json(f);
    CHECK(jf.contains("num"));
    CHECK(jf.contains("den"));
}

TEST_CASE("parsers") {
    CHECK(parse_laurent("v^-1 + v") == LaurentPoly::term(Rat(1), -1) + LaurentPoly::variable());
    CHECK(parse_laurent("2*v^2 - 1/2") ==
          LaurentPoly::term(Rat(2), 2) - LaurentPoly::constant(make_rat(1, 2)));
    CHECK(parse_rational_function("v/(1 + v^2)") ==
          RationalFunction(LaurentPoly::variable(),
                           LaurentPoly::one() + LaurentPoly::term(Rat(1), 2)));
    CHECK(parse_rational_function("(v + 1)/(v - 1)") ==
          RationalFunction(LaurentPoly::variable() + LaurentPoly::one(),
                           LaurentPoly::variable() - LaurentPoly::one()));
    CHECK((parse_composition("2,1,0").parts() == std::vector<int>{2, 1, 0}));
    CHECK((parse_word(3, "s1s2s1") == Perm::from_word(3, {1, 2, 1})));
    CHECK(parse_word(3, "e").is_identity());
    // round-trip through str()
    LaurentPoly p = LaurentPoly::term(make_rat(-5, 3), -4) + LaurentPoly::term(Rat(7), 0) +
                    LaurentPoly::term(Rat(1), 3);
    CHECK(parse_laurent(p.str()) == p);
}

TEST_CASE("deterministic output: identical invocations give identical JSON") {
    QSchurAlgebra S1(2, 2), S2(2, 2);
    Json a = Json::array(), b = Json::array();
    for (int i = 0; i < S1.size(); ++i) a.push_back(index_json(S1, i));
    for (int i = 0; i < S2.size(); ++i) b.push_back(index_json(S2, i));
    CHECK(a.dump() == b.dump());

    WedderburnData W1(S1), W2(S2);
    CHECK(to_json(james_report(W1, 3, {7, 13})).dump() ==
          to_json(james_report(W2, 3, {7, 13})).dump());
}

TEST_CASE("golden files for (2,2) reports") {
    QSchurAlgebra S(2, 2);
    {
        Json basis = Json::array();
        for (int a = 0; a < S.size(); ++a) basis.push_back(index_json(S, a));
        CHECK(basis.dump(2) + "\n" == read_file(std::string(QSA_GOLDEN_DIR) + "/basis_2_2.json"));
    }
    {
        WedderburnData W(S);
        Json rep = to_json(james_report(W, 3, {7, 13}));
        CHECK(rep.dump(2) + "\n" ==
              read_file(std::string(QSA_GOLDEN_DIR) + "/james_2_2_e3.json"));
    }
}
