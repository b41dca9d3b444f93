#include <set>

#include "doctest.h"
#include "qsa/errors.hpp"
#include "qsa/wedderburn.hpp"

using namespace qsa;

TEST_CASE("iso-classes") {
    {
        QSchurAlgebra S(2, 2);
        WedderburnData W(S);
        REQUIRE(W.num_classes() == 2);
        std::multiset<std::size_t> sizes;
        for (const auto& cls : W.iso_classes()) sizes.insert(cls.size());
        CHECK((sizes == std::multiset<std::size_t>{1, 3}));
    }
    {
        QSchurAlgebra S(1, 3);
        WedderburnData W(S);
        CHECK(W.num_classes() == 1);
    }
}

TEST_CASE("tau values and duality at (2,2)") {
    QSchurAlgebra S(2, 2);
    WedderburnData W(S);
    CHECK(W.tau(QSchurAlgebra::to_k(S.identity())) == RationalFunction(4L)); // 3 + 1
    // tau(theta_a theta_b^vee) = delta on all 100 pairs, through products
    for (int a = 0; a < S.size(); ++a) {
        auto da = W.dual_theta(a);
        for (int b = 0; b < S.size(); ++b) {
            RationalFunction val =
                W.tau(S.multiply(QSchurAlgebra::KVec{{b, RationalFunction(1L)}}, da));
            CHECK(val == (a == b ? RationalFunction(1L) : RationalFunction()));
        }
    }
    // P^{-1} entries reproduce tau(theta_a^vee theta_b^vee)
    for (int a = 0; a < S.size(); ++a)
        for (int b = 0; b < S.size(); ++b) {
            RationalFunction val = W.tau(S.multiply(W.dual_theta(a), W.dual_theta(b)));
            CHECK(val == W.gram_inv().at(a, b));
        }
}

TEST_CASE("one-dimensional case (1,1)") {
    QSchurAlgebra S(1, 1);
    WedderburnData W(S);
    // tau(theta) = 1/c with c = 1; theta^vee = c * theta; M = (1); D = (c)
    CHECK(W.gram().at(0, 0) == RationalFunction(1L));
    CHECK(W.change_of_basis().at(0, 0).is_one());
    CHECK(W.monomial_matrix().at(0, 0) == RationalFunction(1L));

    TraceForm tf;
    tf.schurByClass = {RationalFunction(2L)};
    WedderburnData W2(S, tf);
    CHECK(W2.gram().at(0, 0) == RationalFunction(LaurentPoly::one(),
                                                 LaurentPoly::from_int(2)));
    auto dual = W2.dual_theta(0);
    REQUIRE(dual.size() == 1);
    CHECK(dual.at(0) == RationalFunction(2L));
    CHECK(W2.change_of_basis().at(0, 0).is_one());
    CHECK(W2.monomial_matrix().at(0, 0) == RationalFunction(2L));
}

TEST_CASE("matrix units: diagonal unit squares to itself") {
    QSchurAlgebra S(2, 2);
    WedderburnData W(S);
    for (int d : S.distinguished_set()) {
        auto u = W.wedderburn_element(d);
        CHECK(S.multiply(u, u) == u);
    }
}

TEST_CASE("change of basis and monomial matrix at (2,2)") {
    QSchurAlgebra S(2, 2);
    WedderburnData W(S);
    const auto& M = W.change_of_basis();
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) CHECK(M.at(i, j).is_integral());
    CHECK_FALSE(bareiss_det(M).is_zero());
    // dual route for the M entries: m_{a,c} = tau(theta_a * theta_{c^t} theta_{d}^vee)
    for (int a = 0; a < S.size(); ++a)
        for (int c = 0; c < S.size(); ++c) {
            int ct = S.transpose(c);
            RationalFunction viaTau = W.tau(
                S.multiply(QSchurAlgebra::KVec{{a, RationalFunction(1L)}}, W.b_dual_element(ct)));
            CHECK(viaTau == RationalFunction(M.at(a, c)));
        }
    // rows of theta_{(lam,e,lam)} are supported on matching shapes
    for (const auto& [a, coeff] : S.identity()) {
        (void)coeff;
        for (int c = 0; c < S.size(); ++c)
            if (!M.at(a, c).is_zero()) CHECK(S.ro(c) == S.ro(a));
    }
    // with c = 1 the monomial matrix is the transpose permutation
    const auto& D = W.monomial_matrix();
    for (int a = 0; a < S.size(); ++a)
        for (int c = 0; c < S.size(); ++c)
            CHECK(D.at(a, c) ==
                  (c == S.transpose(a) ? RationalFunction(1L) : RationalFunction()));
}

TEST_CASE("rescaling a Schur element rescales exactly that class in D") {
    QSchurAlgebra S(2, 2);
    TraceForm tf;
    tf.schurByClass = {RationalFunction(2L), RationalFunction(LaurentPoly::variable())};
    WedderburnData W(S, tf);
    const auto& D = W.monomial_matrix();
    int twos = 0, vs = 0;
    for (int a = 0; a < S.size(); ++a) {
        const RationalFunction& entry = D.at(a, S.transpose(a));
        if (entry == RationalFunction(2L)) ++twos;
        if (entry == RationalFunction(LaurentPoly::variable())) ++vs;
    }
    CHECK(twos + vs == 10);
    // multiplicities follow the class sizes (3 cells of dim 3, 1 cell of dim 1)
    CHECK((std::multiset<int>{twos, vs} == std::multiset<int>{9, 1}));
    // M stays A-integral under rescaling
    for (std::size_t i = 0; i < W.change_of_basis().rows(); ++i)
        for (std::size_t j = 0; j < W.change_of_basis().cols(); ++j)
            CHECK(W.change_of_basis().at(i, j).is_integral());
}

TEST_CASE("trace form validation") {
    QSchurAlgebra S(2, 2);
    TraceForm bad;
    bad.schurByClass = {RationalFunction(1L)}; // wrong class count
    CHECK_THROWS_AS(WedderburnData(S, bad), Error);
    TraceForm zero;
    zero.schurByClass = {RationalFunction(0L), RationalFunction(1L)};
    CHECK_THROWS_AS(WedderburnData(S, zero), Error);
}

TEST_CASE("verify_section4 at (1,1) and (2,2)") {
    for (auto [n, r] : {std::pair{1, 1}, {2, 2}}) {
        QSchurAlgebra S(n, r);
        WedderburnData W(S);
        auto rep = W.verify_section4();
        INFO(rep.to_text());
        CHECK(rep.all_pass());
    }
}
