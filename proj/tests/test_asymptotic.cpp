#include "doctest.h"
#include "qsa/asymptotic.hpp"

using namespace qsa;

TEST_CASE("J identity and idempotents at (2,2)") {
    QSchurAlgebra S(2, 2);
    AsymptoticAlgebra J(S);
    CHECK(J.identity().size() == 4); // |D(2,2)| = 4
    for (int d : S.distinguished_set()) {
        AsymptoticAlgebra::JVec td{{d, LaurentPoly::one()}};
        CHECK(J.multiply(td, td) == td);
    }
    // t_a t_b = 0 when the shape conditions exclude every c
    for (int a = 0; a < S.size(); ++a)
        for (int b = 0; b < S.size(); ++b)
            if (S.co(a) != S.ro(b))
                CHECK(J.multiply(AsymptoticAlgebra::JVec{{a, LaurentPoly::one()}},
                                 AsymptoticAlgebra::JVec{{b, LaurentPoly::one()}})
                          .empty());
}

TEST_CASE("phi on the identity and basis elements at (2,2)") {
    QSchurAlgebra S(2, 2);
    AsymptoticAlgebra J(S);
    auto img = J.phi(QSchurAlgebra::to_k(S.identity()));
    AsymptoticAlgebra::JKVec want;
    for (int d : S.distinguished_set()) want.emplace(d, RationalFunction(1L));
    CHECK(img == want);
    CHECK_FALSE(bareiss_det(J.phi_matrix()).is_zero());
    for (int a = 0; a < S.size(); ++a) CHECK(J.phi_basis(a) == J.phi_basis_defining(a));
}

TEST_CASE("full section-5 verification at (1,1) and (2,2)") {
    for (auto [n, r] : {std::pair{1, 1}, {2, 2}}) {
        QSchurAlgebra S(n, r);
        WedderburnData W1(S);
        TraceForm tf;
        for (int i = 0; i < W1.num_classes(); ++i)
            tf.schurByClass.push_back(i == 0 ? RationalFunction(2L)
                                             : RationalFunction(LaurentPoly::term(Rat(1), i)));
        WedderburnData W2(S, tf);
        AsymptoticAlgebra J(S);
        auto rep = J.verify(W1, W2);
        INFO(rep.to_text());
        CHECK(rep.all_pass());
    }
}
