#include <random>

#include "doctest.h"
#include "qsa/errors.hpp"
#include "qsa/james.hpp"

using namespace qsa;

TEST_CASE("prime specializations") {
    auto s = make_prime_specialization(5, 2);
    CHECK(s.vImage.value() == 2); // 2^2 = -1 has order 2
    CHECK(s.primitiveLift);
    auto s2 = make_prime_specialization(7, 3);
    CHECK(s2.vImage.value() == 3); // ord(3) = 6, ord(3^2 = 2) = 3
    CHECK(s2.primitiveLift);
    CHECK_THROWS_AS(make_prime_specialization(7, 7), NoSuitableImage);
    CHECK_THROWS_AS(make_prime_specialization(5, 2, 1), NoSuitableImage); // ord(1) = 1
}

TEST_CASE("prime specialization accepts an explicit valid image") {
    auto s = make_prime_specialization(5, 2, 3); // 3^2 = 4 = -1, order 2
    CHECK(s.vImage.value() == 3);
}

TEST_CASE("exact rank basics") {
    PrimeFieldElement zero(5, 0), one(5, 1);
    Mat<PrimeFieldElement> id(10, 10, zero);
    for (int i = 0; i < 10; ++i) id.at(i, i) = one;
    CHECK(exact_rank(id) == 10);
    Mat<PrimeFieldElement> z(4, 7, zero);
    CHECK(exact_rank(z) == 0);
}

TEST_CASE("rank is independent of pivoting on random matrices") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Mat<PrimeFieldElement> m(6, 6, PrimeFieldElement(5, 0));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) m.at(i, j) = PrimeFieldElement(5, entry(rng));
        CHECK(gauss_rank(m, PivotStrategy::FirstNonzero) ==
              gauss_rank(m, PivotStrategy::LastNonzero));
    }
}

TEST_CASE("factorization through the cyclotomic integers") {
    // phi_ell = phi^e_ell after phi_e on random A-polynomials.
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> coeff(-4, 4), exp(-5, 5);
    auto sp = make_prime_specialization(13, 3); // zeta_6 -> 4 (4^2=3, ord(3)=3)
    REQUIRE(sp.primitiveLift);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p;
        for (int k = 0; k < 4; ++k) p.add_term(Rat(coeff(rng)), exp(rng));
        CyclotomicNumber viaE = specialize(p, 6u);
        PrimeFieldElement direct = specialize(p, sp.vImage);
        PrimeFieldElement lifted(sp.ell, 0);
        for (std::size_t k = 0; k < viaE.coords().size(); ++k) {
            const Rat& q = viaE.coords()[k];
            lifted += PrimeFieldElement(sp.ell, q.get_num().get_si()) *
                      PrimeFieldElement(sp.ell, q.get_den().get_si()).inv() *
                      sp.vImage.pow(static_cast<long>(k));
        }
        CHECK(lifted == direct);
    }
}

TEST_CASE("james report at (2,2), e = 3 (semisimple specialization)") {
    QSchurAlgebra S(2, 2);
    WedderburnData W(S);
    auto rep = james_report(W, 3, {7, 13});
    CHECK(rep.rankGeneric == 10);
    CHECK(rep.rankCyclotomic == 10);
    CHECK(rep.cyclotomicDetOracleAgrees);
    CHECK(rep.schurNonvanishingCyclotomic == 4);
    CHECK(rep.hypothesisSchurInA);
    for (const auto& p : rep.perPrime) {
        CHECK(p.rankM == 10);
        CHECK(p.rankD == 10);
        CHECK(p.schurNonvanishingB == 4);
        CHECK(p.factorizationApplicable);
        CHECK(p.factorizationHolds);
        CHECK(p.inequalityChainHolds);
        CHECK(p.rankDMatchesNonzeroEntries);
        CHECK(p.otherRootRankM == 10);
    }
    CHECK(rep.ranksEqualAcrossPrimes);
    CHECK(rep.invariants_hold());
}

TEST_CASE("james report at (2,2), e = 2 (rank drop, documented defect in the chain)") {
    QSchurAlgebra S(2, 2);
    WedderburnData W(S);
    auto rep = james_report(W, 2, {5, 13});
    // The Du-Lusztig rank at e = 2 is 7 = 3*2 + 1*1, confirmed over
    // Q(zeta_4) and both prime fields with two pivot orders each.
    CHECK(rep.rankCyclotomic == 7);
    CHECK(rep.ranksEqualAcrossPrimes);
    for (const auto& p : rep.perPrime) {
        CHECK(p.rankM == 7);
        CHECK(p.otherRootRankM == 7);
        // D is a permutation matrix for c = 1, so rk phi(D) = 10 > 7: the
        // first chain link fails for this trace form (P^{-1} is not in A).
        CHECK(p.rankD == 10);
        CHECK_FALSE(p.inequalityChainHolds);
        CHECK(p.rankDMatchesNonzeroEntries);
        CHECK(p.factorizationHolds);
    }
    CHECK_FALSE(rep.hypothesisPinvInA);
}

TEST_CASE("small ell needs the override") {
    QSchurAlgebra S(2, 2);
    WedderburnData W(S);
    CHECK_THROWS_AS(james_report(W, 1, {2}), Error);
    auto rep = james_report(W, 1, {2}, std::nullopt, true);
    CHECK(rep.smallEllOverride);
}
