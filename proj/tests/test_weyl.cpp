#include <set>

#include "doctest.h"
#include "qsa/errors.hpp"
#include "qsa/weyl.hpp"

using namespace qsa;

namespace {

Perm word(int r, std::vector<int> w) { return Perm::from_word(r, w); }

std::set<Perm> maximal_reps(const SymmetricGroup& W, const Composition& lam,
                            const Composition& mu) {
    std::set<Perm> out;
    for (const auto& dc : W.double_cosets(lam, mu)) out.insert(dc.wmax);
    return out;
}

} // namespace

TEST_CASE("length examples") {
    CHECK(Perm(3).length() == 0);
    CHECK((word(3, {1, 2, 1}).length() == 3)); // longest element of S_3
    CHECK((word(3, {1, 2}).length() == 2));
    // l(ww') <= l(w) + l(w')
    SymmetricGroup W(4);
    for (int x = 0; x < W.size(); ++x)
        for (int y = 0; y < W.size(); ++y)
            CHECK(W.length(W.mult(x, y)) <= W.length(x) + W.length(y));
}

TEST_CASE("reduced words and composition convention") {
    Perm w = word(4, {2, 1, 3});
    CHECK(Perm::from_word(4, w.reduced_word()) == w);
    CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
    CHECK(word(3, {1, 2, 1}) == word(3, {2, 1, 2})); // braid relation
    CHECK(word(3, {1, 1}).is_identity());
}

TEST_CASE("bruhat order") {
    SymmetricGroup W(3);
    Perm e(3), s1 = Perm::gen(3, 1), s2 = Perm::gen(3, 2);
    for (int w = 0; w < W.size(); ++w) CHECK(bruhat_leq(e, W[w]));
    CHECK_FALSE(bruhat_leq(s1, s2));
    CHECK_FALSE(bruhat_leq(s2, s1));
    CHECK(bruhat_leq(s1, word(3, {1, 2, 1})));

    // partial order refining length, on S_4
    SymmetricGroup W4(4);
    for (int x = 0; x < W4.size(); ++x)
        for (int y = 0; y < W4.size(); ++y) {
            if (W4.leq_bruhat(y, x) && W4.leq_bruhat(x, y)) CHECK(x == y);
            if (W4.leq_bruhat(y, x) && x != y) CHECK(W4.length(y) < W4.length(x));
            for (int z = 0; z < W4.size(); ++z)
                if (W4.leq_bruhat(z, y) && W4.leq_bruhat(y, x)) CHECK(W4.leq_bruhat(z, x));
        }
}

TEST_CASE("compositions") {
    auto l22 = compositions(2, 2);
    REQUIRE(l22.size() == 3);
    CHECK(l22[0].parts() == std::vector<int>{2, 0}); // lexicographically decreasing
    CHECK(l22[2].parts() == std::vector<int>{0, 2});
    CHECK(compositions(2, 3).size() == 4);
    CHECK(compositions(3, 3).size() == 10);
    CHECK(partitions_at_most(2, 2) == 2);
    CHECK(partitions_at_most(2, 3) == 2);
    CHECK(partitions_at_most(3, 3) == 3);
}

TEST_CASE("young subgroups") {
    SymmetricGroup W(3);
    auto& y1 = W.young(Composition({1, 1, 1}));
    CHECK(y1.elements.size() == 1);
    CHECK(y1.longest.is_identity());
    auto& y2 = W.young(Composition({2, 1, 0}));
    CHECK(y2.elements.size() == 2);
    CHECK(y2.longest == Perm::gen(3, 1));
    CHECK(y2.generators == std::vector<int>{1});
    auto& y3 = W.young(Composition({3, 0, 0}));
    CHECK(y3.elements.size() == 6);
    CHECK(y3.longest == word(3, {1, 2, 1}));
}

TEST_CASE("double cosets: the paper's worked sets at n=r=3") {
    SymmetricGroup W(3);
    Composition lam({2, 1, 0}), mu({1, 1, 1}), nu({2, 1, 0});
    Perm s1 = Perm::gen(3, 1);
    std::set<Perm> dlm = {s1, word(3, {1, 2}), word(3, {1, 2, 1})};
    std::set<Perm> dmn = {s1, word(3, {2, 1}), word(3, {1, 2, 1})};
    std::set<Perm> dln = {s1, word(3, {1, 2, 1})};
    CHECK(maximal_reps(W, lam, mu) == dlm);
    CHECK(maximal_reps(W, mu, nu) == dmn);
    CHECK(maximal_reps(W, lam, nu) == dln);
}

TEST_CASE("double cosets: single-coset case") {
    SymmetricGroup W(3);
    Composition full({3, 0, 0});
    const auto& cosets = W.double_cosets(full, full);
    REQUIRE(cosets.size() == 1);
    CHECK(cosets[0].wmin.is_identity());
    CHECK(cosets[0].wmax == W[W.longest_index()]);
}

TEST_CASE("double coset invariants") {
    for (int r : {2, 3, 4}) {
        SymmetricGroup W(r);
        for (const auto& lam : compositions(r, r))
            for (const auto& mu : compositions(r, r)) {
                const auto& cosets = W.double_cosets(lam, mu);
                int total = 0;
                for (const auto& dc : cosets) total += dc.size;
                CHECK(total == W.size());
                // l_{lam,mu}(w)^{-1} = l_{mu,lam}(w^{-1})
                const auto& flipped = W.double_cosets(mu, lam);
                for (const auto& dc : cosets) {
                    bool found = false;
                    for (const auto& fc : flipped)
                        if (fc.wmin == dc.wmin.inverse()) {
                            CHECK(fc.wmax == dc.wmax.inverse());
                            found = true;
                        }
                    CHECK(found);
                }
                // descent property of maximal representatives
                const auto& yl = W.young(lam);
                const auto& ym = W.young(mu);
                for (const auto& dc : cosets) {
                    for (int s : yl.generators)
                        CHECK((Perm::gen(r, s) * dc.wmax).length() < dc.wmax.length());
                    for (int s : ym.generators)
                        CHECK((dc.wmax * Perm::gen(r, s)).length() < dc.wmax.length());
                }
            }
    }
}

TEST_CASE("sigma examples") {
    SymmetricGroup W(3);
    // sigma((2,1,0), e, (1,1,1)) = s1
    for (const auto& dc : W.double_cosets(Composition({2, 1, 0}), Composition({1, 1, 1})))
        if (dc.wmin.is_identity()) CHECK(dc.wmax == Perm::gen(3, 1));
    // sigma((1,1,1), s2, (2,1,0)) = s2 s1
    for (const auto& dc : W.double_cosets(Composition({1, 1, 1}), Composition({2, 1, 0})))
        if (dc.wmin == Perm::gen(3, 2)) CHECK(dc.wmax == word(3, {2, 1}));
    // sigma((r,0,...), e, (r,0,...)) = w0
    for (const auto& dc : W.double_cosets(Composition({3, 0, 0}), Composition({3, 0, 0})))
        CHECK(dc.wmax == W[W.longest_index()]);
}

TEST_CASE("non-permutation input rejected") {
    CHECK_THROWS_AS(Perm::from_one_line({0, 0, 1}), Error);
    CHECK_THROWS_AS(Perm::gen(3, 3), Error);
    CHECK_THROWS_AS(Composition({1, -1}), Error);
}
