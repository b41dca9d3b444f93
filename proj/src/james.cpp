#include "qsa/james.hpp"

#include <thread>

#include "qsa/errors.hpp"

namespace qsa {

PrimeSpecialization make_prime_specialization(std::uint64_t ell, unsigned e,
                                              std::optional<std::int64_t> vImage) {
    if (!is_prime(ell)) throw Error(std::to_string(ell) + " is not prime");
    if (e == 0) throw Error("order e must be positive");
    PrimeSpecialization out;
    out.ell = ell;
    out.e = e;
    if (vImage) {
        PrimeFieldElement t(ell, *vImage);
        if (t.is_zero() || multiplicative_order(t * t) != e)
            throw NoSuitableImage("ord(" + std::to_string(*vImage) + "^2) != " +
                                  std::to_string(e) + " in F_" + std::to_string(ell));
        out.vImage = t;
        out.primitiveLift = multiplicative_order(t) == 2 * e;
        return out;
    }
    std::optional<PrimeFieldElement> fallback;
    for (std::uint64_t c = 1; c < ell; ++c) {
        PrimeFieldElement t(ell, static_cast<std::int64_t>(c));
        if (multiplicative_order(t * t) != e) continue;
        if (multiplicative_order(t) == 2 * e) {
            out.vImage = t;
            out.primitiveLift = true;
            return out;
        }
        if (!fallback) fallback = t;
    }
    if (fallback) {
        out.vImage = *fallback;
        out.primitiveLift = false;
        return out;
    }
    throw NoSuitableImage("no t in F_" + std::to_string(ell) + " with ord(t^2) = " +
                          std::to_string(e));
}

Mat<PrimeFieldElement> specialize_matrix(const Mat<LaurentPoly>& m, const PrimeSpecialization& s) {
    Mat<PrimeFieldElement> out(m.rows(), m.cols(), PrimeFieldElement(s.ell, 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = specialize(m.at(i, j), s.vImage);
    return out;
}

Mat<PrimeFieldElement> specialize_matrix(const Mat<RationalFunction>& m,
                                         const PrimeSpecialization& s) {
    Mat<PrimeFieldElement> out(m.rows(), m.cols(), PrimeFieldElement(s.ell, 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = specialize(m.at(i, j), s.vImage);
    return out;
}

Mat<CyclotomicNumber> specialize_matrix(const Mat<LaurentPoly>& m, unsigned zm) {
    Mat<CyclotomicNumber> out(m.rows(), m.cols(), CyclotomicNumber::zero(zm));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = specialize(m.at(i, j), zm);
    return out;
}

Mat<CyclotomicNumber> specialize_matrix(const Mat<RationalFunction>& m, unsigned zm) {
    Mat<CyclotomicNumber> out(m.rows(), m.cols(), CyclotomicNumber::zero(zm));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = specialize(m.at(i, j), zm);
    return out;
}

bool RankReport::invariants_hold() const {
    if (!inequalityChainHolds || !cyclotomicDetOracleAgrees) return false;
    for (const auto& p : perPrime)
        if (!p.inequalityChainHolds || !p.rankDMatchesNonzeroEntries) return false;
    return true;
}

namespace {

// Map a cyclotomic integer through zeta_{2e} -> vImage (requires a
// primitive lift).
PrimeFieldElement map_cyclotomic(const CyclotomicNumber& c, const PrimeFieldElement& v) {
    PrimeFieldElement acc(v.modulus(), 0);
    for (std::size_t k = 0; k < c.coords().size(); ++k) {
        const Rat& q = c.coords()[k];
        if (q == 0) continue;
        Int num = q.get_num() % Int(static_cast<unsigned long>(v.modulus()));
        Int den = q.get_den() % Int(static_cast<unsigned long>(v.modulus()));
        if (den == 0) throw DenominatorVanishes("cyclotomic coordinate denominator");
        PrimeFieldElement coeff =
            PrimeFieldElement(v.modulus(), num.get_si()) *
            PrimeFieldElement(v.modulus(), den.get_si()).inv();
        acc += coeff * v.pow(static_cast<std::int64_t>(k));
    }
    return acc;
}

int env_thread_count() {
    const char* env = std::getenv("QSA_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return t < 1 ? 1 : t;
}

} // namespace

RankReport james_report(const WedderburnData& wd, unsigned e,
                        const std::vector<std::uint64_t>& primes,
                        std::optional<std::int64_t> vImage, bool allowSmallEll) {
    const QSchurAlgebra& S = wd.algebra();
    RankReport rep;
    rep.n = S.n();
    rep.r = S.r();
    rep.e = e;
    rep.sizeM = static_cast<std::size_t>(S.size());
    for (int cl = 0; cl < wd.num_classes(); ++cl)
        rep.tauConfig.push_back(wd.schur_of_class(cl).str());

    for (std::uint64_t ell : primes) {
        if (ell <= static_cast<std::uint64_t>(S.r())) {
            if (!allowSmallEll)
                throw Error("ell = " + std::to_string(ell) +
                            " <= r; the theorem assumes ell > r (use the override flag)");
            rep.smallEllOverride = true;
        }
    }

    const Mat<LaurentPoly>& M = wd.change_of_basis();
    const Mat<RationalFunction>& D = wd.monomial_matrix();
    const unsigned zm = 2 * e;

    LaurentPoly detM = bareiss_det(M);
    rep.rankGeneric = detM.is_zero() ? gauss_rank(to_rational(M)) : rep.sizeM;

    Mat<CyclotomicNumber> Mcyc = specialize_matrix(M, zm);
    rep.rankCyclotomic = exact_rank(Mcyc);
    CyclotomicNumber detCyc = specialize(detM, zm);
    rep.cyclotomicDetOracleAgrees =
        (rep.rankCyclotomic == rep.sizeM) == !detCyc.is_zero();

    rep.hypothesisSchurInA = true;
    rep.schurNonvanishingCyclotomic = 0;
    std::vector<bool> schurVanishesCyc;
    for (int d : S.distinguished_set()) {
        const RationalFunction& cd = wd.schur_of_d(d);
        if (!cd.is_in_A()) rep.hypothesisSchurInA = false;
        CyclotomicNumber img = specialize(cd, zm);
        schurVanishesCyc.push_back(img.is_zero());
        if (!img.is_zero()) ++rep.schurNonvanishingCyclotomic;
    }
    rep.hypothesisPinvInA = mat_is_in_A(wd.gram_inv());

    rep.perPrime.resize(primes.size());
    int threads = std::min<int>(env_thread_count(), static_cast<int>(primes.size()));
    auto work = [&](std::size_t slot) {
        PrimeRankData& pd = rep.perPrime[slot];
        PrimeSpecialization sp = make_prime_specialization(primes[slot], e, vImage);
        pd.ell = sp.ell;
        pd.vImage = sp.vImage.value();
        pd.primitiveLift = sp.primitiveLift;

        Mat<PrimeFieldElement> Mp = specialize_matrix(M, sp);
        pd.rankM = exact_rank(Mp);
        Mat<PrimeFieldElement> Dp = specialize_matrix(D, sp);
        pd.rankD = exact_rank(Dp);

        std::size_t nonzeroEntries = 0;
        for (std::size_t i = 0; i < Dp.rows(); ++i)
            for (std::size_t j = 0; j < Dp.cols(); ++j)
                if (!Dp.at(i, j).is_zero()) ++nonzeroEntries;
        pd.rankDMatchesNonzeroEntries = pd.rankD == nonzeroEntries;

        pd.schurNonvanishingA = rep.schurNonvanishingCyclotomic;
        pd.schurNonvanishingB = 0;
        for (int d : S.distinguished_set())
            if (!specialize(wd.schur_of_d(d), sp.vImage).is_zero()) ++pd.schurNonvanishingB;

        // The other square root of the same q = vImage^2.
        PrimeSpecialization other = sp;
        other.vImage = -sp.vImage;
        pd.otherRootVImage = other.vImage.value();
        pd.otherRootRankM = exact_rank(specialize_matrix(M, other));

        pd.factorizationApplicable = sp.primitiveLift;
        if (sp.primitiveLift) {
            pd.factorizationHolds = true;
            for (std::size_t i = 0; i < M.rows() && pd.factorizationHolds; ++i)
                for (std::size_t j = 0; j < M.cols(); ++j)
                    if (map_cyclotomic(Mcyc.at(i, j), sp.vImage) != Mp.at(i, j)) {
                        pd.factorizationHolds = false;
                        break;
                    }
        }

        pd.inequalityChainHolds = pd.rankD <= pd.rankM && pd.rankM <= rep.rankCyclotomic &&
                                  rep.rankCyclotomic <= rep.rankGeneric &&
                                  rep.rankGeneric <= rep.sizeM;
        pd.hypothesisRankEqualsCounts =
            static_cast<std::size_t>(pd.schurNonvanishingA) == rep.rankCyclotomic &&
            static_cast<std::size_t>(pd.schurNonvanishingB) == rep.rankCyclotomic;
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&work, &next, &primes, t, threads]() {
                (void)next;
                for (std::size_t i = static_cast<std::size_t>(t); i < primes.size();
                     i += static_cast<std::size_t>(threads))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    rep.inequalityChainHolds = true;
    rep.ranksEqualAcrossPrimes = true;
    rep.hypothesisRankEqualsCounts = true;
    for (const auto& pd : rep.perPrime) {
        rep.inequalityChainHolds = rep.inequalityChainHolds && pd.inequalityChainHolds;
        rep.hypothesisRankEqualsCounts =
            rep.hypothesisRankEqualsCounts && pd.hypothesisRankEqualsCounts;
        if (pd.rankM != rep.perPrime.front().rankM) rep.ranksEqualAcrossPrimes = false;
    }
    if (rep.perPrime.empty()) {
        rep.hypothesisRankEqualsCounts =
            static_cast<std::size_t>(rep.schurNonvanishingCyclotomic) == rep.rankCyclotomic;
    }
    return rep;
}

} // namespace qsa
