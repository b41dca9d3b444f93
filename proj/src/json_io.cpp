#include "qsa/json_io.hpp"

#include <cctype>

#include "qsa/errors.hpp"

namespace qsa {

Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
    return Json{{"terms", std::move(terms)}};
}

Json to_json(const RationalFunction& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const Perm& w) {
    Json a = Json::array();
    for (int i = 0; i < w.size(); ++i) a.push_back(w(i) + 1);
    return a;
}

Json to_json(const Composition& c) {
    Json a = Json::array();
    for (int p : c.parts()) a.push_back(p);
    return a;
}

Json to_json(const Mat<LaurentPoly>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Mat<RationalFunction>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json index_json(const QSchurAlgebra& S, int a) {
    const auto& d = S.idx(a);
    Json out;
    out["ord"] = a;
    out["lam"] = to_json(S.lambdas()[d.lamIdx]);
    out["w"] = S.hecke().group()[d.wMin].word_str();
    out["mu"] = to_json(S.lambdas()[d.muIdx]);
    return out;
}

Json to_json(const RankReport& r) {
    Json out;
    out["schemaVersion"] = kSchemaVersion;
    out["n"] = r.n;
    out["r"] = r.r;
    out["e"] = r.e;
    out["tauConfig"] = r.tauConfig;
    out["sizeM"] = r.sizeM;
    out["rankGeneric"] = r.rankGeneric;
    out["rankCyclotomic"] = r.rankCyclotomic;
    out["cyclotomicDetOracleAgrees"] = r.cyclotomicDetOracleAgrees;
    out["schurNonvanishingCyclotomic"] = r.schurNonvanishingCyclotomic;
    Json primes = Json::array();
    for (const auto& p : r.perPrime) {
        Json row;
        row["ell"] = p.ell;
        row["vImage"] = p.vImage;
        row["primitiveLift"] = p.primitiveLift;
        row["rankM"] = p.rankM;
        row["rankD"] = p.rankD;
        row["a"] = p.schurNonvanishingA;
        row["b"] = p.schurNonvanishingB;
        row["otherRootVImage"] = p.otherRootVImage;
        row["otherRootRankM"] = p.otherRootRankM;
        row["factorizationApplicable"] = p.factorizationApplicable;
        row["factorizationHolds"] = p.factorizationHolds;
        row["inequalityChainHolds"] = p.inequalityChainHolds;
        row["rankDMatchesNonzeroEntries"] = p.rankDMatchesNonzeroEntries;
        primes.push_back(std::move(row));
    }
    out["perPrime"] = std::move(primes);
    out["hypothesisChecks"] = Json{{"schurElementsInA", r.hypothesisSchurInA},
                                   {"gramInverseInA", r.hypothesisPinvInA},
                                   {"ranksEqualCounts", r.hypothesisRankEqualsCounts}};
    Json chain = Json::array();
    for (const auto& p : r.perPrime) chain.push_back(p.inequalityChainHolds);
    out["inequalityChain"] = std::move(chain);
    out["ranksEqualAcrossPrimes"] = r.ranksEqualAcrossPrimes;
    out["smallEllOverride"] = r.smallEllOverride;
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

long parse_int(Cursor& c) {
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '-' || c.peek() == '+') neg = c.take() == '-';
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        throw Error("expected integer in '" + c.s + "' at position " + std::to_string(c.i));
    long val = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        val = val * 10 + (c.s[c.i++] - '0');
    return neg ? -val : val;
}

LaurentPoly parse_poly(Cursor& c);

// term := '(' poly ')' | [rational] ['*'] ['v' ['^' int]]
LaurentPoly parse_term(Cursor& c) {
    if (c.peek() == '(') {
        c.take();
        LaurentPoly inner = parse_poly(c);
        if (c.take() != ')') throw Error("missing ')' in '" + c.s + "'");
        return inner;
    }
    Rat coeff(1);
    bool haveCoeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long num = parse_int(c);
        long den = 1;
        if (c.peek() == '/') {
            c.take();
            den = parse_int(c);
        }
        coeff = make_rat(num, den);
        haveCoeff = true;
    }
    if (c.peek() == '*') c.take();
    if (c.peek() == 'v') {
        c.take();
        int exp = 1;
        if (c.peek() == '^') {
            c.take();
            exp = static_cast<int>(parse_int(c));
        }
        return LaurentPoly::term(coeff, exp);
    }
    if (!haveCoeff) throw Error("expected term in '" + c.s + "'");
    return LaurentPoly::constant(coeff);
}

LaurentPoly parse_poly(Cursor& c) {
    LaurentPoly acc;
    bool neg = false;
    if (c.peek() == '-') {
        c.take();
        neg = true;
    } else if (c.peek() == '+') {
        c.take();
    }
    while (true) {
        LaurentPoly t = parse_term(c);
        acc += neg ? -t : t;
        char next = c.peek();
        if (next == '+' || next == '-') {
            neg = c.take() == '-';
            continue;
        }
        break;
    }
    return acc;
}

} // namespace

LaurentPoly parse_laurent(const std::string& text) {
    Cursor c{text};
    LaurentPoly p = parse_poly(c);
    if (!c.done()) throw Error("trailing characters in '" + text + "'");
    return p;
}

RationalFunction parse_rational_function(const std::string& text) {
    // Split on a top-level '/' that separates two polynomial expressions;
    // '/' inside a coefficient (digit/digit) binds tighter, so scan for a
    // '/' whose successor starts a term containing 'v' or a sign.
    Cursor c{text};
    LaurentPoly num = parse_poly(c);
    if (c.done()) return RationalFunction(num);
    if (c.take() != '/') throw Error("expected '/' in '" + text + "'");
    LaurentPoly den = parse_poly(c);
    if (!c.done()) throw Error("trailing characters in '" + text + "'");
    return RationalFunction(num, den);
}

Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    Cursor c{text};
    while (true) {
        parts.push_back(static_cast<int>(parse_int(c)));
        if (c.done()) break;
        if (c.take() != ',') throw Error("expected ',' in composition '" + text + "'");
    }
    return Composition(parts);
}

Perm parse_word(int r, const std::string& text) {
    if (text == "e" || text.empty()) return Perm(r);
    std::vector<int> word;
    Cursor c{text};
    while (!c.done()) {
        if (c.take() != 's') throw Error("expected 's' in word '" + text + "'");
        word.push_back(static_cast<int>(parse_int(c)));
    }
    return Perm::from_word(r, word);
}

} // namespace qsa
