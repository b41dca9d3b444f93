// Command-line front end: one subcommand per module, deterministic plain or
// JSON output.  Exit codes: 0 success, 1 verification/invariant failure,
// 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qsa/asymptotic.hpp"
#include "qsa/errors.hpp"
#include "qsa/hecke.hpp"
#include "qsa/james.hpp"
#include "qsa/json_io.hpp"
#include "qsa/qschur.hpp"
#include "qsa/wedderburn.hpp"

namespace {

using namespace qsa;

constexpr int kMaxR = 5;
constexpr long kMaxSizeM = 256;

long binom(long top, long bottom) {
    if (bottom < 0 || bottom > top) return 0;
    long acc = 1;
    for (long i = 1; i <= bottom; ++i) acc = acc * (top - bottom + i) / i;
    return acc;
}

void check_guards(int n, int r, bool gramDependent, bool force) {
    if (force) return;
    if (r > kMaxR)
        throw SizeGuard("r = " + std::to_string(r) + " exceeds the default guard r <= " +
                        std::to_string(kMaxR) + " (use --force)");
    if (gramDependent && n >= 1) {
        long sizeM = binom(static_cast<long>(n) * n + r - 1, r);
        if (sizeM > kMaxSizeM)
            throw SizeGuard("|M(n,r)| = " + std::to_string(sizeM) +
                            " exceeds the default guard " + std::to_string(kMaxSizeM) +
                            " (use --force)");
    }
}

Json config_json(const std::vector<std::pair<std::string, Json>>& kv) {
    Json cfg;
    cfg["schemaVersion"] = kSchemaVersion;
    for (const auto& [k, v] : kv) cfg[k] = v;
    return cfg;
}

void emit(bool asJson, const Json& payload, const std::string& plain) {
    if (asJson)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << plain;
}

int report_exit(const Report& rep) { return rep.all_pass() ? 0 : 1; }

TraceForm form_from_overrides(int numClasses, const std::vector<std::string>& overrides) {
    TraceForm tf;
    tf.schurByClass.assign(numClasses, RationalFunction(1L));
    for (const std::string& ov : overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw SizeGuard("--schur expects CLASS=EXPR, got '" + ov + "'");
        int cls = std::stoi(ov.substr(0, eq));
        if (cls < 0 || cls >= numClasses)
            throw SizeGuard("--schur class " + std::to_string(cls) + " out of range (0.." +
                            std::to_string(numClasses - 1) + ")");
        tf.schurByClass[cls] = parse_rational_function(ov.substr(eq + 1));
    }
    return tf;
}

/// Second deterministic trace form used by the tau-independence checks:
/// class 0 -> 2, class i -> v^i.
TraceForm scaled_form(int numClasses) {
    TraceForm tf;
    for (int i = 0; i < numClasses; ++i)
        tf.schurByClass.push_back(i == 0 ? RationalFunction(2L)
                                         : RationalFunction(LaurentPoly::term(Rat(1), i)));
    return tf;
}

int parse_index_arg(const QSchurAlgebra& S, const std::string& arg) {
    if (arg.find(':') == std::string::npos) {
        int ord = std::stoi(arg);
        if (ord < 0 || ord >= S.size())
            throw SizeGuard("index " + arg + " out of range 0.." + std::to_string(S.size() - 1));
        return ord;
    }
    auto first = arg.find(':');
    auto second = arg.find(':', first + 1);
    if (second == std::string::npos)
        throw SizeGuard("index spec must be ORD or LAM:WORD:MU, got '" + arg + "'");
    Composition lam = parse_composition(arg.substr(0, first));
    Perm w = parse_word(S.r(), arg.substr(first + 1, second - first - 1));
    Composition mu = parse_composition(arg.substr(second + 1));
    auto found = S.find_index(lam, w, mu);
    if (!found)
        throw SizeGuard("'" + arg + "' is not a minimal double-coset triple of M(n,r)");
    return *found;
}

int run_hecke(int r, const std::string& action, bool asJson, bool skipP15) {
    HeckeAlgebra H(r);
    const auto& W = H.group();
    if (action == "klpoly") {
        Json rows = Json::array();
        std::string plain;
        for (int w = 0; w < W.size(); ++w)
            for (int y = 0; y < W.size(); ++y) {
                LaurentPoly p = H.kl_polynomial(y, w);
                if (p.is_zero()) continue;
                rows.push_back(Json{{"y", W[y].word_str()}, {"w", W[w].word_str()},
                                    {"p", p.str()}});
                plain += "p[" + W[y].word_str() + "," + W[w].word_str() + "] = " + p.str() + "\n";
            }
        emit(asJson,
             Json{{"config", config_json({{"r", r}})}, {"klpolynomials", std::move(rows)}},
             plain);
        return 0;
    }
    if (action == "cells") {
        auto dump = [&](const std::vector<std::vector<int>>& cells) {
            Json out = Json::array();
            for (const auto& cell : cells) {
                Json c = Json::array();
                for (int w : cell) c.push_back(W[w].word_str());
                out.push_back(std::move(c));
            }
            return out;
        };
        Json payload{{"config", config_json({{"r", r}})},
                     {"leftCells", dump(H.cells().leftCells)},
                     {"rightCells", dump(H.cells().rightCells)},
                     {"twoSidedCells", dump(H.cells().twoSidedCells)}};
        std::string plain;
        for (const char* kind : {"leftCells", "rightCells", "twoSidedCells"}) {
            plain += std::string(kind) + ":\n";
            for (const auto& cell : payload[kind]) {
                plain += " ";
                for (const auto& w : cell) plain += " " + w.get<std::string>();
                plain += "\n";
            }
        }
        emit(asJson, payload, plain);
        return 0;
    }
    if (action == "afn") {
        Json rows = Json::array();
        std::string plain = "w: a delta distinguished\n";
        for (int w = 0; w < W.size(); ++w) {
            bool dist = H.a_value(w) == H.delta(w);
            rows.push_back(Json{{"w", W[w].word_str()}, {"a", H.a_value(w)},
                                {"delta", H.delta(w)}, {"distinguished", dist}});
            plain += W[w].word_str() + ": " + std::to_string(H.a_value(w)) + " " +
                     std::to_string(H.delta(w)) + (dist ? " *" : "") + "\n";
        }
        emit(asJson, Json{{"config", config_json({{"r", r}})}, {"afunction", std::move(rows)}},
             plain);
        return 0;
    }
    if (action == "verify") {
        Report rep = H.verify_P(!skipP15);
        rep.merge(H.verify_invariants());
        rep.title = "hecke r=" + std::to_string(r);
        emit(asJson, Json{{"config", config_json({{"r", r}})}, {"report", rep.to_json()}},
             rep.to_text());
        return report_exit(rep);
    }
    throw SizeGuard("unknown hecke action '" + action + "'");
}

int run_qschur(int n, int r, const std::string& action, const std::vector<std::string>& args,
               bool asJson) {
    QSchurAlgebra S(n, r);
    if (action == "basis") {
        Json rows = Json::array();
        std::string plain;
        for (int a = 0; a < S.size(); ++a) {
            Json row = index_json(S, a);
            row["sigma"] = S.hecke().group()[S.idx(a).sigma].word_str();
            row["a"] = S.a_value(a);
            row["distinguished"] = S.is_distinguished(a);
            rows.push_back(row);
            plain += std::to_string(a) + ": " + S.index_str(a) +
                     "  sigma=" + S.hecke().group()[S.idx(a).sigma].word_str() +
                     "  a=" + std::to_string(S.a_value(a)) +
                     (S.is_distinguished(a) ? "  D" : "") + "\n";
        }
        emit(asJson,
             Json{{"config", config_json({{"n", n}, {"r", r}})}, {"basis", std::move(rows)}},
             plain);
        return 0;
    }
    if (action == "cells") {
        auto dump = [&](const std::vector<std::vector<int>>& cells) {
            Json out = Json::array();
            for (const auto& cell : cells) {
                Json c = Json::array();
                for (int a : cell) c.push_back(index_json(S, a));
                out.push_back(std::move(c));
            }
            return out;
        };
        Json payload{{"config", config_json({{"n", n}, {"r", r}})},
                     {"leftCells", dump(S.cells().leftCells)},
                     {"rightCells", dump(S.cells().rightCells)},
                     {"twoSidedCells", dump(S.cells().twoSidedCells)}};
        std::string plain;
        for (const char* kind : {"leftCells", "rightCells", "twoSidedCells"}) {
            plain += std::string(kind) + ":\n";
            for (const auto& cell : payload[kind]) {
                plain += " ";
                for (const auto& a : cell) plain += " " + std::to_string(a["ord"].get<int>());
                plain += "\n";
            }
        }
        emit(asJson, payload, plain);
        return 0;
    }
    if (action == "fconst") {
        if (args.size() != 3) throw SizeGuard("fconst needs exactly three index arguments");
        int a = parse_index_arg(S, args[0]);
        int b = parse_index_arg(S, args[1]);
        int c = parse_index_arg(S, args[2]);
        LaurentPoly f = S.f_constant(a, b, c);
        emit(asJson,
             Json{{"config", config_json({{"n", n}, {"r", r}})},
                  {"a", index_json(S, a)},
                  {"b", index_json(S, b)},
                  {"c", index_json(S, c)},
                  {"f", to_json(f)},
                  {"fString", f.str()}},
             f.str() + "\n");
        return 0;
    }
    if (action == "verify") {
        Report rep = S.verify_Q(true);
        rep.merge(S.verify_sanity());
        rep.title = "qschur n=" + std::to_string(n) + " r=" + std::to_string(r);
        emit(asJson,
             Json{{"config", config_json({{"n", n}, {"r", r}})}, {"report", rep.to_json()}},
             rep.to_text());
        return report_exit(rep);
    }
    throw SizeGuard("unknown qschur action '" + action + "'");
}

int run_wedderburn(int n, int r, const std::string& action,
                   const std::vector<std::string>& schur, bool asJson) {
    QSchurAlgebra S(n, r);
    WedderburnData base(S);
    const WedderburnData* W = &base;
    std::optional<WedderburnData> overridden;
    if (!schur.empty()) {
        overridden.emplace(S, form_from_overrides(base.num_classes(), schur));
        W = &*overridden;
    }
    Json cfgTau = Json::array();
    for (int cl = 0; cl < W->num_classes(); ++cl) cfgTau.push_back(W->schur_of_class(cl).str());
    Json cfg = config_json({{"n", n}, {"r", r}, {"schur", cfgTau}});

    if (action == "gram") {
        emit(asJson, Json{{"config", cfg}, {"gram", to_json(W->gram())}},
             "P_tau (" + std::to_string(S.size()) + "x" + std::to_string(S.size()) + ")\n");
        return 0;
    }
    if (action == "dual") {
        emit(asJson, Json{{"config", cfg}, {"gramInverse", to_json(W->gram_inv())}},
             "P_tau^{-1} (" + std::to_string(S.size()) + "x" + std::to_string(S.size()) + ")\n");
        return 0;
    }
    if (action == "basis") {
        Json rows = Json::array();
        for (int c = 0; c < S.size(); ++c) {
            Json coords = Json::array();
            for (const auto& [e, coeff] : W->wedderburn_element(c))
                coords.push_back(Json{{"ord", e}, {"coeff", coeff.str()}});
            rows.push_back(Json{{"c", index_json(S, c)},
                                {"d", index_json(S, S.dist_of(c))},
                                {"coords", std::move(coords)}});
        }
        emit(asJson, Json{{"config", cfg}, {"wedderburnBasis", std::move(rows)}},
             "B has " + std::to_string(S.size()) + " elements\n");
        return 0;
    }
    if (action == "M") {
        emit(asJson, Json{{"config", cfg}, {"M", to_json(W->change_of_basis())}},
             "M in A^{" + std::to_string(S.size()) + "x" + std::to_string(S.size()) + "}\n");
        return 0;
    }
    if (action == "D") {
        emit(asJson, Json{{"config", cfg}, {"D", to_json(W->monomial_matrix())}},
             "D monomial (" + std::to_string(S.size()) + "x" + std::to_string(S.size()) + ")\n");
        return 0;
    }
    if (action == "verify") {
        Report rep = W->verify_section4();
        emit(asJson, Json{{"config", cfg}, {"report", rep.to_json()}}, rep.to_text());
        return report_exit(rep);
    }
    throw SizeGuard("unknown wedderburn action '" + action + "'");
}

int run_asymptotic(int n, int r, const std::string& action, bool asJson) {
    QSchurAlgebra S(n, r);
    Json cfg = config_json({{"n", n}, {"r", r}});
    AsymptoticAlgebra J(S);
    if (action == "phi") {
        emit(asJson, Json{{"config", cfg}, {"phiMatrix", to_json(J.phi_matrix())}},
             "PhiMatrix (" + std::to_string(S.size()) + "x" + std::to_string(S.size()) + ")\n");
        return 0;
    }
    if (action == "verify") {
        WedderburnData W1(S);
        WedderburnData W2(S, scaled_form(W1.num_classes()));
        Report rep = J.verify(W1, W2);
        emit(asJson, Json{{"config", cfg}, {"report", rep.to_json()}}, rep.to_text());
        return report_exit(rep);
    }
    throw SizeGuard("unknown asymptotic action '" + action + "'");
}

int run_james(int n, int r, unsigned e, const std::vector<std::uint64_t>& primes,
              std::optional<std::int64_t> vImage, const std::vector<std::string>& schur,
              bool allowSmallEll, bool asJson) {
    QSchurAlgebra S(n, r);
    WedderburnData base(S);
    const WedderburnData* W = &base;
    std::optional<WedderburnData> overridden;
    if (!schur.empty()) {
        overridden.emplace(S, form_from_overrides(base.num_classes(), schur));
        W = &*overridden;
    }
    RankReport rep = james_report(*W, e, primes, vImage, allowSmallEll);
    Json payload = to_json(rep);
    std::string plain = "rank over K: " + std::to_string(rep.rankGeneric) + "/" +
                        std::to_string(rep.sizeM) + "\nrank over Q(zeta_" +
                        std::to_string(2 * e) + "): " + std::to_string(rep.rankCyclotomic) + "\n";
    for (const auto& p : rep.perPrime)
        plain += "ell=" + std::to_string(p.ell) + " v->" + std::to_string(p.vImage) +
                 ": rank M = " + std::to_string(p.rankM) +
                 ", rank D = " + std::to_string(p.rankD) +
                 ", chain " + (p.inequalityChainHolds ? "holds" : "FAILS") + "\n";
    plain += std::string("ranks equal across primes: ") +
             (rep.ranksEqualAcrossPrimes ? "yes" : "NO") + "\n";
    emit(asJson, payload, plain);
    return rep.invariants_hold() ? 0 : 1;
}

int run_verify_all(int n, int r, bool asJson, bool skipP15) {
    Json cfg = config_json({{"n", n}, {"r", r}});
    QSchurAlgebra S(n, r);
    Report all;
    all.title = "verify-all n=" + std::to_string(n) + " r=" + std::to_string(r);
    {
        Report p = S.hecke().verify_P(!skipP15);
        p.merge(S.hecke().verify_invariants());
        for (auto& c : p.checks) c.property = "hecke/" + c.property;
        all.merge(p);
    }
    {
        Report q = S.verify_Q(true);
        q.merge(S.verify_sanity());
        for (auto& c : q.checks) c.property = "qschur/" + c.property;
        all.merge(q);
    }
    WedderburnData W1(S);
    WedderburnData W2(S, scaled_form(W1.num_classes()));
    {
        Report s4 = W1.verify_section4();
        for (auto& c : s4.checks) c.property = "section4/" + c.property;
        all.merge(s4);
        Report s4b = W2.verify_section4();
        for (auto& c : s4b.checks) c.property = "section4-scaled/" + c.property;
        all.merge(s4b);
    }
    {
        AsymptoticAlgebra J(S);
        Report s5 = J.verify(W1, W2);
        for (auto& c : s5.checks) c.property = "section5/" + c.property;
        all.merge(s5);
    }
    emit(asJson, Json{{"config", cfg}, {"report", all.to_json()}}, all.to_text());
    return report_exit(all);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kazhdan-Lusztig / q-Schur / asymptotic-algebra toolkit"};
    app.require_subcommand(1);

    int n = 0, r = 0;
    unsigned e = 0;
    bool asJson = false, force = false, skipP15 = false, allowSmallEll = false;
    std::string action;
    std::vector<std::string> extraArgs, schurOverrides;
    std::string primesCsv;
    std::int64_t vImageArg = 0;
    bool vImageSet = false;

    auto addCommon = [&](CLI::App* sub, bool needsN) {
        if (needsN) sub->add_option("--n", n, "columns bound n")->required();
        sub->add_option("--r", r, "degree r of the symmetric group")->required();
        sub->add_flag("--json", asJson, "JSON output");
        sub->add_flag("--force", force, "override size guards");
    };

    CLI::App* hecke = app.add_subcommand("hecke", "Iwahori-Hecke algebra of S_r");
    addCommon(hecke, false);
    hecke->add_flag("--skip-p15", skipP15, "skip the bivariate P15 scan");
    hecke->add_option("action", action, "klpoly|cells|afn|verify")->required();

    CLI::App* qschur = app.add_subcommand("qschur", "generic q-Schur algebra S_q(n,r)");
    addCommon(qschur, true);
    qschur->add_option("action", action, "basis|cells|fconst|verify")->required();
    qschur->add_option("args", extraArgs, "indices for fconst (ORD or LAM:WORD:MU)");

    CLI::App* wedd = app.add_subcommand("wedderburn", "trace forms and the Wedderburn basis");
    addCommon(wedd, true);
    wedd->add_option("--schur", schurOverrides, "CLASS=EXPR Schur-element override")
        ->allow_extra_args(false);
    wedd->add_option("action", action, "gram|dual|basis|M|D|verify")->required();

    CLI::App* asym = app.add_subcommand("asymptotic", "asymptotic algebra J(n,r) and Phi");
    addCommon(asym, true);
    asym->add_option("action", action, "phi|verify")->required();

    CLI::App* james = app.add_subcommand("james", "specialisation-rank pipeline");
    addCommon(james, true);
    james->add_option("--e", e, "multiplicative order of q = v^2")->required();
    james->add_option("--primes", primesCsv, "comma-separated primes")->required();
    auto* vopt = james->add_option("--v-image", vImageArg, "image of v in F_ell");
    james->add_option("--schur", schurOverrides, "CLASS=EXPR Schur-element override")
        ->allow_extra_args(false);
    james->add_flag("--allow-small-ell", allowSmallEll, "admit ell <= r (outside the theorem)");

    CLI::App* vall = app.add_subcommand("verify-all", "run every verification suite");
    addCommon(vall, true);
    vall->add_flag("--skip-p15", skipP15, "skip the bivariate P15 scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hecke->parsed()) {
            check_guards(1, r, false, force);
            return run_hecke(r, action, asJson, skipP15);
        }
        if (qschur->parsed()) {
            check_guards(n, r, false, force);
            return run_qschur(n, r, action, extraArgs, asJson);
        }
        if (wedd->parsed()) {
            check_guards(n, r, true, force);
            return run_wedderburn(n, r, action, schurOverrides, asJson);
        }
        if (asym->parsed()) {
            check_guards(n, r, true, force);
            return run_asymptotic(n, r, action, asJson);
        }
        if (james->parsed()) {
            check_guards(n, r, true, force);
            vImageSet = vopt->count() > 0;
            std::vector<std::uint64_t> primes;
            std::size_t pos = 0;
            while (pos < primesCsv.size()) {
                auto comma = primesCsv.find(',', pos);
                if (comma == std::string::npos) comma = primesCsv.size();
                primes.push_back(std::stoull(primesCsv.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            return run_james(n, r, e, primes,
                             vImageSet ? std::optional<std::int64_t>(vImageArg) : std::nullopt,
                             schurOverrides, allowSmallEll, asJson);
        }
        if (vall->parsed()) {
            check_guards(n, r, true, force);
            return run_verify_all(n, r, asJson, skipP15);
        }
    } catch (const SizeGuard& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const NoSuitableImage& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
