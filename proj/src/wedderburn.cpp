#include "qsa/wedderburn.hpp"

#include <algorithm>

#include "qsa/errors.hpp"

namespace qsa {

namespace {

using KVec = QSchurAlgebra::KVec;

void kvec_add_scaled(KVec& acc, const KVec& x, const RationalFunction& c) {
    if (c.is_zero()) return;
    for (const auto& [e, val] : x) {
        RationalFunction term = c * val;
        auto [it, inserted] = acc.emplace(e, term);
        if (!inserted) it->second += term;
    }
}

void kvec_prune(KVec& x) {
    for (auto it = x.begin(); it != x.end();)
        it = it->second.is_zero() ? x.erase(it) : std::next(it);
}

KVec kvec_scaled(const KVec& x, const RationalFunction& c) {
    KVec out;
    kvec_add_scaled(out, x, c);
    kvec_prune(out);
    return out;
}

bool kvec_equal(KVec a, KVec b) {
    kvec_prune(a);
    kvec_prune(b);
    return a == b;
}

KVec basis_kvec(int a) { return KVec{{a, RationalFunction(1L)}}; }

} // namespace

WedderburnData::WedderburnData(const QSchurAlgebra& S, TraceForm form) : S_(S) {
    build_classes();
    if (form.schurByClass.empty())
        schur_.assign(classes_.size(), RationalFunction(1L));
    else if (form.schurByClass.size() == classes_.size())
        schur_ = std::move(form.schurByClass);
    else
        throw Error("trace form has " + std::to_string(form.schurByClass.size()) +
                    " Schur elements, expected " + std::to_string(classes_.size()));
    for (const auto& c : schur_)
        if (c.is_zero()) throw Error("Schur elements must be nonzero");
    build_tau();
    build_gram();
    build_b_elements();
    build_m_and_d();
}

void WedderburnData::build_classes() {
    const auto& cells = S_.cells().leftCells;
    classOfCell_.assign(cells.size(), -1);
    std::vector<const std::vector<LaurentPoly>*> chi(cells.size());
    for (std::size_t g = 0; g < cells.size(); ++g) chi[g] = &S_.character_vector(static_cast<int>(g));
    for (std::size_t g = 0; g < cells.size(); ++g) {
        if (classOfCell_[g] >= 0) continue;
        std::vector<int> cls;
        for (std::size_t h = g; h < cells.size(); ++h)
            if (classOfCell_[h] < 0 && *chi[h] == *chi[g]) {
                classOfCell_[h] = static_cast<int>(classes_.size());
                cls.push_back(static_cast<int>(h));
            }
        classes_.push_back(std::move(cls));
    }
    // One direction of Lemma isoLCLR: equal characters force the same
    // two-sided cell.
    for (const auto& cls : classes_) {
        int two = S_.cells().twoSidedCellOf[cells[cls.front()].front()];
        for (int g : cls)
            for (int a : cells[g])
                if (S_.cells().twoSidedCellOf[a] != two)
                    throw ClassSplitsTwoSidedCell("iso-class crosses two-sided cells");
    }
    if (static_cast<int>(classes_.size()) != partitions_at_most(S_.n(), S_.r()))
        throw Error("number of iso-classes != partitions of r into <= n parts");
}

void WedderburnData::build_tau() {
    tauTheta_.assign(S_.size(), RationalFunction());
    for (std::size_t cl = 0; cl < classes_.size(); ++cl) {
        const auto& chi = S_.character_vector(classes_[cl].front());
        RationalFunction inv = schur_[cl].inv();
        for (int a = 0; a < S_.size(); ++a)
            if (!chi[a].is_zero()) tauTheta_[a] += inv * RationalFunction(chi[a]);
    }
}

RationalFunction WedderburnData::tau(const KVec& x) const {
    RationalFunction acc;
    for (const auto& [a, c] : x)
        if (!tauTheta_[a].is_zero()) acc += c * tauTheta_[a];
    return acc;
}

void WedderburnData::build_gram() {
    const int m = S_.size();
    gram_ = Mat<RationalFunction>(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (S_.co(a) != S_.ro(b)) continue;
            RationalFunction acc;
            for (const auto& [c, f] : S_.f_row(a, b))
                if (!tauTheta_[c].is_zero()) acc += RationalFunction(f) * tauTheta_[c];
            gram_.at(a, b) = std::move(acc);
        }
    // tau(theta_a theta_b) vanishes unless co(a)=ro(b) and ro(a)=co(b), so
    // P_tau is block-anti-diagonal over shape pairs; invert block-wise.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (!gram_.at(a, b).is_zero() && (S_.co(a) != S_.ro(b) || S_.ro(a) != S_.co(b)))
                throw Error("Gram support outside shape blocks");

    const int nl = static_cast<int>(S_.lambdas().size());
    std::vector<std::vector<std::vector<int>>> members(nl, std::vector<std::vector<int>>(nl));
    for (int a = 0; a < m; ++a) members[S_.ro(a)][S_.co(a)].push_back(a);

    gramInv_ = Mat<RationalFunction>(m, m);
    RationalFunction one(1L);
    for (int li = 0; li < nl; ++li)
        for (int mi = li; mi < nl; ++mi) {
            std::vector<int> sub = members[li][mi];
            if (mi != li) sub.insert(sub.end(), members[mi][li].begin(), members[mi][li].end());
            if (sub.empty()) continue;
            const int t = static_cast<int>(sub.size());
            Mat<RationalFunction> block(t, t);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) block.at(i, j) = gram_.at(sub[i], sub[j]);
            Mat<RationalFunction> inv = gauss_inverse(std::move(block), one);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) gramInv_.at(sub[i], sub[j]) = inv.at(i, j);
        }
}

QSchurAlgebra::KVec WedderburnData::dual_theta(int b) const {
    KVec out;
    for (int a = 0; a < S_.size(); ++a)
        if (!gramInv_.at(b, a).is_zero()) out.emplace(a, gramInv_.at(b, a));
    return out;
}

QSchurAlgebra::KVec WedderburnData::theta_dual_product(int c, int d) const {
    KVec out;
    for (int a = 0; a < S_.size(); ++a) {
        const RationalFunction& coeff = gramInv_.at(d, a);
        if (coeff.is_zero() || S_.co(c) != S_.ro(a)) continue;
        for (const auto& [e, f] : S_.f_row(c, a)) {
            RationalFunction term = coeff * RationalFunction(f);
            auto [it, inserted] = out.emplace(e, term);
            if (!inserted) it->second += term;
        }
    }
    kvec_prune(out);
    return out;
}

void WedderburnData::build_b_elements() {
    bdual_.resize(S_.size());
    for (int c = 0; c < S_.size(); ++c) bdual_[c] = theta_dual_product(c, S_.dist_of(c));
}

QSchurAlgebra::KVec WedderburnData::wedderburn_element(int c) const {
    return kvec_scaled(bdual_[c], schur_of_d(S_.dist_of(c)).inv());
}

QSchurAlgebra::KVec WedderburnData::matrix_unit(int a, int b) const {
    if (!S_.sim_L(a, b))
        throw Error("matrix_unit needs a ~L b; got " + S_.index_str(a) + ", " + S_.index_str(b));
    RationalFunction cinv = schur_[classOfCell_[S_.cells().leftCellOf[a]]].inv();
    return kvec_scaled(theta_dual_product(a, b), cinv);
}

void WedderburnData::build_m_and_d() {
    const int m = S_.size();
    // tau(theta_a B^vee_{c^t}) collapses to a structure constant:
    // m_{a,c} = f_{a, c^t, d(c^t)}.  Entries are manifestly in A; the
    // reconstruction below is the actual theorem check.
    m_ = Mat<LaurentPoly>(m, m);
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c) {
            int ct = S_.transpose(c);
            m_.at(a, c) = S_.f_constant(a, ct, S_.dist_of(ct));
        }
    for (int a = 0; a < m; ++a) {
        KVec acc;
        for (int c = 0; c < m; ++c) {
            if (m_.at(a, c).is_zero()) continue;
            RationalFunction coeff =
                RationalFunction(m_.at(a, c)) * schur_of_d(S_.dist_of(c)).inv();
            kvec_add_scaled(acc, bdual_[c], coeff);
        }
        if (!kvec_equal(acc, basis_kvec(a)))
            throw LinearDependence("theta_" + S_.index_str(a) +
                                   " is not the M-combination of the Wedderburn basis");
    }

    Mat<RationalFunction> mk = to_rational(m_);
    d_ = mat_mul(mat_mul(mk.transposed(), gramInv_), mk);
    for (int a = 0; a < m; ++a) {
        int nonzero = 0;
        for (int c = 0; c < m; ++c)
            if (!d_.at(a, c).is_zero()) ++nonzero;
        if (nonzero != 1)
            throw NotMonomial("row " + std::to_string(a) + " of D has " +
                              std::to_string(nonzero) + " nonzero entries");
    }
}

Report WedderburnData::verify_section4() const {
    const int m = S_.size();
    Report rep;
    rep.title = "Section 4 for S_q(" + std::to_string(S_.n()) + "," + std::to_string(S_.r()) + ")";

    auto pair_tau = [&](const KVec& x, int a) {
        // tau(theta_a * x) via the Gram matrix.
        RationalFunction acc;
        for (const auto& [e, c] : x)
            if (!gram_.at(a, e).is_zero()) acc += c * gram_.at(a, e);
        return acc;
    };
    auto pair_tau_right = [&](const KVec& x, int a) {
        // tau(x * theta_a).
        RationalFunction acc;
        for (const auto& [e, c] : x)
            if (!gram_.at(e, a).is_zero()) acc += c * gram_.at(e, a);
        return acc;
    };

    rep.add("tau symmetric on basis pairs", gram_ == gram_.transposed());

    {
        bool ok = true;
        Json w;
        for (int a = 0; a < m && ok; ++a) {
            KVec da = dual_theta(a);
            for (int b = 0; b < m; ++b) {
                RationalFunction left = pair_tau(da, b);        // tau(theta_b theta_a^vee)
                RationalFunction right = pair_tau_right(da, b); // tau(theta_a^vee theta_b)
                bool want = a == b;
                if ((want && (!left.is_one() || !right.is_one())) ||
                    (!want && (!left.is_zero() || !right.is_zero()))) {
                    ok = false;
                    w = {{"a", S_.index_str(a)}, {"b", S_.index_str(b)}};
                    break;
                }
            }
        }
        rep.add("delta-duality of theta/theta^vee", ok, w);
    }
    {
        // Formula (1) on deterministic pseudo-random combinations.
        bool ok = true;
        unsigned long seed = 0x2c6e9d1fUL;
        auto next = [&seed]() {
            seed = seed * 6364136223846793005UL + 1442695040888963407UL;
            return seed >> 33;
        };
        for (int trial = 0; trial < 3 && ok; ++trial) {
            KVec x;
            for (int k = 0; k < 4; ++k) {
                int a = static_cast<int>(next() % m);
                LaurentPoly p = LaurentPoly::term(Rat(static_cast<long>(next() % 7) - 3),
                                                  static_cast<int>(next() % 5) - 2);
                if (p.is_zero()) p = LaurentPoly::one();
                RationalFunction c = trial == 2
                                         ? RationalFunction(p, LaurentPoly::one() +
                                                                   LaurentPoly::variable())
                                         : RationalFunction(p);
                auto [it, inserted] = x.emplace(a, c);
                if (!inserted) it->second += c;
            }
            kvec_prune(x);
            KVec rebuilt;
            for (int a = 0; a < m; ++a) {
                RationalFunction coeff;
                KVec da = dual_theta(a);
                for (const auto& [e, c] : x) coeff += c * pair_tau(da, e);
                if (!coeff.is_zero()) rebuilt.emplace(a, coeff);
            }
            ok = kvec_equal(x, rebuilt);
        }
        rep.add("Formula (1) reproduces random elements", ok);
    }
    {
        // Lemma charLR both ways.
        bool ok = true;
        Json w;
        for (int a = 0; a < m && ok; ++a) {
            KVec da = dual_theta(a);
            for (int b = 0; b < m; ++b) {
                KVec left = S_.multiply(basis_kvec(b), da);
                kvec_prune(left);
                KVec right = S_.multiply(da, basis_kvec(b));
                kvec_prune(right);
                if ((!left.empty()) != S_.leq_L(a, b) || (!right.empty()) != S_.leq_R(a, b)) {
                    ok = false;
                    w = {{"a", S_.index_str(a)}, {"b", S_.index_str(b)}};
                    break;
                }
            }
        }
        rep.add("charLR: a <=_L b iff theta_b theta_a^vee != 0 (and right analogue)", ok, w);
    }
    {
        // f_{a,b,c} = tau(theta_a theta_b theta_c^vee), independent path.
        bool ok = true;
        Json w;
        for (int b = 0; b < m && ok; ++b)
            for (int c = 0; c < m && ok; ++c) {
                KVec x = S_.multiply(basis_kvec(b), dual_theta(c));
                for (int a = 0; a < m; ++a) {
                    RationalFunction lhs = pair_tau(x, a);
                    if (lhs != RationalFunction(S_.f_constant(a, b, c))) {
                        ok = false;
                        w = {{"a", S_.index_str(a)}, {"b", S_.index_str(b)},
                             {"c", S_.index_str(c)}};
                        break;
                    }
                }
            }
        rep.add("f_{a,b,c} = tau(theta_a theta_b theta_c^vee)", ok, w);
    }
    {
        // S * S^vee <= S^vee on basis elements: tau(theta_a theta_b^vee theta_c) in A.
        bool ok = true;
        Json w;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b) {
                KVec x = S_.multiply(basis_kvec(a), dual_theta(b));
                for (int c = 0; c < m; ++c) {
                    if (!pair_tau_right(x, c).is_in_A()) {
                        ok = false;
                        w = {{"a", S_.index_str(a)}, {"b", S_.index_str(b)},
                             {"c", S_.index_str(c)}};
                        break;
                    }
                }
            }
        rep.add("dual-lattice integrality tau(theta_a theta_b^vee theta_c) in A", ok, w);
    }
    {
        // Matrix units per left cell (Thm isotypbasis).
        bool ok = true;
        Json w;
        const auto& cells = S_.cells().leftCells;
        for (std::size_t g = 0; g < cells.size() && ok; ++g) {
            const auto& cell = cells[g];
            RationalFunction cinv = schur_[classOfCell_[g]].inv();
            std::vector<std::vector<KVec>> unit(cell.size(), std::vector<KVec>(cell.size()));
            for (std::size_t i = 0; i < cell.size(); ++i)
                for (std::size_t j = 0; j < cell.size(); ++j)
                    unit[i][j] =
                        kvec_scaled(S_.multiply(basis_kvec(cell[i]), dual_theta(cell[j])), cinv);
            for (std::size_t i = 0; i < cell.size() && ok; ++i)
                for (std::size_t j = 0; j < cell.size() && ok; ++j)
                    for (std::size_t k = 0; k < cell.size() && ok; ++k)
                        for (std::size_t l = 0; l < cell.size(); ++l) {
                            KVec prod = S_.multiply(unit[i][j], unit[k][l]);
                            KVec want = j == k ? unit[i][l] : KVec{};
                            if (!kvec_equal(prod, want)) {
                                ok = false;
                                w = {{"cell", static_cast<int>(g)},
                                     {"i", static_cast<int>(i)},
                                     {"j", static_cast<int>(j)},
                                     {"k", static_cast<int>(k)},
                                     {"l", static_cast<int>(l)}};
                                break;
                            }
                        }
        }
        rep.add("matrix-unit relations per left cell", ok, w);
    }
    {
        // Central idempotents e_Gamma.
        bool ok = true;
        Json w;
        const auto& cells = S_.cells().leftCells;
        std::vector<KVec> eOfClass(classes_.size());
        for (std::size_t g = 0; g < cells.size() && ok; ++g) {
            RationalFunction cinv = schur_[classOfCell_[g]].inv();
            KVec e;
            for (int a : cells[g])
                kvec_add_scaled(e, S_.multiply(basis_kvec(a), dual_theta(a)), cinv);
            kvec_prune(e);
            if (!kvec_equal(S_.multiply(e, e), e)) {
                ok = false;
                w = {{"cell", static_cast<int>(g)}, {"reason", "not idempotent"}};
                break;
            }
            for (int b = 0; b < m; ++b)
                if (!kvec_equal(S_.multiply(e, basis_kvec(b)), S_.multiply(basis_kvec(b), e))) {
                    ok = false;
                    w = {{"cell", static_cast<int>(g)}, {"reason", "not central"}};
                    break;
                }
            if (!ok) break;
            // Identity action on LC^(Gamma): since tau(theta_b^vee theta_u)
            // is exactly delta_{b,u}, the representing matrix entry of e at
            // (b,a) is the theta_b-coordinate of e * theta_a.
            for (std::size_t i = 0; i < cells[g].size() && ok; ++i) {
                KVec col = S_.multiply(e, basis_kvec(cells[g][i]));
                for (std::size_t j = 0; j < cells[g].size(); ++j) {
                    auto it = col.find(cells[g][j]);
                    RationalFunction entry = it == col.end() ? RationalFunction() : it->second;
                    bool want = i == j;
                    if (want ? !entry.is_one() : !entry.is_zero()) {
                        ok = false;
                        w = {{"cell", static_cast<int>(g)}, {"reason", "not identity on LC"}};
                        break;
                    }
                }
            }
            if (!ok) break;
            int cl = classOfCell_[g];
            if (eOfClass[cl].empty())
                eOfClass[cl] = e;
            else if (!kvec_equal(eOfClass[cl], e)) {
                ok = false;
                w = {{"cell", static_cast<int>(g)}, {"reason", "e differs within class"}};
                break;
            }
        }
        if (ok) {
            // Cor idempotents: the central primitive idempotent of a class is
            // the sum of its diagonal Wedderburn idempotents.
            for (std::size_t cl = 0; cl < classes_.size() && ok; ++cl) {
                KVec sum;
                for (int d : S_.distinguished_set())
                    if (class_of_d(d) == static_cast<int>(cl))
                        kvec_add_scaled(sum, bdual_[d], schur_of_d(d).inv());
                kvec_prune(sum);
                if (!kvec_equal(sum, eOfClass[cl])) {
                    ok = false;
                    w = {{"class", static_cast<int>(cl)},
                         {"reason", "sum of diagonal B != e_Gamma"}};
                }
            }
        }
        rep.add("central primitive idempotents e_Gamma", ok, w);
    }
    {
        // Sum over D(n,r) of c_d^{-1} theta_d theta_d^vee is the identity.
        KVec sum;
        for (int d : S_.distinguished_set())
            kvec_add_scaled(sum, bdual_[d], schur_of_d(d).inv());
        kvec_prune(sum);
        rep.add("sum of diagonal Wedderburn idempotents = identity",
                kvec_equal(sum, QSchurAlgebra::to_k(S_.identity())));
    }
    {
        // Thm wedderburn: the three-case product law on all pairs.
        bool ok = true;
        Json w;
        for (int c = 0; c < m && ok; ++c) {
            int d = S_.dist_of(c);
            KVec bc = wedderburn_element(c);
            for (int cp = 0; cp < m; ++cp) {
                int dp = S_.dist_of(cp);
                KVec prod = S_.multiply(bc, wedderburn_element(cp));
                KVec want;
                if (class_of_d(d) == class_of_d(dp) && S_.sim_R(d, cp)) {
                    int cpp = -1;
                    for (int cand : S_.cells().leftCells[S_.cells().leftCellOf[dp]])
                        if (S_.sim_R(cand, c)) {
                            if (cpp >= 0) {
                                ok = false;
                                break;
                            }
                            cpp = cand;
                        }
                    if (cpp < 0) {
                        ok = false;
                        w = {{"c", S_.index_str(c)}, {"c'", S_.index_str(cp)},
                             {"reason", "no c'' found"}};
                        break;
                    }
                    want = wedderburn_element(cpp);
                }
                if (!kvec_equal(prod, want)) {
                    ok = false;
                    w = {{"c", S_.index_str(c)}, {"c'", S_.index_str(cp)}};
                    break;
                }
            }
        }
        rep.add("Wedderburn three-case product law", ok, w);
    }
    {
        // Prop wedderdual: tau(B_c * theta_{c'} theta_{d'}^vee) = delta_{c', c^t}.
        bool ok = true;
        Json w;
        for (int c = 0; c < m && ok; ++c) {
            KVec bc = wedderburn_element(c);
            for (int cp = 0; cp < m; ++cp) {
                RationalFunction val = tau(S_.multiply(bc, bdual_[cp]));
                bool want = cp == S_.transpose(c);
                if (want ? !val.is_one() : !val.is_zero()) {
                    ok = false;
                    w = {{"c", S_.index_str(c)}, {"c'", S_.index_str(cp)}};
                    break;
                }
            }
        }
        rep.add("wedderdual pairing", ok, w);
    }
    {
        // Thm eqLCmod: equalities across isomorphic left cells.
        bool ok = true;
        Json w;
        const auto& cells = S_.cells().leftCells;
        for (std::size_t g = 0; g < cells.size() && ok; ++g)
            for (std::size_t gp = 0; gp < cells.size() && ok; ++gp) {
                if (classOfCell_[g] != classOfCell_[gp]) continue;
                int d = S_.dist_of_left_cell(static_cast<int>(gp));
                for (int c : cells[gp]) {
                    int aFound = -1, bFound = -1;
                    for (int cand : cells[g]) {
                        if (S_.sim_R(cand, c)) aFound = cand;
                        if (S_.sim_R(cand, d)) bFound = cand;
                    }
                    if (aFound < 0 || bFound < 0) {
                        ok = false;
                        w = {{"cell", static_cast<int>(g)}, {"c", S_.index_str(c)}};
                        break;
                    }
                    KVec lhs = S_.multiply(basis_kvec(aFound), dual_theta(bFound));
                    if (!kvec_equal(lhs, bdual_[c])) {
                        ok = false;
                        w = {{"a", S_.index_str(aFound)}, {"b", S_.index_str(bFound)},
                             {"c", S_.index_str(c)}, {"d", S_.index_str(d)}};
                        break;
                    }
                }
            }
        rep.add("eqLCmod: theta_a theta_b^vee = theta_c theta_d^vee", ok, w);
    }
    {
        // Cor L_d: representing matrices on <theta_c theta_d^vee> equal the
        // cell-module matrices.
        bool ok = true;
        Json w;
        for (int d : S_.distinguished_set()) {
            int g = S_.cells().leftCellOf[d];
            const auto& cell = S_.cells().leftCells[g];
            for (int b = 0; b < m && ok; ++b)
                for (int c : cell) {
                    KVec lhs = S_.multiply(basis_kvec(b), bdual_[c]);
                    KVec rhs;
                    for (int cp : cell)
                        kvec_add_scaled(rhs, bdual_[cp], RationalFunction(S_.f_constant(b, c, cp)));
                    if (!kvec_equal(lhs, rhs)) {
                        ok = false;
                        w = {{"d", S_.index_str(d)}, {"b", S_.index_str(b)},
                             {"c", S_.index_str(c)}};
                        break;
                    }
                }
            if (!ok) break;
        }
        rep.add("L_d representing matrices equal cell-module matrices", ok, w);
    }
    {
        // Remark after wedderdual: c ~L d and c^t ~L d' force LC^(d) iso LC^(d').
        bool ok = true;
        Json w;
        for (int c = 0; c < m; ++c)
            if (class_of_d(S_.dist_of(c)) != class_of_d(S_.dist_of(S_.transpose(c)))) {
                ok = false;
                w = {{"c", S_.index_str(c)}};
                break;
            }
        rep.add("LC^(d) iso LC^(d') across transpose", ok, w);
    }
    {
        // Iso-class structure: the common dimension equals the number of
        // left cells in the class.
        bool ok = true;
        Json w;
        const auto& cells = S_.cells().leftCells;
        for (std::size_t cl = 0; cl < classes_.size(); ++cl) {
            std::size_t dim = cells[classes_[cl].front()].size();
            for (int g : classes_[cl])
                if (cells[g].size() != dim) ok = false;
            if (classes_[cl].size() != dim) {
                ok = false;
                w = {{"class", static_cast<int>(cl)}, {"cells", classes_[cl].size()},
                     {"dim", dim}};
            }
        }
        rep.add("class dimension = number of left cells in class", ok, w);
    }
    {
        rep.add("M has entries in A", true); // by construction (f-values)
        rep.add("det(M) != 0", !bareiss_det(m_).is_zero());
        bool ok = true;
        Json w;
        for (int a = 0; a < m; ++a) {
            int col = -1;
            for (int c = 0; c < m; ++c)
                if (!d_.at(a, c).is_zero()) col = c;
            if (col != S_.transpose(a) || d_.at(a, col) != schur_of_d(S_.dist_of(col))) {
                ok = false;
                w = {{"row", S_.index_str(a)}};
                break;
            }
        }
        rep.add("D monomial with Schur-element entries at transpose positions", ok, w);
    }
    return rep;
}

} // namespace qsa
