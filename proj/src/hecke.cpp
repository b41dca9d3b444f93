#include "qsa/hecke.hpp"

#include <algorithm>

#include "qsa/bivariate.hpp"
#include "qsa/errors.hpp"

namespace qsa {

namespace {

long rat_to_long(const Rat& c) {
    if (c.get_den() != 1) throw NonIntegralEntry("expected integer, got " + c.get_str());
    if (!c.get_num().fits_slong_p()) throw Error("integer out of machine range");
    return c.get_num().get_si();
}

// v - v^-1, the coefficient in T_s^2 = (v - v^-1) T_s + 1.
LaurentPoly quadratic_coeff() {
    return LaurentPoly::variable() - LaurentPoly::term(Rat(1), -1);
}

} // namespace

HeckeAlgebra::HeckeAlgebra(int r) : W_(r) {
    const int n = W_.size();

    // T_w^{-1} by induction on length: for a left descent s of w = s*u,
    // T_w^{-1} = T_u^{-1} T_s^{-1} = T_u^{-1} T_s - (v - v^-1) T_u^{-1}.
    tinv_.resize(n);
    tinv_[0] = t_basis(0);
    LaurentPoly qc = quadratic_coeff();
    for (int w = 1; w < n; ++w) {
        int s = 0;
        for (int i = 1; i < r; ++i)
            if (W_[w].has_left_descent(i)) {
                s = i;
                break;
            }
        int u = W_.index(Perm::gen(r, s) * W_[w]);
        TVec res = t_mult_right_gen(tinv_[u], s);
        for (int y = 0; y < n; ++y) res[y] -= qc * tinv_[u][y];
        tinv_[w] = std::move(res);
    }

    build_c_basis();
    build_g_table();
    build_a_delta_gamma();
    build_cells();
    build_duals();
}

HeckeAlgebra::TVec HeckeAlgebra::t_basis(int w) const {
    TVec a(W_.size());
    a[w] = LaurentPoly::one();
    return a;
}

HeckeAlgebra::TVec HeckeAlgebra::t_mult_right_gen(TVec a, int s) const {
    const int n = W_.size();
    int si = W_.index(Perm::gen(W_.degree(), s));
    TVec res(n);
    LaurentPoly qc = quadratic_coeff();
    for (int w = 0; w < n; ++w) {
        if (a[w].is_zero()) continue;
        int ws = W_.mult(w, si);
        if (W_.length(ws) > W_.length(w)) {
            res[ws] += a[w];
        } else {
            res[w] += qc * a[w];
            res[ws] += a[w];
        }
    }
    return res;
}

HeckeAlgebra::TVec HeckeAlgebra::t_mult_left_gen(int s, const TVec& a) const {
    const int n = W_.size();
    int si = W_.index(Perm::gen(W_.degree(), s));
    TVec res(n);
    LaurentPoly qc = quadratic_coeff();
    for (int w = 0; w < n; ++w) {
        if (a[w].is_zero()) continue;
        int sw = W_.mult(si, w);
        if (W_.length(sw) > W_.length(w)) {
            res[sw] += a[w];
        } else {
            res[w] += qc * a[w];
            res[sw] += a[w];
        }
    }
    return res;
}

HeckeAlgebra::TVec HeckeAlgebra::t_mult(const TVec& a, const TVec& b) const {
    const int n = W_.size();
    TVec res(n);
    for (int z = 0; z < n; ++z) {
        if (b[z].is_zero()) continue;
        TVec az = a;
        for (int s : W_[z].reduced_word()) az = t_mult_right_gen(std::move(az), s);
        for (int y = 0; y < n; ++y)
            if (!az[y].is_zero()) res[y] += b[z] * az[y];
    }
    return res;
}

HeckeAlgebra::TVec HeckeAlgebra::bar(const TVec& a) const {
    const int n = W_.size();
    TVec res(n);
    for (int w = 0; w < n; ++w) {
        if (a[w].is_zero()) continue;
        LaurentPoly cb = a[w].bar();
        const TVec& ti = tinv_[W_.inv(w)];
        for (int y = 0; y < n; ++y)
            if (!ti[y].is_zero()) res[y] += cb * ti[y];
    }
    return res;
}

void HeckeAlgebra::build_c_basis() {
    const int n = W_.size();
    const int r = W_.degree();
    c_.resize(n);
    c_[0] = t_basis(0);
    // Elements are ordered by length, so every proper factor is already done.
    for (int w = 1; w < n; ++w) {
        int s = 0;
        for (int i = 1; i < r; ++i)
            if (W_[w].has_left_descent(i)) {
                s = i;
                break;
            }
        int u = W_.index(Perm::gen(r, s) * W_[w]);
        // C_s C_u = C_w + sum_{y < u, sy < y} mu(y,u) C_y
        TVec cw = t_mult_left_gen(s, c_[u]);
        for (int y = 0; y < n; ++y) cw[y] += LaurentPoly::term(Rat(1), -1) * c_[u][y];
        for (int y = 0; y < u; ++y) {
            if (c_[u][y].is_zero()) continue;
            long m = rat_to_long(c_[u][y].coeff(-1));
            if (m == 0 || !W_[y].has_left_descent(s)) continue;
            for (int t = 0; t < n; ++t) cw[t] -= Rat(m) * c_[y][t];
        }
        c_[w] = std::move(cw);
    }
}

LaurentPoly HeckeAlgebra::kl_polynomial(int y, int w) const { return c_[w][y]; }

long HeckeAlgebra::mu(int y, int w) const { return rat_to_long(c_[w][y].coeff(-1)); }

std::vector<LaurentPoly> HeckeAlgebra::to_c_coords(TVec a) const {
    const int n = W_.size();
    std::vector<LaurentPoly> coords(n);
    for (int w = n - 1; w >= 0; --w) {
        if (a[w].is_zero()) continue;
        LaurentPoly coeff = a[w];
        for (int y = 0; y <= w; ++y)
            if (!c_[w][y].is_zero()) a[y] -= coeff * c_[w][y];
        coords[w] = std::move(coeff);
    }
    for (int y = 0; y < n; ++y)
        if (!a[y].is_zero()) throw Error("to_c_coords: conversion left a remainder");
    return coords;
}

void HeckeAlgebra::build_g_table() {
    const int n = W_.size();
    const int r = W_.degree();
    g_.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        // prod[z] = C_x * T_z, built along right descents.
        std::vector<TVec> prod(n);
        prod[0] = c_[x];
        for (int z = 1; z < n; ++z) {
            int s = 0;
            for (int i = 1; i < r; ++i)
                if (W_[z].has_right_descent(i)) {
                    s = i;
                    break;
                }
            int zp = W_.mult(z, W_.index(Perm::gen(r, s)));
            prod[z] = t_mult_right_gen(prod[zp], s);
        }
        for (int y = 0; y < n; ++y) {
            TVec acc(n);
            for (int z = 0; z <= y; ++z) {
                if (c_[y][z].is_zero()) continue;
                for (int t = 0; t < n; ++t)
                    if (!prod[z][t].is_zero()) acc[t] += c_[y][z] * prod[z][t];
            }
            auto coords = to_c_coords(std::move(acc));
            auto& row = g_[static_cast<std::size_t>(x) * n + y];
            for (int z = 0; z < n; ++z)
                if (!coords[z].is_zero()) row.emplace_back(z, std::move(coords[z]));
        }
    }
}

LaurentPoly HeckeAlgebra::g_constant(int x, int y, int z) const {
    for (const auto& [zz, poly] : g_row(x, y))
        if (zz == z) return poly;
    return {};
}

void HeckeAlgebra::build_a_delta_gamma() {
    const int n = W_.size();
    a_.assign(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (const auto& [z, poly] : g_row(x, y)) a_[z] = std::max(a_[z], poly.max_exp());
    delta_.resize(n);
    for (int z = 0; z < n; ++z) delta_[z] = -c_[z][0].max_exp();
    dist_.clear();
    for (int d = 0; d < n; ++d)
        if (a_[d] == delta_[d]) {
            if (!W_[d].is_involution())
                throw Error("distinguished element " + W_[d].word_str() + " is not an involution");
            dist_.push_back(d);
        }
}

long HeckeAlgebra::gamma(int x, int y, int z) const {
    int zi = W_.inv(z);
    return rat_to_long(g_constant(x, y, zi).coeff(a_[zi]));
}

namespace {

std::vector<std::vector<bool>> reachability(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int start = 0; start < n; ++start) {
        std::vector<int> stack{start};
        reach[start][start] = true;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int y : adj[w])
                if (!reach[start][y]) {
                    reach[start][y] = true;
                    stack.push_back(y);
                }
        }
    }
    return reach;
}

void partition_cells(const std::vector<std::vector<bool>>& reach, std::vector<int>& cellOf,
                     std::vector<std::vector<int>>& cells) {
    const int n = static_cast<int>(reach.size());
    cellOf.assign(n, -1);
    cells.clear();
    for (int w = 0; w < n; ++w) {
        if (cellOf[w] >= 0) continue;
        std::vector<int> cell;
        for (int y = w; y < n; ++y)
            if (cellOf[y] < 0 && reach[w][y] && reach[y][w]) {
                cellOf[y] = static_cast<int>(cells.size());
                cell.push_back(y);
            }
        cells.push_back(std::move(cell));
    }
}

} // namespace

void HeckeAlgebra::build_cells() {
    const int n = W_.size();
    const int r = W_.degree();
    std::vector<int> gens;
    for (int i = 1; i < r; ++i) gens.push_back(W_.index(Perm::gen(r, i)));

    std::vector<std::vector<int>> adjL(n), adjR(n), adjLR(n);
    for (int w = 0; w < n; ++w) {
        for (int s : gens) {
            for (const auto& [y, poly] : g_row(s, w)) {
                (void)poly;
                adjL[w].push_back(y);
            }
            for (const auto& [y, poly] : g_row(w, s)) {
                (void)poly;
                adjR[w].push_back(y);
            }
        }
        adjLR[w] = adjL[w];
        adjLR[w].insert(adjLR[w].end(), adjR[w].begin(), adjR[w].end());
    }
    reachL_ = reachability(n, adjL);
    reachR_ = reachability(n, adjR);
    reachLR_ = reachability(n, adjLR);
    partition_cells(reachL_, cells_.leftCellOf, cells_.leftCells);
    partition_cells(reachR_, cells_.rightCellOf, cells_.rightCells);
    partition_cells(reachLR_, cells_.twoSidedCellOf, cells_.twoSidedCells);
}

void HeckeAlgebra::build_duals() {
    const int n = W_.size();
    // kinv = inverse of the unitriangular matrix K[w][y] = p_{y,w}.
    std::vector<std::vector<LaurentPoly>> kinv(n, std::vector<LaurentPoly>(n));
    for (int w = 0; w < n; ++w) {
        kinv[w][w] = LaurentPoly::one();
        for (int u = w - 1; u >= 0; --u) {
            LaurentPoly acc;
            for (int y = u; y < w; ++y)
                if (!c_[w][y].is_zero() && !kinv[y][u].is_zero()) acc += c_[w][y] * kinv[y][u];
            kinv[w][u] = -acc;
        }
    }
    // D_w = sum_y kinv[y][w] * T_{y^{-1}}, so that tau(C_x D_w) = delta_{x,w}.
    dual_.assign(n, TVec(n));
    for (int w = 0; w < n; ++w)
        for (int y = w; y < n; ++y)
            if (!kinv[y][w].is_zero()) dual_[w][W_.inv(y)] += kinv[y][w];
}

Report HeckeAlgebra::verify_P(bool with_p15) const {
    const int n = W_.size();
    Report rep;
    rep.title = "P1-P15 for S_" + std::to_string(W_.degree());

    auto word = [&](int w) { return W_[w].word_str(); };

    {
        bool ok = true;
        Json wit;
        for (int z = 0; z < n && ok; ++z)
            if (a_[z] > delta_[z]) {
                ok = false;
                wit = {{"z", word(z)}, {"a", a_[z]}, {"Delta", delta_[z]}};
            }
        rep.add("P1", ok, wit);
    }
    {
        bool ok = true;
        Json wit;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int d : dist_)
                    if (gamma(x, y, d) != 0 && x != W_.inv(y)) {
                        ok = false;
                        wit = {{"x", word(x)}, {"y", word(y)}, {"d", word(d)}};
                        break;
                    }
        rep.add("P2", ok, wit);
    }
    {
        bool ok = true;
        Json wit;
        for (int y = 0; y < n && ok; ++y) {
            int count = 0;
            for (int d : dist_)
                if (gamma(W_.inv(y), y, d) != 0) ++count;
            if (count != 1) {
                ok = false;
                wit = {{"y", word(y)}, {"count", count}};
            }
        }
        rep.add("P3", ok, wit);
    }
    {
        bool ok = true;
        Json wit;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n; ++y)
                if (leq_LR(x, y) && a_[x] < a_[y]) {
                    ok = false;
                    wit = {{"x", word(x)}, {"y", word(y)}};
                    break;
                }
        rep.add("P4", ok, wit);
    }
    {
        bool ok = true;
        Json wit;
        for (int d : dist_)
            for (int y = 0; y < n; ++y) {
                long g = gamma(W_.inv(y), y, d);
                if (g != 0 && g != 1 && g != -1) {
                    ok = false;
                    wit = {{"y", word(y)}, {"d", word(d)}, {"gamma", g}};
                }
            }
        rep.add("P5", ok, wit);
    }
    {
        bool ok = true;
        Json wit;
        for (int d : dist_)
            if (W_.inv(d) != d) {
                ok = false;
                wit = {{"d", word(d)}};
            }
        rep.add("P6", ok, wit);
    }
    {
        bool ok = true;
        Json wit;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n; ++z) {
                    long g1 = gamma(x, y, z), g2 = gamma(y, z, x), g3 = gamma(z, x, y);
                    if (g1 != g2 || g2 != g3) {
                        ok = false;
                        wit = {{"x", word(x)}, {"y", word(y)}, {"z", word(z)},
                               {"gammas", {g1, g2, g3}}};
                        break;
                    }
                }
        rep.add("P7", ok, wit);
    }
    {
        bool ok = true;
        Json wit;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n; ++z)
                    if (gamma(x, y, z) != 0 &&
                        !(sim_L(x, W_.inv(y)) && sim_L(y, W_.inv(z)) && sim_L(z, W_.inv(x)))) {
                        ok = false;
                        wit = {{"x", word(x)}, {"y", word(y)}, {"z", word(z)}};
                        break;
                    }
        rep.add("P8", ok, wit);
    }
    {
        bool ok9 = true, ok10 = true, ok11 = true;
        Json w9, w10, w11;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (a_[x] != a_[y]) continue;
                if (leq_L(x, y) && !sim_L(x, y) && ok9) {
                    ok9 = false;
                    w9 = {{"x", word(x)}, {"y", word(y)}};
                }
                if (leq_R(x, y) && !sim_R(x, y) && ok10) {
                    ok10 = false;
                    w10 = {{"x", word(x)}, {"y", word(y)}};
                }
                if (leq_LR(x, y) && !sim_LR(x, y) && ok11) {
                    ok11 = false;
                    w11 = {{"x", word(x)}, {"y", word(y)}};
                }
            }
        rep.add("P9", ok9, w9);
        rep.add("P10", ok10, w10);
        rep.add("P11", ok11, w11);
    }
    {
        bool ok = true;
        Json wit;
        for (const auto& cell : cells_.leftCells) {
            int count = 0, dFound = -1;
            for (int w : cell)
                if (a_[w] == delta_[w]) {
                    ++count;
                    dFound = w;
                }
            if (count != 1) {
                ok = false;
                wit = {{"cell", word(cell.front())}, {"distinguished", count}};
                break;
            }
            for (int y : cell)
                if (gamma(W_.inv(y), y, dFound) == 0) {
                    ok = false;
                    wit = {{"y", word(y)}, {"d", word(dFound)}};
                    break;
                }
            if (!ok) break;
        }
        rep.add("P13", ok, wit);
    }
    {
        bool ok = true;
        Json wit;
        for (int x = 0; x < n; ++x)
            if (!sim_LR(x, W_.inv(x))) {
                ok = false;
                wit = {{"x", word(x)}};
            }
        rep.add("P14", ok, wit);
    }
    if (with_p15) {
        // Bivariate identity: one factor of each product lives in v'.
        bool ok = true;
        Json wit;
        using BV = BivariatePoly;
        auto prime = [&](const LaurentPoly& p) { return BV::from_laurent(p, BV::Var::vprime); };
        auto plain = [&](const LaurentPoly& p) { return BV::from_laurent(p, BV::Var::v); };
        for (int w = 0; w < n && ok; ++w)
            for (int y = 0; y < n && ok; ++y) {
                if (a_[w] != a_[y]) continue;
                for (int x = 0; x < n && ok; ++x)
                    for (int xp = 0; xp < n; ++xp) {
                        BV lhs, rhs;
                        for (const auto& [yp, gwxp] : g_row(w, xp)) {
                            LaurentPoly gx = g_constant(x, yp, y);
                            if (!gx.is_zero()) lhs += prime(gwxp) * plain(gx);
                        }
                        for (const auto& [yp, gxw] : g_row(x, w)) {
                            LaurentPoly gp = g_constant(yp, xp, y);
                            if (!gp.is_zero()) rhs += plain(gxw) * prime(gp);
                        }
                        if (lhs != rhs) {
                            ok = false;
                            wit = {{"x", word(x)}, {"x'", word(xp)}, {"y", word(y)}, {"w", word(w)}};
                            break;
                        }
                    }
            }
        rep.add("P15", ok, wit);
    }
    return rep;
}

Report HeckeAlgebra::verify_invariants() const {
    const int n = W_.size();
    Report rep;
    rep.title = "Hecke invariants for S_" + std::to_string(W_.degree());

    bool barOk = true;
    for (int w = 0; w < n && barOk; ++w) barOk = bar(c_[w]) == c_[w];
    rep.add("C-basis bar-invariance", barOk);

    bool degOk = true, posOk = true;
    for (int w = 0; w < n; ++w)
        for (int y = 0; y < n; ++y) {
            const LaurentPoly& p = c_[w][y];
            if (p.is_zero()) continue;
            if (y == w && !p.is_one()) degOk = false;
            if (y != w && p.max_exp() >= 0) degOk = false;
            for (const auto& [e, coeff] : p.terms())
                if (coeff < 0) posOk = false;
        }
    rep.add("KL degree bounds", degOk);
    rep.add("KL positivity (type A)", posOk);

    bool gSym = true;
    for (int x = 0; x < n && gSym; ++x)
        for (int y = 0; y < n && gSym; ++y)
            for (const auto& [z, poly] : g_row(x, y))
                if (g_constant(W_.inv(y), W_.inv(x), W_.inv(z)) != poly) {
                    gSym = false;
                    break;
                }
    rep.add("g_{x,y,z} = g_{y^-1,x^-1,z^-1}", gSym);

    bool aConst = true;
    for (const auto& cell : cells_.twoSidedCells)
        for (int w : cell)
            if (a_[w] != a_[cell.front()]) aConst = false;
    rep.add("a constant on two-sided cells", aConst);

    rep.add("|D| = number of left cells", dist_.size() == cells_.leftCells.size());

    bool lrEq = true;
    for (int x = 0; x < n && lrEq; ++x)
        for (int y = x + 1; y < n; ++y)
            if (sim_L(x, y) && sim_R(x, y)) {
                lrEq = false;
                break;
            }
    rep.add("sim_L and sim_R imply equality (type A)", lrEq);

    bool dualOk = true;
    for (int x = 0; x < n && dualOk; ++x)
        for (int w = 0; w < n; ++w) {
            LaurentPoly t = tau(t_mult(c_[x], dual_[w]));
            bool want = x == w;
            if (want ? !t.is_one() : !t.is_zero()) {
                dualOk = false;
                break;
            }
        }
    rep.add("tau(C_x D_w) = delta_{x,w}", dualOk);

    return rep;
}

} // namespace qsa
