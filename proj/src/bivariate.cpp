#include "qsa/bivariate.hpp"

#include <sstream>

#include "qsa/errors.hpp"

namespace qsa {

BivariatePoly BivariatePoly::from_laurent(const LaurentPoly& p, Var var) {
    BivariatePoly out;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1)
            throw NonIntegralEntry("BivariatePoly from non-integral Laurent polynomial");
        if (var == Var::v)
            out.terms_.emplace(std::make_pair(e, 0), c.get_num());
        else
            out.terms_.emplace(std::make_pair(0, e), c.get_num());
    }
    return out;
}

void BivariatePoly::add_term(const Int& c, int ev, int evp) {
    if (c == 0) return;
    auto key = std::make_pair(ev, evp);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return out;
}

LaurentPoly BivariatePoly::substitute_diagonal() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.add_term(Rat(c), k.first + k.second);
    return out;
}

std::string BivariatePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        out << c.get_str() << "*v^" << k.first << "*v'^" << k.second;
        first = false;
    }
    return out.str();
}

} // namespace qsa
