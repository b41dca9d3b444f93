#ifndef QSA_JSON_IO_HPP
#define QSA_JSON_IO_HPP

#include <string>

#include "qsa/james.hpp"
#include "qsa/matrix.hpp"
#include "qsa/permutation.hpp"
#include "qsa/qschur.hpp"
#include "qsa/report.hpp"

namespace qsa {

inline constexpr int kSchemaVersion = 1;

Json to_json(const LaurentPoly& p);        // {"terms": [[exp, "coeff"], ...]}
Json to_json(const RationalFunction& f);   // {"num": ..., "den": ...}
Json to_json(const Perm& w);               // one-line images, 1-based
Json to_json(const Composition& c);
Json to_json(const Mat<LaurentPoly>& m);   // row-major strings
Json to_json(const Mat<RationalFunction>& m);
Json to_json(const RankReport& r);
/// Index as both a structured triple and its canonical ordinal.
Json index_json(const QSchurAlgebra& S, int a);

LaurentPoly parse_laurent(const std::string& text);
/// "p" or "p/q" with p, q Laurent-polynomial expressions like
/// "v^-1 + 2*v^3 - 1/2".
RationalFunction parse_rational_function(const std::string& text);
Composition parse_composition(const std::string& text); // "2,1,0"
/// "e" or a word like "s1s2s1" (letters applied left to right).
Perm parse_word(int r, const std::string& text);

} // namespace qsa

#endif
