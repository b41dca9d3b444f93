#ifndef QSA_ERRORS_HPP
#define QSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsa {

// All library errors derive from Error so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

struct DenominatorVanishes : Error {
    explicit DenominatorVanishes(const std::string& what) : Error(what) {}
};

struct NoSuitableImage : Error {
    explicit NoSuitableImage(const std::string& what) : Error(what) {}
};

struct NonUniqueExtremum : Error {
    explicit NonUniqueExtremum(const std::string& what) : Error(what) {}
};

struct IdentityCheckFailed : Error {
    explicit IdentityCheckFailed(const std::string& what) : Error(what) {}
};

struct SingularGram : Error {
    explicit SingularGram(const std::string& what) : Error(what) {}
};

struct ClassSplitsTwoSidedCell : Error {
    explicit ClassSplitsTwoSidedCell(const std::string& what) : Error(what) {}
};

struct LinearDependence : Error {
    explicit LinearDependence(const std::string& what) : Error(what) {}
};

struct NonIntegralEntry : Error {
    explicit NonIntegralEntry(const std::string& what) : Error(what) {}
};

struct NotMonomial : Error {
    explicit NotMonomial(const std::string& what) : Error(what) {}
};

struct SizeGuard : Error {
    explicit SizeGuard(const std::string& what) : Error(what) {}
};

} // namespace qsa

#endif
