#ifndef COVOL_ERRORS_HPP
#define COVOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace covol {

enum class Errc {
    NotMonic,
    NotIrreducible,
    NotTotallyReal,
    NotSquarefree,
    IndexUnresolved,
    IndexObstruction,
    ZeroElement,
    PrecisionExceeded,
    UnsupportedDegree,
    UnverifiedUnits,
    DatasetContradiction,
    MissingClassData,
    NonIntegralDegree,
    TPrimeExceedsT,
    ParityViolation,
    MissingInvariant,
    TailTooWide,
    NoRational,
    Ambiguous,
    NotFundamental,
    QuadratureBudgetExceeded,
    DegreeOutOfRange,
    SplittingUnavailable,
    DatasetIncomplete,
    UsageError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace covol

#endif
