#include "covol/rational.hpp"

#include "covol/errors.hpp"

#include <sstream>

namespace covol {

std::string rat_str(const Rat& x) {
    std::ostringstream os;
    os << x.get_num();
    if (x.get_den() != 1) os << "/" << x.get_den();
    return os.str();
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            // allow decimal literals: 0.0166 -> 166/10000
            auto dot = s.find('.');
            if (dot == std::string::npos) return Rat(Int(s));
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            Int num(digits);
            Int den = int_pow(10, s.size() - dot - 1);
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        Rat r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(Errc::UsageError, "cannot parse rational '" + s + "'");
    }
}

std::string rat_decimal(const Rat& x, int digits) {
    Rat a = x < 0 ? Rat(-x) : x;
    Int scale = int_pow(10, digits);
    Int scaled = rat_floor(a * scale + Rat(1, 2));
    std::string body = scaled.get_str();
    if ((int)body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    if (x < 0) body.insert(0, "-");
    return body;
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int r = sqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotMonic: return "NotMonic";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotTotallyReal: return "NotTotallyReal";
        case Errc::NotSquarefree: return "NotSquarefree";
        case Errc::IndexUnresolved: return "IndexUnresolved";
        case Errc::IndexObstruction: return "IndexObstruction";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::PrecisionExceeded: return "PrecisionExceeded";
        case Errc::UnsupportedDegree: return "UnsupportedDegree";
        case Errc::UnverifiedUnits: return "UnverifiedUnits";
        case Errc::DatasetContradiction: return "DatasetContradiction";
        case Errc::MissingClassData: return "MissingClassData";
        case Errc::NonIntegralDegree: return "NonIntegralDegree";
        case Errc::TPrimeExceedsT: return "TPrimeExceedsT";
        case Errc::ParityViolation: return "ParityViolation";
        case Errc::MissingInvariant: return "MissingInvariant";
        case Errc::TailTooWide: return "TailTooWide";
        case Errc::NoRational: return "NoRational";
        case Errc::Ambiguous: return "Ambiguous";
        case Errc::NotFundamental: return "NotFundamental";
        case Errc::QuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
        case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
        case Errc::SplittingUnavailable: return "SplittingUnavailable";
        case Errc::DatasetIncomplete: return "DatasetIncomplete";
        case Errc::UsageError: return "UsageError";
    }
    return "UnknownError";
}

} // namespace covol
