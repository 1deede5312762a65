#include "covol/bounds.hpp"

#include "covol/errors.hpp"

namespace covol {

namespace {

// printed constants consumed as data; their derivation sits behind the
// external Chinburg-Friedman machinery and is not re-derived here
const Rat kPsiScale = rat_parse("0.477132753");
const Rat kPsiSlope = rat_parse("0.658829093");
const Rat kPsiShift = rat_parse("19.0745");
const Rat kXiConst = rat_parse("1.38629436");
const Rat kXiSlope = rat_parse("0.58548009");
const Rat kLogShift = rat_parse("11.3098");
const Rat kRhoConst = rat_parse("0.693147");
const Rat kRhoSlope = rat_parse("1.278628");

// |B_2m| for m = 1..5
const Rat kBernoulli[] = {Rat(1, 6), Rat(1, 30), Rat(1, 42), Rat(1, 30), Rat(5, 66)};

} // namespace

RatInterval psi_bound(int m, const Int& q, unsigned bits) {
    if (m < 1 || q < 1) fail(Errc::UsageError, "psi needs m >= 1, q >= 1");
    Rat arg = kPsiSlope * m - kPsiShift / q;
    return (RatInterval(kPsiScale) * iv_exp(RatInterval(arg), bits)).round_out(bits);
}

RatInterval xi_bound(int m, const Int& q, unsigned bits) {
    if (m < 1 || q < 1) fail(Errc::UsageError, "xi needs m >= 1, q >= 1");
    RatInterval logq = q == 1 ? RatInterval(Rat(0)) : iv_log(RatInterval(Rat(q)), bits);
    return (RatInterval(kXiConst) - logq + RatInterval(kXiSlope * m - kLogShift / q)).round_out(bits);
}

RatInterval rho_bound(int m, const Int& q, unsigned bits) {
    if (m < 1 || q < 1) fail(Errc::UsageError, "rho needs m >= 1, q >= 1");
    RatInterval logq = q == 1 ? RatInterval(Rat(0)) : iv_log(RatInterval(Rat(q)), bits);
    return (RatInterval(kRhoConst) - logq + RatInterval(kRhoSlope * m - kLogShift / q)).round_out(bits);
}

RatInterval alpha_bound(int m, const Int& d, int t, unsigned bits) {
    if (m < 2 || m > 5) fail(Errc::DegreeOutOfRange, "alpha covers 2 <= m <= 5");
    if (d < 1 || t < 1 || t > m) fail(Errc::UsageError, "alpha needs d >= 1, 1 <= t <= m");
    Int fact = 1;
    for (int i = 2; i <= 2 * m; ++i) fact *= i;
    Rat scale = kBernoulli[m - 1] / (Rat(pow2((unsigned long)t)) * fact);
    return (iv_pow_3_2(d, bits) * RatInterval(scale)).round_out(bits);
}

Int disc_cutoff(int m, const Rat& budget) {
    if (budget <= 0) fail(Errc::UsageError, "budget must be positive");
    auto exceeds = [&](const Int& d) {
        for (unsigned bits = 96; bits <= 512; bits *= 2) {
            RatInterval a = alpha_bound(m, d, m, bits);
            if (a.certainly_greater(budget)) return true;
            if (!a.certainly_greater(budget) && a.hi <= budget) return false;
        }
        fail(Errc::PrecisionExceeded, "alpha comparison undecidable");
    };
    Int lo = 1, hi = 2;
    while (!exceeds(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (exceeds(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

EpBounds ep_bound_functions(int n, int m, const Int& q, unsigned bits) {
    if (n > m) fail(Errc::UsageError, "ep bounds need n <= m");
    if (n < 1) fail(Errc::UsageError, "n must be >= 1");
    EpBounds out;
    RatInterval two_n{Rat(pow2((unsigned long)n))};
    RatInterval nlog2 = RatInterval(Rat(n)) * log2_enclosure(bits);
    out.Psi = (two_n * psi_bound(m, q, bits)).round_out(bits);
    out.X_log = (nlog2 + xi_bound(m, q, bits)).round_out(bits);
    out.R_log = (nlog2 + rho_bound(m, q, bits)).round_out(bits);
    return out;
}

const std::vector<BoundConstant>& bound_constants() {
    static const std::vector<BoundConstant> table = {
        {"psi.scale", "0.477132753", "published regulator-growth bound; consumed as data"},
        {"psi.slope", "0.658829093", "published regulator-growth bound; consumed as data"},
        {"psi.shift", "19.0745", "published regulator-growth bound; consumed as data"},
        {"xi.const", "1.38629436", "published log-volume bound; consumed as data"},
        {"xi.slope", "0.58548009", "published log-volume bound; consumed as data"},
        {"xi.shift", "11.3098", "published log-volume bound; consumed as data"},
        {"rho.const", "0.693147", "published log-volume bound; consumed as data"},
        {"rho.slope", "1.278628", "published log-volume bound; consumed as data"},
        {"integral.sinh.y0.1", "0.061530978",
         "published upper bound; certified recomputation exceeds it (see discrepancy report)"},
        {"integral.cosh.y0.1", "0.047218236", "published upper bound; certified recomputation confirms"},
        {"integral.sinh.y1", "0.71554278",
         "published upper bound; certified recomputation exceeds it (see discrepancy report)"},
        {"integral.cosh.y1", "0.492435643",
         "published upper bound; certified recomputation exceeds it (see discrepancy report)"},
    };
    return table;
}

} // namespace covol
