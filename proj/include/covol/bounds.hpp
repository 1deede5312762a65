#ifndef COVOL_BOUNDS_HPP
#define COVOL_BOUNDS_HPP

#include "covol/functions.hpp"

#include <string>
#include <vector>

namespace covol {

// a(x) = (3 x^-3 (sin x - x cos x))^2, removable singularity at 0 filled by 1
RatInterval a_func(const RatInterval& x, unsigned bits = 128);

struct CfIntegrals {
    RatInterval sinh_bound; // coeff_sinh * int_0^inf (1 - a(x sqrt(y)))/sinh(x) dx
    RatInterval cosh_bound; // coeff_cosh * int_0^inf (1 - a(x sqrt(y)))/cosh^2(x/2) dx
    int panels_used = 0;
};

// certified enclosures via Gauss-Legendre panels with Taylor remainder terms,
// a series model on the leading panel and an exponential tail bound
CfIntegrals cf_integrals(const Rat& y, const Rat& coeff_sinh, const Rat& coeff_cosh,
                         const Rat& target_width = Rat(1, Int("100000000000")),
                         int max_panels = 200000);

// regulator-growth bound: psi(m, q) = 0.477132753 exp(0.658829093 m - 19.0745/q)
RatInterval psi_bound(int m, const Int& q, unsigned bits = 128);
// log-domain bounds on mu(k,B)
RatInterval xi_bound(int m, const Int& q, unsigned bits = 128);  // 1.38629436 - log q + 0.58548009 m - 11.3098/q
RatInterval rho_bound(int m, const Int& q, unsigned bits = 128); // 0.693147 - log q + 1.278628 m - 11.3098/q

// alpha(m, d, t) = d^{3/2} zeta_Q(2m) / (2^(2m+t-1) pi^(2m)); the pi powers
// cancel against zeta(2m) = (2 pi)^(2m) |B_2m| / (2 (2m)!)
RatInterval alpha_bound(int m, const Int& d, int t, unsigned bits = 128);

// least d with alpha(m, d, m) > budget
Int disc_cutoff(int m, const Rat& budget);

struct EpBounds {
    RatInterval Psi;   // 2^n psi(m, q)
    RatInterval X_log; // n log 2 + xi(m, q)
    RatInterval R_log; // n log 2 + rho(m, q)
};
EpBounds ep_bound_functions(int n, int m, const Int& q, unsigned bits = 128);

struct BoundConstant {
    std::string name;
    std::string value;
    std::string provenance;
};
const std::vector<BoundConstant>& bound_constants();

} // namespace covol

#endif
