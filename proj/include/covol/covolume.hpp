#ifndef COVOL_COVOLUME_HPP
#define COVOL_COVOLUME_HPP

#include "covol/arith.hpp"
#include "covol/numfield.hpp"

#include <string>
#include <vector>

namespace covol {

// Ramification datum of a quaternion algebra over the field: a count of
// ramified infinite places plus a set of finite places given as
// (prime, index into split_prime(p).factors).
struct FinitePlaceRef {
    uint64_t p;
    int idx;
    Int norm;  // p^f, filled on validation
    int e = 1, f = 1;
    bool operator==(const FinitePlaceRef& o) const { return p == o.p && idx == o.idx; }
};

struct QuaternionData {
    const NumberField* field = nullptr;
    int inf_ramified = 0;
    std::vector<FinitePlaceRef> fin_ramified;
    int n = 0;        // split infinite places = m - inf_ramified
    int t_prime = 0;  // finite ramified places of norm 2
    bool uniform = false;

    static QuaternionData make(const NumberField& field, int inf_ramified,
                               std::vector<FinitePlaceRef> fin, bool allow_n1 = false);
};

struct CovolumeReport {
    Rat g;
    Rat mu;
    Rat chi_max;
    Rat chi_norm1; // the norm-1 group value, printed formula, for cross-checking
    Rat ep_min;    // 2^n chi_max
    std::vector<std::string> flags;
};

// g(k,B) = (-1)^m zeta_k(-1) / (2^(m+t-1) [k_B:k])
Rat g_value(const NumberField& field, const ClassInvariants& ci, const Rat& zeta_m1);

// mu(k,B) = 2^(t-t') g(k,B)
Rat mu_value(const Rat& g, int t, int t_prime);

// chi of the maximal lattice: mu * prod over finite ramified places of
// norm != 2 of (Nv-1)/2
Rat chi_maximal(const Rat& mu, const QuaternionData& qd);

// printed norm-1 covolume formula (cross-check only):
// chi = gen_index * (-1)^(m+n) 2^(n-m-1) zeta_k(-1) prod (Nv - 1)
Rat vigneras_chi(const NumberField& field, const QuaternionData& qd, const Rat& zeta_m1,
                 const Rat& gen_index);

// Euler-Poincare measure from chi: mu_EP = 2^n chi
Rat ep_measure(const Rat& chi, int n);

// automorphism-order bound floor(60 chi)
Int aut_bound(const Rat& chi);

CovolumeReport covolume_report(const NumberField& field, const ClassInvariants& ci,
                               const QuaternionData& qd, const Rat& zeta_m1);

} // namespace covol

#endif
