#include "covol/covolume.hpp"

#include "covol/errors.hpp"

#include <algorithm>

namespace covol {

QuaternionData QuaternionData::make(const NumberField& field, int inf_ramified,
                                    std::vector<FinitePlaceRef> fin, bool allow_n1) {
    QuaternionData qd;
    qd.field = &field;
    int m = field.degree();
    if (inf_ramified < 0 || inf_ramified > m)
        fail(Errc::UsageError, "ramified infinite places out of range");
    std::sort(fin.begin(), fin.end(), [](const FinitePlaceRef& a, const FinitePlaceRef& b) {
        return a.p != b.p ? a.p < b.p : a.idx < b.idx;
    });
    for (size_t i = 0; i + 1 < fin.size(); ++i)
        if (fin[i] == fin[i + 1]) fail(Errc::UsageError, "duplicate finite place");
    if ((inf_ramified + (int)fin.size()) % 2 != 0)
        fail(Errc::ParityViolation, "ramification set must have even size");
    qd.inf_ramified = inf_ramified;
    qd.n = m - inf_ramified;
    if (qd.n < 1 || (qd.n < 2 && !allow_n1))
        fail(Errc::UsageError, "lattice dimension n must be >= 2");
    for (auto& place : fin) {
        SplittingType st = field.split_prime(place.p);
        if (place.idx < 0 || place.idx >= (int)st.factors.size())
            fail(Errc::UsageError, "finite place index out of range");
        place.e = st.factors[place.idx].e;
        place.f = st.factors[place.idx].f;
        place.norm = st.norm(place.idx);
        if (place.norm == 2) ++qd.t_prime;
    }
    qd.fin_ramified = std::move(fin);
    qd.uniform = (qd.inf_ramified + (int)qd.fin_ramified.size()) > 0;
    return qd;
}

Rat g_value(const NumberField& field, const ClassInvariants& ci, const Rat& zeta_m1) {
    if (ci.kB_deg < 1) fail(Errc::MissingInvariant, "[k_B:k] unavailable");
    int m = field.degree();
    Rat num = (m % 2 == 0) ? zeta_m1 : Rat(-zeta_m1);
    Rat g = num / (Rat(pow2((unsigned long)(m + ci.t - 1))) * ci.kB_deg);
    if (g <= 0) fail(Errc::MissingInvariant, "g(k,B) must be positive");
    return g;
}

Rat mu_value(const Rat& g, int t, int t_prime) {
    if (t_prime < 0 || t_prime > t) fail(Errc::TPrimeExceedsT, "t' must lie in [0, t]");
    return g * pow2((unsigned long)(t - t_prime));
}

Rat chi_maximal(const Rat& mu, const QuaternionData& qd) {
    Rat chi = mu;
    for (const auto& place : qd.fin_ramified) {
        if (place.norm == 2) continue; // enters through t'
        chi *= Rat(place.norm - 1, 2);
    }
    return chi;
}

Rat vigneras_chi(const NumberField& field, const QuaternionData& qd, const Rat& zeta_m1,
                 const Rat& gen_index) {
    if (gen_index <= 0) fail(Errc::UsageError, "generalized index must be positive");
    int m = field.degree();
    int n = qd.n;
    Rat chi = zeta_m1;
    if ((m + n) % 2 == 1) chi = -chi;
    int shift = n - m - 1;
    chi *= shift >= 0 ? Rat(pow2((unsigned long)shift)) : Rat(1, pow2((unsigned long)(-shift)));
    for (const auto& place : qd.fin_ramified) chi *= Rat(place.norm - 1);
    return gen_index * chi;
}

Rat ep_measure(const Rat& chi, int n) {
    if (n < 1) fail(Errc::UsageError, "n must be >= 1");
    return chi * pow2((unsigned long)n);
}

Int aut_bound(const Rat& chi) {
    if (chi <= 0) fail(Errc::UsageError, "chi must be positive");
    return rat_floor(60 * chi);
}

CovolumeReport covolume_report(const NumberField& field, const ClassInvariants& ci,
                               const QuaternionData& qd, const Rat& zeta_m1) {
    CovolumeReport rep;
    rep.g = g_value(field, ci, zeta_m1);
    rep.mu = mu_value(rep.g, ci.t, qd.t_prime);
    rep.chi_max = chi_maximal(rep.mu, qd);
    rep.chi_norm1 = vigneras_chi(field, qd, zeta_m1, 1);
    rep.ep_min = ep_measure(rep.chi_max, qd.n);
    if (ci.kprime_upper_bound_only) rep.flags.push_back("kB-upper-bound-used");
    if (rep.chi_norm1 != rep.chi_max) {
        Rat ratio = rep.chi_norm1 / rep.chi_max;
        rep.flags.push_back("vigneras-discrepancy ratio " + rat_str(ratio));
    }
    return rep;
}

} // namespace covol
