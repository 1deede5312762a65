#include "covol/survey.hpp"

#include "covol/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace covol {

namespace {

using json = nlohmann::ordered_json;

// published discriminant windows for the 1/60 survey flow, consumed as data;
// each must dominate the certified sharp cutoff to be adoptable
const std::map<int, long> kPublishedWindows = {{3, 300}, {4, 4800}, {5, 89000}};

bool exceeds_budget(const RatInterval& value, const Rat& budget) {
    if (value.certainly_greater(budget)) return true;
    if (value.hi <= budget) return false;
    fail(Errc::PrecisionExceeded, "bound comparison undecidable; raise working precision");
}

bool exp_exceeds_budget(const RatInterval& logval, const Rat& budget, unsigned bits = 160) {
    return exceeds_budget(iv_exp(logval, bits), budget);
}

} // namespace

std::string measure_name(Measure m) { return m == Measure::Chi ? "chi" : "euler-poincare"; }

StagePlan prune_cascade(const Rat& budget, Measure measure) {
    if (budget <= 0) fail(Errc::UsageError, "budget must be positive");
    StagePlan plan;
    plan.budget = budget;
    plan.measure = measure;

    // effective chi-level budget behind the alpha windows: for the EP measure
    // mu(Gamma) >= 2^n mu(k,B) >= 4 g(k,B)
    Rat chi_budget = measure == Measure::Chi ? budget : budget / 4;

    auto psi_exceeds = [&](int m, const Int& q) {
        RatInterval v = psi_bound(m, q);
        if (measure == Measure::EulerPoincare) {
            // weakest case n = 2: mu > 4 psi... the diagonal n = m governs the cap
            v = v * RatInterval(Rat(4));
        }
        return exceeds_budget(v, budget);
    };
    if (measure == Measure::Chi) {
        int m = 2;
        while (m < 64 && !psi_exceeds(m + 1, 1)) ++m;
        plan.psi_degree_cap = m;
        for (int mm = 2; mm <= plan.psi_degree_cap; ++mm) {
            int qcap = 1;
            while (qcap < 64 && !psi_exceeds(mm, 2 * qcap)) qcap *= 2;
            plan.psi_q_caps[mm] = qcap;
        }
        int xm = 2;
        while (xm < plan.psi_degree_cap &&
               !exp_exceeds_budget(xi_bound(xm + 1, 1), budget))
            ++xm;
        plan.xi_degree_cap = xm;
        if (exp_exceeds_budget(xi_bound(2, 2), budget))
            plan.notes.push_back("xi stage: quadratic extension degree excluded (k'_B = k)");
        int rm = 2;
        while (rm < plan.xi_degree_cap && !exp_exceeds_budget(rho_bound(rm + 1, 1), budget)) ++rm;
        plan.rho_degree_cap = rm;
        bool kb_one = true;
        for (int mm = 2; mm <= plan.rho_degree_cap; ++mm)
            if (!exp_exceeds_budget(rho_bound(mm, 2), budget)) kb_one = false;
        if (kb_one) plan.notes.push_back("rho stage: [k_B:k] = 1 for every surviving degree");
    } else {
        // Euler-Poincare: bounds scale by 2^n; a degree m dies only when every
        // n in [2, m] is excluded, the diagonal n = m drives the headline cap
        auto diag_psi_exceeds = [&](int m) {
            return exceeds_budget(ep_bound_functions(m, m, 1).Psi, budget);
        };
        int m = 2;
        while (m < 64 && !diag_psi_exceeds(m + 1)) ++m;
        plan.psi_degree_cap = m;
        auto x_exceeds = [&](int n, int mm) {
            return exp_exceeds_budget(ep_bound_functions(n, mm, 1).X_log, budget);
        };
        int xm = 2;
        while (xm < plan.psi_degree_cap && !x_exceeds(2, xm + 1)) ++xm;
        plan.xi_degree_cap = xm;
        auto r_exceeds = [&](int n, int mm) {
            return exp_exceeds_budget(ep_bound_functions(n, mm, 1).R_log, budget);
        };
        int rm = 2;
        while (rm < plan.xi_degree_cap && !r_exceeds(2, rm + 1)) ++rm;
        plan.rho_degree_cap = rm;
        for (int n = 2; n <= plan.rho_degree_cap; ++n) {
            int cap = 0;
            for (int mm = n; mm <= plan.rho_degree_cap; ++mm)
                if (!r_exceeds(n, mm)) cap = mm;
            if (cap >= n) plan.ep_n_caps[n] = cap;
        }
        plan.notes.push_back(
            "published cap chain for this measure (12 then 4) is not derivable from the "
            "printed bound functions; certified per-(n,m) grid used instead");
    }

    for (int m = 2; m <= std::min(plan.rho_degree_cap, 5); ++m) {
        DegreeWindow w;
        w.m = m;
        w.sharp_cutoff = disc_cutoff(m, chi_budget);
        w.adopted = w.sharp_cutoff;
        auto it = kPublishedWindows.find(m);
        if (chi_budget == Rat(1, 60) && it != kPublishedWindows.end()) {
            if (Int(it->second) < w.sharp_cutoff)
                fail(Errc::PrecisionExceeded, "published window below the sharp cutoff");
            w.adopted = it->second;
            w.note = "published window adopted (dominates sharp cutoff " +
                     w.sharp_cutoff.get_str() + ")";
        } else {
            w.note = "sharp alpha cutoff";
        }
        plan.windows.push_back(w);
    }
    return plan;
}

namespace {

struct PoolPlace {
    FinitePlaceRef ref;
    Rat factor; // (Nv-1)/2 for Nv != 2, bookkeeping 1 for Nv = 2
    bool is_norm2;
};

struct PlacePool {
    std::vector<PoolPlace> places;
    uint64_t prime_bound = 0;
    std::string note;
};

PlacePool build_pool(const NumberField& field, const Rat& factor_cap) {
    PlacePool pool;
    Rat cap = std::max(factor_cap, Rat(1));
    // places with norm > norm_cap contribute (Nv-1)/2 > cap on their own
    Rat norm_cap_rat = 2 * cap + 1;
    Int norm_cap = rat_ceil(norm_cap_rat);
    uint64_t pmax = std::max<uint64_t>(3, norm_cap.get_ui());
    auto is_prime = [](uint64_t p) {
        if (p < 2) return false;
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    for (uint64_t p = 2; p <= pmax; ++p) {
        if (!is_prime(p)) continue;
        SplittingType st = field.split_prime(p);
        for (int i = 0; i < (int)st.factors.size(); ++i) {
            Int nv = st.norm(i);
            bool norm2 = nv == 2;
            if (!norm2 && Rat(nv) > norm_cap_rat && nv != 3) continue;
            FinitePlaceRef ref{p, i, nv, st.factors[i].e, st.factors[i].f};
            pool.places.push_back({ref, norm2 ? Rat(1) : Rat(nv - 1, 2), norm2});
        }
    }
    // cheapest parity-fixing place of norm >= 3, searched with a provable stop:
    // any place above p has (Nv-1)/2 >= (p-1)/2
    {
        bool have = false;
        PoolPlace best;
        for (uint64_t p = 2; !have || Rat(p - 1, 2) < best.factor; ++p) {
            if (p > 1000) break;
            if (!is_prime(p)) continue;
            SplittingType st = field.split_prime(p);
            for (int i = 0; i < (int)st.factors.size(); ++i) {
                Int nv = st.norm(i);
                if (nv == 2) continue;
                Rat factor(nv - 1, 2);
                if (!have || factor < best.factor) {
                    best = {{p, i, nv, st.factors[i].e, st.factors[i].f}, factor, false};
                    have = true;
                }
            }
        }
        if (have) {
            bool already = std::any_of(pool.places.begin(), pool.places.end(), [&](const PoolPlace& pl) {
                return pl.ref == best.ref;
            });
            if (!already) pool.places.push_back(best);
            pool.prime_bound = std::max<uint64_t>(pmax, best.ref.p);
        } else {
            pool.prime_bound = pmax;
        }
    }
    pool.note = "every place outside the pool has (Nv-1)/2 > " + rat_str(cap) +
                " (norms exceed " + rat_str(norm_cap_rat) + ", primes searched to " +
                std::to_string(pool.prime_bound) + ")";
    return pool;
}

Rat config_chi(const Rat& g, int t, const std::vector<const PoolPlace*>& chosen) {
    int t_prime = 0;
    Rat prod = 1;
    for (auto* pl : chosen) {
        if (pl->is_norm2) ++t_prime;
        else prod *= pl->factor;
    }
    return g * pow2((unsigned long)(t - t_prime)) * prod;
}

} // namespace

RamificationAnalysis enumerate_ramification(FieldRecord& rec, const Rat& budget, Measure measure,
                                            const ZetaOptions& zopts) {
    const NumberField& field = rec.field;
    int m = field.degree();
    const ZetaResult& z = ensure_zeta(rec, zopts);
    Rat g = g_value(field, rec.ci, z.zeta_m1);
    int t = rec.ci.t;

    RamificationAnalysis out;
    Rat scale_min = measure == Measure::Chi ? Rat(1) : Rat(4); // min 2^n over n >= 2
    Rat cap = budget / (g * scale_min);
    PlacePool pool = build_pool(field, cap);
    out.place_search_bound = pool.prime_bound;
    out.pool_note = pool.note;
    if (pool.places.size() > 20)
        fail(Errc::SplittingUnavailable, "place pool too large for complete enumeration");

    size_t npool = pool.places.size();
    bool kb_trivial = rec.ci.kB_deg == 1;
    for (int n = 2; n <= m; ++n) {
        int inf_ram = m - n;
        RamConfig best;
        bool have_best = false;
        for (uint64_t mask = 0; mask < (1ull << npool); ++mask) {
            if ((inf_ram + __builtin_popcountll(mask)) % 2 != 0) continue;
            std::vector<const PoolPlace*> chosen;
            for (size_t i = 0; i < npool; ++i)
                if (mask & (1ull << i)) chosen.push_back(&pool.places[i]);
            Rat chi = config_chi(g, t, chosen);
            RamConfig cfg;
            cfg.n = n;
            cfg.inf_ramified = inf_ram;
            for (auto* pl : chosen) cfg.fin.push_back(pl->ref);
            cfg.uniform = (inf_ram + (int)chosen.size()) > 0;
            cfg.chi = chi;
            cfg.mu_ep = ep_measure(chi, n);
            cfg.kb_exact = kb_trivial || chosen.empty();
            Rat value = measure == Measure::Chi ? cfg.chi : cfg.mu_ep;
            if (value <= budget) out.within_budget.push_back(cfg);
            if (!have_best || cfg.chi < best.chi) {
                best = cfg;
                have_best = true;
            }
        }
        if (have_best) out.minima_per_n.push_back(best);
    }
    std::sort(out.within_budget.begin(), out.within_budget.end(), [](const RamConfig& a, const RamConfig& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.fin.size() != b.fin.size()) return a.fin.size() < b.fin.size();
        return a.chi < b.chi;
    });
    return out;
}

namespace {

std::string hit_label(const LatticeHit& hit) {
    std::ostringstream os;
    os << "d=" << hit.disc.get_str() << " G" << hit.n << " "
       << (hit.uniform ? "uniform" : "non-uniform") << " inf_ram=" << hit.inf_ramified << " fin=[";
    for (size_t i = 0; i < hit.fin.size(); ++i) {
        if (i) os << ",";
        os << hit.fin[i].p << ":" << hit.fin[i].idx << "(Nv=" << hit.fin[i].norm.get_str() << ")";
    }
    os << "]";
    return os.str();
}

} // namespace

SurveyReport classify(std::vector<FieldRecord>& records, const DatasetMeta& meta, const Rat& budget,
                      Measure measure, const ZetaOptions& zopts, int jobs, bool recheck_excluded) {
    SurveyReport report;
    report.budget = budget;
    report.measure = measure;
    report.plan = prune_cascade(budget, measure);
    report.dataset_source = meta.source;

    std::map<int, Int> window;
    for (const auto& w : report.plan.windows) window[w.m] = w.adopted;

    // dataset must claim completeness through every window it serves
    for (const auto& [m, bound] : window) {
        auto it = meta.complete_below.find(m);
        bool any_field = std::any_of(records.begin(), records.end(),
                                     [&](const FieldRecord& r) { return r.field.degree() == m; });
        if (!any_field && it == meta.complete_below.end()) continue;
        if (it == meta.complete_below.end() || it->second < bound)
            fail(Errc::DatasetIncomplete,
                 "degree " + std::to_string(m) + " window " + bound.get_str() +
                     " exceeds the dataset's claimed-complete range");
    }

    // mark in-window records and compute zeta for them (parallel map, ordered reduce)
    std::vector<int> in_window;
    for (size_t i = 0; i < records.size(); ++i) {
        FieldRecord& rec = records[i];
        int m = rec.field.degree();
        if (m < 2) continue;
        auto wit = window.find(m);
        if (wit == window.end()) {
            report.excluded.push_back({m, rec.field.disc(), "degree-cap",
                                       "degree beyond the cascade caps"});
            continue;
        }
        if (rec.field.disc() >= wit->second) {
            std::string detail = "disc >= window " + wit->second.get_str();
            if (recheck_excluded) {
                const ZetaResult& z = ensure_zeta(rec, zopts);
                Rat g = g_value(rec.field, rec.ci, z.zeta_m1);
                Rat floor_value = measure == Measure::Chi ? g : 4 * g;
                if (floor_value <= budget)
                    fail(Errc::PrecisionExceeded,
                         "window excluded a field whose direct g-evaluation survives");
                detail += "; force-evaluated g = " + rat_str(g) + " confirms exclusion";
            }
            report.excluded.push_back({m, rec.field.disc(), "alpha-window", detail});
            continue;
        }
        in_window.push_back((int)i);
    }

    if (jobs > 1) {
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                while (true) {
                    size_t k = next.fetch_add(1);
                    if (k >= in_window.size()) break;
                    ensure_zeta(records[in_window[k]], zopts);
                }
            });
        for (auto& th : workers) th.join();
    }

    for (int idx : in_window) {
        FieldRecord& rec = records[idx];
        const ZetaResult& z = ensure_zeta(rec, zopts);
        Rat g = g_value(rec.field, rec.ci, z.zeta_m1);
        Rat floor_value = measure == Measure::Chi ? g : 4 * g;
        if (floor_value > budget) {
            report.excluded.push_back({rec.field.degree(), rec.field.disc(), "g-stage",
                                       "g = " + rat_str(g) + " > admissible floor"});
            continue;
        }
        RamificationAnalysis ram = enumerate_ramification(rec, budget, measure, zopts);
        if (ram.within_budget.empty()) {
            report.excluded.push_back({rec.field.degree(), rec.field.disc(), "enumeration",
                                       "no admissible ramification datum at or below budget; " +
                                           ram.pool_note});
            continue;
        }
        for (const auto& cfg : ram.within_budget) {
            LatticeHit hit;
            hit.degree = rec.field.degree();
            hit.disc = rec.field.disc();
            hit.n = cfg.n;
            hit.uniform = cfg.uniform;
            hit.inf_ramified = cfg.inf_ramified;
            hit.fin = cfg.fin;
            hit.chi = cfg.chi;
            hit.mu_ep = cfg.mu_ep;
            hit.label = hit_label(hit);
            if (!cfg.kb_exact)
                report.notes.push_back("survivor " + hit.label +
                                       " uses a [k_B:k] upper bound; value is a lower bound");
            // independent recomputation through the covolume module
            QuaternionData qd = QuaternionData::make(rec.field, cfg.inf_ramified, cfg.fin);
            CovolumeReport cov = covolume_report(rec.field, rec.ci, qd, z.zeta_m1);
            if (cov.chi_max != cfg.chi)
                fail(Errc::PrecisionExceeded, "survivor validation mismatch for " + hit.label);
            report.survivors.push_back(std::move(hit));
        }
    }

    std::sort(report.survivors.begin(), report.survivors.end(), [](const LatticeHit& a, const LatticeHit& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.disc != b.disc) return a.disc < b.disc;
        if (a.n != b.n) return a.n < b.n;
        return a.label < b.label;
    });

    auto select_minima = [&](auto&& pred) {
        std::vector<LatticeHit> out;
        bool have = false;
        Rat best;
        for (const auto& hit : report.survivors) {
            if (!pred(hit)) continue;
            Rat v = measure == Measure::Chi ? hit.chi : hit.mu_ep;
            if (!have || v < best) {
                best = v;
                have = true;
            }
        }
        if (!have) return out;
        for (const auto& hit : report.survivors) {
            if (!pred(hit)) continue;
            Rat v = measure == Measure::Chi ? hit.chi : hit.mu_ep;
            if (v == best) out.push_back(hit);
        }
        return out;
    };
    report.minima = select_minima([](const LatticeHit&) { return true; });
    report.minima_uniform = select_minima([](const LatticeHit& h) { return h.uniform; });
    report.minima_nonuniform = select_minima([](const LatticeHit& h) { return !h.uniform; });
    return report;
}

} // namespace covol
