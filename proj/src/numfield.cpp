#include "covol/numfield.hpp"

#include "covol/errors.hpp"
#include "covol/sturm.hpp"

#include <algorithm>
#include <cmath>

namespace covol {

namespace {

std::vector<Int> divisors_of(const Int& n0) {
    Int n = abs(n0);
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// coefficient bound for degree-2 monic factors (Mignotte-style)
Int quadratic_factor_bound(const IntPoly& f) {
    Int sq = 0;
    for (const auto& c : f) sq += c * c;
    Int norm = sqrt(sq) + 1;
    return 2 * (norm + 1);
}

bool divides_exactly(const IntPoly& f, const IntPoly& g) {
    // g monic; test g | f over Z
    IntPoly r = f;
    int dg = degree(g);
    for (int d = degree(r); d >= dg; d = degree(r)) {
        Int c = r[d];
        if (c == 0) { r.pop_back(); continue; }
        for (int i = 0; i <= dg; ++i) r[d - dg + i] -= c * g[i];
        r = poly_trim(std::move(r));
        if (degree(r) < dg) break;
    }
    return degree(r) < 0;
}

void certify_irreducible(const IntPoly& f) {
    int m = degree(f);
    if (m == 1) return;
    if (f[0] == 0) fail(Errc::NotIrreducible, "x divides the polynomial");
    // rational roots (monic: integer roots divide the constant term)
    for (const Int& d : divisors_of(f[0]))
        for (int s : {1, -1})
            if (poly_eval(f, Int(s * d)) == 0)
                fail(Errc::NotIrreducible, "rational root " + Int(s * d).get_str());
    if (m <= 3) return;
    if (m > 5) fail(Errc::UnsupportedDegree, "irreducibility certification covers degree <= 5");
    // any factorization of degree 4 or 5 has a factor of degree <= 2
    Int abound = quadratic_factor_bound(f);
    for (const Int& b0 : divisors_of(f[0]))
        for (int s : {1, -1}) {
            Int b = s * b0;
            for (Int a = -abound; a <= abound; ++a)
                if (divides_exactly(f, IntPoly{b, a, 1}))
                    fail(Errc::NotIrreducible,
                         "quadratic factor " + poly_format(IntPoly{b, a, 1}));
        }
}

std::vector<std::pair<Int, int>> factor_small(Int n) {
    std::vector<std::pair<Int, int>> out;
    n = abs(n);
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace

Polynomial Polynomial::checked(IntPoly coeffs) {
    coeffs = poly_trim(std::move(coeffs));
    int m = degree(coeffs);
    if (m < 1) fail(Errc::UsageError, "degree must be >= 1");
    if (coeffs[m] != 1) fail(Errc::NotMonic, "leading coefficient must be 1");
    certify_irreducible(coeffs);
    return Polynomial{std::move(coeffs)};
}

bool dedekind_divides_index(const IntPoly& f, uint64_t p) {
    FpCtx c{p};
    FpPoly fp = fp_reduce(f, p);
    auto factors = fp_factor(fp, c);
    FpPoly gbar{1};
    for (auto& [g, e] : factors) gbar = fp_mul(gbar, g, c);
    FpPoly hbar = fp_divexact(fp, gbar, c);
    // lift with coefficients in [0, p)
    auto lift = [&](const FpPoly& q) {
        IntPoly r(q.size());
        for (size_t i = 0; i < q.size(); ++i) r[i] = Int((unsigned long)q[i]);
        return r;
    };
    IntPoly G = lift(gbar), H = lift(hbar);
    IntPoly GH = poly_mul(G, H);
    IntPoly diff = poly_sub(GH, f);
    IntPoly F;
    for (auto& coeff : diff) {
        if (coeff % (long)p != 0) fail(Errc::PrecisionExceeded, "Dedekind lift arithmetic");
        F.push_back(coeff / (long)p);
    }
    FpPoly Fbar = fp_reduce(poly_trim(std::move(F)), p);
    FpPoly g1 = fp_gcd(fp_gcd(gbar, hbar, c), Fbar, c);
    return fp_degree(g1) > 0;
}

bool is_totally_real(const IntPoly& f) {
    if (!poly_is_squarefree(f)) fail(Errc::NotSquarefree, "is_totally_real requires squarefree input");
    return count_real_roots(f) == degree(f);
}

NumberField NumberField::build(IntPoly coeffs, std::optional<Int> known_disc, SplitOverrides overrides) {
    NumberField nf;
    nf.poly_ = Polynomial::checked(std::move(coeffs));
    nf.degree_ = nf.poly_.deg();
    const IntPoly& f = nf.poly_.coeffs;
    if (count_real_roots(f) != nf.degree_)
        fail(Errc::NotTotallyReal, poly_format(f) + " has complex roots");
    nf.poly_disc_ = poly_discriminant(f);
    if (nf.poly_disc_ <= 0) fail(Errc::PrecisionExceeded, "totally real discriminant must be positive");
    nf.overrides_ = std::move(overrides);

    // strip index-square factors certified by the Dedekind criterion
    Int index = 1;
    if (known_disc) {
        if (*known_disc <= 0 || nf.poly_disc_ % *known_disc != 0)
            fail(Errc::DatasetContradiction, "dataset disc does not divide polynomial disc");
        Int q = nf.poly_disc_ / *known_disc;
        Int s;
        if (!is_perfect_square(q, &s))
            fail(Errc::DatasetContradiction, "polynomial/field disc quotient is not a square");
        for (auto& [p, e] : factor_small(nf.poly_disc_)) {
            if (e < 2) continue;
            bool divides = dedekind_divides_index(f, p.get_ui());
            bool expected = (s % p == 0);
            if (divides != expected)
                fail(Errc::DatasetContradiction,
                     "Dedekind criterion disagrees with dataset disc at prime " + p.get_str());
        }
        index = s;
        nf.field_disc_ = *known_disc;
    } else {
        Int d = nf.poly_disc_;
        for (auto& [p, e] : factor_small(d)) {
            if (e >= 2 && dedekind_divides_index(f, p.get_ui()))
                fail(Errc::IndexUnresolved,
                     "prime " + p.get_str() + " divides the index; supply dataset disc/overrides");
        }
        nf.field_disc_ = d;
    }
    nf.index_ = index;
    nf.roots_ = isolate_real_roots(f);
    for (auto& r : nf.roots_) r = refine_root(f, r, Rat(1, pow2(32)));
    return nf;
}

SplittingType NumberField::split_prime(uint64_t p) const {
    if (index_ % (long)p == 0) {
        auto it = overrides_.find(p);
        if (it == overrides_.end())
            fail(Errc::IndexObstruction,
                 "prime " + std::to_string(p) + " divides the index and no override is present");
        SplittingType st{p, it->second};
        int total = 0;
        for (auto& fa : st.factors) total += fa.e * fa.f;
        if (total != degree_) fail(Errc::DatasetContradiction, "override ef-sum mismatch");
        return st;
    }
    SplittingType st{p, {}};
    for (auto& [e, d] : fp_splitting_pattern(poly_.coeffs, p)) st.factors.push_back({e, d});
    if (st.ramified() && field_disc_ % (long)p != 0)
        fail(Errc::PrecisionExceeded, "ramified prime does not divide the discriminant");
    return st;
}

int NumberField::places_over_2() const { return (int)split_prime(2).factors.size(); }

std::vector<RatInterval> NumberField::root_boxes(const Rat& width) const {
    std::vector<RatInterval> out;
    out.reserve(roots_.size());
    for (const auto& r : roots_) out.push_back(refine_root(poly_.coeffs, r, width));
    return out;
}

std::vector<RatInterval> NumberField::embed(const IntPoly& element, const Rat& precision) const {
    if (precision <= 0) fail(Errc::UsageError, "precision must be positive");
    IntPoly e = poly_mod_monic(element, poly_.coeffs);
    Rat w = precision;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<RatInterval> vals;
        bool ok = true;
        for (const auto& box : root_boxes(w)) {
            RatInterval v = poly_eval(e, box);
            if (v.width() > precision) { ok = false; break; }
            vals.push_back(v);
        }
        if (ok) return vals;
        w /= 16;
    }
    fail(Errc::PrecisionExceeded, "embedding refinement cap reached");
}

std::vector<int> NumberField::embed_signs(const IntPoly& element) const {
    IntPoly e = poly_mod_monic(element, poly_.coeffs);
    if (covol::degree(e) < 0) fail(Errc::ZeroElement, "sign of the zero element");
    Rat prec(1, 16);
    for (int attempt = 0; attempt < 40; ++attempt) {
        auto vals = embed(e, prec);
        std::vector<int> signs;
        bool decided = true;
        for (auto& v : vals) {
            if (v.certainly_positive()) signs.push_back(1);
            else if (v.certainly_negative()) signs.push_back(-1);
            else { decided = false; break; }
        }
        if (decided) return signs;
        prec /= pow2(8);
    }
    fail(Errc::PrecisionExceeded, "sign refinement cap reached");
}

} // namespace covol
