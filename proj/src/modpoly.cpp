#include "covol/modpoly.hpp"

#include "covol/errors.hpp"

#include <algorithm>

namespace covol {

uint64_t FpCtx::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FpPoly fp_reduce(const IntPoly& f, uint64_t p) {
    FpPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Int c = f[i] % (long)p;
        if (c < 0) c += (long)p;
        r[i] = c.get_ui();
    }
    return fp_trim(std::move(r));
}

int fp_degree(const FpPoly& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

FpPoly fp_trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const FpCtx& c) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            r[i + j] = c.add(r[i + j], c.mul(a[i], b[j]));
        }
    }
    return fp_trim(std::move(r));
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, const FpCtx& c) {
    int db = fp_degree(b);
    if (db < 0) fail(Errc::UsageError, "mod-p remainder by zero");
    uint64_t lcinv = c.inv(b[db]);
    for (int d = fp_degree(a); d >= db; d = fp_degree(a)) {
        uint64_t q = c.mul(a[d], lcinv);
        for (int i = 0; i <= db; ++i) a[d - db + i] = c.sub(a[d - db + i], c.mul(q, b[i]));
    }
    return fp_trim(std::move(a));
}

FpPoly fp_monic(FpPoly f, const FpCtx& c) {
    int d = fp_degree(f);
    if (d < 0) return f;
    uint64_t inv = c.inv(f[d]);
    for (auto& x : f) x = c.mul(x, inv);
    return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const FpCtx& c) {
    while (fp_degree(b) >= 0) {
        a = fp_rem(std::move(a), b, c);
        std::swap(a, b);
    }
    return fp_monic(std::move(a), c);
}

FpPoly fp_divexact(const FpPoly& a, const FpPoly& b, const FpCtx& c) {
    FpPoly r = a, q;
    int db = fp_degree(b);
    int da = fp_degree(a);
    if (da < db) fail(Errc::UsageError, "fp_divexact degree mismatch");
    q.assign(da - db + 1, 0);
    uint64_t lcinv = c.inv(b[db]);
    for (int d = da; d >= db; --d) {
        if (fp_degree(r) != d) continue;
        uint64_t qq = c.mul(r[d], lcinv);
        q[d - db] = qq;
        for (int i = 0; i <= db; ++i) r[d - db + i] = c.sub(r[d - db + i], c.mul(qq, b[i]));
        r = fp_trim(std::move(r));
    }
    if (fp_degree(r) >= 0) fail(Errc::UsageError, "fp_divexact not exact");
    return fp_trim(std::move(q));
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& f, const FpCtx& c) {
    FpPoly result{1};
    FpPoly b = fp_rem(base, f, c);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = fp_rem(fp_mul(result, b, c), f, c);
        b = fp_rem(fp_mul(b, b, c), f, c);
        k >>= 1;
    }
    return result;
}

FpPoly fp_derivative(const FpPoly& f, const FpCtx& c) {
    FpPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(c.mul(f[i], i % c.p));
    return fp_trim(std::move(r));
}

std::vector<std::pair<int, FpPoly>> fp_squarefree_decomposition(FpPoly f, const FpCtx& ctx) {
    std::vector<std::pair<int, FpPoly>> out;
    f = fp_monic(std::move(f), ctx);
    if (fp_degree(f) <= 0) return out;
    FpPoly d = fp_derivative(f, ctx);
    if (fp_degree(d) < 0) {
        // f = v(x^p); p-th root has the same coefficients in F_p
        FpPoly v;
        for (size_t i = 0; i < f.size(); i += ctx.p) v.push_back(f[i]);
        for (auto& [e, part] : fp_squarefree_decomposition(std::move(v), ctx))
            out.emplace_back(e * (int)ctx.p, std::move(part));
        return out;
    }
    FpPoly c = fp_gcd(f, d, ctx);
    FpPoly w = fp_divexact(f, c, ctx);
    int i = 1;
    while (fp_degree(w) > 0) {
        FpPoly y = fp_gcd(w, c, ctx);
        FpPoly fac = fp_divexact(w, y, ctx);
        if (fp_degree(fac) > 0) out.emplace_back(i, std::move(fac));
        w = y;
        c = fp_divexact(c, w, ctx);
        ++i;
    }
    if (fp_degree(c) > 0) {
        FpPoly v;
        for (size_t j = 0; j < c.size(); j += ctx.p) v.push_back(c[j]);
        for (auto& [e, part] : fp_squarefree_decomposition(std::move(v), ctx))
            out.emplace_back(e * (int)ctx.p, std::move(part));
    }
    return out;
}

std::vector<std::pair<int, FpPoly>> fp_distinct_degree(FpPoly f, const FpCtx& c) {
    std::vector<std::pair<int, FpPoly>> out;
    f = fp_monic(std::move(f), c);
    FpPoly h{0, 1}; // x
    int d = 0;
    while (fp_degree(f) > 0) {
        ++d;
        if (2 * d > fp_degree(f)) {
            out.emplace_back(fp_degree(f), f);
            break;
        }
        h = fp_powmod(h, Int((long)c.p), f, c);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = c.sub(hx[1], 1);
        FpPoly g = fp_gcd(fp_trim(hx), f, c);
        if (fp_degree(g) > 0) {
            out.emplace_back(d, g);
            f = fp_divexact(f, g, c);
            h = fp_rem(std::move(h), f, c);
        }
    }
    return out;
}

namespace {

// deterministic pseudo-random coefficients for equal-degree splitting
struct SplitMix {
    uint64_t s;
    uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// split a monic product of irreducibles all of degree d (Cantor-Zassenhaus;
// trace map for p = 2); appends the factors to out
void equal_degree_split(const FpPoly& f, int d, const FpCtx& c, SplitMix& rng,
                        std::vector<FpPoly>& out) {
    int n = fp_degree(f);
    if (n == d) {
        out.push_back(fp_monic(f, c));
        return;
    }
    while (true) {
        FpPoly r(n);
        for (int i = 0; i < n; ++i) r[i] = rng.next() % c.p;
        r = fp_trim(std::move(r));
        if (fp_degree(r) < 1) continue;
        FpPoly w;
        if (c.p == 2) {
            // trace map sum_{i<d} r^(2^i) mod f
            FpPoly t = fp_rem(r, f, c), acc = t;
            for (int i = 1; i < d; ++i) {
                t = fp_rem(fp_mul(t, t, c), f, c);
                acc = fp_trim([&] {
                    FpPoly s(std::max(acc.size(), t.size()), 0);
                    for (size_t j = 0; j < acc.size(); ++j) s[j] = acc[j];
                    for (size_t j = 0; j < t.size(); ++j) s[j] = c.add(s[j], t[j]);
                    return s;
                }());
            }
            w = acc;
        } else {
            Int e = (int_pow(Int((long)c.p), (unsigned long)d) - 1) / 2;
            w = fp_powmod(r, e, f, c);
            if (!w.empty())
                w[0] = c.sub(w[0], 1);
            else
                w = FpPoly{c.p - 1};
            w = fp_trim(std::move(w));
        }
        FpPoly g = fp_gcd(w, f, c);
        int dg = fp_degree(g);
        if (dg > 0 && dg < n) {
            equal_degree_split(g, d, c, rng, out);
            equal_degree_split(fp_divexact(f, g, c), d, c, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, const FpCtx& c) {
    std::vector<std::pair<FpPoly, int>> out;
    for (auto& [e, part] : fp_squarefree_decomposition(f, c)) {
        for (auto& [d, prod] : fp_distinct_degree(part, c)) {
            SplitMix rng{0x5EEDC0DEull ^ (c.p * 0x10001ull) ^ (uint64_t)d};
            std::vector<FpPoly> factors;
            equal_degree_split(prod, d, c, rng, factors);
            for (auto& g : factors) out.emplace_back(std::move(g), e);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (fp_degree(a.first) != fp_degree(b.first)) return fp_degree(a.first) < fp_degree(b.first);
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

std::vector<std::pair<int, int>> fp_splitting_pattern(const IntPoly& f, uint64_t p) {
    FpCtx c{p};
    FpPoly fp = fp_reduce(f, p);
    if (fp_degree(fp) != degree(f))
        fail(Errc::UsageError, "leading coefficient vanishes mod p");
    std::vector<std::pair<int, int>> pattern;
    for (auto& [e, part] : fp_squarefree_decomposition(fp, c))
        for (auto& [d, prod] : fp_distinct_degree(part, c)) {
            int count = fp_degree(prod) / d;
            for (int i = 0; i < count; ++i) pattern.emplace_back(e, d);
        }
    std::sort(pattern.begin(), pattern.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return pattern;
}

} // namespace covol
