#include "covol/sturm.hpp"

#include "covol/errors.hpp"

namespace covol {

namespace {

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    int db = degree(b);
    for (int d = degree(a); d >= db && d >= 0; d = degree(a)) {
        Rat c = a[d] / b[db];
        for (int i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
        a[d] = 0;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Rat horner(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

int changes(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

SturmChain::SturmChain(const IntPoly& f) {
    if (!poly_is_squarefree(f)) fail(Errc::NotSquarefree, "Sturm chain requires squarefree polynomial");
    RatPoly p0(f.begin(), f.end());
    IntPoly d = poly_derivative(f);
    RatPoly p1(d.begin(), d.end());
    chain_.push_back(p0);
    if (degree(p1) >= 0) chain_.push_back(p1);
    while (chain_.size() >= 2) {
        RatPoly r = rat_rem(chain_[chain_.size() - 2], chain_.back());
        if (degree(r) < 0) break;
        for (auto& c : r) c = -c;
        chain_.push_back(std::move(r));
    }
}

int SturmChain::sign_changes(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sgn(horner(p, x)));
    return changes(signs);
}

int SturmChain::sign_changes_neg_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) {
        int d = degree(p);
        int s = d < 0 ? 0 : sgn(p[d]);
        signs.push_back(d % 2 == 0 ? s : -s);
    }
    return changes(signs);
}

int SturmChain::sign_changes_pos_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) {
        int d = degree(p);
        signs.push_back(d < 0 ? 0 : sgn(p[d]));
    }
    return changes(signs);
}

int SturmChain::count(const Rat& a, const Rat& b) const {
    return sign_changes(a) - sign_changes(b);
}

int SturmChain::count_all() const { return sign_changes_neg_inf() - sign_changes_pos_inf(); }

Rat root_bound(const IntPoly& f) {
    int d = degree(f);
    if (d < 1) return 1;
    Rat maxc = 0;
    for (int i = 0; i < d; ++i) {
        Rat a = abs(Rat(f[i], f[d]));
        if (a > maxc) maxc = a;
    }
    return maxc + 1;
}

int count_real_roots(const IntPoly& f) { return SturmChain(f).count_all(); }

std::vector<RatInterval> isolate_real_roots(const IntPoly& f) {
    int m = degree(f);
    if (m == 1) {
        Rat r(-f[0], f[1]);
        r.canonicalize();
        return {RatInterval(r - Rat(1, 1024), r + Rat(1, 1024))};
    }
    SturmChain chain(f);
    Rat bound = root_bound(f);
    std::vector<RatInterval> out;
    struct Seg { Rat a, b; int count; };
    std::vector<Seg> stack{{-bound, bound, chain.count(-bound, bound)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back(RatInterval(s.a, s.b));
            continue;
        }
        Rat mid = (s.a + s.b) / 2;
        if (poly_eval(f, mid) == 0) mid = s.a + (s.b - s.a) * Rat(13, 32);
        if (poly_eval(f, mid) == 0) fail(Errc::PrecisionExceeded, "rational root encountered in isolation");
        int left = chain.count(s.a, mid);
        stack.push_back({mid, s.b, s.count - left});
        stack.push_back({s.a, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
    return out;
}

RatInterval refine_root(const IntPoly& f, RatInterval iv, const Rat& target_width) {
    int slo = sgn(poly_eval(f, iv.lo));
    int shi = sgn(poly_eval(f, iv.hi));
    if (slo == 0 || shi == 0 || slo == shi) {
        if (degree(f) == 1) return iv; // exact rational root boxed at isolation
        fail(Errc::PrecisionExceeded, "refine_root needs a sign change");
    }
    int guard = 0;
    while (iv.width() > target_width) {
        if (++guard > 100000) fail(Errc::PrecisionExceeded, "root refinement cap reached");
        Rat mid = iv.mid();
        int sm = sgn(poly_eval(f, mid));
        if (sm == 0) {
            mid = iv.lo + iv.width() * Rat(13, 32);
            sm = sgn(poly_eval(f, mid));
            if (sm == 0) fail(Errc::PrecisionExceeded, "midpoint is a root");
        }
        if (sm == slo) iv.lo = mid;
        else iv.hi = mid;
    }
    return iv;
}

} // namespace covol
