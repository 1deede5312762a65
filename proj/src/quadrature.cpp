#include "covol/bounds.hpp"
#include "covol/errors.hpp"

#include <array>
#include <vector>

// Certified quadrature for the two kernel integrals behind cf_integrals:
//   int_0^inf (1 - a(x sqrt(y)))/sinh(x) dx
//   int_0^inf (1 - a(x sqrt(y)))/cosh^2(x/2) dx
// Leading panel [0, 1/4] by a series model (the integrands' closed forms
// divide by quantities vanishing at 0), the body by adaptive 4-point
// Gauss-Legendre with an order-8 Taylor remainder term, tail by e^-x decay.

namespace covol {

namespace {

constexpr int JET = 9; // coefficients 0..8; error term uses f^(8)
constexpr unsigned QBITS = 288;

struct Jet {
    std::array<RatInterval, JET> c;

    static Jet constant(const RatInterval& v) {
        Jet j;
        j.c.fill(RatInterval(Rat(0)));
        j.c[0] = v;
        return j;
    }
    static Jet variable(const RatInterval& x) {
        Jet j = constant(x);
        j.c[1] = RatInterval(Rat(1));
        return j;
    }
};

Jet jadd(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i < JET; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Jet jsub(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i < JET; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Jet jmul(const Jet& a, const Jet& b) {
    Jet r;
    r.c.fill(RatInterval(Rat(0)));
    for (int i = 0; i < JET; ++i)
        for (int j = 0; i + j < JET; ++j) r.c[i + j] += a.c[i] * b.c[j];
    for (auto& ci : r.c) ci = ci.round_out(QBITS);
    return r;
}

Jet jscale(const Jet& a, const RatInterval& s) {
    Jet r;
    for (int i = 0; i < JET; ++i) r.c[i] = (a.c[i] * s).round_out(QBITS);
    return r;
}

Jet jdiv(const Jet& a, const Jet& b) {
    Jet q;
    q.c.fill(RatInterval(Rat(0)));
    for (int k = 0; k < JET; ++k) {
        RatInterval acc = a.c[k];
        for (int j = 0; j < k; ++j) acc = acc - q.c[j] * b.c[k - j];
        q.c[k] = (acc / b.c[0]).round_out(QBITS);
    }
    return q;
}

// sin/cos pair of a jet via the standard AD recurrence
void jsincos(const Jet& u, Jet& s, Jet& c) {
    s.c.fill(RatInterval(Rat(0)));
    c.c.fill(RatInterval(Rat(0)));
    s.c[0] = iv_sin(u.c[0], QBITS);
    c.c[0] = iv_cos(u.c[0], QBITS);
    for (int k = 1; k < JET; ++k) {
        RatInterval sa{Rat(0)}, ca{Rat(0)};
        for (int j = 1; j <= k; ++j) {
            RatInterval ju = RatInterval(Rat(j)) * u.c[j];
            sa += ju * c.c[k - j];
            ca += ju * s.c[k - j];
        }
        RatInterval invk{Rat(1, k)};
        s.c[k] = (sa * invk).round_out(QBITS);
        c.c[k] = (-(ca * invk)).round_out(QBITS);
    }
}

void jsinhcosh(const Jet& u, Jet& s, Jet& c) {
    s.c.fill(RatInterval(Rat(0)));
    c.c.fill(RatInterval(Rat(0)));
    s.c[0] = iv_sinh(u.c[0], QBITS);
    c.c[0] = iv_cosh(u.c[0], QBITS);
    for (int k = 1; k < JET; ++k) {
        RatInterval sa{Rat(0)}, ca{Rat(0)};
        for (int j = 1; j <= k; ++j) {
            RatInterval ju = RatInterval(Rat(j)) * u.c[j];
            sa += ju * c.c[k - j];
            ca += ju * s.c[k - j];
        }
        RatInterval invk{Rat(1, k)};
        s.c[k] = (sa * invk).round_out(QBITS);
        c.c[k] = (ca * invk).round_out(QBITS);
    }
}

// a(u) for a jet with u.c[0] bounded away from 0
Jet ja(const Jet& u) {
    Jet s, c;
    jsincos(u, s, c);
    Jet num = jscale(jsub(s, jmul(u, c)), RatInterval(Rat(3)));
    Jet u3 = jmul(jmul(u, u), u);
    Jet b = jdiv(num, u3);
    return jmul(b, b);
}

enum class Kernel { Sinh, CoshSq };

// integrand jet on panel interval X (X.lo > 0)
Jet integrand_jet(Kernel kern, const RatInterval& X, const RatInterval& sqrt_y) {
    Jet x = Jet::variable(X);
    Jet u = jscale(x, sqrt_y);
    Jet one_minus_a = jsub(Jet::constant(RatInterval(Rat(1))), ja(u));
    if (kern == Kernel::Sinh) {
        Jet sh, ch;
        jsinhcosh(x, sh, ch);
        return jdiv(one_minus_a, sh);
    }
    Jet half = jscale(x, RatInterval(Rat(1, 2)));
    Jet sh, ch;
    jsinhcosh(half, sh, ch);
    return jdiv(one_minus_a, jmul(ch, ch));
}

// scalar interval evaluation at a point enclosure
RatInterval integrand_point(Kernel kern, const RatInterval& x, const RatInterval& sqrt_y) {
    RatInterval u = (x * sqrt_y).round_out(QBITS);
    RatInterval s = iv_sin(u, QBITS), c = iv_cos(u, QBITS);
    RatInterval num = (s - u * c) * RatInterval(Rat(3));
    RatInterval b = num / iv_pow(u, 3);
    RatInterval one_minus_a = RatInterval(Rat(1)) - b * b;
    if (kern == Kernel::Sinh) return (one_minus_a / iv_sinh(x, QBITS)).round_out(QBITS);
    RatInterval ch = iv_cosh(x * RatInterval(Rat(1, 2)), QBITS);
    return (one_minus_a / (ch * ch)).round_out(QBITS);
}

struct Gl4 {
    RatInterval x1, x2; // positive nodes
    RatInterval w1, w2;
    Rat err_const; // (b-a)^9 (4!)^4 / (9 (8!)^3) * f^(8): rational factor
};

const Gl4& gl4_rule() {
    static const Gl4 rule = [] {
        Gl4 g;
        RatInterval s30 = iv_sqrt(RatInterval(Rat(30)), QBITS);
        g.x1 = iv_sqrt((RatInterval(Rat(15)) - RatInterval(Rat(2)) * s30) * RatInterval(Rat(1, 35)), QBITS);
        g.x2 = iv_sqrt((RatInterval(Rat(15)) + RatInterval(Rat(2)) * s30) * RatInterval(Rat(1, 35)), QBITS);
        g.w1 = (RatInterval(Rat(18)) + s30) * RatInterval(Rat(1, 36));
        g.w2 = (RatInterval(Rat(18)) - s30) * RatInterval(Rat(1, 36));
        Int f8 = 1;
        for (int i = 2; i <= 8; ++i) f8 *= i;
        Int f4 = 24;
        g.err_const = Rat(f4 * f4 * f4 * f4, 9 * f8 * f8 * f8);
        return g;
    }();
    return rule;
}

// certified integral over [a, b] by adaptive GL4
RatInterval integrate_body(Kernel kern, const Rat& a, const Rat& b, const RatInterval& sqrt_y,
                           const Rat& eps, int max_panels, int& panels_used) {
    const Gl4& rule = gl4_rule();
    Rat total_len = b - a;
    struct Panel { Rat a, b; };
    std::vector<Panel> stack{{a, b}};
    RatInterval acc{Rat(0)};
    Int f8fac = 40320;
    while (!stack.empty()) {
        Panel panel = stack.back();
        stack.pop_back();
        if (++panels_used > max_panels)
            fail(Errc::QuadratureBudgetExceeded, "panel budget exhausted");
        Rat w = panel.b - panel.a;
        RatInterval X{panel.a, panel.b};
        Jet jet = integrand_jet(kern, X, sqrt_y);
        RatInterval d8 = jet.c[8] * RatInterval(Rat(f8fac));
        Rat err = rule.err_const * rat_pow(w, 9) * d8.mag();
        Rat budget = eps * w / total_len;
        if (err > budget) {
            Rat mid = panel.a + w / 2;
            stack.push_back({panel.a, mid});
            stack.push_back({mid, panel.b});
            continue;
        }
        RatInterval c{(panel.a + panel.b) / 2};
        RatInterval r{w / 2};
        RatInterval sum{Rat(0)};
        for (int sgn : {-1, 1}) {
            RatInterval sg{Rat(sgn)};
            sum += rule.w1 * integrand_point(kern, c + sg * r * rule.x1, sqrt_y);
            sum += rule.w2 * integrand_point(kern, c + sg * r * rule.x2, sqrt_y);
        }
        acc += (r * sum + RatInterval(-err, err)).round_out(QBITS);
        acc = acc.round_out(QBITS);
    }
    return acc;
}

// ---- series model on the leading panel [0, h] ----
//
// 1 - a(u) = v W(v) (1 + b(v)) with v = u^2,
//   b(v)  = sum_{j>=1} (-1)^(j+1) beta_j v^(j-1),  beta_j = 6j/(2j+1)!
//   W(v)  = (1 - b)/v = sum_{i>=0} (-1)^i beta_{i+2} v^i
// so with s = x^2, u^2 = s y:
//   (1-a)/sinh x      = x y G(s) with G = W(sy)(1+b(sy)) / (sinh(sqrt s)/sqrt s)
//   (1-a)/cosh^2(x/2) = x^2 y H(s) with H = W(sy)(1+b(sy)) / cosh^2(sqrt s / 2)

constexpr int TM_DEG = 14;

struct TaylorModel {
    std::array<RatInterval, TM_DEG + 1> c;
    RatInterval rem; // |tail| <= rem.hi uniformly on [0, s_max]
    Rat s_max;

    RatInterval bound() const {
        RatInterval acc{Rat(0)};
        RatInterval spow{Rat(1)};
        RatInterval S{Rat(0), s_max};
        for (int i = 0; i <= TM_DEG; ++i) {
            acc += c[i] * spow;
            spow = spow * S;
        }
        return acc + RatInterval(-rem.hi, rem.hi);
    }
};

TaylorModel tm_zero(const Rat& s_max) {
    TaylorModel t;
    t.c.fill(RatInterval(Rat(0)));
    t.rem = RatInterval(Rat(0));
    t.s_max = s_max;
    return t;
}

TaylorModel tm_add(const TaylorModel& a, const TaylorModel& b) {
    TaylorModel r = a;
    for (int i = 0; i <= TM_DEG; ++i) r.c[i] = a.c[i] + b.c[i];
    r.rem = RatInterval(Rat(0), a.rem.hi + b.rem.hi);
    return r;
}

TaylorModel tm_mul(const TaylorModel& a, const TaylorModel& b) {
    TaylorModel r = tm_zero(a.s_max);
    Rat overflow = 0; // tail degrees folded through s_max powers
    for (int i = 0; i <= TM_DEG; ++i)
        for (int j = 0; j <= TM_DEG; ++j) {
            RatInterval prod = a.c[i] * b.c[j];
            if (i + j <= TM_DEG) r.c[i + j] += prod;
            else overflow += prod.mag() * rat_pow(a.s_max, (unsigned long)(i + j));
        }
    Rat abound = a.bound().mag(), bbound = b.bound().mag();
    Rat rem = overflow + a.rem.hi * bbound + b.rem.hi * abound;
    r.rem = RatInterval(Rat(0), rem);
    return r;
}

// 1/(c0 + E) with E the zero-constant part; requires |E/c0| < 1 on the domain
TaylorModel tm_reciprocal(const TaylorModel& a) {
    TaylorModel e = a;
    RatInterval c0 = a.c[0];
    e.c[0] = RatInterval(Rat(0));
    TaylorModel escaled = e;
    for (int i = 0; i <= TM_DEG; ++i) escaled.c[i] = e.c[i] / c0;
    Rat ebound = escaled.bound().mag();
    if (ebound >= 1) fail(Errc::QuadratureBudgetExceeded, "series reciprocal out of range");
    TaylorModel acc = tm_zero(a.s_max);
    acc.c[0] = RatInterval(Rat(1));
    TaylorModel pw = acc;
    int K = TM_DEG + 2;
    for (int k = 1; k <= K; ++k) {
        pw = tm_mul(pw, escaled);
        TaylorModel term = pw;
        if (k % 2 == 1)
            for (auto& ci : term.c) ci = -ci;
        acc = tm_add(acc, term);
    }
    // geometric remainder for the omitted powers
    Rat tail = rat_pow(ebound, (unsigned long)(K + 1)) / (1 - ebound);
    acc.rem = RatInterval(Rat(0), acc.rem.hi + tail);
    for (int i = 0; i <= TM_DEG; ++i) acc.c[i] = (acc.c[i] / c0).round_out(QBITS);
    acc.rem = RatInterval(Rat(0), (acc.rem * (RatInterval(Rat(1)) / c0).abs()).hi);
    return acc;
}

Rat beta_coeff_num(int j, Rat& out) {
    // beta_j = 6j/(2j+1)!
    Int fact = 1;
    for (int i = 2; i <= 2 * j + 1; ++i) fact *= i;
    out = Rat(6 * j, fact);
    out.canonicalize();
    return out;
}

// b(v) and W(v) = (1-b)/v as models in s with v = y s
void tm_b_and_w(const Rat& y, const Rat& s_max, TaylorModel& b, TaylorModel& w) {
    b = tm_zero(s_max);
    w = tm_zero(s_max);
    Rat beta;
    for (int i = 0; i <= TM_DEG; ++i) {
        beta_coeff_num(i + 1, beta);
        Rat coeff = beta * rat_pow(y, (unsigned long)i);
        b.c[i] = RatInterval(i % 2 == 0 ? coeff : -coeff);
        beta_coeff_num(i + 2, beta);
        Rat wc = beta * rat_pow(y, (unsigned long)i);
        w.c[i] = RatInterval(i % 2 == 0 ? wc : -wc);
    }
    // alternating with decreasing terms on [0, s_max y]: first omitted term bounds
    Rat v_max = s_max * y;
    beta_coeff_num(TM_DEG + 2, beta);
    b.rem = RatInterval(Rat(0), beta * rat_pow(v_max, (unsigned long)(TM_DEG + 1)));
    beta_coeff_num(TM_DEG + 3, beta);
    w.rem = RatInterval(Rat(0), beta * rat_pow(v_max, (unsigned long)(TM_DEG + 1)));
}

// sinh(sqrt s)/sqrt s = sum s^k/(2k+1)!
TaylorModel tm_sinhc(const Rat& s_max) {
    TaylorModel t = tm_zero(s_max);
    Int fact = 1;
    for (int k = 0; k <= TM_DEG; ++k) {
        if (k > 0) fact *= (2 * k) * (2 * k + 1);
        t.c[k] = RatInterval(Rat(1, fact));
    }
    Int nfact = fact * (2 * TM_DEG + 2) * (2 * TM_DEG + 3);
    Rat first = Rat(1, nfact) * rat_pow(s_max, (unsigned long)(TM_DEG + 1));
    t.rem = RatInterval(Rat(0), 2 * first);
    return t;
}

// cosh(sqrt s / 2) = sum (s/4)^k/(2k)!
TaylorModel tm_cosh_half(const Rat& s_max) {
    TaylorModel t = tm_zero(s_max);
    Int fact = 1;
    Rat quarter(1, 4);
    for (int k = 0; k <= TM_DEG; ++k) {
        if (k > 0) fact *= (2 * k - 1) * (2 * k);
        t.c[k] = RatInterval(Rat(1, fact) * rat_pow(quarter, (unsigned long)k));
    }
    Int nfact = fact * (2 * TM_DEG + 1) * (2 * TM_DEG + 2);
    Rat first = Rat(1, nfact) * rat_pow(s_max * quarter, (unsigned long)(TM_DEG + 1));
    t.rem = RatInterval(Rat(0), 2 * first);
    return t;
}

// int_0^h x^(2i+pow) tail-safe integration of s-models
RatInterval tm_integrate_leading(Kernel kern, const TaylorModel& model, const Rat& h, const Rat& y) {
    RatInterval acc{Rat(0)};
    for (int i = 0; i <= TM_DEG; ++i) {
        unsigned long power = (kern == Kernel::Sinh) ? (2 * i + 2) : (2 * i + 3);
        acc += model.c[i] * RatInterval(rat_pow(h, power) / Rat((long)power));
    }
    unsigned long tail_pow = (kern == Kernel::Sinh) ? 2 : 3;
    Rat tail_factor = rat_pow(h, tail_pow) / Rat((long)tail_pow);
    // |tail(s)| <= rem and s^i factors were absorbed already (models in s on [0,h^2])
    Rat rem_int = model.rem.hi * tail_factor;
    acc += RatInterval(-rem_int, rem_int);
    return acc * RatInterval(y);
}

RatInterval leading_panel(Kernel kern, const Rat& h, const Rat& y) {
    Rat s_max = h * h;
    TaylorModel b, w;
    tm_b_and_w(y, s_max, b, w);
    TaylorModel one_plus_b = b;
    one_plus_b.c[0] = one_plus_b.c[0] + RatInterval(Rat(1));
    TaylorModel core = tm_mul(w, one_plus_b);
    if (kern == Kernel::Sinh) {
        TaylorModel q = tm_reciprocal(tm_sinhc(s_max));
        return tm_integrate_leading(kern, tm_mul(core, q), h, y);
    }
    TaylorModel ch = tm_cosh_half(s_max);
    TaylorModel r = tm_reciprocal(tm_mul(ch, ch));
    return tm_integrate_leading(kern, tm_mul(core, r), h, y);
}

// tail: int_X^inf of the kernel with 1 - a <= 1
RatInterval tail_bound(Kernel kern, const Rat& X, unsigned bits) {
    RatInterval eX = iv_exp(RatInterval(-X), bits);
    if (kern == Kernel::Sinh) {
        // int 1/sinh = log coth(x/2); bound 2 e^-X/(1 - e^-X)
        RatInterval denom = RatInterval(Rat(1)) - eX;
        RatInterval hi = RatInterval(Rat(2)) * eX / denom;
        return {Rat(0), hi.hi};
    }
    RatInterval hi = RatInterval(Rat(4)) * eX;
    return {Rat(0), hi.hi};
}

} // namespace

CfIntegrals cf_integrals(const Rat& y, const Rat& coeff_sinh, const Rat& coeff_cosh,
                         const Rat& target_width, int max_panels) {
    if (y <= 0) fail(Errc::UsageError, "y must be positive");
    CfIntegrals out;
    RatInterval sqrt_y = iv_sqrt(RatInterval(y), QBITS);
    Rat h(1, 4);
    Rat X = 30;
    Rat eps = target_width / 4;
    int panels = 0;
    RatInterval sinh_val = leading_panel(Kernel::Sinh, h, y) +
                           integrate_body(Kernel::Sinh, h, X, sqrt_y, eps, max_panels, panels) +
                           tail_bound(Kernel::Sinh, X, QBITS);
    RatInterval cosh_val = leading_panel(Kernel::CoshSq, h, y) +
                           integrate_body(Kernel::CoshSq, h, X, sqrt_y, eps, max_panels, panels) +
                           tail_bound(Kernel::CoshSq, X, QBITS);
    out.sinh_bound = (RatInterval(coeff_sinh) * sinh_val).round_out(QBITS);
    out.cosh_bound = (RatInterval(coeff_cosh) * cosh_val).round_out(QBITS);
    out.panels_used = panels;
    return out;
}

RatInterval a_func(const RatInterval& x, unsigned bits) {
    if (x.lo < 0) fail(Errc::UsageError, "a(x) needs x >= 0");
    auto series_part = [&](const RatInterval& u) {
        // b(u) = sum (-1)^(j+1) beta_j u^(2j-2), alternating for u <= 1
        RatInterval v = iv_pow(u, 2);
        RatInterval sum{Rat(0)};
        RatInterval vpow{Rat(1)};
        Rat beta;
        int terms = 24;
        for (int j = 1; j <= terms; ++j) {
            beta_coeff_num(j, beta);
            RatInterval term = vpow * RatInterval(beta);
            sum = (j % 2 == 1) ? sum + term : sum - term;
            vpow = (vpow * v).round_out(bits + 32);
        }
        beta_coeff_num(terms + 1, beta);
        Rat rem = beta * rat_pow(v.mag(), (unsigned long)terms);
        RatInterval b = sum + RatInterval(-rem, rem);
        // |b| <= 1: sin u - u cos u = int_0^u t sin t dt and |sin t| <= t
        RatInterval a = b * b;
        if (a.lo < 0) a.lo = 0;
        if (a.hi > 1) a.hi = 1;
        return a;
    };
    auto direct_part = [&](const RatInterval& u) {
        RatInterval s = iv_sin(u, bits + 16), c = iv_cos(u, bits + 16);
        RatInterval b = (s - u * c) * RatInterval(Rat(3)) / iv_pow(u, 3);
        RatInterval a = b * b;
        if (a.lo < 0) a.lo = 0;
        if (a.hi > 1) a.hi = 1;
        return a;
    };
    if (x.hi <= Rat(3, 4)) return series_part(x).round_out(bits);
    if (x.lo >= Rat(1, 2)) return direct_part(x).round_out(bits);
    RatInterval lo_part = series_part(RatInterval(x.lo, Rat(3, 4)));
    RatInterval hi_part = direct_part(RatInterval(Rat(1, 2), x.hi));
    return RatInterval::hull(lo_part, hi_part).round_out(bits);
}

} // namespace covol
