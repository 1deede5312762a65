#include "covol/functions.hpp"

#include <map>
#include <mutex>

namespace covol {

namespace {

// atan(1/x) for integer x >= 2, alternating series with remainder <= next term
RatInterval atan_inv(unsigned long x, unsigned bits) {
    Rat sum = 0;
    Rat term(1, x);
    Rat x2 = Rat(1, Int(x) * x);
    Rat tiny(1, pow2(bits + 16));
    int sign = 1;
    unsigned long k = 1;
    while (term > tiny) {
        sum += sign * term / k;
        term *= x2;
        k += 2;
        sign = -sign;
    }
    Rat rem = term / k;
    return RatInterval(sum - rem, sum + rem);
}

std::mutex cache_mutex;

} // namespace

RatInterval pi_enclosure(unsigned bits) {
    static std::map<unsigned, RatInterval> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
    RatInterval v = (atan_inv(5, bits + 8) * RatInterval(Rat(16)) -
                     atan_inv(239, bits + 8) * RatInterval(Rat(4)))
                        .round_out(bits + 4);
    cache.emplace(bits, v);
    return v;
}

RatInterval log2_enclosure(unsigned bits) {
    static std::map<unsigned, RatInterval> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
    // log 2 = sum_{k>=1} 1/(k 2^k), tail after N terms < 1/((N+1) 2^N)
    Rat sum = 0;
    unsigned long N = bits + 16;
    Rat p(1, 2);
    for (unsigned long k = 1; k <= N; ++k) {
        sum += p / k;
        p /= 2;
    }
    Rat rem = Rat(1, (N + 1)) / pow2(N);
    RatInterval v = RatInterval(sum, sum + rem).round_out(bits + 4);
    cache.emplace(bits, v);
    return v;
}

namespace {

// exp on a reduced interval |r| <= 0.4
RatInterval exp_reduced(const RatInterval& r, unsigned bits) {
    Rat rmag = r.mag();
    RatInterval sum(Rat(1));
    RatInterval term(Rat(1));
    Rat tmag = 1;
    Rat tiny(1, pow2(bits + 16));
    unsigned long j = 1;
    while (tmag > tiny && j < bits + 64) {
        term = (term * r).round_out(bits + 32);
        term = term / RatInterval(Rat(j));
        sum = (sum + term).round_out(bits + 32);
        tmag = tmag * rmag / j;
        ++j;
    }
    Rat rem = 2 * tmag; // geometric bound on the tail, |r| <= 0.4 << j
    return sum + RatInterval(-rem, rem);
}

RatInterval exp_point(const Rat& x, unsigned bits) {
    RatInterval ln2 = log2_enclosure(bits + 16);
    double xd = mpq_get_d(Rat(x).get_mpq_t());
    long k = (long)(xd / 0.6931471805599453 + (xd >= 0 ? 0.5 : -0.5));
    RatInterval r = RatInterval(x) - RatInterval(Rat(k)) * ln2;
    while (r.lo > Rat(2, 5)) { ++k; r = RatInterval(x) - RatInterval(Rat(k)) * ln2; }
    while (r.hi < Rat(-2, 5)) { --k; r = RatInterval(x) - RatInterval(Rat(k)) * ln2; }
    RatInterval e = exp_reduced(r, bits);
    Rat scale = k >= 0 ? Rat(pow2((unsigned long)k)) : Rat(1, pow2((unsigned long)(-k)));
    return (e * RatInterval(scale)).round_out(bits);
}

RatInterval log_point(const Rat& x, unsigned bits) {
    if (x <= 0) fail(Errc::PrecisionExceeded, "log of nonpositive value");
    // scale into [3/4, 3/2)
    long k = 0;
    Rat y = x;
    while (y >= Rat(3, 2)) { y /= 2; ++k; }
    while (y < Rat(3, 4)) { y *= 2; --k; }
    Rat z = (y - 1) / (y + 1); // |z| <= 1/5
    Rat z2 = z * z;
    Rat sum = 0;
    Rat term = z;
    Rat tiny(1, pow2(bits + 16));
    unsigned long t = 0;
    while (abs(term) / (2 * t + 1) > tiny && t < bits + 64) {
        sum += term / (2 * t + 1);
        term *= z2;
        ++t;
    }
    Rat rem = 2 * abs(term) / (2 * t + 1); // geometric tail, z^2 <= 1/25
    RatInterval series = RatInterval(2 * sum - rem, 2 * sum + rem);
    return (series + RatInterval(Rat(k)) * log2_enclosure(bits + 16)).round_out(bits);
}

// sin on |r| <= 0.8 via alternating series (interval argument)
RatInterval sin_reduced(const RatInterval& r, unsigned bits) {
    RatInterval r2 = (r * r).round_out(bits + 32);
    if (r2.lo < 0) r2.lo = 0;
    RatInterval sum = r;
    RatInterval term = r;
    Rat tmag = r.mag();
    Rat tiny(1, pow2(bits + 16));
    unsigned long n = 1; // term holds r^(2n-1)/(2n-1)!
    while (tmag > tiny && n < bits) {
        term = (term * r2).round_out(bits + 32) / RatInterval(Rat(Int(2 * n) * Int(2 * n + 1)));
        sum = (n % 2 == 1) ? sum - term : sum + term;
        tmag = tmag * r2.mag() / (2 * n * (2 * n + 1));
        ++n;
    }
    return sum + RatInterval(-2 * tmag, 2 * tmag);
}

RatInterval cos_reduced(const RatInterval& r, unsigned bits) {
    RatInterval r2 = (r * r).round_out(bits + 32);
    if (r2.lo < 0) r2.lo = 0;
    RatInterval sum(Rat(1));
    RatInterval term(Rat(1));
    Rat tmag = 1;
    Rat tiny(1, pow2(bits + 16));
    unsigned long n = 1; // term holds r^(2n-2)/(2n-2)!
    while (tmag > tiny && n < bits) {
        term = (term * r2).round_out(bits + 32) / RatInterval(Rat(Int(2 * n - 1) * Int(2 * n)));
        sum = (n % 2 == 1) ? sum - term : sum + term;
        tmag = tmag * r2.mag() / ((2 * n - 1) * (2 * n));
        ++n;
    }
    RatInterval out = sum + RatInterval(-2 * tmag, 2 * tmag);
    if (out.hi > 1) out.hi = 1;
    if (out.lo < -1) out.lo = -1;
    return out;
}

void clip_unit(RatInterval& v) {
    if (v.hi > 1) v.hi = 1;
    if (v.lo < -1) v.lo = -1;
}

// reduce x by quadrants of pi/2; returns residual interval and quadrant index mod 4
bool quadrant_reduce(const RatInterval& x, unsigned bits, RatInterval& r, long& qmod) {
    if (x.width() > 1) return false;
    RatInterval pi = pi_enclosure(bits + 24);
    RatInterval half_pi = pi * RatInterval(Rat(1, 2));
    double md = mpq_get_d(x.mid().get_mpq_t());
    long q = (long)(md / 1.5707963267948966 + (md >= 0 ? 0.5 : -0.5));
    r = x - RatInterval(Rat(q)) * half_pi;
    for (int guard = 0; guard < 4 && (r.lo > Rat(79, 100) || r.hi < Rat(-79, 100)); ++guard) {
        q += r.lo > 0 ? 1 : -1;
        r = x - RatInterval(Rat(q)) * half_pi;
    }
    if (r.mag() > Rat(9, 10)) return false; // width too large after reduction
    qmod = ((q % 4) + 4) % 4;
    return true;
}

} // namespace

RatInterval iv_exp(const RatInterval& x, unsigned bits) {
    return {exp_point(x.lo, bits).lo, exp_point(x.hi, bits).hi};
}

RatInterval iv_log(const RatInterval& x, unsigned bits) {
    return {log_point(x.lo, bits).lo, log_point(x.hi, bits).hi};
}

RatInterval iv_sin(const RatInterval& x, unsigned bits) {
    RatInterval r;
    long q;
    if (!quadrant_reduce(x, bits, r, q)) return {Rat(-1), Rat(1)};
    RatInterval v;
    switch (q) {
        case 0: v = sin_reduced(r, bits); break;
        case 1: v = cos_reduced(r, bits); break;
        case 2: v = -sin_reduced(r, bits); break;
        default: v = -cos_reduced(r, bits); break;
    }
    clip_unit(v);
    return v.round_out(bits);
}

RatInterval iv_cos(const RatInterval& x, unsigned bits) {
    RatInterval r;
    long q;
    if (!quadrant_reduce(x, bits, r, q)) return {Rat(-1), Rat(1)};
    RatInterval v;
    switch (q) {
        case 0: v = cos_reduced(r, bits); break;
        case 1: v = -sin_reduced(r, bits); break;
        case 2: v = -cos_reduced(r, bits); break;
        default: v = sin_reduced(r, bits); break;
    }
    clip_unit(v);
    return v.round_out(bits);
}

RatInterval iv_sinh(const RatInterval& x, unsigned bits) {
    RatInterval e = iv_exp(x, bits + 8);
    RatInterval einv = iv_exp(-x, bits + 8);
    return ((e - einv) * RatInterval(Rat(1, 2))).round_out(bits);
}

RatInterval iv_cosh(const RatInterval& x, unsigned bits) {
    RatInterval e = iv_exp(x, bits + 8);
    RatInterval einv = iv_exp(-x, bits + 8);
    RatInterval v = ((e + einv) * RatInterval(Rat(1, 2))).round_out(bits);
    if (v.lo < 1) v.lo = 1;
    return v;
}

namespace {

Rat sqrt_lower(const Rat& x, unsigned bits) {
    Int m = rat_floor(x * Rat(pow2(2 * bits)));
    Int s = sqrt(m);
    Rat r(s, pow2(bits));
    r.canonicalize();
    return r;
}

Rat sqrt_upper(const Rat& x, unsigned bits) {
    Int m = rat_floor(x * Rat(pow2(2 * bits)));
    Int s = sqrt(m) + 1;
    Rat r(s, pow2(bits));
    r.canonicalize();
    return r;
}

} // namespace

RatInterval iv_sqrt(const RatInterval& x, unsigned bits) {
    if (x.lo < 0) fail(Errc::PrecisionExceeded, "sqrt of possibly-negative interval");
    return {sqrt_lower(x.lo, bits), sqrt_upper(x.hi, bits)};
}

RatInterval iv_pow_3_2(const Int& n, unsigned bits) {
    RatInterval s = iv_sqrt(RatInterval(Rat(n)), bits);
    return s * RatInterval(Rat(n));
}

} // namespace covol
