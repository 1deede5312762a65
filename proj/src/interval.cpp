#include "covol/interval.hpp"

namespace covol {

namespace {

Rat round_down(const Rat& x, unsigned bits) {
    Int scaled = int_floor_div(x.get_num() << bits, x.get_den());
    Rat r(scaled, pow2(bits));
    r.canonicalize();
    return r;
}

Rat round_up(const Rat& x, unsigned bits) {
    Int num = x.get_num() << bits;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, pow2(bits));
    r.canonicalize();
    return r;
}

} // namespace

RatInterval RatInterval::round_out(unsigned bits) const {
    return {round_down(lo, bits), round_up(hi, bits)};
}

RatInterval iv_pow(const RatInterval& x, unsigned long e) {
    if (e == 0) return RatInterval(Rat(1));
    RatInterval acc = x;
    RatInterval result(Rat(1));
    unsigned long k = e;
    bool started = false;
    while (k) {
        if (k & 1) {
            result = started ? result * acc : acc;
            started = true;
        }
        k >>= 1;
        if (k) acc = acc * acc;
    }
    // even powers are nonnegative even when x straddles 0
    if (e % 2 == 0 && result.lo < 0) result.lo = 0;
    return result;
}

} // namespace covol
