#ifndef COVOL_RATIONAL_HPP
#define COVOL_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace covol {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) { return int_pow(2, e); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// floor(num/den) with exact integer division semantics
inline Int int_floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& x) { return int_floor_div(x.get_num(), x.get_den()); }

inline Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

// "p/q" or "p"; used for exact CLI and JSON I/O
std::string rat_str(const Rat& x);
Rat rat_parse(const std::string& s);

// decimal approximation "0.0123456" (round-to-nearest, explicitly lossy)
std::string rat_decimal(const Rat& x, int digits);

bool is_perfect_square(const Int& n, Int* root = nullptr);

} // namespace covol

#endif
