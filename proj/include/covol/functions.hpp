#ifndef COVOL_FUNCTIONS_HPP
#define COVOL_FUNCTIONS_HPP

#include "covol/interval.hpp"

namespace covol {

// Certified enclosures of elementary functions on rational intervals.
// Series with explicit remainder bounds; arguments reduced via the cached
// pi/log2 enclosures. All results are genuine enclosures of the exact image.

// pi via Machin's formula with proven alternating-series remainders,
// one audited constant reused everywhere (width < 2^-bits).
RatInterval pi_enclosure(unsigned bits = 128);
RatInterval log2_enclosure(unsigned bits = 128);

RatInterval iv_exp(const RatInterval& x, unsigned bits = 128);
RatInterval iv_log(const RatInterval& x, unsigned bits = 128);
RatInterval iv_sin(const RatInterval& x, unsigned bits = 128);
RatInterval iv_cos(const RatInterval& x, unsigned bits = 128);
RatInterval iv_sinh(const RatInterval& x, unsigned bits = 128);
RatInterval iv_cosh(const RatInterval& x, unsigned bits = 128);
RatInterval iv_sqrt(const RatInterval& x, unsigned bits = 128);

// enclosure of n^(3/2) for integer n >= 0
RatInterval iv_pow_3_2(const Int& n, unsigned bits = 128);

} // namespace covol

#endif
