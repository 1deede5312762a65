#ifndef COVOL_ZETA_HPP
#define COVOL_ZETA_HPP

#include "covol/functions.hpp"
#include "covol/numfield.hpp"

#include <cstdint>
#include <vector>

namespace covol {

// primes up to n, cached
const std::vector<uint32_t>& primes_upto(uint32_t n);

// enclosure of zeta_k(2) from the Euler product over p <= P with a certified
// multiplicative tail bound exp(m * sum_{n>P} n^-2 / (1 - P^-2))
RatInterval zeta2_euler(const NumberField& field, uint32_t P, unsigned bits = 192);

// zeta_k(-1) = (-1)^m d^{3/2} zeta_k(2) / (2^m pi^(2m))
RatInterval functional_transfer(const NumberField& field, const RatInterval& zeta2,
                                unsigned bits = 192);

struct Reconstruction {
    Rat value;
    Rat margin; // distance from the interval edges to the nearest other
                // denominator-bounded rationals outside
};

// the unique rational with denominator <= Q_max inside [iv.lo, iv.hi];
// NoRational / Ambiguous otherwise (Stern-Brocot descent)
Reconstruction reconstruct_rational(const RatInterval& iv, const Int& Q_max);

// Siegel-style divisor sum for real quadratic fields: independent oracle
// zeta_k(-1) = (1/60) sum_{b^2 < D, b = D mod 2} sigma_1((D - b^2)/4)
Rat quadratic_zeta_oracle(const Int& D);

struct ZetaOptions {
    uint32_t prime_bound = 100000; // raised x10 on Ambiguous
    uint32_t prime_cap = 10000000;
    Int q_max = 5000;
    unsigned bits = 192;
};

struct ZetaResult {
    uint32_t prime_bound = 0;
    RatInterval zeta2;
    RatInterval zeta_m1_interval;
    Rat zeta_m1;
    Rat margin;
};

ZetaResult compute_zeta(const NumberField& field, const ZetaOptions& opts = {});

} // namespace covol

#endif
