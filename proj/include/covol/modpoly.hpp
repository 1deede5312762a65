#ifndef COVOL_MODPOLY_HPP
#define COVOL_MODPOLY_HPP

#include "covol/intpoly.hpp"

#include <cstdint>
#include <vector>

namespace covol {

// F_p[x] with word-size p; coefficients reduced, constant term first.
using FpPoly = std::vector<uint64_t>;

struct FpCtx {
    uint64_t p;
    uint64_t mul(uint64_t a, uint64_t b) const { return (uint64_t)((__uint128_t)a * b % p); }
    uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
};

FpPoly fp_reduce(const IntPoly& f, uint64_t p);
int fp_degree(const FpPoly& f);
FpPoly fp_trim(FpPoly f);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const FpCtx& c);
FpPoly fp_rem(FpPoly a, const FpPoly& b, const FpCtx& c);
FpPoly fp_gcd(FpPoly a, FpPoly b, const FpCtx& c); // monic gcd
FpPoly fp_monic(FpPoly f, const FpCtx& c);
FpPoly fp_divexact(const FpPoly& a, const FpPoly& b, const FpCtx& c);
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& f, const FpCtx& c);
FpPoly fp_derivative(const FpPoly& f, const FpCtx& c);

// (exponent, squarefree part) pairs with product of parts^exponent = f
std::vector<std::pair<int, FpPoly>> fp_squarefree_decomposition(FpPoly f, const FpCtx& c);

// (degree d, product of all irreducible factors of degree d) for squarefree f
std::vector<std::pair<int, FpPoly>> fp_distinct_degree(FpPoly f, const FpCtx& c);

// complete factorization: (factor, multiplicity); deterministic
// (fixed-seed splitting sequence for the equal-degree stage)
std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, const FpCtx& c);

// splitting pattern of monic f mod p: list of (e, deg) with multiplicity,
// sorted by (deg, e); sum of e*deg = deg f. No equal-degree splitting needed.
std::vector<std::pair<int, int>> fp_splitting_pattern(const IntPoly& f, uint64_t p);

} // namespace covol

#endif
