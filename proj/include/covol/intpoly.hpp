#ifndef COVOL_INTPOLY_HPP
#define COVOL_INTPOLY_HPP

#include "covol/interval.hpp"
#include "covol/rational.hpp"

#include <string>
#include <vector>

namespace covol {

// Dense univariate polynomial over Z, constant term first.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

inline int degree(const IntPoly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}
inline int degree(const RatPoly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

IntPoly poly_trim(IntPoly p);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(IntPoly a);
IntPoly poly_derivative(const IntPoly& p);
Int poly_content(const IntPoly& p);

Int poly_eval(const IntPoly& p, const Int& x);
Rat poly_eval(const IntPoly& p, const Rat& x);
RatInterval poly_eval(const IntPoly& p, const RatInterval& x);

// reduce a (degree < 2m-1) modulo monic f, in place arithmetic over Z
IntPoly poly_mod_monic(IntPoly a, const IntPoly& f);
IntPoly poly_mulmod_monic(const IntPoly& a, const IntPoly& b, const IntPoly& f);

// exact resultant over Q (inputs integral, output integral for integral inputs)
Rat resultant_rat(const RatPoly& a, const RatPoly& b);
Int resultant(const IntPoly& a, const IntPoly& b);

// disc(f) = (-1)^(m(m-1)/2) res(f, f') / lc(f)
Int poly_discriminant(const IntPoly& f);

bool poly_is_squarefree(const IntPoly& f);

// field norm of g(theta) for theta a root of monic f: N = resultant(f, g)
Int field_norm(const IntPoly& f, const IntPoly& g);

// human syntax: "x^4-x^3-3x^2+x+1"; single variable, integer coefficients
IntPoly poly_parse(const std::string& s);
std::string poly_format(const IntPoly& p);

} // namespace covol

#endif
