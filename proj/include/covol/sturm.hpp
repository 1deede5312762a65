#ifndef COVOL_STURM_HPP
#define COVOL_STURM_HPP

#include "covol/intpoly.hpp"

#include <vector>

namespace covol {

// Sturm chain of a squarefree polynomial; exact rational arithmetic.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& f);

    int sign_changes(const Rat& x) const;
    int sign_changes_neg_inf() const;
    int sign_changes_pos_inf() const;

    // number of real roots in (a, b]
    int count(const Rat& a, const Rat& b) const;
    int count_all() const;

private:
    std::vector<RatPoly> chain_;
};

// Cauchy bound: all real roots lie in (-B, B) for monic f
Rat root_bound(const IntPoly& f);

int count_real_roots(const IntPoly& f); // requires squarefree input

// pairwise disjoint isolating intervals, ascending, endpoints non-roots;
// each interval has sign change of f at its endpoints
std::vector<RatInterval> isolate_real_roots(const IntPoly& f);

// bisect until width <= target; endpoints keep opposite signs
RatInterval refine_root(const IntPoly& f, RatInterval iv, const Rat& target_width);

} // namespace covol

#endif
