#ifndef COVOL_NUMFIELD_HPP
#define COVOL_NUMFIELD_HPP

#include "covol/intpoly.hpp"
#include "covol/modpoly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace covol {

// monic integer polynomial, certified irreducible over Q at construction
struct Polynomial {
    IntPoly coeffs;

    static Polynomial checked(IntPoly coeffs);
    int deg() const { return (int)coeffs.size() - 1; }
};

struct SplittingFactor {
    int e, f;
    bool operator==(const SplittingFactor&) const = default;
};

struct SplittingType {
    uint64_t p;
    std::vector<SplittingFactor> factors; // ordered by (f, e)

    Int norm(size_t i) const { return int_pow(Int((long)(unsigned long)p), factors[i].f); }
    bool ramified() const {
        for (auto& fa : factors)
            if (fa.e > 1) return true;
        return false;
    }
};

using SplitOverrides = std::map<uint64_t, std::vector<SplittingFactor>>;

// p | [O_k : Z[theta]] test (Dedekind criterion); exact
bool dedekind_divides_index(const IntPoly& f, uint64_t p);

// true iff all roots real; requires squarefree input
bool is_totally_real(const IntPoly& f);

class NumberField {
public:
    // known_disc: authoritative field discriminant from the dataset, consulted
    // only when the Dedekind criterion proves a nontrivial index
    static NumberField build(IntPoly poly, std::optional<Int> known_disc = std::nullopt,
                             SplitOverrides overrides = {});

    int degree() const { return degree_; }
    const IntPoly& poly() const { return poly_.coeffs; }
    const Int& poly_disc() const { return poly_disc_; }
    const Int& disc() const { return field_disc_; }
    const Int& index() const { return index_; }

    SplittingType split_prime(uint64_t p) const;
    int places_over_2() const; // t
    // norms (p^f with multiplicity by e bookkeeping) of the primes above p
    const SplitOverrides& overrides() const { return overrides_; }

    // m interval enclosures of sigma_i(element), ascending embedding order,
    // each of width <= precision
    std::vector<RatInterval> embed(const IntPoly& element, const Rat& precision) const;
    // decided signs (+1/-1) of a nonzero element under each embedding
    std::vector<int> embed_signs(const IntPoly& element) const;
    // current root boxes (refinable copies)
    std::vector<RatInterval> root_boxes(const Rat& width) const;

private:
    Polynomial poly_{};
    int degree_ = 0;
    Int poly_disc_, field_disc_, index_;
    std::vector<RatInterval> roots_;
    SplitOverrides overrides_;
};

} // namespace covol

#endif
