#ifndef COVOL_ARITH_HPP
#define COVOL_ARITH_HPP

#include "covol/numfield.hpp"

#include <string>
#include <vector>

namespace covol {

// Unit generators from the dataset with verified norm and sign data.
// Sign ranks are insensitive to fundamentality; that caveat travels in
// the provenance string of every report built from this.
struct UnitSystem {
    const NumberField* field = nullptr;
    std::vector<IntPoly> generators;     // m-1 of them, -1 implicit
    std::vector<std::vector<int>> signs; // per generator, ascending embeddings
    bool verified = false;

    static UnitSystem verify(const NumberField& field, std::vector<IntPoly> generators);
};

enum class Provenance { Proven, Table };

struct ClassInvariants {
    int h = 1;
    Provenance h_provenance = Provenance::Table;
    int cl_2rank = 0;
    Int u_index;        // [U_k : U_k^+] = 2^(sign rank)
    bool u_plus_sq = false; // U_k^+ == U_k^2
    Int kprime_deg;     // [k'_B : k]
    bool kprime_upper_bound_only = false;
    Int kB_deg;         // [k_B : k]
    int t = 0;          // places over 2
};

// (u_index, u_plus_sq) from the GF(2) rank of the sign matrix (with -1 row)
std::pair<Int, bool> unit_index(const UnitSystem& units);

// GF(2) rank helper, rows as sign vectors (-1 -> 1, +1 -> 0)
int sign_matrix_rank(const std::vector<std::vector<int>>& signs, int m);

// rational upper bound on the Minkowski constant (m!/m^m) sqrt(d)
Rat minkowski_bound(const NumberField& field);

struct ClassNumberResult {
    int h;
    Provenance provenance;
    std::vector<std::string> notes;
};

// re-proves h = 1 where cheap: empty norm range below the Minkowski bound,
// or explicit principal generators found for every small prime ideal
ClassNumberResult verify_class_number(const NumberField& field, int table_h);

// [k'_B : k]; with h = 1 this is 1. Upper-bound fallback is flagged.
std::pair<Int, bool> degree_kprime(int h, int cl_2rank);

// [k_B : k] = 2^m [k'_B : k] / [U_k : U_k^+]; must divide out exactly
Int degree_kB(int m, const Int& kprime_deg, const Int& u_index);

} // namespace covol

#endif
