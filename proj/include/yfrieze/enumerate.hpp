#pragma once

#include "yfrieze/cartan.hpp"
#include "yfrieze/frieze.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace yfrieze {

// Entry bound for arithmetic Y-frieze patterns in finite type: component i
// is floor(2^{p * sum_j beta_j (A^{-1})_{j,i}}) with beta_j = sum_{l != j}
// -a_{l,j} and p = h + 2. Throws NotFiniteType.
std::vector<mpz_class> theorem_bound(const CartanMatrix& a);

using IntVector = std::vector<std::int64_t>;

struct EnumerationReport {
    CartanMatrix cartan;
    PatternKind kind;
    std::int64_t cap = 0;
    int period = 0;                               // h + 2
    std::optional<std::vector<mpz_class>> bound;  // Y-friezes only
    std::vector<IntVector> patterns;              // column-0 vectors, sorted
    bool complete = false;                        // cap covers the proven bound
    std::uint64_t candidates = 0;                 // initial vectors examined
};

// Every column-0 vector in [1, cap]^r whose knitted pattern over one period
// consists of positive integers and closes up (column h+2 == column 0).
// Each hit is re-knit with the generic engine and checked for relations,
// periodicity and glide symmetry; a mismatch raises InvariantViolation.
EnumerationReport enumerate_patterns(const CartanMatrix& a, PatternKind kind, std::int64_t cap, unsigned threads = 1);

std::string report_to_json(const EnumerationReport& rep, int indent = -1);

// Tropical patterns over Z^max_{>=0}. On nonnegative values both relations
// become linear, f_{m+1} = C f_m, and I + C + ... + C^{h-1} = 0 forces the
// orbit to vanish, so the zero vector is the only solution.
struct TropicalReport {
    std::vector<IntVector> solutions;
    int coxeter_number = 0;
    bool geometric_sum_zero = false;
};
TropicalReport tropical_y_friezes(const CartanMatrix& a);
TropicalReport tropical_friezes(const CartanMatrix& a);

// f_0, C f_0, ..., C^{steps-1} f_0.
std::vector<IntVector> tropical_orbit(const CartanMatrix& a, const IntVector& f0, int steps);

// Brute force over [0, box]^r with the knitting engine on tropn: the column-0
// vectors whose pattern stays nonnegative over a full period.
std::vector<IntVector> tropical_box_search(const CartanMatrix& a, PatternKind kind, std::int64_t box);

} // namespace yfrieze
