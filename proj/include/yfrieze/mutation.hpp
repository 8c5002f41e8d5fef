#pragma once

#include "yfrieze/cartan.hpp"
#include "yfrieze/frieze.hpp"
#include "yfrieze/symbolic.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace yfrieze {

// Positive diagonal D with D*B skew-symmetric, or nothing.
std::optional<std::vector<std::int64_t>> skew_symmetrizer(const IntMatrix& b);

// Square, skew-symmetrizable integer matrix. Throws NotSkewSymmetrizable.
class MutationMatrix {
public:
    static MutationMatrix validate(const IntMatrix& b);

    const IntMatrix& entries() const noexcept { return b_; }
    std::size_t rank() const noexcept { return b_.rows(); }
    const std::vector<std::int64_t>& skew_symmetrizer() const noexcept { return d_; }

private:
    IntMatrix b_;
    std::vector<std::int64_t> d_;
};

// Matrix mutation in direction k (0-based).
IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k);

enum class SeedFlavor { A, Y };

std::string flavor_name(SeedFlavor f);
SeedFlavor parse_flavor(const std::string& text); // "a"/"x"/"frieze", "y"/"yfrieze"
PatternKind kind_of(SeedFlavor f);

struct Seed {
    std::vector<RationalFn> vars;
    IntMatrix matrix;
    SeedFlavor flavor = SeedFlavor::A;

    // (x_1, ..., x_r) or (y_1, ..., y_r) with the given matrix.
    static Seed initial(const IntMatrix& b, SeedFlavor flavor);
    bool operator==(const Seed& o) const { return flavor == o.flavor && matrix == o.matrix && vars == o.vars; }
};

Seed mutate_seed(const Seed& s, std::size_t k);

// Seeds along the belt t(i,m), i in [0,r), m in [lo, hi]. The walk starts at
// t(1,0) carrying (B_A, root variables) and mutates in directions 1..r going
// right, r..1 going left.
class BeltTable {
public:
    BeltTable(CartanMatrix a, SeedFlavor flavor, long lo, long hi);

    const CartanMatrix& cartan() const noexcept { return a_; }
    SeedFlavor flavor() const noexcept { return flavor_; }
    long lo() const noexcept { return lo_; }
    long hi() const noexcept { return hi_; }
    std::size_t rank() const noexcept { return a_.rank(); }
    bool contains(long m) const noexcept { return m >= lo_ && m <= hi_; }

    const Seed& seed(std::size_t i, long m) const;
    // x(i,m) or y(i,m): variable i of the seed at t(i,m).
    const RationalFn& value(std::size_t i, long m) const { return seed(i, m).vars[i]; }

private:
    CartanMatrix a_;
    SeedFlavor flavor_;
    long lo_, hi_;
    std::vector<std::vector<Seed>> seeds_; // [m - lo][i]
};

BeltTable belt(const CartanMatrix& a, SeedFlavor flavor, long lo, long hi);

struct RelationReport {
    bool relations = true;         // the frieze / Y-frieze relations between belt values
    bool matrices = true;          // B_{t(i,m)} == B_{t(i,0)}
    bool exchange_columns = true;  // B_{t(i,m)} e_i == (-a_{j,i})_j
    bool cluster_layout = true;    // A-flavor: x_{t(i,m)} = (x(1,m+1),...,x(i-1,m+1),x(i,m),...,x(r,m))
    bool laurent_positive = true;  // every value Laurent with nonnegative coefficients
    std::vector<std::string> failures;

    bool ok() const { return relations && matrices && exchange_columns && cluster_layout && laurent_positive; }
};

RelationReport check_relations(const BeltTable& t);

// The pullback of y(i,m) under the ensemble map, as a monomial in belt
// variables x(j,n) and as a function of the root cluster.
struct PullbackMonomial {
    std::vector<std::tuple<std::size_t, long, int>> factors; // (j, n, exponent), exponent > 0
    RationalFn in_root;
};

// Needs x(j,m) and x(j,m+1) in the table (A-flavor).
PullbackMonomial ensemble_pullback(const BeltTable& xs, std::size_t i, long m);

// p*_B: y_j -> prod_l x_l^{b_{l,j}}, applied to a function of the root y's.
RationalFn ensemble_substitute(const IntMatrix& b, const RationalFn& f);

// All belt values evaluated at the all-ones root point, as a positive
// integer pattern. InvariantViolation when a value is not a positive integer.
PatternWindow unitary_pattern(const BeltTable& t);
// Finite type convenience: window [0, h+2] with period h+2.
PatternWindow unitary_pattern(const CartanMatrix& a, SeedFlavor flavor);

// Matrices reachable from b by mutation sequences, breadth first, capped.
std::vector<IntMatrix> mutation_class(const IntMatrix& b, std::size_t cap = 10000);
// Matrices one mutation away from b (all directions), deduplicated, sorted.
std::vector<IntMatrix> single_mutation_orbit(const IntMatrix& b);

} // namespace yfrieze
