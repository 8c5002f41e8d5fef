#pragma once

#include "yfrieze/cartan.hpp"
#include "yfrieze/symbolic.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace yfrieze {

// Rank-2 generalized cluster algebra with exchange polynomials
// P_b = (1+t)^b and P_c = (1+t)^c:
//   x_k x_{k+2} = (1 + x_{k+1})^c  for k odd,
//   x_k x_{k+2} = (1 + x_{k+1})^b  for k even.
struct GcaParams {
    int b = 1;
    int c = 1;

    static GcaParams validate(int b, int c); // ParseError unless b, c >= 1
    static GcaParams from_cartan(const CartanMatrix& a); // A = [[2,-b],[-c,2]]

    // Exponent used in the relation x_k x_{k+2} = (1 + x_{k+1})^e.
    int exponent(long k) const { return (k % 2 != 0) ? c : b; }
    bool finite_type() const { return b * c <= 3; }
    CartanMatrix cartan() const;
};

class GcaVariableTable {
public:
    GcaVariableTable(GcaParams p, long lo, long hi);

    const GcaParams& params() const noexcept { return p_; }
    long lo() const noexcept { return lo_; }
    long hi() const noexcept { return hi_; }
    const RationalFn& at(long k) const;
    const std::optional<int>& period() const noexcept { return period_; }
    void set_period(std::optional<int> d) { period_ = d; }

    // The defining relation at every k with k, k+2 in range.
    bool relations_hold() const;
    // Every entry Laurent in (x_1, x_2) with nonnegative coefficients.
    bool laurent_positive() const;

private:
    GcaParams p_;
    long lo_, hi_;
    std::vector<RationalFn> vars_;
    std::optional<int> period_;
};

// x_k for k in [lo, hi] as functions of (x_1, x_2); needs lo <= 1, hi >= 2.
GcaVariableTable gca_variables(const GcaParams& p, long lo, long hi);

// Least d <= maxk with x_{1+d} = x_1 and x_{2+d} = x_2. Candidates are found
// by evaluating the recursion modulo a large prime and then confirmed on
// canonical rational functions.
std::optional<int> gca_period(const GcaParams& p, int maxk);

// Numeric recursion from x_{k0} = u, x_{k0+1} = v; returns x_k for k in
// [lo, hi] (lo <= k0, hi >= k0+1), indexed from lo.
std::vector<mpq_class> gca_values(const GcaParams& p, long k0, const mpq_class& u, const mpq_class& v, long lo,
                                  long hi);

struct RegionTest {
    bool inside = false;
    bool truncated = false; // infinite type, or values grew past the size guard
    long lo = 0, hi = 0;    // range of k examined
};

// Whether every x_k, k in [2 - maxk, maxk], is >= 1 at (x_1, x_2) = point.
RegionTest superunitary_contains(const GcaParams& p, const mpq_class& x1, const mpq_class& x2, int maxk);

// CSV "x,y,inside" over the grid {extent*i/res} x {extent*j/res}.
std::string region_csv(const GcaParams& p, int resolution, int extent, int maxk);

// Renaming y(i,0) -> x_i identifies the Y-belt value y(i,m) of
// A = [[2,-b],[-c,2]] with x_{2m+i}, for all m in [mlo, mhi].
bool phi_check(const CartanMatrix& a, long mlo, long mhi);

// For finite type: the points (x_1, x_2) at which some generalized cluster
// (x_k, x_{k+1}) evaluates to (1, 1), one per k in a period.
struct ClusterFriezes {
    std::vector<std::pair<mpz_class, mpz_class>> points;
    bool positive_integers = true; // every x_j at every point is a positive integer
    bool pairwise_distinct = true;
};
ClusterFriezes cluster_friezes(const GcaParams& p);

} // namespace yfrieze
