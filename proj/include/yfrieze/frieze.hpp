#pragma once

#include "yfrieze/cartan.hpp"
#include "yfrieze/errors.hpp"
#include "yfrieze/semiring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yfrieze {

enum class PatternKind { frieze, yfrieze };

std::string kind_name(PatternKind k); // "frieze" / "yfrieze"
PatternKind parse_kind(const std::string& text); // also accepts "y", "a"

// Row is 0-based internally; rendered 1-based.
struct GridPoint {
    std::size_t row = 0;
    long col = 0;

    std::string to_string() const { return "(" + std::to_string(row + 1) + "," + std::to_string(col) + ")"; }
    bool operator==(const GridPoint&) const = default;
    // (i,m) < (j,n) iff m < n, or m == n and i < j.
    auto operator<=>(const GridPoint& o) const {
        if (auto c = col <=> o.col; c != 0) return c;
        return row <=> o.row;
    }
};

enum class KnitDirection { forward, backward };

class KnitFailure : public Error {
public:
    KnitFailure(GridPoint at, KnitDirection dir, const std::string& why)
        : Error("knitting fails at " + at.to_string() + " (" + (dir == KnitDirection::forward ? "forward" : "backward") +
                "): " + why),
          at_(at), dir_(dir) {}
    const char* code() const noexcept override { return "KnitFailure"; }
    GridPoint at() const noexcept { return at_; }
    KnitDirection direction() const noexcept { return dir_; }

private:
    GridPoint at_;
    KnitDirection dir_;
};

class PatternWindow {
public:
    PatternWindow(PatternKind kind, CartanMatrix cartan, SemiringId semiring, long lo, long hi);

    PatternKind kind() const noexcept { return kind_; }
    const CartanMatrix& cartan() const noexcept { return cartan_; }
    const SemiringId& semiring() const noexcept { return semiring_; }
    std::size_t rank() const noexcept { return cartan_.rank(); }
    long lo() const noexcept { return lo_; }
    long hi() const noexcept { return hi_; }
    long width() const noexcept { return hi_ - lo_ + 1; }
    bool contains(long m) const noexcept { return m >= lo_ && m <= hi_; }

    const SemiringValue& at(std::size_t i, long m) const;
    void set(std::size_t i, long m, SemiringValue v);
    std::vector<SemiringValue> column(long m) const;

    const std::optional<int>& period() const noexcept { return period_; }
    void set_period(std::optional<int> p) { period_ = p; }

private:
    PatternKind kind_;
    CartanMatrix cartan_;
    SemiringId semiring_;
    long lo_, hi_;
    std::vector<std::vector<SemiringValue>> rows_;
    std::optional<int> period_;
};

// Right-hand side of the relation at (i, m) for the pattern kind:
// frieze  1 + prod_{j>i} f(j,m)^{-a_ji} prod_{j<i} f(j,m+1)^{-a_ji}
// yfrieze     prod_{j>i} (1+k(j,m))^{-a_ji} prod_{j<i} (1+k(j,m+1))^{-a_ji}
// `lower(j)` gives the value at (j, m), `upper(j)` the value at (j, m+1).
template <class Lower, class Upper>
SemiringValue relation_rhs(PatternKind kind, const CartanMatrix& a, const SemiringId& s, std::size_t i, Lower lower,
                           Upper upper) {
    SemiringValue prod = sr_one(s);
    const auto r = a.rank();
    for (std::size_t j = 0; j < r; ++j) {
        if (j == i || a(j, i) == 0) continue;
        const auto e = static_cast<unsigned>(-a(j, i));
        const SemiringValue& v = j > i ? lower(j) : upper(j);
        prod = sr_mul(prod, sr_pow(kind == PatternKind::frieze ? v : sr_one_plus(v), e));
    }
    return kind == PatternKind::frieze ? sr_one_plus(prod) : prod;
}

// Knit from column-0 values over [lo, hi] (lo <= 0 <= hi). Forward first,
// then backward. Throws KnitFailure.
PatternWindow knit(const CartanMatrix& a, const SemiringId& s, PatternKind kind, const std::vector<SemiringValue>& initial,
                   long lo, long hi);

// Like knit but returns the failure instead of throwing.
struct KnitResult {
    std::optional<PatternWindow> window;
    std::optional<KnitFailure> failure;
};
KnitResult try_knit(const CartanMatrix& a, const SemiringId& s, PatternKind kind,
                    const std::vector<SemiringValue>& initial, long lo, long hi);

// Every relation and declared period inside the window; no division used.
bool verify(const PatternWindow& w);
// First violated relation, if any.
std::optional<GridPoint> first_violation(const PatternWindow& w);

// Column-m shift invariance over the window: values(i, m+p) == values(i, m).
bool has_period(const PatternWindow& w, int p);

// The map from friezes to Y-frieze patterns. Output columns [lo, hi-1].
PatternWindow ensemble_image(const PatternWindow& f);

// values(i,m) == values(F_A(i,m)) whenever both lie in the window.
bool check_glide(const PatternWindow& w);

} // namespace yfrieze
