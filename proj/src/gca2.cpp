#include "yfrieze/gca2.hpp"

#include "yfrieze/errors.hpp"
#include "yfrieze/mutation.hpp"

#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace yfrieze {

GcaParams GcaParams::validate(int b, int c) {
    if (b < 1 || c < 1) throw ParseError("b and c must be positive integers");
    return {b, c};
}

GcaParams GcaParams::from_cartan(const CartanMatrix& a) {
    if (a.rank() != 2) throw DimensionMismatch("generalized cluster algebra needs a rank-2 Cartan matrix");
    return validate(static_cast<int>(-a(0, 1)), static_cast<int>(-a(1, 0)));
}

CartanMatrix GcaParams::cartan() const { return CartanMatrix::validate(IntMatrix{{2, -b}, {-c, 2}}); }

GcaVariableTable::GcaVariableTable(GcaParams p, long lo, long hi) : p_(p), lo_(lo), hi_(hi) {
    if (lo > 1 || hi < 2) throw WindowTooNarrow("range must contain k = 1, 2");
    vars_.resize(static_cast<std::size_t>(hi - lo + 1));
    auto slot = [&](long k) -> RationalFn& { return vars_[static_cast<std::size_t>(k - lo_)]; };
    const auto one = RationalFn::constant(2, 1);
    slot(1) = RationalFn::variable(2, 0);
    slot(2) = RationalFn::variable(2, 1);
    for (long k = 1; k + 2 <= hi; ++k) slot(k + 2) = (one + slot(k + 1)).pow(p_.exponent(k)) / slot(k);
    for (long k = 0; k >= lo; --k) slot(k) = (one + slot(k + 1)).pow(p_.exponent(k)) / slot(k + 2);
}

const RationalFn& GcaVariableTable::at(long k) const {
    if (k < lo_ || k > hi_) throw WindowTooNarrow("x_" + std::to_string(k) + " outside the computed range");
    return vars_[static_cast<std::size_t>(k - lo_)];
}

bool GcaVariableTable::relations_hold() const {
    const auto one = RationalFn::constant(2, 1);
    for (long k = lo_; k + 2 <= hi_; ++k)
        if (!(at(k) * at(k + 2) == (one + at(k + 1)).pow(p_.exponent(k)))) return false;
    return true;
}

bool GcaVariableTable::laurent_positive() const {
    for (const auto& v : vars_) {
        auto lp = rf_is_laurent(v);
        if (!lp || !lp->has_nonneg_coeffs()) return false;
    }
    return true;
}

GcaVariableTable gca_variables(const GcaParams& p, long lo, long hi) { return GcaVariableTable(p, lo, hi); }

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// x_1 .. x_n modulo the prime at a random point; empty if a zero divisor shows up.
std::vector<std::uint64_t> modular_sequence(const GcaParams& p, std::uint64_t u, std::uint64_t v, long n) {
    std::vector<std::uint64_t> x(static_cast<std::size_t>(n + 1), 0);
    x[1] = u;
    x[2] = v;
    for (long k = 1; k + 2 <= n; ++k) {
        if (x[k] == 0) return {};
        const auto num = powmod((x[k + 1] + 1) % kPrime, static_cast<std::uint64_t>(p.exponent(k)));
        x[k + 2] = mulmod(num, powmod(x[k], kPrime - 2));
    }
    return x;
}

} // namespace

std::optional<int> gca_period(const GcaParams& p, int maxk) {
    if (maxk < 1) return std::nullopt;
    std::mt19937_64 rng(0x5eed + static_cast<unsigned>(p.b * 131 + p.c));
    std::vector<std::uint64_t> x;
    while (x.empty()) x = modular_sequence(p, rng() % kPrime, rng() % kPrime, maxk + 2);
    std::optional<GcaVariableTable> table;
    for (int d = 1; d <= maxk; ++d) {
        if (x[1 + d] != x[1] || x[2 + d] != x[2]) continue;
        if (!table || table->hi() < d + 2) table.emplace(p, 1, d + 2);
        if (table->at(1 + d) == table->at(1) && table->at(2 + d) == table->at(2)) return d;
    }
    return std::nullopt;
}

std::vector<mpq_class> gca_values(const GcaParams& p, long k0, const mpq_class& u, const mpq_class& v, long lo,
                                  long hi) {
    if (lo > k0 || hi < k0 + 1) throw WindowTooNarrow("range must contain k0 and k0+1");
    std::vector<mpq_class> x(static_cast<std::size_t>(hi - lo + 1));
    auto slot = [&](long k) -> mpq_class& { return x[static_cast<std::size_t>(k - lo)]; };
    auto power = [](const mpq_class& base, int e) {
        mpq_class out;
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
        return out;
    };
    slot(k0) = u;
    slot(k0 + 1) = v;
    for (long k = k0; k + 2 <= hi; ++k) {
        if (slot(k) == 0) throw PoleAtPoint("zero generalized cluster variable");
        slot(k + 2) = power(1 + slot(k + 1), p.exponent(k)) / slot(k);
    }
    for (long k = k0 - 1; k >= lo; --k) {
        if (slot(k + 2) == 0) throw PoleAtPoint("zero generalized cluster variable");
        slot(k) = power(1 + slot(k + 1), p.exponent(k)) / slot(k + 2);
    }
    return x;
}

RegionTest superunitary_contains(const GcaParams& p, const mpq_class& x1, const mpq_class& x2, int maxk) {
    if (x1 <= 0 || x2 <= 0) throw PoleAtPoint("superunitary test needs a positive point");
    // Doubly exponential growth in infinite type; stop once entries get huge.
    constexpr std::size_t kMaxBits = 1U << 16;
    RegionTest out;
    out.lo = 2 - maxk;
    out.hi = maxk;
    out.truncated = !p.finite_type();
    auto big = [&](const mpq_class& q) {
        return mpz_sizeinbase(q.get_num_mpz_t(), 2) > kMaxBits || mpz_sizeinbase(q.get_den_mpz_t(), 2) > kMaxBits;
    };
    auto power = [](const mpq_class& base, int e) {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
        return r;
    };
    if (x1 < 1 || x2 < 1) return out;
    // Forward from (x_1, x_2), then backward.
    mpq_class a = x1, b = x2;
    for (long k = 1; k + 2 <= out.hi; ++k) {
        mpq_class next = power(1 + b, p.exponent(k)) / a;
        if (next < 1) return out;
        if (big(next)) {
            out.truncated = true;
            out.hi = k + 1;
            break;
        }
        a = b;
        b = next;
    }
    a = x1;
    b = x2; // (x_k, x_{k+1}) walking down
    for (long k = 0; k >= out.lo; --k) {
        mpq_class prev = power(1 + a, p.exponent(k)) / b;
        if (prev < 1) return out;
        if (big(prev)) {
            out.truncated = true;
            out.lo = k + 1;
            break;
        }
        b = a;
        a = prev;
    }
    out.inside = true;
    return out;
}

std::string region_csv(const GcaParams& p, int resolution, int extent, int maxk) {
    if (resolution < 1 || extent < 1) throw ParseError("resolution and extent must be positive");
    std::ostringstream os;
    os << "x,y,inside\n" << std::setprecision(10);
    for (int i = 0; i <= resolution; ++i)
        for (int j = 0; j <= resolution; ++j) {
            mpq_class x(extent * i, resolution), y(extent * j, resolution);
            x.canonicalize();
            y.canonicalize();
            bool inside = false;
            if (x > 0 && y > 0) inside = superunitary_contains(p, x, y, maxk).inside;
            os << x.get_d() << ',' << y.get_d() << ',' << (inside ? 1 : 0) << '\n';
        }
    return os.str();
}

bool phi_check(const CartanMatrix& a, long mlo, long mhi) {
    const auto p = GcaParams::from_cartan(a);
    const auto ys = belt(a, SeedFlavor::Y, mlo, mhi);
    const GcaVariableTable xs(p, std::min(1L, 2 * ys.lo() + 1), std::max(2L, 2 * ys.hi() + 2));
    // y_1 = y(1,0), y_2 = y(2,0) (1 + y(1,0))^{a_12}.
    const auto x1 = RationalFn::variable(2, 0);
    const auto x2 = RationalFn::variable(2, 1);
    const std::vector<RationalFn> sigma{x1, x2 * (RationalFn::constant(2, 1) + x1).pow(static_cast<int>(a(0, 1)))};
    for (long m = ys.lo(); m <= ys.hi(); ++m)
        for (std::size_t i = 0; i < 2; ++i)
            if (!(ys.value(i, m).substitute(sigma) == xs.at(2 * m + static_cast<long>(i) + 1))) return false;
    return true;
}

ClusterFriezes cluster_friezes(const GcaParams& p) {
    if (!p.finite_type()) throw NotFiniteType("cluster friezes are enumerated only for bc <= 3");
    const auto d = gca_period(p, 16);
    if (!d) throw InvariantViolation("finite-type recursion without a period");
    ClusterFriezes out;
    std::set<std::pair<mpz_class, mpz_class>> seen;
    for (long k = 1; k <= *d; ++k) {
        const auto vals = gca_values(p, k, 1, 1, 1, k + *d + 1);
        for (const auto& v : vals)
            if (v.get_den() != 1 || v <= 0) out.positive_integers = false;
        std::pair<mpz_class, mpz_class> pt{vals[0].get_num(), vals[1].get_num()};
        if (!seen.insert(pt).second) out.pairwise_distinct = false;
        out.points.push_back(pt);
    }
    return out;
}

} // namespace yfrieze
