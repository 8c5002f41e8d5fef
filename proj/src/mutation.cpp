#include "yfrieze/mutation.hpp"

#include "yfrieze/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <queue>
#include <set>

namespace yfrieze {

std::optional<std::vector<std::int64_t>> skew_symmetrizer(const IntMatrix& b) {
    if (!b.is_square()) return std::nullopt;
    const auto n = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (b(i, i) != 0) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j)
            if ((b(i, j) > 0 && b(j, i) >= 0) || (b(i, j) < 0 && b(j, i) <= 0) || (b(i, j) == 0) != (b(j, i) == 0))
                return std::nullopt;
    }
    // d_i b_ij = -d_j b_ji, propagated along nonzero entries.
    std::vector<mpq_class> d(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (d[s] != 0) continue;
        d[s] = 1;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            const auto i = q.front();
            q.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (b(i, j) == 0) continue;
                const mpq_class want = -d[i] * b(i, j) / mpq_class(b(j, i));
                if (d[j] == 0) {
                    d[j] = want;
                    q.push(j);
                } else if (d[j] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    mpz_class l = 1;
    for (const auto& v : d) l = lcm(l, v.get_den());
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    for (const auto& v : d) {
        ints.push_back(v.get_num() * (l / v.get_den()));
        g = gcd(g, ints.back());
    }
    std::vector<std::int64_t> out;
    for (auto& v : ints) {
        v /= g;
        if (!v.fits_slong_p()) return std::nullopt;
        out.push_back(v.get_si());
    }
    return out;
}

MutationMatrix MutationMatrix::validate(const IntMatrix& b) {
    auto d = yfrieze::skew_symmetrizer(b);
    if (!d) throw NotSkewSymmetrizable("matrix " + b.to_literal() + " is not skew-symmetrizable");
    MutationMatrix m;
    m.b_ = b;
    m.d_ = std::move(*d);
    return m;
}

IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k) {
    const auto n = b.rows();
    if (k >= n) throw DimensionMismatch("mutation direction out of range");
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
                continue;
            }
            const auto bik = b(i, k);
            const auto bkj = b(k, j);
            out(i, j) = b(i, j) + std::max<std::int64_t>(bik, 0) * std::max<std::int64_t>(bkj, 0) -
                        std::max<std::int64_t>(-bik, 0) * std::max<std::int64_t>(-bkj, 0);
        }
    return out;
}

std::string flavor_name(SeedFlavor f) { return f == SeedFlavor::A ? "a" : "y"; }

SeedFlavor parse_flavor(const std::string& text) {
    if (text == "a" || text == "A" || text == "x" || text == "frieze") return SeedFlavor::A;
    if (text == "y" || text == "Y" || text == "yfrieze") return SeedFlavor::Y;
    throw ParseError("unknown seed flavor '" + text + "'");
}

PatternKind kind_of(SeedFlavor f) { return f == SeedFlavor::A ? PatternKind::frieze : PatternKind::yfrieze; }

Seed Seed::initial(const IntMatrix& b, SeedFlavor flavor) {
    MutationMatrix::validate(b);
    Seed s;
    s.matrix = b;
    s.flavor = flavor;
    for (std::size_t i = 0; i < b.rows(); ++i) s.vars.push_back(RationalFn::variable(b.rows(), i));
    return s;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    const auto n = s.vars.size();
    if (k >= n) throw DimensionMismatch("mutation direction out of range");
    const auto& b = s.matrix;
    Seed out = s;
    out.matrix = mutate_matrix(b, k);
    if (s.flavor == SeedFlavor::A) {
        RationalFn pos = RationalFn::constant(n, 1);
        RationalFn neg = RationalFn::constant(n, 1);
        for (std::size_t j = 0; j < n; ++j) {
            const auto e = b(j, k);
            if (e > 0) pos = pos * s.vars[j].pow(static_cast<int>(e));
            if (e < 0) neg = neg * s.vars[j].pow(static_cast<int>(-e));
        }
        out.vars[k] = (pos + neg) / s.vars[k];
    } else {
        const auto& yk = s.vars[k];
        const auto one_plus = RationalFn::constant(n, 1) + yk;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k || b(k, j) == 0) continue;
            const auto bkj = b(k, j);
            RationalFn v = s.vars[j];
            if (bkj > 0) v = v * yk.pow(static_cast<int>(bkj));
            v = v * one_plus.pow(static_cast<int>(-bkj));
            out.vars[j] = v;
        }
        out.vars[k] = yk.inverse();
    }
    return out;
}

BeltTable::BeltTable(CartanMatrix a, SeedFlavor flavor, long lo, long hi)
    : a_(std::move(a)), flavor_(flavor), lo_(std::min(lo, 0L)), hi_(std::max(hi, 0L)) {
    const auto r = a_.rank();
    seeds_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), std::vector<Seed>(r));
    const Seed root = Seed::initial(exchange_matrix(a_), flavor_);
    Seed cur = root;
    for (long m = 0; m <= hi_; ++m)
        for (std::size_t i = 0; i < r; ++i) {
            seeds_[static_cast<std::size_t>(m - lo_)][i] = cur;
            if (m < hi_ || i + 1 < r) cur = mutate_seed(cur, i);
        }
    cur = root;
    for (long m = -1; m >= lo_; --m)
        for (std::size_t i = r; i-- > 0;) {
            cur = mutate_seed(cur, i);
            seeds_[static_cast<std::size_t>(m - lo_)][i] = cur;
        }
}

const Seed& BeltTable::seed(std::size_t i, long m) const {
    if (!contains(m) || i >= rank()) throw WindowTooNarrow("belt vertex outside the computed range");
    return seeds_[static_cast<std::size_t>(m - lo_)][i];
}

BeltTable belt(const CartanMatrix& a, SeedFlavor flavor, long lo, long hi) { return BeltTable(a, flavor, lo, hi); }

namespace {

// Right side of the belt relation at (i, m) as a rational function.
RationalFn belt_rhs(const BeltTable& t, std::size_t i, long m) {
    const auto& a = t.cartan();
    const auto r = t.rank();
    RationalFn prod = RationalFn::constant(r, 1);
    const auto one = RationalFn::constant(r, 1);
    for (std::size_t j = 0; j < r; ++j) {
        if (j == i || a(j, i) == 0) continue;
        const auto& v = j > i ? t.value(j, m) : t.value(j, m + 1);
        const auto base = t.flavor() == SeedFlavor::A ? v : one + v;
        prod = prod * base.pow(static_cast<int>(-a(j, i)));
    }
    return t.flavor() == SeedFlavor::A ? one + prod : prod;
}

std::string at(std::size_t i, long m) { return "(" + std::to_string(i + 1) + "," + std::to_string(m) + ")"; }

} // namespace

RelationReport check_relations(const BeltTable& t) {
    RelationReport rep;
    const auto& a = t.cartan();
    const auto r = t.rank();
    for (long m = t.lo(); m <= t.hi(); ++m)
        for (std::size_t i = 0; i < r; ++i) {
            const auto& s = t.seed(i, m);
            if (m < t.hi() && !(t.value(i, m) * t.value(i, m + 1) == belt_rhs(t, i, m))) {
                rep.relations = false;
                rep.failures.push_back("relation fails at " + at(i, m));
            }
            if (!(s.matrix == t.seed(i, 0).matrix)) {
                rep.matrices = false;
                rep.failures.push_back("B_t differs from B_t(i,0) at " + at(i, m));
            }
            for (std::size_t j = 0; j < r; ++j) {
                const std::int64_t want = j == i ? 0 : -a(j, i);
                if (s.matrix(j, i) != want) {
                    rep.exchange_columns = false;
                    rep.failures.push_back("column " + std::to_string(i + 1) + " of B_t wrong at " + at(i, m));
                    break;
                }
            }
            if (t.flavor() == SeedFlavor::A && m < t.hi()) {
                for (std::size_t j = 0; j < r; ++j) {
                    const auto& want = j < i ? t.value(j, m + 1) : t.value(j, m);
                    if (!(s.vars[j] == want)) {
                        rep.cluster_layout = false;
                        rep.failures.push_back("cluster layout fails at " + at(i, m));
                        break;
                    }
                }
            }
            const auto lp = rf_is_laurent(t.value(i, m));
            if (!lp || !lp->has_nonneg_coeffs()) {
                rep.laurent_positive = false;
                rep.failures.push_back("value at " + at(i, m) + " is not a positive Laurent polynomial");
            }
        }
    return rep;
}

PullbackMonomial ensemble_pullback(const BeltTable& xs, std::size_t i, long m) {
    if (xs.flavor() != SeedFlavor::A) throw DimensionMismatch("ensemble pullback needs the cluster belt");
    if (!xs.contains(m) || !xs.contains(m + 1)) throw WindowTooNarrow("pullback needs columns m and m+1");
    const auto& a = xs.cartan();
    const auto r = xs.rank();
    PullbackMonomial out{{}, RationalFn::constant(r, 1)};
    for (std::size_t j = 0; j < r; ++j) {
        if (j == i || a(j, i) == 0) continue;
        const long n = j < i ? m + 1 : m;
        const int e = static_cast<int>(-a(j, i));
        out.factors.emplace_back(j, n, e);
        out.in_root = out.in_root * xs.value(j, n).pow(e);
    }
    return out;
}

RationalFn ensemble_substitute(const IntMatrix& b, const RationalFn& f) {
    const auto r = b.rows();
    std::vector<RationalFn> images;
    for (std::size_t j = 0; j < r; ++j) {
        Exponent e(r, 0);
        for (std::size_t l = 0; l < r; ++l) e[l] = static_cast<int>(b(l, j));
        images.emplace_back(LaurentPoly::monomial(e));
    }
    return f.substitute(images);
}

PatternWindow unitary_pattern(const BeltTable& t) {
    const auto r = t.rank();
    const std::vector<mpq_class> ones(r, mpq_class(1));
    PatternWindow w(kind_of(t.flavor()), t.cartan(), SemiringId::zpos(), t.lo(), t.hi());
    for (long m = t.lo(); m <= t.hi(); ++m)
        for (std::size_t i = 0; i < r; ++i) {
            const mpq_class v = t.value(i, m).eval(ones);
            if (v.get_den() != 1 || v <= 0)
                throw InvariantViolation("unitary value at " + at(i, m) + " is " + v.get_str() +
                                         ", not a positive integer");
            w.set(i, m, SemiringValue::integer(SemiringId::zpos(), v.get_num()));
        }
    return w;
}

PatternWindow unitary_pattern(const CartanMatrix& a, SeedFlavor flavor) {
    const int h = coxeter_number(a);
    auto w = unitary_pattern(belt(a, flavor, 0, h + 2));
    w.set_period(h + 2);
    return w;
}

std::vector<IntMatrix> mutation_class(const IntMatrix& b, std::size_t cap) {
    std::set<IntMatrix> seen{b};
    std::queue<IntMatrix> q;
    q.push(b);
    while (!q.empty() && seen.size() < cap) {
        const auto cur = q.front();
        q.pop();
        for (std::size_t k = 0; k < cur.rows(); ++k) {
            auto next = mutate_matrix(cur, k);
            if (seen.insert(next).second) q.push(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<IntMatrix> single_mutation_orbit(const IntMatrix& b) {
    std::set<IntMatrix> out;
    for (std::size_t k = 0; k < b.rows(); ++k) out.insert(mutate_matrix(b, k));
    return {out.begin(), out.end()};
}

} // namespace yfrieze
