#include "yfrieze/enumerate.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <thread>

namespace yfrieze {

namespace {

std::vector<std::vector<mpq_class>> inverse(const CartanMatrix& a) {
    const auto n = a.rank();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a(i, j));
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw NotFiniteType("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        const mpq_class p = m[col][col];
        for (auto& v : m[col]) v /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const mpq_class f = m[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

} // namespace

std::vector<mpz_class> theorem_bound(const CartanMatrix& a) {
    const int h = coxeter_number(a); // throws NotFiniteType / UnrecognizedLabelling
    const auto n = a.rank();
    const auto inv = inverse(a);
    std::vector<long> beta(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            if (l != j) beta[j] -= a(l, j);
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class e = 0;
        for (std::size_t j = 0; j < n; ++j) e += beta[j] * inv[j][i];
        e *= h + 2;
        e.canonicalize();
        if (e < 0) throw InvariantViolation("negative bound exponent");
        // floor(2^{num/den}) = floor((2^num)^{1/den}).
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, e.get_num().get_ui());
        mpz_class root;
        mpz_root(root.get_mpz_t(), pow2.get_mpz_t(), e.get_den().get_ui());
        out.push_back(root);
    }
    return out;
}

namespace {

// Relation data: for row i, the (j, exponent, from_next_column) factors.
struct Factor {
    std::size_t j;
    unsigned e;
    bool upper; // j < i: value from column m+1
};

struct Kernel {
    PatternKind kind;
    std::size_t r;
    int period;
    std::vector<std::vector<Factor>> factors;

    explicit Kernel(const CartanMatrix& a, PatternKind k, int p) : kind(k), r(a.rank()), period(p), factors(a.rank()) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (j != i && a(j, i) != 0) factors[i].push_back({j, static_cast<unsigned>(-a(j, i)), j < i});
    }

    enum class Outcome { reject, accept, overflow };

    // 64-bit knitting of one period. Any exact-division failure rejects;
    // overflow hands the candidate to the arbitrary-precision path.
    Outcome run(const IntVector& col0, std::vector<IntVector>& cols) const {
        cols[0] = col0;
        for (int m = 0; m < period; ++m) {
            const auto& cur = cols[m];
            auto& nxt = cols[m + 1];
            for (std::size_t i = 0; i < r; ++i) {
                std::int64_t prod = 1;
                for (const auto& f : factors[i]) {
                    std::int64_t base = f.upper ? nxt[f.j] : cur[f.j];
                    if (kind == PatternKind::yfrieze && __builtin_add_overflow(base, 1, &base)) return Outcome::overflow;
                    for (unsigned k = 0; k < f.e; ++k)
                        if (__builtin_mul_overflow(prod, base, &prod)) return Outcome::overflow;
                }
                if (kind == PatternKind::frieze && __builtin_add_overflow(prod, 1, &prod)) return Outcome::overflow;
                if (prod % cur[i] != 0) return Outcome::reject;
                nxt[i] = prod / cur[i];
            }
        }
        return cols[period] == cols[0] ? Outcome::accept : Outcome::reject;
    }
};

bool accept_exact(const CartanMatrix& a, PatternKind kind, const IntVector& col0, int period) {
    const auto z = SemiringId::zpos();
    std::vector<SemiringValue> init;
    for (auto v : col0) init.push_back(SemiringValue::integer(z, v));
    const auto res = try_knit(a, z, kind, init, 0, period);
    if (res.failure) return false;
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!(res.window->at(i, period) == res.window->at(i, 0))) return false;
    return true;
}

} // namespace

EnumerationReport enumerate_patterns(const CartanMatrix& a, PatternKind kind, std::int64_t cap, unsigned threads) {
    if (cap < 1) throw ParseError("cap must be at least 1");
    if (!is_finite_type(a)) throw NotFiniteType(a.describe() + " is not of finite type");
    const int h = coxeter_number(a);
    EnumerationReport rep{a, kind, cap, h + 2, std::nullopt, {}, false, 0};
    if (kind == PatternKind::yfrieze) {
        rep.bound = theorem_bound(a);
        rep.complete = std::all_of(rep.bound->begin(), rep.bound->end(), [&](const mpz_class& b) { return b <= cap; });
    }
    const auto r = a.rank();
    const Kernel kernel(a, kind, rep.period);
    threads = std::max(1U, threads);

    // Work split over the first coordinate; results keyed by it for a
    // deterministic merge.
    std::map<std::int64_t, std::vector<IntVector>> found;
    std::vector<std::uint64_t> counts(threads, 0);
    std::vector<std::map<std::int64_t, std::vector<IntVector>>> partial(threads);
    auto worker = [&](unsigned t) {
        std::vector<IntVector> cols(static_cast<std::size_t>(rep.period + 1), IntVector(r));
        IntVector v(r, 1);
        for (std::int64_t first = 1 + t; first <= cap; first += threads) {
            std::fill(v.begin(), v.end(), 1);
            v[0] = first;
            for (;;) {
                ++counts[t];
                switch (kernel.run(v, cols)) {
                case Kernel::Outcome::accept: partial[t][first].push_back(v); break;
                case Kernel::Outcome::overflow:
                    if (accept_exact(a, kind, v, rep.period)) partial[t][first].push_back(v);
                    break;
                case Kernel::Outcome::reject: break;
                }
                // Odometer over coordinates 1..r-1.
                std::size_t k = r;
                while (k-- > 1) {
                    if (v[k] < cap) {
                        ++v[k];
                        break;
                    }
                    v[k] = 1;
                }
                if (k == 0 || r == 1) break;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (unsigned t = 0; t < threads; ++t) {
        rep.candidates += counts[t];
        for (auto& [k, vs] : partial[t]) found[k] = std::move(vs);
    }
    for (auto& [k, vs] : found)
        for (auto& v : vs) rep.patterns.push_back(std::move(v));
    std::sort(rep.patterns.begin(), rep.patterns.end());

    // Independent re-check of every hit with the generic engine.
    const auto z = SemiringId::zpos();
    for (const auto& p : rep.patterns) {
        std::vector<SemiringValue> init;
        for (auto v : p) init.push_back(SemiringValue::integer(z, v));
        auto w = knit(a, z, kind, init, 0, rep.period + 1);
        w.set_period(rep.period);
        if (!verify(w) || !check_glide(w))
            throw InvariantViolation("enumerated pattern fails re-verification");
    }
    return rep;
}

std::string report_to_json(const EnumerationReport& rep, int indent) {
    nlohmann::ordered_json j;
    j["cartan"] = rep.cartan.describe();
    j["kind"] = kind_name(rep.kind);
    j["cap"] = rep.cap;
    j["period"] = rep.period;
    if (rep.bound) {
        auto b = nlohmann::ordered_json::array();
        for (const auto& v : *rep.bound) b.push_back(v.get_str());
        j["bound"] = b;
    } else {
        j["bound"] = nullptr;
    }
    j["complete"] = rep.complete;
    j["candidates"] = rep.candidates;
    j["count"] = rep.patterns.size();
    j["patterns"] = rep.patterns;
    return j.dump(indent);
}

namespace {

TropicalReport tropical_solutions(const CartanMatrix& a) {
    if (!is_finite_type(a)) throw NotFiniteType(a.describe() + " is not of finite type");
    TropicalReport rep;
    rep.coxeter_number = coxeter_number(a);
    const auto c = coxeter_companion(a).companion;
    rep.geometric_sum_zero = geometric_sum(c, rep.coxeter_number).is_zero();
    if (!rep.geometric_sum_zero) throw InvariantViolation("I + C + ... + C^{h-1} is not zero");
    // Nonnegative orbit with zero sum: every term vanishes.
    rep.solutions.push_back(IntVector(a.rank(), 0));
    for (const auto& f : tropical_orbit(a, rep.solutions.front(), rep.coxeter_number))
        if (std::any_of(f.begin(), f.end(), [](auto v) { return v != 0; }))
            throw InvariantViolation("zero vector has a nonzero tropical orbit");
    return rep;
}

} // namespace

TropicalReport tropical_y_friezes(const CartanMatrix& a) { return tropical_solutions(a); }
TropicalReport tropical_friezes(const CartanMatrix& a) { return tropical_solutions(a); }

std::vector<IntVector> tropical_orbit(const CartanMatrix& a, const IntVector& f0, int steps) {
    const auto c = coxeter_companion(a).companion;
    std::vector<IntVector> out;
    IntVector f = f0;
    for (int m = 0; m < steps; ++m) {
        out.push_back(f);
        f = c.apply(f);
    }
    return out;
}

std::vector<IntVector> tropical_box_search(const CartanMatrix& a, PatternKind kind, std::int64_t box) {
    const int h = coxeter_number(a);
    const auto s = SemiringId::tropn();
    const auto r = a.rank();
    std::vector<IntVector> out;
    IntVector v(r, 0);
    for (;;) {
        std::vector<SemiringValue> init;
        for (auto x : v) init.push_back(SemiringValue::integer(s, x));
        if (!try_knit(a, s, kind, init, 0, h + 2).failure) out.push_back(v);
        std::size_t k = r;
        while (k-- > 0) {
            if (v[k] < box) {
                ++v[k];
                break;
            }
            v[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

} // namespace yfrieze
