#include "yfrieze/frieze.hpp"

namespace yfrieze {

std::string kind_name(PatternKind k) { return k == PatternKind::frieze ? "frieze" : "yfrieze"; }

PatternKind parse_kind(const std::string& text) {
    if (text == "frieze" || text == "a" || text == "A") return PatternKind::frieze;
    if (text == "yfrieze" || text == "y" || text == "Y" || text == "y-frieze") return PatternKind::yfrieze;
    throw ParseError("unknown pattern kind '" + text + "'");
}

PatternWindow::PatternWindow(PatternKind kind, CartanMatrix cartan, SemiringId semiring, long lo, long hi)
    : kind_(kind), cartan_(std::move(cartan)), semiring_(semiring), lo_(lo), hi_(hi) {
    if (hi < lo) throw WindowTooNarrow("empty column range");
    rows_.assign(cartan_.rank(), std::vector<SemiringValue>(static_cast<std::size_t>(hi - lo + 1)));
}

const SemiringValue& PatternWindow::at(std::size_t i, long m) const {
    if (i >= rows_.size() || !contains(m)) throw WindowTooNarrow("cell outside the window");
    return rows_[i][static_cast<std::size_t>(m - lo_)];
}

void PatternWindow::set(std::size_t i, long m, SemiringValue v) {
    if (i >= rows_.size() || !contains(m)) throw WindowTooNarrow("cell outside the window");
    if (!(v.id() == semiring_)) throw MixedSemirings("value from " + v.id().name() + " in a " + semiring_.name() + " window");
    rows_[i][static_cast<std::size_t>(m - lo_)] = std::move(v);
}

std::vector<SemiringValue> PatternWindow::column(long m) const {
    std::vector<SemiringValue> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(at(i, m));
    return out;
}

KnitResult try_knit(const CartanMatrix& a, const SemiringId& s, PatternKind kind,
                    const std::vector<SemiringValue>& initial, long lo, long hi) {
    const auto r = a.rank();
    if (initial.size() != r) throw DimensionMismatch("need one initial value per row");
    if (lo > 0 || hi < 0) throw WindowTooNarrow("column range must contain 0");
    PatternWindow w(kind, a, s, lo, hi);
    for (std::size_t i = 0; i < r; ++i) w.set(i, 0, initial[i]);

    GridPoint at;
    KnitDirection dir = KnitDirection::forward;
    try {
        for (long m = 0; m < hi; ++m)
            for (std::size_t i = 0; i < r; ++i) {
                at = {i, m + 1};
                auto rhs = relation_rhs(
                    kind, a, s, i, [&](std::size_t j) -> const SemiringValue& { return w.at(j, m); },
                    [&](std::size_t j) -> const SemiringValue& { return w.at(j, m + 1); });
                w.set(i, m + 1, sr_try_div(rhs, w.at(i, m)));
            }
        dir = KnitDirection::backward;
        for (long m = 0; m > lo; --m)
            for (std::size_t k = r; k-- > 0;) {
                at = {k, m - 1};
                auto rhs = relation_rhs(
                    kind, a, s, k, [&](std::size_t j) -> const SemiringValue& { return w.at(j, m - 1); },
                    [&](std::size_t j) -> const SemiringValue& { return w.at(j, m); });
                w.set(k, m - 1, sr_try_div(rhs, w.at(k, m)));
            }
    } catch (const DivisionFailure& e) {
        return {std::nullopt, KnitFailure(at, dir, e.what())};
    }
    return {std::move(w), std::nullopt};
}

PatternWindow knit(const CartanMatrix& a, const SemiringId& s, PatternKind kind, const std::vector<SemiringValue>& initial,
                   long lo, long hi) {
    auto res = try_knit(a, s, kind, initial, lo, hi);
    if (res.failure) throw *res.failure;
    return std::move(*res.window);
}

std::optional<GridPoint> first_violation(const PatternWindow& w) {
    const auto& a = w.cartan();
    for (long m = w.lo(); m < w.hi(); ++m)
        for (std::size_t i = 0; i < w.rank(); ++i) {
            auto rhs = relation_rhs(
                w.kind(), a, w.semiring(), i, [&](std::size_t j) -> const SemiringValue& { return w.at(j, m); },
                [&](std::size_t j) -> const SemiringValue& { return w.at(j, m + 1); });
            if (!(sr_mul(w.at(i, m), w.at(i, m + 1)) == rhs)) return GridPoint{i, m};
        }
    return std::nullopt;
}

bool has_period(const PatternWindow& w, int p) {
    if (p <= 0) return false;
    for (long m = w.lo(); m + p <= w.hi(); ++m)
        for (std::size_t i = 0; i < w.rank(); ++i)
            if (!(w.at(i, m) == w.at(i, m + p))) return false;
    return true;
}

bool verify(const PatternWindow& w) {
    if (first_violation(w)) return false;
    return !w.period() || has_period(w, *w.period());
}

PatternWindow ensemble_image(const PatternWindow& f) {
    if (f.kind() != PatternKind::frieze) throw DimensionMismatch("ensemble image takes a frieze pattern");
    if (f.width() < 2) throw WindowTooNarrow("ensemble image needs at least two columns");
    const auto& a = f.cartan();
    const auto& s = f.semiring();
    PatternWindow out(PatternKind::yfrieze, a, s, f.lo(), f.hi() - 1);
    for (long m = f.lo(); m < f.hi(); ++m)
        for (std::size_t i = 0; i < f.rank(); ++i) {
            SemiringValue prod = sr_one(s);
            for (std::size_t j = 0; j < f.rank(); ++j) {
                if (j == i || a(j, i) == 0) continue;
                const auto& v = j > i ? f.at(j, m) : f.at(j, m + 1);
                prod = sr_mul(prod, sr_pow(v, static_cast<unsigned>(-a(j, i))));
            }
            out.set(i, m, prod);
        }
    out.set_period(f.period());
    return out;
}

bool check_glide(const PatternWindow& w) {
    const auto g = glide_data(w.cartan());
    std::vector<bool> row_checked(w.rank(), false);
    bool ok = true;
    for (long m = w.lo(); m <= w.hi(); ++m)
        for (std::size_t i = 0; i < w.rank(); ++i) {
            const auto [j, n] = g.apply(i, m);
            if (!w.contains(n)) continue;
            row_checked[i] = true;
            if (!(w.at(i, m) == w.at(j, n))) ok = false;
        }
    for (bool c : row_checked)
        if (!c) throw WindowTooNarrow("window too narrow to compare glide-related cells");
    return ok;
}

} // namespace yfrieze
