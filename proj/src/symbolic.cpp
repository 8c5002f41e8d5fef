#include "yfrieze/symbolic.hpp"

#include "yfrieze/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace yfrieze {

namespace {

void require_same_nvars(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionMismatch("operands have different variable counts");
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponent neg_exp(const Exponent& a) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

bool dominates(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

int total_degree(const Exponent& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

std::string monomial_string(const Exponent& e, const std::string& prefix) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += prefix + std::to_string(i + 1);
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

// Exact division of polynomials (all exponents >= 0) by repeatedly
// cancelling lexicographic leading terms.
std::optional<LaurentPoly> divide_polynomials(const LaurentPoly& a, const LaurentPoly& d) {
    LaurentPoly rem = a;
    LaurentPoly quot(a.nvars());
    const auto& [dlead_e, dlead_c] = *d.terms().rbegin();
    const auto dmax = d.max_exponents();
    const auto amax = a.max_exponents();
    for (std::size_t i = 0; i < dmax.size(); ++i)
        if (dmax[i] > amax[i]) return std::nullopt;
    while (!rem.is_zero()) {
        const auto& [e, c] = *rem.terms().rbegin();
        if (!dominates(e, dlead_e) || !mpz_divisible_p(c.get_mpz_t(), dlead_c.get_mpz_t())) return std::nullopt;
        Exponent qe(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) qe[i] = e[i] - dlead_e[i];
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), dlead_c.get_mpz_t());
        const auto step = LaurentPoly::monomial(qe, qc);
        quot.add_term(qe, qc);
        rem -= step * d;
    }
    return quot;
}

} // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpz_class& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index, int power) {
    Exponent e(nvars, 0);
    e.at(index) = power;
    return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const mpz_class& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_constant(const mpz_class& c) const {
    if (c == 0) return is_zero();
    if (terms_.size() != 1) return false;
    const auto& [e, v] = *terms_.begin();
    return v == c && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::has_nonneg_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (auto v : e)
            if (v < 0) return false;
    return true;
}

Exponent LaurentPoly::min_exponents() const {
    if (terms_.empty()) return Exponent(nvars_, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Exponent LaurentPoly::max_exponents() const {
    if (terms_.empty()) return Exponent(nvars_, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
    if (e.size() != nvars_) throw DimensionMismatch("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    require_same_nvars(nvars_, rhs.nvars_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    require_same_nvars(nvars_, rhs.nvars_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out += rhs;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out -= rhs;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    require_same_nvars(nvars_, rhs.nvars_);
    LaurentPoly out(nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& by) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), add_exp(e, by), c);
    return out;
}

LaurentPoly LaurentPoly::scaled_down(const mpz_class& d) const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    require_same_nvars(nvars_, divisor.nvars_);
    if (divisor.is_zero()) throw DivideByZero("division by the zero polynomial");
    if (is_zero()) return LaurentPoly(nvars_);
    const auto dmin = divisor.min_exponents();
    const auto amin = min_exponents();
    const auto d = divisor.shifted(neg_exp(dmin));
    const auto a = shifted(neg_exp(amin));
    if (d.is_monomial()) {
        const auto& dc = d.terms_.begin()->second;
        for (const auto& [e, c] : a.terms_)
            if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
        Exponent shift(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) shift[i] = amin[i] - dmin[i];
        return a.scaled_down(dc).shifted(shift);
    }
    auto q = divide_polynomials(a, d);
    if (!q) return std::nullopt;
    Exponent shift(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) shift[i] = amin[i] - dmin[i];
    return q->shifted(shift);
}

mpq_class LaurentPoly::eval(const std::vector<mpq_class>& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong dimension");
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && point[i] == 0) throw PoleAtPoint("negative power of a zero coordinate");
            mpq_class p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(std::abs(e[i])));
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(std::abs(e[i])));
            p.canonicalize();
            if (e[i] < 0) p = 1 / p;
            term *= p;
        }
        sum += term;
    }
    return sum;
}

std::string LaurentPoly::to_string(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        const int da = total_degree(a->first);
        const int db = total_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        const auto mono = monomial_string(e, var_prefix);
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << mono;
        }
    }
    return os.str();
}

// ----------------------------------------------------------------- RationalFn

RationalFn::RationalFn(std::size_t nvars) : num_(nvars), den_(LaurentPoly::constant(nvars, 1)) {}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_nvars(num_.nvars(), den_.nvars());
    canonicalize();
}

RationalFn::RationalFn(const LaurentPoly& p) : RationalFn(p, LaurentPoly::constant(p.nvars(), 1)) {}

RationalFn RationalFn::constant(std::size_t nvars, const mpq_class& c) {
    return RationalFn(LaurentPoly::constant(nvars, c.get_num()), LaurentPoly::constant(nvars, c.get_den()));
}

RationalFn RationalFn::variable(std::size_t nvars, std::size_t index) {
    return RationalFn(LaurentPoly::variable(nvars, index));
}

void RationalFn::canonicalize() {
    if (den_.is_zero()) throw DivideByZero("rational function with zero denominator");
    const auto n = num_.nvars();
    for (int pass = 0; pass < 3; ++pass) {
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(n, 1);
            return;
        }
        // Clear common monomial content so both sides are polynomials.
        const auto mn = num_.min_exponents();
        const auto md = den_.min_exponents();
        Exponent shift(n);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            shift[i] = -std::min(mn[i], md[i]);
            any = any || shift[i] != 0;
        }
        if (any) {
            num_ = num_.shifted(shift);
            den_ = den_.shifted(shift);
        }
        const mpz_class g = gcd(num_.content(), den_.content());
        if (g != 1) {
            num_ = num_.scaled_down(g);
            den_ = den_.scaled_down(g);
        }
        if (den_.terms().rbegin()->second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (pass > 0 || den_.is_monomial()) return;
        if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            den_ = LaurentPoly::constant(n, 1);
            continue;
        }
        if (!num_.is_monomial()) {
            if (auto q = den_.divide_exact(num_)) {
                den_ = std::move(*q);
                num_ = LaurentPoly::constant(n, 1);
                continue;
            }
        }
        return;
    }
}

RationalFn RationalFn::operator+(const RationalFn& rhs) const {
    require_same_nvars(nvars(), rhs.nvars());
    if (den_ == rhs.den_) return RationalFn(num_ + rhs.num_, den_);
    return RationalFn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFn RationalFn::operator-(const RationalFn& rhs) const { return *this + (-rhs); }

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFn RationalFn::operator*(const RationalFn& rhs) const {
    require_same_nvars(nvars(), rhs.nvars());
    return RationalFn(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw DivideByZero("inverse of zero");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::operator/(const RationalFn& rhs) const {
    require_same_nvars(nvars(), rhs.nvars());
    if (rhs.is_zero()) throw DivideByZero("division by zero rational function");
    return RationalFn(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFn RationalFn::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    const auto k = static_cast<unsigned>(n);
    return RationalFn(num_.pow(k), den_.pow(k));
}

namespace {

// p(values) as (numerator, denominator) over the common denominator
// prod q_j^{maxdeg_j}, where values[j] = p_j / q_j.
std::pair<LaurentPoly, LaurentPoly> substitute_poly(const LaurentPoly& p, const std::vector<RationalFn>& values) {
    const auto n = values.empty() ? 0 : values[0].nvars();
    const auto maxe = p.max_exponents();
    const auto mine = p.min_exponents();
    for (auto v : mine)
        if (v < 0) throw DimensionMismatch("substitute expects a polynomial");
    std::vector<std::vector<LaurentPoly>> num_pow(values.size()), den_pow(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        num_pow[j].push_back(LaurentPoly::constant(n, 1));
        den_pow[j].push_back(LaurentPoly::constant(n, 1));
        for (int k = 1; k <= maxe[j]; ++k) {
            num_pow[j].push_back(num_pow[j].back() * values[j].num());
            den_pow[j].push_back(den_pow[j].back() * values[j].den());
        }
    }
    LaurentPoly total(n);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(n, c);
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (maxe[j] == 0) continue;
            term *= num_pow[j][e[j]];
            if (maxe[j] - e[j] > 0) term *= den_pow[j][maxe[j] - e[j]];
        }
        total += term;
    }
    LaurentPoly common = LaurentPoly::constant(n, 1);
    for (std::size_t j = 0; j < values.size(); ++j)
        if (maxe[j] > 0) common *= den_pow[j][maxe[j]];
    return {total, common};
}

} // namespace

RationalFn RationalFn::substitute(const std::vector<RationalFn>& values) const {
    if (values.size() != nvars()) throw DimensionMismatch("substitution needs one value per variable");
    if (values.empty()) return *this;
    const auto [n1, d1] = substitute_poly(num_, values);
    const auto [n2, d2] = substitute_poly(den_, values);
    if (n2.is_zero()) throw DivideByZero("substitution makes the denominator vanish");
    return RationalFn(n1 * d2, d1 * n2);
}

mpq_class RationalFn::eval(const std::vector<mpq_class>& point) const {
    const mpq_class d = den_.eval(point);
    if (d == 0) throw PoleAtPoint("denominator vanishes at the evaluation point");
    mpq_class out = num_.eval(point) / d;
    out.canonicalize();
    return out;
}

bool RationalFn::operator==(const RationalFn& rhs) const {
    if (nvars() != rhs.nvars()) return false;
    if (num_ == rhs.num_ && den_ == rhs.den_) return true;
    return num_ * rhs.den_ == rhs.num_ * den_;
}

std::string RationalFn::to_string(const std::string& var_prefix) const {
    const auto ns = num_.to_string(var_prefix);
    if (den_.is_constant(1)) return ns;
    const bool num_atomic = num_.size() == 1;
    bool den_atomic = false;
    if (den_.size() == 1) {
        const auto& [e, c] = *den_.terms().begin();
        const auto vars = std::count_if(e.begin(), e.end(), [](int v) { return v != 0; });
        den_atomic = (c == 1 && vars <= 1) || vars == 0;
    }
    std::string out = num_atomic ? ns : "(" + ns + ")";
    out += '/';
    const auto ds = den_.to_string(var_prefix);
    out += den_atomic ? ds : "(" + ds + ")";
    return out;
}

std::optional<LaurentPoly> rf_is_laurent(const RationalFn& f) { return f.num().divide_exact(f.den()); }

// --------------------------------------------------------------------- parser

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, std::size_t nvars, std::string prefix, bool allow_minus)
        : text_(text), nvars_(nvars), prefix_(std::move(prefix)), allow_minus_(allow_minus) {}

    RationalFn parse() {
        auto v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse expression '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFn expr() {
        RationalFn v = term();
        for (;;) {
            if (accept('+')) v = v + term();
            else if (allow_minus_ && accept('-')) v = v - term();
            else return v;
        }
    }

    RationalFn term() {
        RationalFn v = factor();
        for (;;) {
            if (accept('*')) v = v * factor();
            else if (accept('/')) {
                auto d = factor();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else return v;
        }
    }

    RationalFn factor() {
        RationalFn base = atom();
        if (accept('^')) {
            skip_ws();
            bool neg = false;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            const auto start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            const int e = std::stoi(text_.substr(start, pos_ - start));
            if (neg && base.is_zero()) fail("negative power of zero");
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    RationalFn atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            auto v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (allow_minus_ && ch == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const auto start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return RationalFn::constant(nvars_, mpq_class(mpz_class(text_.substr(start, pos_ - start))));
        }
        if (text_.compare(pos_, prefix_.size(), prefix_) == 0) {
            pos_ += prefix_.size();
            const auto start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected variable index");
            const auto idx = std::stoul(text_.substr(start, pos_ - start));
            if (idx < 1 || idx > nvars_) fail("variable index out of range");
            return RationalFn::variable(nvars_, idx - 1);
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    const std::string& text_;
    std::size_t nvars_;
    std::string prefix_;
    bool allow_minus_;
    std::size_t pos_ = 0;
};

} // namespace

RationalFn parse_rational(const std::string& text, std::size_t nvars, const std::string& var_prefix,
                          bool allow_minus) {
    return ExprParser(text, nvars, var_prefix, allow_minus).parse();
}

} // namespace yfrieze
