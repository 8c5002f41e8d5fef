#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace yfrieze {

using Exponent = std::vector<int>;

// Multivariate Laurent polynomial with arbitrary-precision integer
// coefficients. Terms are kept in a map keyed by exponent vector, so the
// representation is canonical: no zero coefficients, lexicographic order.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, mpz_class>;

    explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const mpz_class& c);
    static LaurentPoly variable(std::size_t nvars, std::size_t index, int power = 1);
    static LaurentPoly monomial(const Exponent& e, const mpz_class& c = 1);

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant(const mpz_class& c) const;
    bool has_nonneg_coeffs() const;
    // All exponents >= 0.
    bool is_polynomial() const;

    // Componentwise minimum / maximum exponent; zero vector for the zero poly.
    Exponent min_exponents() const;
    Exponent max_exponents() const;
    mpz_class content() const; // gcd of coefficients (0 for the zero poly)

    void add_term(const Exponent& e, const mpz_class& c);

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    LaurentPoly pow(unsigned n) const;
    LaurentPoly shifted(const Exponent& by) const; // multiply by x^by
    LaurentPoly scaled_down(const mpz_class& d) const; // exact division of every coefficient

    // Exact quotient q with q * divisor == *this in the Laurent ring, if one
    // exists with integer coefficients.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    mpq_class eval(const std::vector<mpq_class>& point) const;

    // Deterministic rendering: terms by total degree, then exponent order.
    std::string to_string(const std::string& var_prefix = "x") const;

    bool operator==(const LaurentPoly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

private:
    std::size_t nvars_;
    Terms terms_;
};

// Element of Q(x_1..x_r) as num/den. Canonical form: num and den are
// polynomials without a common monomial factor, integer content removed,
// leading coefficient of den positive, and den == 1 or num == 1 whenever the
// value (or its reciprocal) is a Laurent polynomial. No general gcd is taken,
// so equality is decided by cross-multiplication.
class RationalFn {
public:
    explicit RationalFn(std::size_t nvars = 0);
    RationalFn(LaurentPoly num, LaurentPoly den);
    explicit RationalFn(const LaurentPoly& p);

    static RationalFn constant(std::size_t nvars, const mpq_class& c);
    static RationalFn variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const noexcept { return num_.nvars(); }
    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& rhs) const;
    RationalFn operator-(const RationalFn& rhs) const;
    RationalFn operator*(const RationalFn& rhs) const;
    RationalFn operator/(const RationalFn& rhs) const; // DivideByZero
    RationalFn operator-() const;
    RationalFn inverse() const;
    RationalFn pow(int n) const;

    // Substitute each variable x_j by values[j].
    RationalFn substitute(const std::vector<RationalFn>& values) const;

    // PoleAtPoint when den vanishes at the point.
    mpq_class eval(const std::vector<mpq_class>& point) const;

    bool operator==(const RationalFn& rhs) const;

    // "num" or "(num)/(den)", parenthesized when multi-term.
    std::string to_string(const std::string& var_prefix = "x") const;

private:
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

// The Laurent polynomial equal to f, if f lies in Z[x^{±1}].
std::optional<LaurentPoly> rf_is_laurent(const RationalFn& f);

// Parse an expression in the grammar
//   expr := term ('+' term)*,  term := factor (('*'|'/') factor)*,
//   factor := atom ('^' int)?, atom := int | <prefix><index> | '(' expr ')'
// Variables are 1-based (y1, y2, ...). Unary minus is accepted only when
// `allow_minus` is set.
RationalFn parse_rational(const std::string& text, std::size_t nvars, const std::string& var_prefix,
                          bool allow_minus = true);

} // namespace yfrieze
