#pragma once

#include "yfrieze/symbolic.hpp"

#include <gmpxx.h>

#include <string>
#include <variant>

namespace yfrieze {

enum class SemiringKind {
    zpos,      // (Z_{>0}, *, +)
    qpos,      // (Q_{>0}, *, +), a semifield
    tropn,     // Z^max_{>=0}: max as addition, + as multiplication
    trop,      // Z^max, the tropical semifield
    universal, // subtraction-free rational functions in r variables
};

struct SemiringId {
    SemiringKind kind = SemiringKind::zpos;
    std::size_t nvars = 0; // universal(r) only

    static SemiringId zpos() { return {SemiringKind::zpos, 0}; }
    static SemiringId qpos() { return {SemiringKind::qpos, 0}; }
    static SemiringId tropn() { return {SemiringKind::tropn, 0}; }
    static SemiringId trop() { return {SemiringKind::trop, 0}; }
    static SemiringId universal(std::size_t r) { return {SemiringKind::universal, r}; }

    // "zpos", "qpos", "tropn", "trop", "universal(3)".
    std::string name() const;
    // Accepts the names above; "universal" alone needs `default_rank`.
    static SemiringId parse(const std::string& text, std::size_t default_rank = 0);

    bool is_semifield() const noexcept {
        return kind == SemiringKind::qpos || kind == SemiringKind::trop || kind == SemiringKind::universal;
    }
    bool is_tropical() const noexcept { return kind == SemiringKind::tropn || kind == SemiringKind::trop; }

    bool operator==(const SemiringId&) const = default;
};

// Element of one registered semiring. Integer-valued instances (zpos and both
// tropical ones) hold an mpz_class, qpos an mpq_class, universal a RationalFn.
class SemiringValue {
public:
    using Storage = std::variant<mpz_class, mpq_class, RationalFn>;

    SemiringValue() = default;

    // Validating constructors; ParseError when the value lies outside the
    // carrier (0 in zpos, -1 in tropn, ...).
    static SemiringValue integer(SemiringId id, const mpz_class& v);
    static SemiringValue rational(const mpq_class& v);
    static SemiringValue expression(const RationalFn& f);

    const SemiringId& id() const noexcept { return id_; }
    const Storage& storage() const noexcept { return v_; }
    const mpz_class& as_int() const { return std::get<mpz_class>(v_); }
    const mpq_class& as_rat() const { return std::get<mpq_class>(v_); }
    const RationalFn& as_expr() const { return std::get<RationalFn>(v_); }

    std::string to_string() const;

    bool operator==(const SemiringValue& rhs) const;

private:
    SemiringValue(SemiringId id, Storage v) : id_(id), v_(std::move(v)) {}

    SemiringId id_;
    Storage v_;

    friend SemiringValue sr_add(const SemiringValue&, const SemiringValue&);
    friend SemiringValue sr_mul(const SemiringValue&, const SemiringValue&);
    friend SemiringValue sr_pow(const SemiringValue&, unsigned);
    friend SemiringValue sr_try_div(const SemiringValue&, const SemiringValue&);
    friend SemiringValue sr_one(const SemiringId&);
};

SemiringValue sr_one(const SemiringId& id);
SemiringValue sr_add(const SemiringValue& a, const SemiringValue& b);
SemiringValue sr_mul(const SemiringValue& a, const SemiringValue& b);
SemiringValue sr_pow(const SemiringValue& a, unsigned n);
// The x with b*x == a, or DivisionFailure when it is not in the carrier.
SemiringValue sr_try_div(const SemiringValue& a, const SemiringValue& b);

// 1 + a, the building block of the Y-relation.
inline SemiringValue sr_one_plus(const SemiringValue& a) { return sr_add(sr_one(a.id()), a); }

// Text forms: "7", "3/4", tropical "-2", universal "(1+y1)*y2^2".
SemiringValue sr_parse(const SemiringId& id, const std::string& text);

} // namespace yfrieze
