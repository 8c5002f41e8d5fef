#include "yfrieze/semiring.hpp"

#include "yfrieze/errors.hpp"

#include <algorithm>
#include <cctype>

namespace yfrieze {

std::string SemiringId::name() const {
    switch (kind) {
    case SemiringKind::zpos: return "zpos";
    case SemiringKind::qpos: return "qpos";
    case SemiringKind::tropn: return "tropn";
    case SemiringKind::trop: return "trop";
    case SemiringKind::universal: return "universal(" + std::to_string(nvars) + ")";
    }
    return "?";
}

SemiringId SemiringId::parse(const std::string& text, std::size_t default_rank) {
    if (text == "zpos") return zpos();
    if (text == "qpos") return qpos();
    if (text == "tropn") return tropn();
    if (text == "trop") return trop();
    if (text == "universal") {
        if (default_rank == 0) throw ParseError("universal semiring needs a rank");
        return universal(default_rank);
    }
    if (text.rfind("universal(", 0) == 0 && text.back() == ')') {
        const auto inner = text.substr(10, text.size() - 11);
        if (!inner.empty() && std::all_of(inner.begin(), inner.end(), [](unsigned char c) { return std::isdigit(c); })) {
            const auto r = std::stoul(inner);
            if (r > 0) return universal(r);
        }
    }
    throw ParseError("unknown semiring '" + text + "'");
}

SemiringValue SemiringValue::integer(SemiringId id, const mpz_class& v) {
    switch (id.kind) {
    case SemiringKind::zpos:
        if (v <= 0) throw ParseError("positive integer expected, got " + v.get_str());
        break;
    case SemiringKind::tropn:
        if (v < 0) throw ParseError("nonnegative tropical value expected, got " + v.get_str());
        break;
    case SemiringKind::trop: break;
    case SemiringKind::qpos: return rational(mpq_class(v));
    case SemiringKind::universal: return expression(RationalFn::constant(id.nvars, mpq_class(v)));
    }
    return SemiringValue(id, v);
}

SemiringValue SemiringValue::rational(const mpq_class& v) {
    if (v.get_den() == 0) throw ParseError("zero denominator");
    mpq_class c = v; // callers may hand over an unreduced fraction
    c.canonicalize();
    if (c <= 0) throw ParseError("positive rational expected, got " + c.get_str());
    return SemiringValue(SemiringId::qpos(), c);
}

SemiringValue SemiringValue::expression(const RationalFn& f) {
    if (f.is_zero()) throw ParseError("zero is not in the universal semifield");
    return SemiringValue(SemiringId::universal(f.nvars()), f);
}

std::string SemiringValue::to_string() const {
    switch (id_.kind) {
    case SemiringKind::qpos: return as_rat().get_str();
    case SemiringKind::universal: return as_expr().to_string("y");
    default: return as_int().get_str();
    }
}

bool SemiringValue::operator==(const SemiringValue& rhs) const { return id_ == rhs.id_ && v_ == rhs.v_; }

namespace {

void same(const SemiringValue& a, const SemiringValue& b) {
    if (!(a.id() == b.id())) throw MixedSemirings("cannot combine " + a.id().name() + " with " + b.id().name());
}

} // namespace

SemiringValue sr_one(const SemiringId& id) {
    switch (id.kind) {
    case SemiringKind::zpos: return SemiringValue(id, mpz_class(1));
    case SemiringKind::qpos: return SemiringValue(id, mpq_class(1));
    case SemiringKind::tropn:
    case SemiringKind::trop: return SemiringValue(id, mpz_class(0));
    case SemiringKind::universal: return SemiringValue(id, RationalFn::constant(id.nvars, 1));
    }
    throw InvariantViolation("unknown semiring kind");
}

SemiringValue sr_add(const SemiringValue& a, const SemiringValue& b) {
    same(a, b);
    switch (a.id().kind) {
    case SemiringKind::zpos: return SemiringValue(a.id(), mpz_class(a.as_int() + b.as_int()));
    case SemiringKind::qpos: return SemiringValue(a.id(), mpq_class(a.as_rat() + b.as_rat()));
    case SemiringKind::tropn:
    case SemiringKind::trop: return SemiringValue(a.id(), std::max(a.as_int(), b.as_int()));
    case SemiringKind::universal: return SemiringValue(a.id(), a.as_expr() + b.as_expr());
    }
    throw InvariantViolation("unknown semiring kind");
}

SemiringValue sr_mul(const SemiringValue& a, const SemiringValue& b) {
    same(a, b);
    switch (a.id().kind) {
    case SemiringKind::zpos: return SemiringValue(a.id(), mpz_class(a.as_int() * b.as_int()));
    case SemiringKind::qpos: return SemiringValue(a.id(), mpq_class(a.as_rat() * b.as_rat()));
    case SemiringKind::tropn:
    case SemiringKind::trop: return SemiringValue(a.id(), mpz_class(a.as_int() + b.as_int()));
    case SemiringKind::universal: return SemiringValue(a.id(), a.as_expr() * b.as_expr());
    }
    throw InvariantViolation("unknown semiring kind");
}

SemiringValue sr_pow(const SemiringValue& a, unsigned n) {
    switch (a.id().kind) {
    case SemiringKind::zpos: {
        mpz_class out;
        mpz_pow_ui(out.get_mpz_t(), a.as_int().get_mpz_t(), n);
        return SemiringValue(a.id(), out);
    }
    case SemiringKind::qpos: {
        mpq_class out;
        mpz_pow_ui(out.get_num_mpz_t(), a.as_rat().get_num_mpz_t(), n);
        mpz_pow_ui(out.get_den_mpz_t(), a.as_rat().get_den_mpz_t(), n);
        return SemiringValue(a.id(), out);
    }
    case SemiringKind::tropn:
    case SemiringKind::trop: return SemiringValue(a.id(), mpz_class(a.as_int() * n));
    case SemiringKind::universal: return SemiringValue(a.id(), a.as_expr().pow(static_cast<int>(n)));
    }
    throw InvariantViolation("unknown semiring kind");
}

SemiringValue sr_try_div(const SemiringValue& a, const SemiringValue& b) {
    same(a, b);
    switch (a.id().kind) {
    case SemiringKind::zpos: {
        if (!mpz_divisible_p(a.as_int().get_mpz_t(), b.as_int().get_mpz_t()))
            throw DivisionFailure(a.to_string() + "/" + b.to_string() + " is not a positive integer");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.as_int().get_mpz_t(), b.as_int().get_mpz_t());
        return SemiringValue(a.id(), q);
    }
    case SemiringKind::qpos: return SemiringValue(a.id(), mpq_class(a.as_rat() / b.as_rat()));
    case SemiringKind::tropn: {
        mpz_class d = a.as_int() - b.as_int();
        if (d < 0) throw DivisionFailure("tropical quotient " + d.get_str() + " is negative");
        return SemiringValue(a.id(), d);
    }
    case SemiringKind::trop: return SemiringValue(a.id(), mpz_class(a.as_int() - b.as_int()));
    case SemiringKind::universal: return SemiringValue(a.id(), a.as_expr() / b.as_expr());
    }
    throw InvariantViolation("unknown semiring kind");
}

SemiringValue sr_parse(const SemiringId& id, const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw ParseError("empty value");
    try {
        switch (id.kind) {
        case SemiringKind::zpos:
        case SemiringKind::tropn:
        case SemiringKind::trop: {
            mpz_class v;
            if (v.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw ParseError("bad integer '" + text + "'");
            return SemiringValue::integer(id, v);
        }
        case SemiringKind::qpos: {
            mpq_class v;
            if (v.set_str(t, 10) != 0 || v.get_den() == 0) throw ParseError("bad rational '" + text + "'");
            v.canonicalize();
            return SemiringValue::rational(v);
        }
        case SemiringKind::universal:
            return SemiringValue::expression(parse_rational(t, id.nvars, "y", /*allow_minus=*/false));
        }
    } catch (const DivideByZero& e) {
        throw ParseError(std::string("bad value '") + text + "': " + e.what());
    }
    throw ParseError("unknown semiring kind");
}

} // namespace yfrieze
