#include "yfrieze/cartan.hpp"

#include "yfrieze/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

namespace yfrieze {

namespace {

char family_letter(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    }
    return '?';
}

bool type_exists(Family f, int r) {
    switch (f) {
    case Family::A: return r >= 1;
    case Family::B:
    case Family::C: return r >= 2;
    case Family::D: return r >= 4;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
    }
    return false;
}

void link(IntMatrix& m, std::size_t i, std::size_t j) {
    m(i, j) = -1;
    m(j, i) = -1;
}

IntMatrix chain(std::size_t n, std::size_t total) {
    IntMatrix m(total, total);
    for (std::size_t i = 0; i < total; ++i) m(i, i) = 2;
    for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
    return m;
}

// Connected components of the Dynkin graph (a_ij != 0).
std::vector<std::vector<std::size_t>> components(const IntMatrix& a) {
    const auto n = a.rows();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            comp.push_back(u);
            for (std::size_t v = 0; v < n; ++v)
                if (v != u && a(u, v) != 0 && !seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// d_j = d_i a_ij / a_ji along a spanning tree, then checked on every edge.
std::optional<std::vector<std::int64_t>> find_symmetrizer(const IntMatrix& a) {
    const auto n = a.rows();
    std::vector<mpq_class> d(n, mpq_class(0));
    for (const auto& comp : components(a)) {
        d[comp.front()] = 1;
        std::queue<std::size_t> q;
        q.push(comp.front());
        std::vector<int> seen(n, 0);
        seen[comp.front()] = 1;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || a(u, v) == 0 || seen[v]) continue;
                d[v] = d[u] * mpq_class(static_cast<long>(a(u, v))) / mpq_class(static_cast<long>(a(v, u)));
                d[v].canonicalize();
                seen[v] = 1;
                q.push(v);
            }
        }
        mpz_class den_lcm = 1;
        for (auto i : comp) den_lcm = lcm(den_lcm, mpz_class(d[i].get_den()));
        mpz_class num_gcd = 0;
        for (auto i : comp) {
            d[i] *= den_lcm;
            num_gcd = gcd(num_gcd, mpz_class(d[i].get_num()));
        }
        for (auto i : comp) d[i] /= num_gcd;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d[i] * a(i, j) != d[j] * a(j, i)) return std::nullopt;
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!d[i].get_num().fits_slong_p()) return std::nullopt;
        out[i] = d[i].get_num().get_si();
    }
    return out;
}

bool try_extend(const IntMatrix& a, const IntMatrix& s, std::vector<std::size_t>& perm,
                std::vector<char>& used, std::size_t depth) {
    const auto n = a.rows();
    if (depth == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k)
            ok = a(perm[k], cand) == s(k, depth) && a(cand, perm[k]) == s(depth, k);
        if (!ok) continue;
        perm[depth] = cand;
        used[cand] = 1;
        if (try_extend(a, s, perm, used, depth + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

std::optional<std::vector<std::size_t>> match_labelling(const IntMatrix& a, const IntMatrix& s) {
    std::vector<std::size_t> perm(a.rows());
    std::vector<char> used(a.rows(), 0);
    if (try_extend(a, s, perm, used, 0)) return perm;
    return std::nullopt;
}

std::optional<Recognition> recognize(const IntMatrix& a) {
    const auto r = static_cast<int>(a.rows());
    const auto types = finite_types_of_rank(r);
    for (const auto& t : types)
        if (standard_matrix(t) == a) {
            std::vector<std::size_t> id(a.rows());
            std::iota(id.begin(), id.end(), 0);
            return Recognition{t, id};
        }
    for (const auto& t : types)
        if (auto perm = match_labelling(a, standard_matrix(t))) return Recognition{t, *perm};
    return std::nullopt;
}

std::string upper(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
}

} // namespace

std::string CartanType::name() const { return family_letter(family) + std::to_string(rank); }

std::vector<CartanType> finite_types_of_rank(int rank) {
    std::vector<CartanType> out;
    for (auto f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        if (type_exists(f, rank)) out.push_back({f, rank});
    return out;
}

std::vector<CartanType> finite_types_up_to(int max_rank) {
    std::vector<CartanType> out;
    for (int r = 1; r <= max_rank; ++r)
        for (const auto& t : finite_types_of_rank(r)) out.push_back(t);
    return out;
}

IntMatrix standard_matrix(const CartanType& type) {
    const int r = type.rank;
    if (!type_exists(type.family, r)) throw NotCartan("no finite type " + type.name());
    const auto n = static_cast<std::size_t>(r);
    switch (type.family) {
    case Family::A: return chain(n, n);
    case Family::B: {
        auto m = chain(n, n);
        m(n - 1, n - 2) = -2;
        return m;
    }
    case Family::C: {
        auto m = chain(n, n);
        m(n - 2, n - 1) = -2;
        return m;
    }
    case Family::D: {
        // 1 - 2 - ... - (r-2) with r-1 and r both attached to r-2.
        auto m = chain(n - 1, n);
        link(m, n - 3, n - 1);
        return m;
    }
    case Family::E: {
        // 1 - 2 - ... - (r-1), node r attached to node r-3.
        auto m = chain(n - 1, n);
        link(m, n - 4, n - 1);
        return m;
    }
    case Family::F: {
        auto m = chain(4, 4);
        m(1, 2) = -2;
        return m;
    }
    case Family::G: return IntMatrix{{2, -3}, {-1, 2}};
    }
    throw NotCartan("unknown family");
}

int coxeter_number(const CartanType& type) {
    const int r = type.rank;
    switch (type.family) {
    case Family::A: return r + 1;
    case Family::B:
    case Family::C: return 2 * r;
    case Family::D: return 2 * r - 2;
    case Family::E: return r == 6 ? 12 : (r == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
    }
    return 0;
}

bool Recognition::is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

CartanMatrix CartanMatrix::validate(const IntMatrix& entries) {
    if (!entries.is_square() || entries.rows() == 0) throw NotCartan("Cartan matrix must be square and non-empty");
    const auto n = entries.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (entries(i, i) != 2)
            throw NotCartan("diagonal entry a_{" + std::to_string(i + 1) + "," + std::to_string(i + 1) + "} != 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (entries(i, j) > 0)
                throw NotCartan("positive off-diagonal entry a_{" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "}");
            if ((entries(i, j) == 0) != (entries(j, i) == 0))
                throw NotCartan("zero pattern not symmetric at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
        }
    }
    auto d = find_symmetrizer(entries);
    if (!d) throw NotSymmetrizable("matrix " + entries.to_literal() + " is not symmetrizable");

    CartanMatrix a;
    a.entries_ = entries;
    a.symmetrizer_ = std::move(*d);
    a.indecomposable_ = components(entries).size() == 1;
    if (a.indecomposable_) a.recognition_ = recognize(entries);
    // A relabelled matrix keeps its literal so that describe() round-trips.
    if (a.recognition_ && a.recognition_->is_identity()) a.label_ = a.recognition_->type.name();
    return a;
}

CartanMatrix CartanMatrix::standard(const CartanType& type) { return validate(standard_matrix(type)); }

CartanMatrix CartanMatrix::affine_a1() {
    auto a = validate(IntMatrix{{2, -2}, {-2, 2}});
    a.label_ = "A1~";
    return a;
}

std::string CartanMatrix::describe() const { return label_ ? *label_ : entries_.to_literal(); }

CartanMatrix parse_cartan(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw ParseError("empty Cartan specification");
    if (t.find(',') != std::string::npos || t.find(';') != std::string::npos || t == "2")
        return CartanMatrix::validate(IntMatrix::parse_literal(t));
    const auto u = upper(t);
    if (u == "A1~" || u == "A1(1)" || u == "A1^(1)") return CartanMatrix::affine_a1();
    if (u.size() < 2) throw ParseError("bad Cartan type '" + text + "'");
    Family f;
    switch (u[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw ParseError("bad Cartan type '" + text + "'");
    }
    const auto digits = u.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }) ||
        digits.size() > 3)
        throw ParseError("bad Cartan type '" + text + "'");
    const int r = std::stoi(digits);
    if (!type_exists(f, r)) throw ParseError("no finite type '" + text + "'");
    return CartanMatrix::standard({f, r});
}

bool is_finite_type(const CartanMatrix& a) {
    // Leading principal minors of the symmetric matrix D·A via Bareiss.
    const auto n = a.rank();
    const auto& d = a.symmetrizer();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = mpz_class(static_cast<long>(d[i])) * a(i, j);
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // m[k][k] is now the (k+1)-th leading principal minor.
        if (m[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return true;
}

int coxeter_number(const CartanMatrix& a) {
    if (!is_finite_type(a)) throw NotFiniteType(a.describe() + " is not of finite type");
    if (!a.recognition()) throw UnrecognizedLabelling(a.describe() + " does not match a standard labelling");
    return coxeter_number(a.recognition()->type);
}

IntMatrix exchange_matrix(const CartanMatrix& a) {
    const auto n = a.rank();
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < j) b(i, j) = a(i, j);
            else if (i > j) b(i, j) = -a(i, j);
        }
    return b;
}

IntMatrix unit_upper_inverse(const IntMatrix& u) {
    const auto n = u.rows();
    IntMatrix inv = IntMatrix::identity(n);
    // Back substitution column by column: U X = I.
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t ii = n; ii-- > 0;) {
            std::int64_t s = (ii == col) ? 1 : 0;
            for (std::size_t k = ii + 1; k < n; ++k) s -= u(ii, k) * inv(k, col);
            inv(ii, col) = s;
        }
    return inv;
}

CoxeterCompanion coxeter_companion(const CartanMatrix& a) {
    const auto n = a.rank();
    CoxeterCompanion out{IntMatrix::identity(n), IntMatrix::identity(n), {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) out.lower(i, j) = a(i, j);
            if (i < j) out.upper(i, j) = a(i, j);
        }
    out.companion = (-(out.lower * unit_upper_inverse(out.upper))).transposed();
    return out;
}

std::optional<int> matrix_order(const IntMatrix& c, int max_power) {
    const auto id = IntMatrix::identity(c.rows());
    IntMatrix p = c;
    for (int k = 1; k <= max_power; ++k) {
        if (p == id) return k;
        p = p * c;
    }
    return std::nullopt;
}

IntMatrix geometric_sum(const IntMatrix& c, int n) {
    IntMatrix sum(c.rows(), c.cols());
    IntMatrix p = IntMatrix::identity(c.rows());
    for (int k = 0; k < n; ++k) {
        sum = sum + p;
        p = p * c;
    }
    return sum;
}

namespace {

// Unique path between two vertices of the (tree) Dynkin diagram.
std::vector<std::size_t> dynkin_path(const CartanMatrix& a, std::size_t from, std::size_t to) {
    const auto n = a.rank();
    std::vector<std::size_t> parent(n, n);
    std::queue<std::size_t> q;
    q.push(from);
    parent[from] = from;
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n; ++v)
            if (v != u && a(u, v) != 0 && parent[v] == n) {
                parent[v] = u;
                q.push(v);
            }
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::size_t> standard_involution(const CartanType& t) {
    const auto n = static_cast<std::size_t>(t.rank);
    std::vector<std::size_t> inv(n);
    std::iota(inv.begin(), inv.end(), 0);
    if (t.family == Family::A) {
        for (std::size_t i = 0; i < n; ++i) inv[i] = n - 1 - i;
    } else if (t.family == Family::D && t.rank % 2 == 1) {
        std::swap(inv[n - 2], inv[n - 1]);
    } else if (t.family == Family::E && t.rank == 6) {
        std::swap(inv[0], inv[4]);
        std::swap(inv[1], inv[3]);
    }
    return inv;
}

} // namespace

GlideData glide_data(const CartanMatrix& a) {
    if (!is_finite_type(a)) throw NotFiniteType(a.describe() + " is not of finite type");
    if (!a.recognition())
        throw UnrecognizedLabelling(a.describe() + " is not a relabelling of an indecomposable standard type");
    const auto& rec = *a.recognition();
    const auto n = a.rank();
    const int h = coxeter_number(rec.type);

    // Transport the standard diagram automorphism through the relabelling.
    const auto std_inv = standard_involution(rec.type);
    std::vector<std::size_t> inv_perm(n);
    for (std::size_t i = 0; i < n; ++i) inv_perm[rec.perm[i]] = i;
    GlideData g;
    g.involution.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.involution[i] = rec.perm[std_inv[inv_perm[i]]];
    g.coxeter_number = h;
    g.period = h + 2;
    g.shifts.assign(n, 0);

    const bool path_case = (rec.type.family == Family::A && rec.type.rank >= 2) ||
                           (rec.type.family == Family::D && rec.type.rank % 2 == 1) ||
                           (rec.type.family == Family::E && rec.type.rank == 6);
    for (std::size_t i = 0; i < n; ++i) {
        if (!path_case) {
            g.shifts[i] = h / 2;
            continue;
        }
        int toward_star = 0;
        int toward_self = 0;
        const auto path = dynkin_path(a, i, g.involution[i]);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            const auto u = path[k];
            const auto v = path[k + 1];
            // Arrow s -> t iff s < t and a_{s,t} = -1.
            const auto s = std::min(u, v);
            const auto t = std::max(u, v);
            if (a(s, t) != -1) continue;
            if (s == u) ++toward_star;
            else ++toward_self;
        }
        g.shifts[i] = (h + toward_star - toward_self) / 2;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = g.involution[i];
        if (g.involution[j] != i || g.shifts[i] + g.shifts[j] + 2 != g.period)
            throw InvariantViolation("inconsistent glide data for " + a.describe());
    }
    return g;
}

} // namespace yfrieze
