#pragma once

#include "yfrieze/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yfrieze {

enum class Family { A, B, C, D, E, F, G };

// Finite Dynkin type, e.g. {Family::D, 5}.
struct CartanType {
    Family family;
    int rank;

    std::string name() const;
    bool operator==(const CartanType&) const = default;
};

// Every finite type of the given rank (A_r, B_r, C_r, D_r, E, F_4, G_2 as
// applicable), in a fixed order.
std::vector<CartanType> finite_types_of_rank(int rank);

// All finite types up to and including `max_rank`. B_2 and C_2 are both
// listed since their matrices differ.
std::vector<CartanType> finite_types_up_to(int max_rank);

// Standard-labelled matrix for a finite type. Throws NotCartan for
// impossible (family, rank) pairs such as D_3 or E_5.
IntMatrix standard_matrix(const CartanType& type);

int coxeter_number(const CartanType& type);

// A matrix that matched a standard labelling after relabelling its rows and
// columns: entries(perm[i], perm[j]) == standard(i, j).
struct Recognition {
    CartanType type;
    std::vector<std::size_t> perm;

    bool is_identity() const;
};

// Validated symmetrizable generalized Cartan matrix.
class CartanMatrix {
public:
    // Throws NotCartan / NotSymmetrizable.
    static CartanMatrix validate(const IntMatrix& entries);
    static CartanMatrix standard(const CartanType& type);
    // [[2,-2],[-2,2]], labelled "A1~".
    static CartanMatrix affine_a1();

    std::size_t rank() const noexcept { return entries_.rows(); }
    const IntMatrix& entries() const noexcept { return entries_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    // Positive integer diagonal D with D·A symmetric (gcd-normalized per
    // connected component).
    const std::vector<std::int64_t>& symmetrizer() const noexcept { return symmetrizer_; }
    bool is_indecomposable() const noexcept { return indecomposable_; }
    const std::optional<Recognition>& recognition() const noexcept { return recognition_; }
    const std::optional<std::string>& label() const noexcept { return label_; }
    bool has_standard_labelling() const { return recognition_ && recognition_->is_identity(); }

    // Human-readable name: the label when known, else the matrix literal.
    std::string describe() const;

    bool operator==(const CartanMatrix& other) const { return entries_ == other.entries_; }

private:
    CartanMatrix() = default;

    IntMatrix entries_;
    std::vector<std::int64_t> symmetrizer_;
    bool indecomposable_ = true;
    std::optional<Recognition> recognition_;
    std::optional<std::string> label_;
};

// Accepts a type string ("A3", "C2", "G2", "E6", "A1~") or a matrix literal
// ("2,-1;-1,2").
CartanMatrix parse_cartan(const std::string& text);

// True iff all principal minors are positive. Exact: Sylvester's criterion
// on the symmetrized matrix D·A with fraction-free elimination.
bool is_finite_type(const CartanMatrix& a);

// Coxeter number from the classification table; requires a recognized
// finite type. Throws NotFiniteType / UnrecognizedLabelling.
int coxeter_number(const CartanMatrix& a);

// B_A: zero diagonal, a_{ij} above the diagonal, -a_{ij} below.
IntMatrix exchange_matrix(const CartanMatrix& a);

struct CoxeterCompanion {
    IntMatrix lower;     // L_A, unit lower triangular
    IntMatrix upper;     // U_A, unit upper triangular
    IntMatrix companion; // C = (-L_A U_A^{-1})^T
};

CoxeterCompanion coxeter_companion(const CartanMatrix& a);

// Inverse of a unit upper triangular integer matrix.
IntMatrix unit_upper_inverse(const IntMatrix& u);

// Smallest k in [1, max_power] with C^k = I.
std::optional<int> matrix_order(const IntMatrix& c, int max_power);

// I + C + ... + C^{n-1}.
IntMatrix geometric_sum(const IntMatrix& c, int n);

// Glide-reflection data: F_A(i, m) = (i*, m + m_{i*} + 1).
struct GlideData {
    std::vector<std::size_t> involution; // i -> i*, 0-based
    std::vector<int> shifts;             // m_i
    int coxeter_number = 0;
    int period = 0; // h + 2

    // Image of the 0-based grid point (i, m) under F_A.
    std::pair<std::size_t, long> apply(std::size_t i, long m) const {
        const auto j = involution[i];
        return {j, m + shifts[j] + 1};
    }
};

// Throws NotFiniteType, or UnrecognizedLabelling when the matrix is not a
// relabelling of an indecomposable standard type.
GlideData glide_data(const CartanMatrix& a);

} // namespace yfrieze
