#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace yfrieze {

// Dense row-major integer matrix. Entries of Cartan, exchange and Coxeter
// matrices stay small, so 64-bit storage is ample.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

    bool is_zero() const noexcept;

    bool operator==(const IntMatrix&) const = default;
    auto operator<=>(const IntMatrix&) const = default;

    // "2,-1;-1,2" form, rows separated by ';'.
    std::string to_literal() const;
    static IntMatrix parse_literal(const std::string& text);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

} // namespace yfrieze
