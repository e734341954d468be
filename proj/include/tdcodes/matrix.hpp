#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tdcodes/base_field.hpp"

namespace tdcodes {

/// Dense row-major matrix over GF(q).
class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Symbol& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Symbol at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    std::span<Symbol> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Symbol> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

struct RowEchelon {
    GfMatrix reduced;                  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each remaining row
};

RowEchelon row_reduce(const BaseField& f, GfMatrix m);
std::size_t rank(const BaseField& f, GfMatrix m);

/// Rows form a basis of {x : m x^T = 0}.
GfMatrix null_space(const BaseField& f, const GfMatrix& m);
GfMatrix transpose(const GfMatrix& m);
/// g g^T.
GfMatrix gram(const BaseField& f, const GfMatrix& g);
/// Rows of `a` followed by rows of `b`; column counts must match.
GfMatrix stack(const GfMatrix& a, const GfMatrix& b);
/// msg * g; msg.size() must equal g.rows().
std::vector<Symbol> vec_mul(const BaseField& f, std::span<const Symbol> msg, const GfMatrix& g);

/// Euclidean hull dimension dim(C cap C^perp) of the row space of g.
std::size_t hull_dimension(const BaseField& f, const GfMatrix& g);
/// g g^T = 0.
bool is_self_orthogonal(const BaseField& f, const GfMatrix& g);
/// Self-orthogonal with 2 * rank == length.
bool is_self_dual(const BaseField& f, const GfMatrix& g);

}  // namespace tdcodes
