#include "tdcodes/matrix.hpp"

#include <algorithm>
#include <utility>

#include "tdcodes/error.hpp"
#include "tdcodes/kernels.hpp"

namespace tdcodes {

RowEchelon row_reduce(const BaseField& f, GfMatrix m) {
    const auto& k = kernels::active_kernels();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
        const Symbol lead = m.at(r, c);
        if (lead != 1) k.mul_region(m.row(r).data(), m.row(r).data(), f.table(f.inv(lead)), cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            k.mul_add_region(m.row(i).data(), m.row(r).data(), f.table(m.at(i, c)), cols);
        }
        pivots.push_back(c);
        ++r;
    }
    GfMatrix reduced(r, cols);
    for (std::size_t i = 0; i < r; ++i) std::copy(m.row(i).begin(), m.row(i).end(), reduced.row(i).begin());
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const BaseField& f, GfMatrix m) { return row_reduce(f, std::move(m)).pivots.size(); }

GfMatrix null_space(const BaseField& f, const GfMatrix& m) {
    const RowEchelon e = row_reduce(f, m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    GfMatrix out(cols - e.pivots.size(), cols);
    std::size_t row = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        out.at(row, free) = 1;
        // characteristic 2: -R[i][free] == R[i][free]
        for (std::size_t i = 0; i < e.pivots.size(); ++i) out.at(row, e.pivots[i]) = e.reduced.at(i, free);
        ++row;
    }
    return out;
}

GfMatrix transpose(const GfMatrix& m) {
    GfMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

GfMatrix gram(const BaseField& f, const GfMatrix& g) {
    const auto& k = kernels::active_kernels();
    const GfMatrix t = transpose(g);
    GfMatrix out(g.rows(), g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t c = 0; c < g.cols(); ++c) {
            const Symbol a = g.at(i, c);
            if (a != 0) k.mul_add_region(out.row(i).data(), t.row(c).data(), f.table(a), g.rows());
        }
    return out;
}

GfMatrix stack(const GfMatrix& a, const GfMatrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw ParameterError("stacked matrices must have equal column counts");
    const std::size_t cols = a.rows() ? a.cols() : b.cols();
    GfMatrix out(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i) std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
    for (std::size_t i = 0; i < b.rows(); ++i)
        std::copy(b.row(i).begin(), b.row(i).end(), out.row(a.rows() + i).begin());
    return out;
}

std::vector<Symbol> vec_mul(const BaseField& f, std::span<const Symbol> msg, const GfMatrix& g) {
    if (msg.size() != g.rows()) throw ParameterError("message length must equal the number of rows");
    const auto& k = kernels::active_kernels();
    std::vector<Symbol> out(g.cols(), 0);
    for (std::size_t i = 0; i < msg.size(); ++i)
        if (msg[i] != 0) k.mul_add_region(out.data(), g.row(i).data(), f.table(msg[i]), g.cols());
    return out;
}

std::size_t hull_dimension(const BaseField& f, const GfMatrix& g) {
    // For a basis G of C: dim(C cap C^perp) = dim C - rank(G G^T).
    const RowEchelon e = row_reduce(f, g);
    return e.pivots.size() - rank(f, gram(f, e.reduced));
}

bool is_self_orthogonal(const BaseField& f, const GfMatrix& g) {
    const GfMatrix p = gram(f, g);
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (Symbol v : p.row(i))
            if (v != 0) return false;
    return true;
}

bool is_self_dual(const BaseField& f, const GfMatrix& g) {
    return is_self_orthogonal(f, g) && 2 * rank(f, g) == g.cols();
}

}  // namespace tdcodes
