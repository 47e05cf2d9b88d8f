#pragma once

// Labeled exact integer matrices for one graded component, and their exact
// inversion by fraction-free (Bareiss) Gauss-Jordan elimination.

#include "kqsym/core.hpp"
#include "kqsym/linear_combination.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kqsym {

/// Row r expresses the source-basis element rows[r] in the target basis:
///   source[rows[r]] = sum_c at(r, c) * target[cols[c]].
template <class Index>
struct BasisMatrix {
    Bound k;
    int n = 0;
    BasisKind source = is_composition_index<Index> ? BasisKind::S : BasisKind::s;
    BasisKind target = is_composition_index<Index> ? BasisKind::H : BasisKind::h;
    std::vector<Index> rows;
    std::vector<Index> cols;
    std::vector<Integer> entries; // row-major

    static BasisMatrix zeros(Bound k, int n, BasisKind source, BasisKind target, std::vector<Index> rows,
                             std::vector<Index> cols) {
        BasisMatrix a{k, n, source, target, std::move(rows), std::move(cols), {}};
        a.entries.assign(a.rows.size() * a.cols.size(), Integer(0));
        return a;
    }

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return cols.size(); }
    bool square() const { return rows.size() == cols.size(); }

    Integer& at(std::size_t r, std::size_t c) { return entries[r * cols.size() + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }

    std::size_t row_of(const Index& label) const { return position(rows, label); }
    std::size_t col_of(const Index& label) const { return position(cols, label); }

    /// Entry addressed by labels.
    const Integer& operator()(const Index& row, const Index& col) const { return at(row_of(row), col_of(col)); }

    /// The source element rows[r] written in the target basis.
    LinearCombination<Index> row_combination(std::size_t r) const {
        LinearCombination<Index> out(target, k);
        for (std::size_t c = 0; c < cols.size(); ++c)
            out.add(cols[c], at(r, c));
        return out;
    }

    /// Rewrites a combination over the source basis in the target basis.
    LinearCombination<Index> apply(const LinearCombination<Index>& x) const {
        if (x.kind() != source || x.bound() != k)
            throw std::invalid_argument("apply: combination is not over this matrix's source basis");
        LinearCombination<Index> out(target, k);
        for (const auto& [label, coeff] : x.terms()) {
            const std::size_t r = row_of(label);
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (at(r, c) != 0)
                    out.add(cols[c], coeff * at(r, c));
        }
        return out;
    }

    BasisMatrix transposed(BasisKind new_source, BasisKind new_target) const {
        BasisMatrix t = zeros(k, n, new_source, new_target, cols, rows);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    bool is_identity() const {
        if (!square())
            return false;
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (at(r, c) != (r == c ? 1 : 0))
                    return false;
        return true;
    }

    friend bool operator==(const BasisMatrix&, const BasisMatrix&) = default;

private:
    static std::size_t position(const std::vector<Index>& labels, const Index& label) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return i;
        throw std::out_of_range("label not present in basis matrix");
    }
};

/// (a * b)[r][c] = sum_j a[r][j] b[j][c]; a's column labels must equal b's
/// row labels.
template <class Index>
BasisMatrix<Index> multiply(const BasisMatrix<Index>& a, const BasisMatrix<Index>& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("multiply: inner labels differ");
    auto out = BasisMatrix<Index>::zeros(a.k, a.n, a.source, b.target, a.rows, b.cols);
    for (std::size_t r = 0; r < a.row_count(); ++r)
        for (std::size_t j = 0; j < a.col_count(); ++j) {
            if (a.at(r, j) == 0)
                continue;
            for (std::size_t c = 0; c < b.col_count(); ++c)
                out.at(r, c) += a.at(r, j) * b.at(j, c);
        }
    return out;
}

/// Exact inverse over the integers. Throws ArithmeticError if the matrix is
/// singular or its inverse is not integral.
template <class Index>
BasisMatrix<Index> invert_basis_matrix(const BasisMatrix<Index>& a) {
    if (!a.square())
        throw std::invalid_argument("invert_basis_matrix: matrix is not square");
    const std::size_t size = a.row_count();
    const std::size_t width = 2 * size;

    // augmented [A | I]
    std::vector<Integer> w(size * width, Integer(0));
    auto cell = [&](std::size_t r, std::size_t c) -> Integer& { return w[r * width + c]; };
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c)
            cell(r, c) = a.at(r, c);
        cell(r, size + r) = 1;
    }

    // After step p the left block is pivot * I on its first p+1 columns and
    // every entry is a minor of the augmented matrix, so each division is exact.
    Integer previous = 1;
    for (std::size_t p = 0; p < size; ++p) {
        std::size_t pivot = p;
        while (pivot < size && cell(pivot, p) == 0)
            ++pivot;
        if (pivot == size)
            throw ArithmeticError("invert_basis_matrix: matrix is singular");
        if (pivot != p)
            for (std::size_t c = 0; c < width; ++c)
                std::swap(cell(p, c), cell(pivot, c));

        const Integer diag = cell(p, p);
        for (std::size_t r = 0; r < size; ++r) {
            if (r == p)
                continue;
            const Integer factor = cell(r, p);
            for (std::size_t c = 0; c < width; ++c) {
                if (c == p)
                    continue;
                Integer value = diag * cell(r, c) - factor * cell(p, c);
                if (previous != 1)
                    value /= previous;
                cell(r, c) = std::move(value);
            }
            cell(r, p) = 0;
        }
        previous = diag;
    }

    // left block is now d * I with d = +-det(A)
    const Integer d = previous;
    auto inverse = BasisMatrix<Index>::zeros(a.k, a.n, a.target, a.source, a.cols, a.rows);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            const Integer& scaled = cell(r, size + c);
            if (scaled % d != 0)
                throw ArithmeticError("invert_basis_matrix: inverse is not integral");
            inverse.at(r, c) = scaled / d;
        }
    return inverse;
}

} // namespace kqsym
