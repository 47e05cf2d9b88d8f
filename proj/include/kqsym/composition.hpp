#pragma once

// Compositions, the cover relation of the composition poset, bottom-aligned
// skew shapes and the horizontal (k-)composition strips that drive the
// non-commutative Pieri rules.
//
// Drawing convention: part 1 is the top row. A smaller composition sits in
// the bottom-left corner of a larger one, so its rows line up with the last
// rows of the larger shape.

#include "kqsym/core.hpp"
#include "kqsym/partition.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kqsym {

/// Ordered sequence of positive parts; the empty sequence is the empty
/// composition.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("composition parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int largest() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }
    int operator[](std::size_t i) const { return parts_[i]; }

    bool is_bounded(Bound k) const { return k.admits(largest()); }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Composition& a) {
    os << '[';
    for (std::size_t i = 0; i < a.length(); ++i)
        os << (i ? "," : "") << a.parts()[i];
    return os << ']';
}

inline Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.begin(), b.end());
    return Composition(std::move(parts));
}

inline Composition reversed(const Composition& a) {
    return Composition(std::vector<int>(a.parts().rbegin(), a.parts().rend()));
}

/// lambda(alpha): the parts sorted into a partition.
inline Partition sort_to_partition(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

namespace detail {

inline void require_bounded(const Composition& alpha, Bound k, const char* what) {
    if (!alpha.is_bounded(k))
        throw DomainError(std::string(what) + ": composition is not " + k.to_string() + "-bounded");
}

/// Position of the leftmost part equal to m, or npos.
inline std::size_t leftmost(const Composition& a, int m) {
    const auto it = std::find(a.begin(), a.end(), m);
    return it == a.end() ? std::string::npos : static_cast<std::size_t>(it - a.begin());
}

} // namespace detail

/// One-cell growths of beta: prepend a 1, or raise the leftmost part of
/// each distinct size m to m+1. Results with a part above the bound are
/// dropped.
inline std::vector<Composition> covers_up(const Composition& beta, Bound bound = Bound::unbounded()) {
    std::vector<Composition> out;
    {
        std::vector<int> parts{1};
        parts.insert(parts.end(), beta.begin(), beta.end());
        out.emplace_back(std::move(parts));
    }
    std::set<int> seen;
    for (std::size_t i = 0; i < beta.length(); ++i) {
        if (!seen.insert(beta[i]).second || !bound.admits(beta[i] + 1))
            continue;
        std::vector<int> parts = beta.parts();
        ++parts[i];
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// beta fits in the bottom-left corner of alpha.
inline bool bottom_aligned_contains(const Composition& alpha, const Composition& beta) {
    if (beta.length() > alpha.length())
        return false;
    const std::size_t shift = alpha.length() - beta.length();
    for (std::size_t j = 0; j < beta.length(); ++j)
        if (beta[j] > alpha[shift + j])
            return false;
    return true;
}

/// alpha is reachable from beta by a chain of covers.
inline bool leq_c(const Composition& beta, const Composition& alpha) {
    std::map<Composition, bool> memo;
    const int target = alpha.size();
    auto reach = [&](auto&& self, const Composition& gamma) -> bool {
        if (gamma.size() == target)
            return gamma == alpha;
        if (!bottom_aligned_contains(alpha, gamma))
            return false;
        if (auto it = memo.find(gamma); it != memo.end())
            return it->second;
        bool found = false;
        for (const auto& next : covers_up(gamma, Bound(alpha.largest() > 0 ? alpha.largest() : 1)))
            if ((found = self(self, next)))
                break;
        memo.emplace(gamma, found);
        return found;
    };
    if (beta.size() > target)
        return false;
    return reach(reach, beta);
}

/// The cells of alpha // beta.
struct SkewCells {
    std::vector<Cell> cells;
    Composition outer;
    Composition inner;
};

/// Cells of alpha outside beta, with beta placed in the bottom-left corner.
/// Cells are listed row by row, left to right.
inline SkewCells skew_cells(const Composition& alpha, const Composition& beta) {
    if (!bottom_aligned_contains(alpha, beta))
        throw DomainError("skew_cells: inner composition does not fit bottom-aligned in the outer one");
    SkewCells skew{{}, alpha, beta};
    const std::size_t shift = alpha.length() - beta.length();
    for (std::size_t r = 0; r < alpha.length(); ++r) {
        const int start = r < shift ? 0 : beta[r - shift];
        for (int c = start + 1; c <= alpha[r]; ++c)
            skew.cells.push_back({static_cast<int>(r) + 1, c});
    }
    return skew;
}

/// alpha // beta is a horizontal composition strip: its cells sit in
/// distinct columns, and adding them from the leftmost column to the
/// rightmost is a chain of covers from beta to alpha.
inline bool is_horizontal_comp_strip(const Composition& alpha, const Composition& beta) {
    if (alpha.size() < beta.size() || !bottom_aligned_contains(alpha, beta))
        return false;
    std::vector<Cell> cells = skew_cells(alpha, beta).cells;
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.col < b.col; });
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i].col == cells[i - 1].col)
            return false;

    const int rows = static_cast<int>(alpha.length());
    std::vector<int> current = beta.parts();
    for (const Cell& cell : cells) {
        const int top = rows - static_cast<int>(current.size()) + 1;
        if (cell.row < top) {
            if (cell.row != top - 1 || cell.col != 1)
                return false;
            current.insert(current.begin(), 1);
            continue;
        }
        const auto j = static_cast<std::size_t>(cell.row - top);
        if (current[j] + 1 != cell.col)
            return false;
        if (detail::leftmost(Composition(current), current[j]) != j)
            return false;
        ++current[j];
    }
    return Composition(std::move(current)) == alpha;
}

/// Horizontal composition strip whose sorted shapes form a horizontal k-strip.
inline bool is_horizontal_k_comp_strip(const Composition& alpha, const Composition& beta, Bound k) {
    detail::require_bounded(alpha, k, "is_horizontal_k_comp_strip");
    detail::require_bounded(beta, k, "is_horizontal_k_comp_strip");
    if (!is_horizontal_comp_strip(alpha, beta))
        return false;
    if (!k.bounded())
        return true;
    return is_horizontal_k_strip(sort_to_partition(alpha), sort_to_partition(beta), k);
}

/// Targets of H_i acting on the basis element indexed by beta.
inline std::vector<Composition> comp_pieri_targets(const Composition& beta, int i, Bound k) {
    if (i < 1 || !k.admits(i))
        throw std::invalid_argument("comp_pieri_targets: strip size must lie in [1, k]");
    detail::require_bounded(beta, k, "comp_pieri_targets");
    std::set<Composition> level{beta};
    for (int step = 0; step < i; ++step) {
        std::set<Composition> next;
        for (const auto& gamma : level)
            for (auto& up : covers_up(gamma, k))
                next.insert(std::move(up));
        level = std::move(next);
    }
    std::vector<Composition> out;
    for (const auto& alpha : level)
        if (is_horizontal_k_comp_strip(alpha, beta, k))
            out.push_back(alpha);
    return out;
}

/// Compositions of n with parts at most k, grouped by sorted shape (most
/// dominant shape first, shapes in reverse-lexicographic order), and in
/// decreasing lexicographic order inside a group.
inline std::vector<Composition> enumerate_compositions(int n, Bound k = Bound::unbounded()) {
    std::vector<Composition> out;
    for (const Partition& lambda : enumerate_partitions(n, k)) {
        std::vector<int> parts = lambda.parts();
        do {
            out.emplace_back(parts);
        } while (std::prev_permutation(parts.begin(), parts.end()));
    }
    return out;
}

} // namespace kqsym
