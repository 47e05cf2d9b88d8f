#pragma once

// Partitions, (k+1)-cores and the k-conjugation built on them, plus the
// horizontal strip / horizontal k-strip predicates behind the k-Pieri rule.

#include "kqsym/core.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kqsym {

/// Weakly decreasing sequence of positive parts. The empty sequence is the
/// empty partition; trailing zeros are never stored.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// Builds a partition from row lengths that may end in zeros.
    static Partition from_rows(std::vector<int> rows) {
        while (!rows.empty() && rows.back() == 0)
            rows.pop_back();
        return Partition(std::move(rows));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Part at 0-based row i, or 0 past the end.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool is_bounded(Bound k) const { return k.admits(largest()); }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i)
        os << (i ? "," : "") << p.parts()[i];
    return os << ')';
}

/// 1-based (row, column) position in a diagram.
struct Cell {
    int row = 1;
    int col = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
    return os << '(' << c.row << ',' << c.col << ')';
}

inline Partition transpose(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.largest()), 0);
    for (int part : lambda)
        for (int c = 0; c < part; ++c)
            ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

inline std::map<Cell, int> hook_lengths(const Partition& lambda) {
    const Partition conj = transpose(lambda);
    std::map<Cell, int> hooks;
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        for (int c = 1; c <= lambda.parts()[r]; ++c) {
            const int arm = lambda.parts()[r] - c;
            const int leg = conj.parts()[static_cast<std::size_t>(c - 1)] - static_cast<int>(r) - 1;
            hooks[{static_cast<int>(r) + 1, c}] = arm + leg + 1;
        }
    }
    return hooks;
}

inline bool is_core(const Partition& lambda, int t) {
    if (t < 2)
        throw std::invalid_argument("core parameter t must be at least 2");
    const auto hooks = hook_lengths(lambda);
    return std::none_of(hooks.begin(), hooks.end(), [t](const auto& h) { return h.second == t; });
}

/// A partition with no hook of length t.
class CorePartition {
public:
    CorePartition(Partition partition, int t) : partition_(std::move(partition)), t_(t) {
        if (!is_core(partition_, t_))
            throw DomainError("partition is not a " + std::to_string(t_) + "-core");
    }

    const Partition& partition() const { return partition_; }
    int t() const { return t_; }

    friend bool operator==(const CorePartition&, const CorePartition&) = default;

private:
    Partition partition_;
    int t_;
};

namespace detail {

inline void require_bounded(const Partition& lambda, Bound k, const char* what) {
    if (!lambda.is_bounded(k))
        throw DomainError(std::string(what) + ": partition is not " + k.to_string() + "-bounded");
}

} // namespace detail

/// Row r of the result counts the cells of row r of the core whose hook is
/// at most k = t - 1.
inline Partition core_to_bounded(const CorePartition& kappa) {
    const int k = kappa.t() - 1;
    const auto hooks = hook_lengths(kappa.partition());
    std::vector<int> rows(kappa.partition().length(), 0);
    for (const auto& [cell, hook] : hooks)
        if (hook <= k)
            ++rows[static_cast<std::size_t>(cell.row - 1)];
    return Partition::from_rows(std::move(rows));
}

/// Inverse of core_to_bounded. Rows are placed bottom-up, each at the
/// smallest offset (no smaller than the row below) keeping all of its hooks
/// within the partial skew diagram at most k.
inline CorePartition bounded_to_core(const Partition& lambda, int k) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    detail::require_bounded(lambda, Bound(k), "bounded_to_core");

    const std::size_t m = lambda.length();
    std::vector<int> offset(m, 0);
    for (std::size_t i = m; i-- > 0;) {
        int o = i + 1 < m ? offset[i + 1] : 0;
        for (;; ++o) {
            // the first cell of the row carries the largest hook
            const int c = o + 1;
            const int arm = lambda.parts()[i] - 1;
            int leg = 0;
            for (std::size_t j = i + 1; j < m; ++j)
                if (offset[j] < c && c <= offset[j] + lambda.parts()[j])
                    ++leg;
            if (arm + leg + 1 <= k)
                break;
        }
        offset[i] = o;
    }

    std::vector<int> rows(m);
    for (std::size_t i = 0; i < m; ++i)
        rows[i] = offset[i] + lambda.parts()[i];
    return CorePartition(Partition(std::move(rows)), k + 1);
}

/// The k-conjugate (omega_k): transpose the associated (k+1)-core. For an
/// unbounded k this is the ordinary transpose.
inline Partition k_conjugate(const Partition& lambda, Bound k) {
    if (!k.bounded())
        return transpose(lambda);
    detail::require_bounded(lambda, k, "k_conjugate");
    const CorePartition core = bounded_to_core(lambda, k.value());
    return core_to_bounded(CorePartition(transpose(core.partition()), k.value() + 1));
}

/// mu is contained in lambda cell-wise.
inline bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length())
        return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu.parts()[i] > lambda.parts()[i])
            return false;
    return true;
}

/// lambda/mu has no two cells in one column.
inline bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu))
        return false;
    for (std::size_t i = 0; i + 1 < lambda.length(); ++i)
        if (lambda.parts()[i + 1] > mu.part(i))
            return false;
    return true;
}

/// lambda/mu has no two cells in one row.
inline bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu))
        return false;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        if (lambda.parts()[i] - mu.part(i) > 1)
            return false;
    return true;
}

/// Horizontal strip whose k-conjugate difference is a vertical strip.
/// Containment failure on either side yields false.
inline bool is_horizontal_k_strip(const Partition& lambda, const Partition& mu, Bound k) {
    detail::require_bounded(lambda, k, "is_horizontal_k_strip");
    detail::require_bounded(mu, k, "is_horizontal_k_strip");
    if (!is_horizontal_strip(lambda, mu))
        return false;
    return is_vertical_strip(k_conjugate(lambda, k), k_conjugate(mu, k));
}

/// Every nu containing lambda with nu/lambda a horizontal strip of i cells.
inline std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int i) {
    std::vector<Partition> out;
    const std::size_t m = lambda.length();
    std::vector<int> rows(m + 1, 0);
    // row r may grow up to the old length of row r-1; row 0 is free
    std::function<void(std::size_t, int)> place = [&](std::size_t r, int left) {
        if (r == m + 1) {
            if (left == 0)
                out.push_back(Partition::from_rows(rows));
            return;
        }
        const int base = lambda.part(r);
        const int cap = r == 0 ? base + left : std::min(base + left, lambda.part(r - 1));
        for (int len = cap; len >= base; --len) {
            rows[r] = len;
            place(r + 1, left - (len - base));
        }
    };
    place(0, i);
    std::sort(out.begin(), out.end());
    return out;
}

/// Targets of h_i acting on the k-Schur function indexed by lambda.
inline std::vector<Partition> k_pieri_targets(const Partition& lambda, int i, Bound k) {
    if (i < 1 || !k.admits(i))
        throw std::invalid_argument("k_pieri_targets: strip size must lie in [1, k]");
    detail::require_bounded(lambda, k, "k_pieri_targets");
    std::vector<Partition> out;
    for (auto& nu : horizontal_strip_extensions(lambda, i))
        if (nu.is_bounded(k) && is_horizontal_k_strip(nu, lambda, k))
            out.push_back(std::move(nu));
    return out;
}

/// lambda is below mu in dominance order.
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominance_leq: partitions of different sizes");
    int a = 0;
    int b = 0;
    for (std::size_t i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a > b)
            return false;
    }
    return true;
}

/// Partitions of n with parts bounded by k, reverse-lexicographic (most
/// dominant first). This is a linear extension of dominance.
inline std::vector<Partition> enumerate_partitions(int n, Bound k = Bound::unbounded()) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, k.bounded() ? k.value() : n);
    return out;
}

} // namespace kqsym
