#pragma once

// Formal linear combinations over one basis of one of the graded algebras,
// with the products that are cheap in the "complete" and "monomial" bases:
// concatenation for H, sorted union for h, quasi-shuffle for M.

#include "kqsym/composition.hpp"
#include "kqsym/core.hpp"
#include "kqsym/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace kqsym {

/// Basis families. Upper-case kinds are composition-indexed, lower-case
/// kinds are partition-indexed. S and QS (s and dual_s) are symbolic until
/// expanded through a graded system.
enum class BasisKind { H, M, S, QS, h, m, s, dual_s };

inline bool is_composition_kind(BasisKind kind) {
    return kind == BasisKind::H || kind == BasisKind::M || kind == BasisKind::S || kind == BasisKind::QS;
}

inline std::string_view kind_name(BasisKind kind) {
    switch (kind) {
    case BasisKind::H: return "H";
    case BasisKind::M: return "M";
    case BasisKind::S: return "S";
    case BasisKind::QS: return "QS";
    case BasisKind::h: return "h";
    case BasisKind::m: return "m";
    case BasisKind::s: return "s";
    case BasisKind::dual_s: return "dual-s";
    }
    return "?";
}

inline std::optional<BasisKind> parse_kind(std::string_view name) {
    for (BasisKind kind : {BasisKind::H, BasisKind::M, BasisKind::S, BasisKind::QS, BasisKind::h, BasisKind::m,
                           BasisKind::s, BasisKind::dual_s})
        if (kind_name(kind) == name)
            return kind;
    return std::nullopt;
}

template <class Index>
inline constexpr bool is_composition_index = std::is_same_v<Index, Composition>;

/// Finite sum of coefficient * basis element, all in one (kind, k).
/// Zero coefficients are never stored.
template <class Index>
class LinearCombination {
public:
    using Terms = std::map<Index, Integer>;

    LinearCombination(BasisKind kind, Bound k) : kind_(kind), k_(k) {
        if (is_composition_kind(kind) != is_composition_index<Index>)
            throw std::invalid_argument("basis kind does not match the index type");
    }

    static LinearCombination term(BasisKind kind, const Index& index, Bound k, Integer coeff = 1) {
        LinearCombination lc(kind, k);
        lc.add(index, std::move(coeff));
        return lc;
    }

    BasisKind kind() const { return kind_; }
    Bound bound() const { return k_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(const Index& index) const {
        const auto it = terms_.find(index);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(const Index& index, const Integer& coeff) {
        if (coeff == 0)
            return;
        if (!index.is_bounded(k_))
            throw DomainError("index is not " + k_.to_string() + "-bounded");
        auto [it, inserted] = terms_.try_emplace(index, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Adds coeff * other.
    void add_scaled(const LinearCombination& other, const Integer& coeff) {
        require_compatible(other);
        for (const auto& [index, c] : other.terms_)
            add(index, c * coeff);
    }

    /// Every term has degree n.
    bool is_homogeneous(int n) const {
        for (const auto& [index, c] : terms_)
            if (index.size() != n)
                return false;
        return true;
    }

    LinearCombination& operator+=(const LinearCombination& other) {
        add_scaled(other, 1);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& other) {
        add_scaled(other, -1);
        return *this;
    }
    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const Integer& c, const LinearCombination& a) {
        LinearCombination out(a.kind_, a.k_);
        out.add_scaled(a, c);
        return out;
    }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

    void require_compatible(const LinearCombination& other) const {
        if (kind_ != other.kind_ || k_ != other.k_)
            throw std::invalid_argument("linear combinations over different bases");
    }

private:
    BasisKind kind_;
    Bound k_;
    Terms terms_;
};

using CompositionCombination = LinearCombination<Composition>;
using PartitionCombination = LinearCombination<Partition>;

/// One "coeff*Kind[index]" per term, indices ascending.
template <class Index>
std::ostream& operator<<(std::ostream& os, const LinearCombination<Index>& lc) {
    if (lc.is_zero())
        return os << "0";
    bool first = true;
    for (const auto& [index, c] : lc.terms()) {
        os << (first ? "" : " ") << (c > 0 && !first ? "+" : "") << c << '*' << kind_name(lc.kind()) << index;
        first = false;
    }
    return os;
}

namespace detail {

template <class Index>
void require_kind(const LinearCombination<Index>& lc, BasisKind kind, const char* what) {
    if (lc.kind() != kind)
        throw std::invalid_argument(std::string(what) + ": expected basis " + std::string(kind_name(kind)));
}

template <class Index, class Merge>
LinearCombination<Index> bilinear(const LinearCombination<Index>& a, const LinearCombination<Index>& b,
                                  Merge merge) {
    a.require_compatible(b);
    LinearCombination<Index> out(a.kind(), a.bound());
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms())
            merge(out, x, y, cx * cy);
    return out;
}

inline void quasi_shuffles(const std::vector<int>& u, std::size_t i, const std::vector<int>& v, std::size_t j,
                           std::vector<int>& prefix, std::map<Composition, Integer>& out) {
    if (i == u.size() && j == v.size()) {
        out[Composition(prefix)] += 1;
        return;
    }
    if (i < u.size()) {
        prefix.push_back(u[i]);
        quasi_shuffles(u, i + 1, v, j, prefix, out);
        prefix.pop_back();
    }
    if (j < v.size()) {
        prefix.push_back(v[j]);
        quasi_shuffles(u, i, v, j + 1, prefix, out);
        prefix.pop_back();
    }
    if (i < u.size() && j < v.size()) {
        prefix.push_back(u[i] + v[j]);
        quasi_shuffles(u, i + 1, v, j + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// Multiset of interleavings of u and v where adjacent parts from opposite
/// factors may merge by addition.
inline std::map<Composition, Integer> quasi_shuffle(const Composition& u, const Composition& v) {
    std::map<Composition, Integer> out;
    std::vector<int> prefix;
    detail::quasi_shuffles(u.parts(), 0, v.parts(), 0, prefix, out);
    return out;
}

inline PartitionCombination h_product(const PartitionCombination& a, const PartitionCombination& b) {
    detail::require_kind(a, BasisKind::h, "h_product");
    return detail::bilinear(a, b, [](PartitionCombination& out, const Partition& x, const Partition& y,
                                     const Integer& c) {
        std::vector<int> parts = x.parts();
        parts.insert(parts.end(), y.begin(), y.end());
        std::sort(parts.begin(), parts.end(), std::greater<>());
        out.add(Partition(std::move(parts)), c);
    });
}

inline CompositionCombination H_product(const CompositionCombination& a, const CompositionCombination& b) {
    detail::require_kind(a, BasisKind::H, "H_product");
    return detail::bilinear(a, b, [](CompositionCombination& out, const Composition& x, const Composition& y,
                                     const Integer& c) { out.add(concat(x, y), c); });
}

/// Quasi-shuffle product. With a bounded k, terms carrying a part above k
/// lie in the quotient ideal and are dropped.
inline CompositionCombination M_quasi_shuffle(const CompositionCombination& a, const CompositionCombination& b) {
    detail::require_kind(a, BasisKind::M, "M_quasi_shuffle");
    const Bound k = a.bound();
    return detail::bilinear(a, b, [k](CompositionCombination& out, const Composition& x, const Composition& y,
                                      const Integer& c) {
        for (const auto& [gamma, mult] : quasi_shuffle(x, y))
            if (gamma.is_bounded(k))
                out.add(gamma, c * mult);
    });
}

/// <M_a, H_b> = <m_a, h_b> = delta. f must be over the monomial kind and g
/// over the complete kind of the same family and k.
template <class Index>
Integer pairing(const LinearCombination<Index>& f, const LinearCombination<Index>& g) {
    const BasisKind monomial = is_composition_index<Index> ? BasisKind::M : BasisKind::m;
    const BasisKind complete = is_composition_index<Index> ? BasisKind::H : BasisKind::h;
    if (f.kind() != monomial || g.kind() != complete)
        throw std::invalid_argument("pairing: expected (monomial, complete) bases; expand Schur kinds first");
    if (f.bound() != g.bound())
        throw std::invalid_argument("pairing: combinations carry different k");
    Integer total = 0;
    const auto& small = f.terms().size() <= g.terms().size() ? f.terms() : g.terms();
    const auto& large = f.terms().size() <= g.terms().size() ? g.terms() : f.terms();
    for (const auto& [index, c] : small)
        if (const auto it = large.find(index); it != large.end())
            total += c * it->second;
    return total;
}

/// H_alpha -> h_lambda(alpha).
inline PartitionCombination chi_project(const CompositionCombination& g) {
    detail::require_kind(g, BasisKind::H, "chi_project");
    PartitionCombination out(BasisKind::h, g.bound());
    for (const auto& [alpha, c] : g.terms())
        out.add(sort_to_partition(alpha), c);
    return out;
}

/// m_mu -> sum of M_alpha over the distinct rearrangements alpha of mu.
inline CompositionCombination monomial_to_quasi(const PartitionCombination& f) {
    detail::require_kind(f, BasisKind::m, "monomial_to_quasi");
    CompositionCombination out(BasisKind::M, f.bound());
    for (const auto& [mu, c] : f.terms()) {
        std::vector<int> parts = mu.parts();
        do {
            out.add(Composition(parts), c);
        } while (std::prev_permutation(parts.begin(), parts.end()));
    }
    return out;
}

} // namespace kqsym
