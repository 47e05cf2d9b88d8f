#pragma once

// Graded components of the Schur-like bases, built from the Pieri rules.
//
// For compositions the component holds S^(k) in H and QS^(k) in M; for
// partitions it holds the k-Schur functions in h and the dual k-Schur
// functions in m. Taking k >= n (or unbounded) gives the classical systems.

#include "kqsym/basis_matrix.hpp"
#include "kqsym/core.hpp"
#include "kqsym/kostka.hpp"
#include "kqsym/linear_combination.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace kqsym {

/// Basis kinds for one index family.
template <class Index>
struct FamilyKinds {
    static constexpr bool compositions = is_composition_index<Index>;
    static constexpr BasisKind complete = compositions ? BasisKind::H : BasisKind::h;
    static constexpr BasisKind monomial = compositions ? BasisKind::M : BasisKind::m;
    static constexpr BasisKind schur = compositions ? BasisKind::S : BasisKind::s;
    static constexpr BasisKind dual = compositions ? BasisKind::QS : BasisKind::dual_s;
};

template <class Index>
struct GradedSystem {
    Bound k;
    int n = 0;
    /// Row beta: H_beta in the S basis; entry (beta, alpha) is the Kostka
    /// number of shape alpha and content beta.
    BasisMatrix<Index> complete_to_schur;
    /// Exact inverse: S_alpha in the H basis.
    BasisMatrix<Index> schur_to_complete;
    /// QS_alpha in the M basis (transpose of complete_to_schur).
    BasisMatrix<Index> dual_to_monomial;
    /// M_beta in the QS basis (transpose of schur_to_complete).
    BasisMatrix<Index> monomial_to_dual;

    const std::vector<Index>& labels() const { return complete_to_schur.rows; }

    const BasisMatrix<Index>& matrix(BasisKind source, BasisKind target) const {
        using K = FamilyKinds<Index>;
        if (source == K::complete && target == K::schur)
            return complete_to_schur;
        if (source == K::schur && target == K::complete)
            return schur_to_complete;
        if (source == K::dual && target == K::monomial)
            return dual_to_monomial;
        if (source == K::monomial && target == K::dual)
            return monomial_to_dual;
        throw std::invalid_argument("no change of basis between " + std::string(kind_name(source)) + " and " +
                                    std::string(kind_name(target)));
    }
};

using SchurSystem = GradedSystem<Composition>;
using KSchurSystem = GradedSystem<Partition>;

/// Builds the degree-n component. Row H_beta is the unit vector at the empty
/// index pushed through the Pieri steps for beta_m, ..., beta_1.
template <class Index>
GradedSystem<Index> build_graded_system(int n, Bound k) {
    using K = FamilyKinds<Index>;
    using Vector = std::map<Index, Integer>;
    if (n < 0)
        throw std::invalid_argument("build system: n must be nonnegative");

    std::map<std::pair<Index, int>, std::vector<Index>> pieri;
    auto step = [&](const Vector& v, int i) {
        Vector out;
        for (const auto& [gamma, c] : v) {
            auto it = pieri.find({gamma, i});
            if (it == pieri.end())
                it = pieri.emplace(std::make_pair(gamma, i), StripRules<Index>::targets(gamma, i, k)).first;
            for (const Index& alpha : it->second)
                out[alpha] += c;
        }
        return out;
    };

    const std::vector<Index> labels = StripRules<Index>::enumerate(n, k);
    auto h_to_s = BasisMatrix<Index>::zeros(k, n, K::complete, K::schur, labels, labels);
    std::map<std::vector<int>, Vector> by_suffix{{{}, Vector{{Index{}, Integer(1)}}}};
    for (std::size_t r = 0; r < labels.size(); ++r) {
        const std::vector<int>& parts = labels[r].parts();
        // reuse the longest cached suffix
        std::size_t start = parts.size();
        while (start > 0 && by_suffix.count(std::vector<int>(parts.begin() + static_cast<long>(start) - 1, parts.end())))
            --start;
        Vector v = by_suffix.at(std::vector<int>(parts.begin() + static_cast<long>(start), parts.end()));
        for (std::size_t j = start; j-- > 0;) {
            v = step(v, parts[j]);
            by_suffix.emplace(std::vector<int>(parts.begin() + static_cast<long>(j), parts.end()), v);
        }
        for (const auto& [alpha, c] : v)
            h_to_s.at(r, h_to_s.col_of(alpha)) = c;
    }

    GradedSystem<Index> sys{k, n, h_to_s, invert_basis_matrix(h_to_s), {}, {}};
    sys.dual_to_monomial = sys.complete_to_schur.transposed(K::dual, K::monomial);
    sys.monomial_to_dual = sys.schur_to_complete.transposed(K::monomial, K::dual);
    return sys;
}

inline SchurSystem build_schur_system(int n, Bound k) { return build_graded_system<Composition>(n, k); }
inline KSchurSystem build_kschur_system(int n, Bound k) { return build_graded_system<Partition>(n, k); }

/// Write-once cache of graded components keyed by (n, k). Safe to share
/// between threads.
template <class Index>
class SystemCache {
public:
    std::shared_ptr<const GradedSystem<Index>> get(int n, Bound k) {
        const auto key = std::make_pair(n, k);
        {
            std::lock_guard lock(mutex_);
            if (auto it = systems_.find(key); it != systems_.end())
                return it->second;
        }
        auto built = std::make_shared<const GradedSystem<Index>>(build_graded_system<Index>(n, k));
        std::lock_guard lock(mutex_);
        return systems_.try_emplace(key, std::move(built)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, Bound>, std::shared_ptr<const GradedSystem<Index>>> systems_;
};

using SchurCache = SystemCache<Composition>;
using KSchurCache = SystemCache<Partition>;

/// Rewrites x in the target basis, one graded component at a time.
template <class Index>
LinearCombination<Index> convert(const LinearCombination<Index>& x, BasisKind target, SystemCache<Index>& cache) {
    if (x.kind() == target)
        return x;
    LinearCombination<Index> out(target, x.bound());
    for (const auto& [index, coeff] : x.terms()) {
        const auto sys = cache.get(index.size(), x.bound());
        const auto& a = sys->matrix(x.kind(), target);
        out.add_scaled(a.row_combination(a.row_of(index)), coeff);
    }
    return out;
}

/// Schur-side kinds written in the complete (S, s) or monomial (QS, dual-s)
/// basis; other kinds are returned as is.
template <class Index>
LinearCombination<Index> expand(const LinearCombination<Index>& x, SystemCache<Index>& cache) {
    using K = FamilyKinds<Index>;
    if (x.kind() == K::schur)
        return convert(x, K::complete, cache);
    if (x.kind() == K::dual)
        return convert(x, K::monomial, cache);
    return x;
}

/// Pairing after expanding both sides.
template <class Index>
Integer pair_expanded(const LinearCombination<Index>& f, const LinearCombination<Index>& g,
                      SystemCache<Index>& cache) {
    return pairing(expand(f, cache), expand(g, cache));
}

} // namespace kqsym
