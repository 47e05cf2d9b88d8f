#pragma once

// Exact checks of the identities relating the bases, and the search for
// negative coefficients in products and in the classical expansion.

#include "kqsym/appendix.hpp"
#include "kqsym/schur_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace kqsym {

struct CaseResult {
    std::string name;
    bool pass = true;
    std::string detail; // witness or mismatch description, empty on success
};

struct Report {
    std::string suite;
    std::vector<CaseResult> cases;

    bool passed() const {
        for (const auto& c : cases)
            if (!c.pass)
                return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& c : cases)
            f += c.pass ? 0 : 1;
        return f;
    }
    void append(const Report& other) { cases.insert(cases.end(), other.cases.begin(), other.cases.end()); }
};

namespace detail {

template <class T>
std::string str(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

inline std::string component_name(int n, Bound k) { return "n=" + std::to_string(n) + " k=" + k.to_string(); }

} // namespace detail

/// Compares every published table entry-for-entry under its printed labels.
inline Report verify_appendix(SchurCache& cache) {
    Report report{"appendix", {}};
    for (const auto& table : published_tables()) {
        const auto sys = cache.get(table.n, table.k);
        const auto& a = table.kind == "ns-to-h" ? sys->schur_to_complete : sys->dual_to_monomial;
        CaseResult result{table.kind + " " + detail::component_name(table.n, table.k), true, {}};
        if (a.rows.size() != table.labels.size()) {
            result.pass = false;
            result.detail = "dimension mismatch";
        }
        for (std::size_t r = 0; result.pass && r < table.labels.size(); ++r)
            for (std::size_t c = 0; c < table.labels.size(); ++c)
                if (a(table.labels[r], table.labels[c]) != table.rows[r][c]) {
                    result.pass = false;
                    result.detail = "entry (" + detail::str(table.labels[r]) + ", " + detail::str(table.labels[c]) +
                                    ") = " + detail::str(a(table.labels[r], table.labels[c])) + ", published " +
                                    std::to_string(table.rows[r][c]);
                    break;
                }
        report.cases.push_back(std::move(result));
    }
    return report;
}

/// chi(S^(k)_alpha) = s^(k)_{lambda(alpha)} for every k-bounded alpha of n.
inline Report verify_projection(int n, Bound k, SchurCache& comps, KSchurCache& parts) {
    Report report{"projection", {}};
    const auto sys = comps.get(n, k);
    const auto ksys = parts.get(n, k);
    for (std::size_t r = 0; r < sys->labels().size(); ++r) {
        const Composition& alpha = sys->labels()[r];
        const Partition lambda = sort_to_partition(alpha);
        const auto projected = chi_project(sys->schur_to_complete.row_combination(r));
        const auto expected = ksys->schur_to_complete.row_combination(ksys->schur_to_complete.row_of(lambda));
        CaseResult result{"S" + detail::str(alpha) + " " + detail::component_name(n, k), projected == expected, {}};
        if (!result.pass)
            result.detail = "chi gives " + detail::str(projected) + ", expected " + detail::str(expected);
        report.cases.push_back(std::move(result));
    }
    return report;
}

/// The dual k-Schur function of lambda equals the sum of QS^(k)_alpha over
/// the rearrangements alpha of lambda, compared in the M basis.
inline Report verify_decomposition(int n, Bound k, SchurCache& comps, KSchurCache& parts) {
    Report report{"decomposition", {}};
    const auto sys = comps.get(n, k);
    const auto ksys = parts.get(n, k);
    for (std::size_t r = 0; r < ksys->labels().size(); ++r) {
        const Partition& lambda = ksys->labels()[r];
        const auto dual = monomial_to_quasi(ksys->dual_to_monomial.row_combination(r));
        CompositionCombination sum(BasisKind::M, k);
        for (std::size_t a = 0; a < sys->labels().size(); ++a)
            if (sort_to_partition(sys->labels()[a]) == lambda)
                sum += sys->dual_to_monomial.row_combination(a);
        CaseResult result{"dual-s" + detail::str(lambda) + " " + detail::component_name(n, k), dual == sum, {}};
        if (!result.pass)
            result.detail = "dual k-Schur " + detail::str(dual) + " vs sum of QS " + detail::str(sum);
        report.cases.push_back(std::move(result));
    }
    return report;
}

/// <QS^(k)_alpha, S^(k)_beta> = delta for all alpha, beta of n, through the
/// M/H expansions.
inline Report verify_duality(int n, Bound k, SchurCache& cache) {
    Report report{"duality", {}};
    const auto sys = cache.get(n, k);
    const auto& labels = sys->labels();
    for (std::size_t a = 0; a < labels.size(); ++a) {
        const auto qs = expand(CompositionCombination::term(BasisKind::QS, labels[a], k), cache);
        CaseResult result{"QS" + detail::str(labels[a]) + " " + detail::component_name(n, k), true, {}};
        for (std::size_t b = 0; b < labels.size(); ++b) {
            const auto s = expand(CompositionCombination::term(BasisKind::S, labels[b], k), cache);
            const Integer value = pairing(qs, s);
            if (value != (a == b ? 1 : 0)) {
                result.pass = false;
                result.detail = "<QS" + detail::str(labels[a]) + ", S" + detail::str(labels[b]) + "> = " +
                                detail::str(value);
                break;
            }
        }
        report.cases.push_back(std::move(result));
    }
    return report;
}

/// Systems for k = n, n+1, n+2 coincide with the unbounded system, on both
/// the composition and the partition side, and the unbounded Kostka
/// diagonal is all ones.
inline Report stabilization_check(int n, SchurCache& comps, KSchurCache& parts) {
    Report report{"stabilization", {}};
    const auto classical = comps.get(n, Bound::unbounded());
    const auto kclassical = parts.get(n, Bound::unbounded());
    auto same = [](const auto& a, const auto& b) { return a.rows == b.rows && a.entries == b.entries; };
    for (int k = std::max(n, 1); k <= n + 2; ++k) {
        const auto sys = comps.get(n, k);
        const auto ksys = parts.get(n, k);
        const bool comp_ok = same(sys->complete_to_schur, classical->complete_to_schur) &&
                             same(sys->schur_to_complete, classical->schur_to_complete);
        const bool part_ok = same(ksys->complete_to_schur, kclassical->complete_to_schur) &&
                             same(ksys->schur_to_complete, kclassical->schur_to_complete);
        report.cases.push_back({"compositions " + detail::component_name(n, k) + " vs inf", comp_ok,
                                comp_ok ? "" : "composition system differs from the unbounded one"});
        report.cases.push_back({"partitions " + detail::component_name(n, k) + " vs inf", part_ok,
                                part_ok ? "" : "partition system differs from the unbounded one"});
    }
    bool diagonal = true;
    for (std::size_t i = 0; i < classical->labels().size(); ++i)
        diagonal = diagonal && classical->complete_to_schur.at(i, i) == 1;
    report.cases.push_back({"unbounded diagonal n=" + std::to_string(n), diagonal, diagonal ? "" : "diagonal not 1"});
    return report;
}

/// Round trip through (k+1)-cores, involution and size preservation of
/// k-conjugation, and agreement with the transpose once k >= n.
inline Report verify_omega(int n, int k) {
    Report report{"omega", {}};
    CaseResult result{detail::component_name(n, k), true, {}};
    auto fail = [&](const Partition& lambda, const std::string& why) {
        if (result.pass)
            result.detail = detail::str(lambda) + ": " + why;
        result.pass = false;
    };
    std::map<Partition, Partition> owner; // core -> bounded partition
    for (const Partition& lambda : enumerate_partitions(n, k)) {
        const CorePartition core = bounded_to_core(lambda, k);
        if (core_to_bounded(core) != lambda)
            fail(lambda, "core round trip fails");
        if (const auto [it, fresh] = owner.emplace(core.partition(), lambda); !fresh)
            fail(lambda, "shares its core with " + detail::str(it->second));
        const Partition conj = k_conjugate(lambda, k);
        if (conj.size() != lambda.size())
            fail(lambda, "k-conjugate changes size");
        if (k_conjugate(conj, k) != lambda)
            fail(lambda, "k-conjugation is not an involution");
        if (k >= n && conj != transpose(lambda))
            fail(lambda, "k-conjugate differs from transpose although k >= n");
    }
    report.cases.push_back(std::move(result));
    return report;
}

struct ProductWitness {
    Composition left;
    Composition right;
    Composition term;
    Integer coefficient;
};

struct ExpansionWitness {
    Composition alpha;
    Composition classical;
    Integer coefficient;
};

struct NegativityResult {
    Bound k;
    int max_total_degree = 0;
    std::vector<ProductWitness> products;     // negative structure constants
    std::vector<ExpansionWitness> expansions; // negative coefficients in classical S
};

/// (a) products S^(k)_alpha S^(k)_beta with |alpha| + |beta| <= max degree,
/// computed through H; (b) S^(k)_alpha in the classical S basis for
/// |alpha| <= max degree. Every negative coefficient is recorded.
inline NegativityResult negativity_search(int max_total_degree, Bound k, SchurCache& cache) {
    if (max_total_degree < 2)
        throw std::invalid_argument("negativity_search: degree must be at least 2");
    NegativityResult result{k, max_total_degree, {}, {}};

    for (int total = 2; total <= max_total_degree; ++total) {
        const auto product_sys = cache.get(total, k);
        for (int p = 1; p < total; ++p) {
            const auto left = cache.get(p, k);
            const auto right = cache.get(total - p, k);
            for (std::size_t a = 0; a < left->labels().size(); ++a) {
                const auto sa = left->schur_to_complete.row_combination(a);
                for (std::size_t b = 0; b < right->labels().size(); ++b) {
                    const auto in_h = H_product(sa, right->schur_to_complete.row_combination(b));
                    const auto in_s = product_sys->complete_to_schur.apply(in_h);
                    for (const auto& [gamma, c] : in_s.terms())
                        if (c < 0)
                            result.products.push_back({left->labels()[a], right->labels()[b], gamma, c});
                }
            }
        }
    }

    for (int n = 1; n <= max_total_degree; ++n) {
        const auto sys = cache.get(n, k);
        const auto classical = cache.get(n, Bound::unbounded());
        for (std::size_t a = 0; a < sys->labels().size(); ++a) {
            // the H expansion only uses k-bounded labels, which the
            // unbounded component also carries
            const auto bounded_h = sys->schur_to_complete.row_combination(a);
            CompositionCombination in_h(BasisKind::H, Bound::unbounded());
            for (const auto& [beta, c] : bounded_h.terms())
                in_h.add(beta, c);
            const auto in_s = classical->complete_to_schur.apply(in_h);
            for (const auto& [gamma, c] : in_s.terms())
                if (c < 0)
                    result.expansions.push_back({sys->labels()[a], gamma, c});
        }
    }
    return result;
}

} // namespace kqsym
