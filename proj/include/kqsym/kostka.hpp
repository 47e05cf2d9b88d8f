#pragma once

// Kostka-type numbers as counts of strip chains, for both index families:
//   partitions   -> horizontal (k-)strips   (K, K^(k))
//   compositions -> horizontal (k-)composition strips (tilde K, tilde K^(k))

#include "kqsym/composition.hpp"
#include "kqsym/core.hpp"
#include "kqsym/partition.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kqsym {

/// Which content part is added first.
///   paper: step i adds a strip of size content[i]
///   pieri: step i adds content[m+1-i], matching h_{c1} h_{c2} ... h_{cm}
///          acting on the unit by left multiplication
enum class ContentOrder { paper, pieri };

/// Strip rules for each index family.
template <class Index>
struct StripRules;

template <>
struct StripRules<Partition> {
    static std::vector<Partition> targets(const Partition& gamma, int i, Bound k) {
        return k_pieri_targets(gamma, i, k);
    }
    /// Necessary condition for shape to be reachable from gamma.
    static bool may_reach(const Partition& gamma, const Partition& shape) { return contains(shape, gamma); }
    static std::vector<Partition> enumerate(int n, Bound k) { return enumerate_partitions(n, k); }
};

template <>
struct StripRules<Composition> {
    static std::vector<Composition> targets(const Composition& gamma, int i, Bound k) {
        return comp_pieri_targets(gamma, i, k);
    }
    static bool may_reach(const Composition& gamma, const Composition& shape) {
        return bottom_aligned_contains(shape, gamma);
    }
    static std::vector<Composition> enumerate(int n, Bound k) { return enumerate_compositions(n, k); }
};

/// Memoized chain counts for one (family, k, order).
template <class Index>
class KostkaTable {
public:
    using Chain = std::vector<Index>;

    KostkaTable(Bound k, ContentOrder order) : k_(k), order_(order) {}

    Bound bound() const { return k_; }
    ContentOrder order() const { return order_; }

    /// Number of chains from the empty shape to `shape` whose steps add
    /// strips of the content sizes in this table's order.
    Integer count(const Index& shape, const Composition& content) {
        const auto key = std::make_pair(shape, content);
        if (auto it = entries_.find(key); it != entries_.end())
            return it->second;
        const std::vector<int> sizes = steps(shape, content);
        std::map<std::pair<Index, std::size_t>, Integer> memo;
        auto walk = [&](auto&& self, const Index& gamma, std::size_t j) -> Integer {
            if (j == sizes.size())
                return gamma == shape ? Integer(1) : Integer(0);
            const auto mkey = std::make_pair(gamma, j);
            if (auto it = memo.find(mkey); it != memo.end())
                return it->second;
            Integer total = 0;
            for (const Index& next : StripRules<Index>::targets(gamma, sizes[j], k_))
                if (StripRules<Index>::may_reach(next, shape))
                    total += self(self, next, j + 1);
            memo.emplace(mkey, total);
            return total;
        };
        Integer result = walk(walk, Index{}, 0);
        entries_.emplace(key, result);
        return result;
    }

    Integer count(const Index& shape, const Partition& content) {
        return count(shape, Composition(content.parts()));
    }

    /// The chains themselves, each listed from the empty shape to `shape`.
    std::vector<Chain> chains(const Index& shape, const Composition& content) const {
        const std::vector<int> sizes = steps(shape, content);
        std::vector<Chain> out;
        Chain current{Index{}};
        auto walk = [&](auto&& self, std::size_t j) -> void {
            if (j == sizes.size()) {
                if (current.back() == shape)
                    out.push_back(current);
                return;
            }
            for (const Index& next : StripRules<Index>::targets(current.back(), sizes[j], k_)) {
                if (!StripRules<Index>::may_reach(next, shape))
                    continue;
                current.push_back(next);
                self(self, j + 1);
                current.pop_back();
            }
        };
        walk(walk, 0);
        return out;
    }

private:
    std::vector<int> steps(const Index& shape, const Composition& content) const {
        if (shape.size() != content.size())
            throw std::invalid_argument("kostka: shape and content have different sizes");
        if (!shape.is_bounded(k_) || !content.is_bounded(k_))
            throw DomainError("kostka: shape or content is not " + k_.to_string() + "-bounded");
        std::vector<int> sizes = content.parts();
        if (order_ == ContentOrder::pieri)
            std::reverse(sizes.begin(), sizes.end());
        return sizes;
    }

    Bound k_;
    ContentOrder order_;
    std::map<std::pair<Index, Composition>, Integer> entries_;
};

template <class Index>
Integer kostka(const Index& shape, const Composition& content, Bound k, ContentOrder order) {
    return KostkaTable<Index>(k, order).count(shape, content);
}

} // namespace kqsym
