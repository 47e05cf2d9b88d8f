#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the library's combinatorics; they work on plain vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline int total(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

/// All partitions of n, largest parts first.
inline std::vector<Parts> partitions(int n) {
    std::vector<Parts> out;
    Parts cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// All compositions of n in no particular order.
inline std::vector<Parts> compositions(int n) {
    std::vector<Parts> out;
    Parts cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

inline bool bounded(const Parts& p, int k) {
    return std::all_of(p.begin(), p.end(), [k](int x) { return x <= k; });
}

/// hook(r, c) for 0-based cells, counted directly from the diagram.
inline int hook(const Parts& lambda, std::size_t r, int c) {
    int arm = lambda[r] - c - 1;
    int leg = 0;
    for (std::size_t s = r + 1; s < lambda.size() && lambda[s] > c; ++s)
        ++leg;
    return arm + leg + 1;
}

inline bool is_core(const Parts& lambda, int t) {
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c)
            if (hook(lambda, r, c) == t)
                return false;
    return true;
}

/// Row counts of cells with hook at most k.
inline Parts small_hooks(const Parts& kappa, int k) {
    Parts rows;
    for (std::size_t r = 0; r < kappa.size(); ++r) {
        int count = 0;
        for (int c = 0; c < kappa[r]; ++c)
            count += hook(kappa, r, c) <= k ? 1 : 0;
        rows.push_back(count);
    }
    while (!rows.empty() && rows.back() == 0)
        rows.pop_back();
    return rows;
}

/// Every (k+1)-core of size at most max_size whose hook<=k row counts are
/// lambda. The bijection predicts exactly one.
inline std::vector<Parts> cores_over(const Parts& lambda, int k, int max_size) {
    std::vector<Parts> found;
    for (int s = 0; s <= max_size; ++s)
        for (const Parts& kappa : partitions(s))
            if (is_core(kappa, k + 1) && small_hooks(kappa, k) == lambda)
                found.push_back(kappa);
    return found;
}

inline Parts transpose(const Parts& lambda) {
    Parts t(lambda.empty() ? 0 : static_cast<std::size_t>(lambda.front()), 0);
    for (int part : lambda)
        for (int c = 0; c < part; ++c)
            ++t[static_cast<std::size_t>(c)];
    return t;
}

/// k-conjugate through the core search.
inline Parts k_conjugate(const Parts& lambda, int k) {
    static std::map<std::pair<Parts, int>, Parts> memo;
    if (auto it = memo.find({lambda, k}); it != memo.end())
        return it->second;
    const int n = total(lambda);
    const auto cores = cores_over(lambda, k, n * (n + 1) / 2);
    Parts conj = cores.size() == 1 ? small_hooks(transpose(cores.front()), k) : Parts{-1};
    memo.emplace(std::make_pair(lambda, k), conj);
    return conj;
}

inline int part(const Parts& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

/// lambda_{i+1} <= mu_i <= lambda_i for every i.
inline bool interlaces(const Parts& lambda, const Parts& mu) {
    if (mu.size() > lambda.size())
        return false;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (part(mu, i) > lambda[i] || part(lambda, i + 1) > part(mu, i))
            return false;
    return true;
}

inline bool vertical(const Parts& lambda, const Parts& mu) {
    if (mu.size() > lambda.size())
        return false;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (part(mu, i) > lambda[i] || lambda[i] - part(mu, i) > 1)
            return false;
    return true;
}

/// Semistandard tableaux of shape lambda and content mu, by filling cells
/// row by row.
inline std::int64_t ssyt_count(const Parts& lambda, const Parts& mu) {
    if (total(lambda) != total(mu))
        return 0;
    std::vector<Parts> t;
    for (int part : lambda)
        t.emplace_back(static_cast<std::size_t>(part), 0);
    Parts left = mu;
    std::int64_t count = 0;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == t.size()) {
            ++count;
            return;
        }
        if (c == t[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, t[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(left.size()); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0)
                continue;
            --left[static_cast<std::size_t>(v - 1)];
            t[r][c] = v;
            fill(r, c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        t[r][c] = 0;
    };
    fill(0, 0);
    return count;
}

/// Cover steps on compositions paired with the column of the new cell:
/// prepending a 1 adds a cell in column 1; raising the leftmost part equal
/// to m adds a cell in column m+1.
inline std::vector<std::pair<Parts, int>> covers(const Parts& beta) {
    std::vector<std::pair<Parts, int>> out;
    Parts up{1};
    up.insert(up.end(), beta.begin(), beta.end());
    out.emplace_back(up, 1);
    std::set<int> seen;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (!seen.insert(beta[i]).second)
            continue;
        Parts next = beta;
        ++next[i];
        out.emplace_back(next, next[i]);
    }
    return out;
}

/// Horizontal composition strips of size i on top of beta: endpoints of
/// cover chains of length i whose new cells occupy strictly increasing
/// columns. With k > 0 every part stays at most k and the sorted shapes must
/// also form a horizontal k-strip, judged with the core-search conjugate.
inline std::set<Parts> comp_strips(const Parts& beta, int i, int k) {
    std::set<Parts> out;
    std::function<void(const Parts&, int, int)> walk = [&](const Parts& gamma, int steps, int last_col) {
        if (steps == i) {
            out.insert(gamma);
            return;
        }
        for (const auto& [next, col] : covers(gamma))
            if (col > last_col && (k <= 0 || bounded(next, k)))
                walk(next, steps + 1, col);
    };
    walk(beta, 0, 0);
    if (k <= 0)
        return out;
    auto sorted = [](Parts p) {
        std::sort(p.rbegin(), p.rend());
        return p;
    };
    std::set<Parts> filtered;
    const Parts inner = sorted(beta);
    const Parts inner_conj = k_conjugate(inner, k);
    for (const Parts& alpha : out) {
        const Parts outer = sorted(alpha);
        if (interlaces(outer, inner) && vertical(k_conjugate(outer, k), inner_conj))
            filtered.insert(alpha);
    }
    return filtered;
}

/// Chains from the empty composition to shape adding strips of the given
/// sizes in the given order.
inline std::int64_t comp_chains(const Parts& shape, const Parts& sizes, int k) {
    std::int64_t count = 0;
    std::function<void(const Parts&, std::size_t)> walk = [&](const Parts& gamma, std::size_t j) {
        if (j == sizes.size()) {
            count += gamma == shape ? 1 : 0;
            return;
        }
        for (const Parts& next : comp_strips(gamma, sizes[j], k))
            walk(next, j + 1);
    };
    walk({}, 0);
    return count;
}

/// Deterministic random compositions for property tests.
class Generator {
public:
    explicit Generator(std::uint32_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Parts composition(int n, int k) {
        Parts out;
        while (n > 0) {
            const int p = uniform(1, std::min(n, k));
            out.push_back(p);
            n -= p;
        }
        return out;
    }

private:
    std::mt19937 rng_;
};

} // namespace oracle
