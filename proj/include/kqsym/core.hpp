#pragma once

// Shared vocabulary: exact integers, the k-bound, and the error types.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace kqsym {

/// Arbitrary-precision integer used for every coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Raised when an index violates k-boundedness or a combinatorial precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when exact linear algebra hits a singular or non-integral result.
/// Either case points at a combinatorial bug upstream.
class ArithmeticError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Upper bound k on parts, or no bound at all.
class Bound {
public:
    constexpr Bound() = default;
    constexpr Bound(int k) : k_(k) {
        if (k < 1)
            throw std::invalid_argument("k must be at least 1");
    }

    static constexpr Bound unbounded() { return Bound(); }

    constexpr bool bounded() const { return k_.has_value(); }
    constexpr int value() const { return *k_; }
    constexpr bool admits(int part) const { return !k_ || part <= *k_; }

    std::string to_string() const { return k_ ? std::to_string(*k_) : "inf"; }

    friend constexpr bool operator==(const Bound&, const Bound&) = default;
    friend constexpr auto operator<=>(const Bound& a, const Bound& b) {
        // unbounded sorts after every finite k
        if (a.k_ == b.k_)
            return std::strong_ordering::equal;
        if (!a.k_)
            return std::strong_ordering::greater;
        if (!b.k_)
            return std::strong_ordering::less;
        return *a.k_ <=> *b.k_;
    }

private:
    std::optional<int> k_;
};

} // namespace kqsym
