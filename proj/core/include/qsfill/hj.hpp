#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsfill {

// n/q in lowest terms.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
    std::string str() const;
};

// Terms b_1..b_r of n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)), every b_i >= 2.
struct HJExpansion {
    std::vector<std::int64_t> terms;

    bool operator==(const HJExpansion&) const = default;
    std::size_t size() const { return terms.size(); }
    std::string str() const;
};

// Throws DomainError unless 0 < q < n and gcd(n, q) = 1.
HJExpansion hj_expand(std::int64_t n, std::int64_t q);

// Throws DomainError on an empty expansion or a term below 2.
Rational hj_eval(const HJExpansion& e);

// Expansion of n/(n-q).
HJExpansion hj_dual(std::int64_t n, std::int64_t q);

// Dual of an expansion given by its terms (same orientation).
HJExpansion hj_dual(const HJExpansion& e);

}  // namespace qsfill
