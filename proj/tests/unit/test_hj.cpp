#include <numeric>

#include "doctest.h"
#include "qsfill/errors.hpp"
#include "qsfill/hj.hpp"

using namespace qsfill;

namespace {

// Evaluate [b1..br] with plain fractions, back to front.
Rational naive_eval(const std::vector<std::int64_t>& t) {
    std::int64_t num = t.back(), den = 1;
    for (auto it = t.rbegin() + 1; it != t.rend(); ++it) {
        std::int64_t n2 = *it * num - den;
        den = num;
        num = n2;
    }
    std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace

TEST_SUITE("hj") {

TEST_CASE("expansion examples") {
    CHECK(hj_expand(4, 1).terms == std::vector<std::int64_t>{4});
    CHECK(hj_expand(5, 4).terms == std::vector<std::int64_t>{2, 2, 2, 2});
    CHECK(hj_expand(19, 7).terms == std::vector<std::int64_t>{3, 4, 2});
    CHECK(hj_expand(19, 7).str() == "[3,4,2]");
}

TEST_CASE("evaluation examples") {
    CHECK(hj_eval({{4}}) == Rational{4, 1});
    CHECK(hj_eval({{2, 2, 2}}) == Rational{4, 3});
    CHECK(hj_eval({{3, 4, 2}}) == Rational{19, 7});
}

TEST_CASE("dual examples") {
    CHECK(hj_dual(4, 1).terms == std::vector<std::int64_t>{2, 2, 2});
    CHECK(hj_dual(2, 1).terms == std::vector<std::int64_t>{2});
    auto d = hj_dual(19, 7);
    CHECK(hj_eval(d) == Rational{19, 12});
    CHECK(d.terms == hj_expand(19, 12).terms);
}

TEST_CASE("round trip, involution and term bounds up to 200") {
    for (std::int64_t n = 2; n <= 200; ++n)
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto e = hj_expand(n, q);
            REQUIRE(hj_eval(e) == Rational{n, q});
            REQUIRE(naive_eval(e.terms) == Rational{n, q});
            REQUIRE(hj_dual(hj_dual(e)).terms == e.terms);
            REQUIRE(e.terms.size() <= static_cast<std::size_t>(n - 1));
            for (auto t : e.terms) REQUIRE(t >= 2);
        }
}

TEST_CASE("bad input") {
    CHECK_THROWS_AS(hj_expand(4, 2), DomainError);
    CHECK_THROWS_AS(hj_expand(4, 4), DomainError);
    CHECK_THROWS_AS(hj_expand(4, 0), DomainError);
    CHECK_THROWS_AS(hj_eval({{1, 2}}), DomainError);
    CHECK_THROWS_AS(hj_eval({{}}), DomainError);
}

}
