#include <numeric>

#include "det.hpp"
#include "doctest.h"
#include "qsfill/catalog.hpp"
#include "qsfill/enumerate.hpp"
#include "qsfill/errors.hpp"

using namespace qsfill;

namespace {

std::vector<SingularityId> platonic_ids(std::int64_t max_b) {
    std::vector<SingularityId> out;
    for (auto f : {Family::Tetrahedral, Family::Octahedral, Family::Icosahedral})
        for (auto r : platonic_residues(f))
            for (std::int64_t b = 2; b <= max_b; ++b) out.push_back(SingularityId::platonic(f, b, r));
    return out;
}

std::int64_t arm_product(Family f) {
    switch (f) {
        case Family::Tetrahedral: return 2 * 3 * 3;
        case Family::Octahedral: return 2 * 3 * 4;
        default: return 2 * 3 * 5;
    }
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("id parsing") {
    CHECK(SingularityId::parse("T:7").m == 7);
    CHECK(SingularityId::parse("T:6(8-2)+1").m == 37);
    CHECK(SingularityId::parse("I:30(5-2)+7").str() == "I:97");
    CHECK(SingularityId::parse("O:31").label() == "12(4-2)+7");
    CHECK(SingularityId::parse("D:7,3").b() == 3);
    CHECK_THROWS_AS(SingularityId::parse("A:4,2"), DomainError);
    CHECK_THROWS_AS(SingularityId::parse("T:8"), DomainError);
    CHECK_THROWS_AS(SingularityId::parse("O:6(3-2)+1"), DomainError);
    CHECK_THROWS_AS(SingularityId::parse("X:1"), DomainError);
    CHECK_THROWS_AS(SingularityId::parse("T7"), DomainError);
}

TEST_CASE("resolution graph examples") {
    auto a = resolution_graph(SingularityId::parse("A:4,1"));
    REQUIRE(a.vertices.size() == 1);
    CHECK(a.vertices[0].weight == -4);

    auto d = resolution_graph(SingularityId::parse("D:7,3"));
    CHECK(d.weight("central") == -3);
    CHECK(d.weight("arm1[1]") == -2);
    CHECK(d.weight("arm2[1]") == -2);
    CHECK(d.weight("arm3[1]") == -2);
    CHECK(d.weight("arm3[2]") == -2);
    CHECK(d.is_tree());

    auto t = resolution_graph(SingularityId::parse("T:7"));
    CHECK(t.weight("central") == -3);
    CHECK(t.vertices.size() == 6);
}

TEST_CASE("resolution determinant matches the order of H1 of the link") {
    for (std::int64_t n = 2; n <= 40; ++n)
        for (std::int64_t q = 1; q < n; ++q)
            if (std::gcd(n, q) == 1) REQUIRE(support::negated_det(resolution_graph(SingularityId::cyclic(n, q))) == n);
    for (const auto& s : platonic_ids(8)) {
        auto g = resolution_graph(s);
        CAPTURE(s.str());
        REQUIRE(g.is_tree());
        REQUIRE(support::negated_det(g) * s.modulus() == arm_product(s.family) * s.m);
    }
}

TEST_CASE("compactifying divisor examples") {
    auto c = compactifying_divisor(SingularityId::parse("A:4,1"));
    REQUIRE(c.vertices.size() == 4);
    CHECK(c.weight("L") == 1);
    CHECK(c.weight("C1") == -1);
    CHECK(c.weight("C2") == -2);
    CHECK(c.weight("C3") == -2);
    CHECK(c.adjacent("L", "C1"));
    CHECK(c.adjacent("C2", "C3"));

    auto c2 = compactifying_divisor(SingularityId::parse("A:2,1"));
    CHECK(c2.vertices.size() == 2);

    auto t = compactifying_divisor(SingularityId::parse("T:7"));
    CHECK(t.weight("central") == 0);
    CHECK(t.weight("arm1[1]") == -2);
    CHECK(t.weight("arm2[1]") == -3);
    CHECK(t.weight("arm3[1]") == -3);

    // O:31 = 12(4-2)+7
    auto o = compactifying_divisor(SingularityId::parse("O:31"));
    CHECK(o.weight("central") == 1);
    CHECK(o.weight("arm3[3]") == -2);
}

TEST_CASE("cyclic divisor chain evaluates to n/(n-q)") {
    for (std::int64_t n = 2; n <= 60; ++n)
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto g = compactifying_divisor(SingularityId::cyclic(n, q));
            HJExpansion e;
            for (std::size_t i = 1; i < g.vertices.size(); ++i) e.terms.push_back(-g.vertices[i].weight);
            e.terms[0] += 1;
            REQUIRE(hj_eval(e) == Rational{n, n - q});
        }
}

TEST_CASE("divisor arms are dual to resolution arms") {
    for (const auto& s : platonic_ids(5))
        for (int arm = 1; arm <= 3; ++arm) REQUIRE(hj_dual(resolution_arm(s, arm)) == divisor_arm(s, arm));
}

TEST_CASE("type classification") {
    CHECK(classify_type(SingularityId::parse("T:7")) == SingularityType::Type32);
    CHECK(classify_type(SingularityId::parse("T:5")) == SingularityType::Type31);
    CHECK(classify_type(SingularityId::parse("T:3")) == SingularityType::Both);
    CHECK(classify_type(SingularityId::parse("T:6(3-2)+3")) == SingularityType::Both);
}

TEST_CASE("normalize_central") {
    for (const auto& s : platonic_ids(7)) {
        CAPTURE(s.str());
        auto before = compactifying_divisor(s);
        auto after = normalize_central(s);
        const std::int64_t b = s.b();
        std::size_t added = after.vertices.size() - before.vertices.size();
        REQUIRE(added == static_cast<std::size_t>(b - 2));
        if (b == 2) {
            REQUIRE(after == before);
            continue;
        }
        REQUIRE(after.weight("central") == -1);
        REQUIRE(after.weight("arm3[1]") == before.weight("arm3[1]") - 1);
        for (const auto& v : before.vertices)
            if (v.name != "central" && v.name != "arm3[1]") REQUIRE(after.weight(v.name) == v.weight);
    }
    auto t = normalize_central(SingularityId::parse("T:7"));
    CHECK(t.weight("N1") == -1);
    CHECK(t.adjacent("central", "N1"));
    CHECK(t.adjacent("N1", "arm3[1]"));
    // type (3,1), b = 4
    auto g = normalize_central(SingularityId::parse("T:17"));
    CHECK(g.weight("central") == -1);
    CHECK(g.find("N2") != nullptr);
}

TEST_CASE("third branch a and the c_{b-2} bound") {
    for (const auto& s : platonic_ids(9)) {
        CAPTURE(s.str());
        auto a = third_branch_a(s);
        if (s.b() >= 3) REQUIRE(a == 1);
        else {
            REQUIRE(a >= 2);
            REQUIRE(a <= 5);
        }
        auto t = Target::of(s);
        auto idx = static_cast<std::size_t>(s.b() - 3);
        if (s.b() >= 3 && idx < t.weights.size()) REQUIRE(-t.weights[idx] <= 6);
    }
}

}
