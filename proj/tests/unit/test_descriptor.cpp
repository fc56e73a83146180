#include "doctest.h"
#include "qsfill/descriptor.hpp"
#include "qsfill/errors.hpp"

using namespace qsfill;

namespace {

FillingDescriptor case2(const char* id, std::vector<std::int64_t> string, std::int64_t i, std::int64_t j,
                        std::vector<Attachment> att = {}) {
    FillingDescriptor d;
    d.singularity = SingularityId::parse(id);
    d.dd = 5;
    d.string = std::move(string);
    d.case_tag = CaseTag::CaseII;
    d.case_i = i;
    d.case_j = j;
    d.attachments = std::move(att);
    d.base = StandardModel::CuspQuadricThreeFibres_Q;
    return d;
}

}  // namespace

TEST_SUITE("descriptor") {

TEST_CASE("text form") {
    FillingDescriptor d;
    d.singularity = SingularityId::parse("T:7");
    d.dd = 5;
    d.string = {-4};
    d.attachments = {{3, 1}};
    CHECK(d.str() == "(6(3-2)+1;5,-4;3x1) P2");

    auto e = case2("T:6(4-2)+5", {-2, -3, -2}, 2, 3, {{1, 1}});
    CHECK(e.str() == "(6(4-2)+5;5,-2,-3,-2;2,3;1) Q");

    FillingDescriptor o;
    o.singularity = SingularityId::parse("O:5");
    o.dd = 2;
    o.case_tag = CaseTag::CaseI;
    o.base = StandardModel::CuspQuadricTwoFibres_Q;
    CHECK(o.str() == "(12(2-2)+5;2;) Q");
}

TEST_CASE("known case II fillings pass") {
    // (6(4-2)+5;5,-2,-3,-2;2,3;1)
    CHECK(constraint_check_case2(case2("T:6(4-2)+5", {-2, -3, -2}, 2, 3, {{1, 1}})));
    // (6(2-2)+5;4,-2;1,1;)
    auto d = case2("T:5", {-2}, 1, 1);
    d.dd = 4;
    CHECK(constraint_check_case2(d));
}

TEST_CASE("constraint (a): c_i != 2 when i > 1") {
    auto d = case2("T:6(4-2)+5", {-3, -2, -2}, 2, 3);
    CHECK_FALSE(constraint_check_case2(d));
    CHECK(case2_violation(d) == 'a');
}

TEST_CASE("constraint (b): c_j != 2 when j < k") {
    auto d = case2("T:6(4-2)+5", {-3, -2, -3}, 1, 2);
    CHECK_FALSE(constraint_check_case2(d));
    CHECK(case2_violation(d) == 'b');
}

TEST_CASE("constraint (c): b <= max{5, c_{b-2} + 1}") {
    // b = 8, c_6 = 6: max{5, 7} = 7 < 8
    auto d = case2("T:6(8-2)+5", {-2, -2, -2, -2, -2, -6}, 1, 6);
    CHECK_FALSE(constraint_check_case2(d));
    CHECK(case2_violation(d) == 'c');
    // b = 7 is admitted once c_5 = 6
    CHECK(constraint_check_case2(case2("T:6(7-2)+5", {-2, -2, -2, -2, -6}, 1, 5)));
    // b <= 5 never trips (c)
    CHECK(constraint_check_case2(case2("T:6(5-2)+5", {-2, -2, -3}, 1, 3)));
    CHECK(case2_violation(case2("T:6(6-2)+5", {-2, -2, -2, -3}, 1, 4)) == 'c');
}

TEST_CASE("indices out of range") {
    CHECK(case2_violation(case2("T:5", {-2}, 1, 2)) == 'i');
    CHECK_FALSE(constraint_check_case2(case2("T:5", {-2}, 0, 1)));
}

TEST_CASE("constraint check needs a case II descriptor") {
    FillingDescriptor d;
    d.singularity = SingularityId::parse("T:7");
    CHECK_THROWS_AS(constraint_check_case2(d), DomainError);
    CHECK_FALSE(case2_violation(d).has_value());
}

TEST_CASE("model names") {
    for (auto m : {StandardModel::TwoLines_P2, StandardModel::CuspQuadricOneFibre_Q, StandardModel::CuspCubicPlusLine_blownP2,
                   StandardModel::CuspCubic_P2, StandardModel::CuspQuadric_Q, StandardModel::CuspQuadricTwoFibres_Q,
                   StandardModel::CuspQuadricThreeFibres_Q}) {
        CHECK(standard_model_from_string(to_string(m)) == m);
        auto z = standard_model(m);
        CHECK_FALSE(z.coherence_error());
        CHECK_FALSE(z.adjunction_error());
    }
    CHECK_THROWS_AS(standard_model_from_string("Nope"), DomainError);
}

TEST_CASE("canonical order removes duplicates") {
    auto a = case2("T:5", {-2}, 1, 1);
    auto b = a;
    b.case_tag = CaseTag::CaseI;
    b.case_i = b.case_j = 0;
    std::vector<FillingDescriptor> v{a, b, a};
    sort_descriptors(v);
    CHECK(v.size() == 2);
    CHECK(v[0] < v[1]);
}

}
