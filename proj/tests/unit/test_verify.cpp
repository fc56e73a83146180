#include "doctest.h"
#include "qsfill/enumerate.hpp"
#include "qsfill/verify.hpp"

using namespace qsfill;

namespace {

FillingDescriptor only(const char* id) {
    auto r = search_fillings(SingularityId::parse(id));
    REQUIRE(r.fillings.size() == 1);
    return r.fillings.front().descriptor;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("T:7 witness") {
    auto d = only("T:7");
    auto w = verify_filling(d);
    CHECK(w.model == StandardModel::CuspCubic_P2);
    // one blow-up for the string, three on it, then free blow-ups on D
    CHECK(w.steps.size() == 7);
    auto z = witness_configuration(w);
    CHECK(z.self("C1") == -4);
    CHECK(z.self("D") == 5);
    int on_c1 = 0;
    for (const auto& c : z.curves)
        if (c.role == Role::E && z.self(c.name) == -1 && z.pair(c.name, "C1") == 1) ++on_c1;
    CHECK(on_c1 == 3);
    CHECK(replay_witness(w) == d);
}

TEST_CASE("every emitted witness replays") {
    for (auto id : {"T:19", "T:5", "O:5", "O:31", "I:97", "I:113", "D:7,3", "D:5,2", "A:7,3", "A:4,1"}) {
        for (const auto& f : search_fillings(SingularityId::parse(id)).fillings) {
            CAPTURE(f.descriptor.str());
            CHECK(replay_witness(f.witness) == f.descriptor);
            CHECK(verify_filling(f.descriptor).model == f.descriptor.base);
        }
    }
}

TEST_CASE("unrealizable descriptors are rejected") {
    auto d = only("T:7");
    d.attachments = {{2, 1}};
    CHECK_THROWS_AS(verify_filling(d), VerificationError);

    auto wrong_string = only("T:7");
    wrong_string.string = {-3};
    CHECK_THROWS_AS(verify_filling(wrong_string), VerificationError);

    auto wrong_base = only("T:7");
    wrong_base.base = StandardModel::TwoLines_P2;
    CHECK_THROWS_AS(verify_filling(wrong_base), VerificationError);
}

TEST_CASE("case II rejections name the constraint") {
    FillingDescriptor d;
    d.singularity = SingularityId::parse("T:6(4-2)+5");
    d.dd = 5;
    d.string = {-3, -2, -2};
    d.case_tag = CaseTag::CaseII;
    d.case_i = 2;
    d.case_j = 3;
    d.base = StandardModel::CuspQuadricThreeFibres_Q;
    try {
        verify_filling(d);
        FAIL("accepted");
    } catch (const VerificationError& e) {
        CHECK(std::string(e.what()).find("constraint (a)") != std::string::npos);
    }
}

TEST_CASE("tampered witnesses fail") {
    auto f = search_fillings(SingularityId::parse("T:19")).fillings.front();
    auto w = f.witness;
    w.steps.pop_back();
    CHECK_THROWS_AS(replay_witness(w), VerificationError);

    auto bad_step = f.witness;
    bad_step.steps.push_back(RewriteStep::down("D"));
    CHECK_THROWS_AS(replay_witness(bad_step), VerificationError);
}

TEST_CASE("meeting exceptional -1-curves are caught") {
    // C is left out of the divisor, so after one blow-up on it there are
    // two -1-curves outside the divisor that meet
    Witness w;
    w.singularity = SingularityId::parse("T:5");
    w.model = StandardModel::CuspQuadricThreeFibres_Q;
    w.steps = {RewriteStep::fresh_on("C")};
    w.labels = {{"D", "D"}, {"A", "A"}, {"B", "B"}};
    try {
        replay_witness(w);
        FAIL("accepted");
    } catch (const VerificationError& e) {
        CHECK(std::string(e.what()).find("meet") != std::string::npos);
    }
}

}
