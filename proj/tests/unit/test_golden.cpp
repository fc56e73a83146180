#include <fstream>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "qsfill/enumerate.hpp"
#include "qsfill/serialize.hpp"
#include "qsfill/verify.hpp"

using namespace qsfill;
using nlohmann::json;

namespace {

json load() {
    std::ifstream in(QSFILL_GOLDEN_PATH);
    REQUIRE(in.good());
    return json::parse(in);
}

std::vector<FillingDescriptor> sorted(const json& j) {
    auto v = descriptors_from_json(j.dump());
    sort_descriptors(v);
    return v;
}

}  // namespace

TEST_SUITE("golden") {

TEST_CASE("fixture covers rows 1 to 257") {
    std::set<int> seen;
    auto fixture = load();
    for (const auto& [id, row] : fixture.items())
        for (int e : row.at("rows")) seen.insert(e);
    for (int e = 1; e <= 257; ++e) CHECK_MESSAGE(seen.count(e), "row ", e);
}

TEST_CASE("enumerator reproduces every row") {
    auto fixture = load();
    for (const auto& [id, row] : fixture.items()) {
        CAPTURE(id);
        auto r = search_fillings(SingularityId::parse(id));
        REQUIRE(r.complete);
        auto want = sorted(row.at("descriptors"));
        if (row.contains("known_extra")) {
            auto extra = sorted(row.at("known_extra"));
            want.insert(want.end(), extra.begin(), extra.end());
            sort_descriptors(want);
        }
        CHECK(r.descriptors() == want);
        for (const auto& f : r.fillings) CHECK(replay_witness(f.witness) == f.descriptor);
    }
}

TEST_CASE("the single documented extra") {
    // I:113 = 30(5-2)+23 also admits a case II filling with i = j = 4 that is
    // not among the fixture rows; it passes (a)-(c) and replays.
    std::size_t rows = 0;
    auto fixture = load();
    for (const auto& [id, row] : fixture.items())
        if (row.contains("known_extra")) {
            ++rows;
            CHECK(id == "I:113");
            auto extra = sorted(row.at("known_extra"));
            REQUIRE(extra.size() == 1);
            CHECK(extra[0].str() == "(30(5-2)+23;5,-2,-2,-3,-3;4,4;2) Q");
            CHECK(constraint_check_case2(extra[0]));
            CHECK_NOTHROW(verify_filling(extra[0]));
        }
    CHECK(rows == 1);
}

TEST_CASE("generic rows at and above their threshold") {
    std::size_t generic = 0;
    auto fixture = load();
    for (const auto& [id, row] : fixture.items()) {
        if (!row.value("generic", false)) continue;
        ++generic;
        CAPTURE(id);
        CHECK(enumerate_fillings(SingularityId::parse(id)) == sorted(row.at("descriptors")));
    }
    CHECK(generic >= 17);
}

}
