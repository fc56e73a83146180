#include <cmath>
#include <random>

#include "doctest.h"
#include "qsfill/descriptor.hpp"
#include "qsfill/errors.hpp"
#include "qsfill/lattice.hpp"

using namespace qsfill;

namespace {

// (positive, negative) eigenvalue counts, by symmetric elimination.
std::pair<int, int> inertia(const AmbientLattice& lat) {
    const int n = lat.rank();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(lat.form(i, j));
    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k; i < n; ++i)
            if (std::fabs(a[i][i]) > std::fabs(a[p][p])) p = i;
        if (std::fabs(a[p][p]) < 1e-9) {
            // hyperbolic pair: a[k][j] != 0 with zero diagonal
            int j = -1;
            for (int i = k + 1; i < n; ++i)
                if (std::fabs(a[k][i]) > 1e-9) j = i;
            if (j < 0) continue;
            for (int i = 0; i < n; ++i) a[k][i] += a[j][i];
            for (int i = 0; i < n; ++i) a[i][k] += a[i][j];
            p = k;
        }
        std::swap(a[k], a[p]);
        for (auto& row : a) std::swap(row[k], row[p]);
        double d = a[k][k];
        if (d > 0) ++pos;
        if (d < 0) ++neg;
        for (int i = k + 1; i < n; ++i) {
            double f = a[i][k] / d;
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (int i = k + 1; i < n; ++i) a[k][i] = a[i][k] = 0;
    }
    return {pos, neg};
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("pairings") {
    auto p2 = AmbientLattice::projective_plane(2);
    CurveClass cubic{{3, 0, 0}, CurveKind::CuspidalRational};
    CHECK(pair(p2, cubic, cubic) == 9);
    CHECK(p2.pair({0, 1, 0}, {0, 0, 1}) == 0);
    CHECK(p2.pair({0, 1, 0}, {0, 1, 0}) == -1);
    auto q = AmbientLattice::quadric();
    CHECK(q.pair({2, 2}, {2, 2}) == 8);
}

TEST_CASE("c1 pairing") {
    auto p2 = AmbientLattice::projective_plane(1);
    CHECK(p2.c1_pairing({3, 0}) == 9);
    CHECK(p2.c1_pairing({0, 1}) == 1);
    CHECK(p2.c1_pairing({3, -2}) == 7);
}

TEST_CASE("adjunction") {
    auto p2 = AmbientLattice::projective_plane(1);
    CHECK(adjunction_check(p2, {{3, 0}, CurveKind::CuspidalRational}));
    CHECK(adjunction_check(p2, {{1, 0}, CurveKind::EmbeddedSphere}));
    CHECK_FALSE(adjunction_check(p2, {{3, 0}, CurveKind::EmbeddedSphere}));
    CHECK(adjunction_check(p2, {{0, 1}, CurveKind::EmbeddedSphere}));
    // proper transform of the cubic after blowing up the cusp
    CHECK(self_intersection(p2, {{3, -2}, CurveKind::EmbeddedSphere}) == 5);
    CHECK(adjunction_check(p2, {{3, -2}, CurveKind::EmbeddedSphere}));
    auto q = AmbientLattice::quadric();
    CHECK(adjunction_check(q, {{2, 2}, CurveKind::CuspidalRational}));
}

TEST_CASE("signature and c1 squared do not depend on blow-up count") {
    for (int n = 0; n <= 9; ++n) {
        auto p2 = AmbientLattice::projective_plane(n);
        auto q = AmbientLattice::quadric(n);
        // both are rational surfaces, so b+ = 1
        CHECK(inertia(p2) == std::pair{1, n});
        CHECK(inertia(q) == std::pair{1, n + 1});
        CHECK(p2.c1_squared() == 9 - n);
        CHECK(q.c1_squared() == 8 - n);
    }
}

TEST_CASE("pair is symmetric and bilinear") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (auto lat : {AmbientLattice::projective_plane(4), AmbientLattice::quadric(3)}) {
        for (int t = 0; t < 200; ++t) {
            Coeffs x = lat.zero(), y = lat.zero(), z = lat.zero(), xy = lat.zero();
            int a = coef(rng), b = coef(rng);
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = coef(rng);
                y[i] = coef(rng);
                z[i] = coef(rng);
                xy[i] = a * x[i] + b * y[i];
            }
            REQUIRE(lat.pair(x, y) == lat.pair(y, x));
            REQUIRE(lat.pair(xy, z) == a * lat.pair(x, z) + b * lat.pair(y, z));
        }
    }
}

TEST_CASE("c1 squared drops by one per blow-up along random rewrites") {
    std::mt19937_64 rng(20240601);
    for (int run = 0; run < 1000; ++run) {
        auto model = (run % 2) ? StandardModel::CuspQuadric_Q : StandardModel::CuspCubic_P2;
        Configuration z = standard_model(model);
        const std::int64_t start = z.lattice.c1_squared();
        int steps = std::uniform_int_distribution<int>(1, 6)(rng);
        for (int s = 0; s < steps; ++s) {
            const std::int64_t before = z.lattice.c1_squared();
            bool at_point = !z.points.empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 0;
            if (at_point) {
                auto& p = z.points[std::uniform_int_distribution<std::size_t>(0, z.points.size() - 1)(rng)];
                z.blow_up_at(p.id);
            } else {
                auto& c = z.curves[std::uniform_int_distribution<std::size_t>(0, z.curves.size() - 1)(rng)];
                z.blow_up_fresh(c.name);
            }
            REQUIRE(z.lattice.c1_squared() == before - 1);
        }
        REQUIRE(z.lattice.c1_squared() == start - steps);
        REQUIRE_FALSE(z.coherence_error());
        REQUIRE_FALSE(z.adjunction_error());
    }
}

TEST_CASE("plumbing lattice") {
    auto lat = AmbientLattice::plumbing({{-2, 1}, {1, -3}}, {0, 1});
    CHECK(lat.pair({1, 0}, {0, 1}) == 1);
    CHECK_THROWS_AS(lat.c1_squared(), DomainError);
    CHECK_THROWS_AS(AmbientLattice::plumbing({{-2, 1}, {0, -3}}, {0, 1}), DomainError);
}

TEST_CASE("format") {
    auto p2 = AmbientLattice::projective_plane(2);
    CHECK(format_class(p2, {3, -2, 0}) == "3h-2e1");
}

}
