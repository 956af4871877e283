#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <bandforge/prismatoid.hpp>

using namespace bandforge;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double deg = std::numbers::pi / 180.0;
}

TEST_CASE("epsilon grows monotonically with the drop") {
    const auto eps_at = [](double z) {
        return curvature_pair(build_prismatoid({1.0, 0.05, 0.5, z})).epsilon;
    };
    CHECK(eps_at(0.05) < eps_at(0.1));
    CHECK(eps_at(0.1) < eps_at(0.2));
    CHECK(eps_at(0.2) < eps_at(0.4));
}

TEST_CASE("inner solve pins the drop for a target epsilon") {
    const double z = solve_z_for_epsilon(1.0, 0.05, 0.5, 2.0 * deg);
    CHECK_THAT(z, WithinAbs(0.137143766103, 1e-9));  // frozen regression value
    const CurvaturePair c = curvature_pair(build_prismatoid({1.0, 0.05, 0.5, z}));
    CHECK_THAT(c.epsilon, WithinAbs(2.0 * deg, 1e-12));

    // The solve commutes with uniform scaling.
    const double z5 = solve_z_for_epsilon(5.0, 0.25, 2.5, 2.0 * deg);
    CHECK_THAT(z5, WithinAbs(5.0 * z, 1e-8));
}

TEST_CASE("full solve hits both curvature targets") {
    SECTION("epsilon = 1 degree, ratio 1/2") {
        const SolveResult sol = solve_params(1.0 * deg, 0.5);
        CHECK_THAT(sol.h, WithinAbs(0.135132724, 1e-6));  // frozen regression
        CHECK_THAT(sol.z, WithinAbs(0.090978256, 1e-6));
        CHECK_THAT(sol.achieved.epsilon, WithinAbs(1.0 * deg, 1e-9));
        CHECK_THAT(sol.achieved.delta, WithinAbs(0.5 * deg, 1e-9));
        // Drop-to-width proportion of the solved solid.
        CHECK(sol.z / 0.5 > 0.16);
        CHECK(sol.z / 0.5 < 0.22);

        // Rebuilding from the solved parameters reproduces the curvatures.
        const CurvaturePair again =
            curvature_pair(build_prismatoid({1.0, sol.h, 0.5, sol.z}));
        CHECK_THAT(again.epsilon, WithinAbs(1.0 * deg, 1e-9));
        CHECK_THAT(again.delta, WithinAbs(0.5 * deg, 1e-9));
    }
    SECTION("epsilon = 2 degrees, ratio 1/2") {
        const SolveResult sol = solve_params(2.0 * deg, 0.5);
        CHECK_THAT(sol.h, WithinAbs(0.136269116, 1e-6));  // frozen regression
        CHECK_THAT(sol.z, WithinAbs(0.129745397, 1e-6));
        CHECK_THAT(sol.achieved.epsilon, WithinAbs(2.0 * deg, 1e-9));
        CHECK_THAT(sol.achieved.delta, WithinAbs(1.0 * deg, 1e-9));
    }
}

TEST_CASE("solver determinism") {
    const SolveResult a = solve_params(1.0 * deg, 0.5);
    const SolveResult b = solve_params(1.0 * deg, 0.5);
    CHECK(a.h == b.h);
    CHECK(a.z == b.z);
}

TEST_CASE("solver rejects unreachable targets") {
    // delta/epsilon stays in the low tens even at the steepest convex bulge.
    CHECK_THROWS_AS(solve_params(2.0 * deg, 100.0), Infeasible);
    // epsilon cannot exceed pi minus the corner angle even as z -> infinity.
    CHECK_THROWS_AS(solve_z_for_epsilon(1.0, 0.05, 0.5, 2.0), Infeasible);
    CHECK_THROWS_AS(solve_params(0.0, 0.5), InvalidParams);
    CHECK_THROWS_AS(solve_params(1.0 * deg, -0.5), InvalidParams);
    CHECK_THROWS_AS(solve_z_for_epsilon(1.0, 0.05, 0.5, -1.0), InvalidParams);
}
