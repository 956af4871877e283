#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <bandforge/develop.hpp>
#include <bandforge/montecarlo.hpp>
#include <bandforge/prismatoid.hpp>

using namespace bandforge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;

PrismatoidParams random_params(SplitMix64& rng) {
    const double s = std::pow(10.0, rng.uniform(-1.0, 1.0));
    return {s, rng.uniform(0.005, 0.13) * s, rng.uniform(0.05, 1.0) * s,
            rng.uniform(0.01, 0.4) * s};
}

double angle_at(Vec2 apex, Vec2 p, Vec2 q) {
    return angle_between(p - apex, q - apex);
}

}  // namespace

TEST_CASE("development anchors the cut edge on the y axis") {
    const Prismatoid p = build_prismatoid({1.0, 0.05, 0.5, 0.137});
    for (int cut = 0; cut < 6; ++cut) {
        const Development dev = develop_band(p, cut);
        const double len = norm(p.b[cut] - p.a[cut]);
        CHECK_THAT(dev.rim[0].x, WithinAbs(0.0, 1e-14));
        CHECK_THAT(dev.rim[0].y, WithinAbs(len, 1e-12));
        CHECK_THAT(norm(dev.bottom[0]), WithinAbs(0.0, 1e-14));
        // The band unrolls into x > 0.
        CHECK(dev.rim[3].x > 0.0);
        // Both images of the cut edge have the cut edge's length.
        CHECK_THAT(distance(dev.rim[6], dev.bottom[6]), WithinRel(len, 1e-12));
    }
}

TEST_CASE("development is an isometry on every face") {
    SplitMix64 rng(7);
    std::vector<PrismatoidParams> cases{{1.0, 0.05, 0.5, 0.137},
                                        {1.0, 0.05, 0.5, 0.095}};
    for (int i = 0; i < 5; ++i) cases.push_back(random_params(rng));

    for (const PrismatoidParams& params : cases) {
        const Prismatoid p = build_prismatoid(params);
        for (int cut = 0; cut < 6; ++cut) {
            const Development dev = develop_band(p, cut);
            for (int j = 0; j < 6; ++j) {
                const auto q3 = side_quad(p, (cut + j) % 6);
                const auto& q2 = dev.quads[j];
                // Four edges and both diagonals: a planar quad's congruence set.
                const std::array<std::pair<int, int>, 6> pairs{
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}};
                for (const auto& [u, v] : pairs) {
                    CHECK_THAT(distance(q2[u], q2[v]),
                               WithinRel(distance(q3[u], q3[v]), 1e-9));
                }
            }
        }
    }
}

TEST_CASE("consecutive faces share their hinge exactly") {
    const Prismatoid p = build_prismatoid({1.0, 0.05, 0.5, 0.137});
    for (int cut = 0; cut < 6; ++cut) {
        const Development dev = develop_band(p, cut);
        for (int j = 0; j + 1 < 6; ++j) {
            CHECK_THAT(norm(dev.quads[j][3] - dev.quads[j + 1][0]), WithinAbs(0.0, 1e-12));
            CHECK_THAT(norm(dev.quads[j][2] - dev.quads[j + 1][1]), WithinAbs(0.0, 1e-12));
        }
        for (int i = 0; i < 6; ++i) {
            CHECK(dev.rim[i + 1] == dev.quads[i][3]);
            CHECK(dev.bottom[i + 1] == dev.quads[i][2]);
        }
    }
}

TEST_CASE("cut gap equals the vertex curvature") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const Prismatoid p = build_prismatoid(random_params(rng));
        for (int cut = 0; cut < 6; ++cut) {
            const Development dev = develop_band(p, cut);
            const double curv = vertex_curvature(p, Face::top, cut);
            CHECK_THAT(dev.gap, WithinAbs(curv, 1e-9));
        }
    }
}

TEST_CASE("rim turning angles carry the curvature deficit") {
    // At each interior rim vertex the band-side angle is 2*pi minus the top
    // angle minus the deficit; the polyline angle therefore reads
    // alpha + deficit.
    const Prismatoid p = build_prismatoid({1.0, 0.05, 0.5, 0.137});
    const Hexagon2 top = top_polygon(p);
    for (int cut = 0; cut < 6; ++cut) {
        const Development dev = develop_band(p, cut);
        for (int i = 1; i < 6; ++i) {
            const int v = (cut + i) % 6;
            const double expected =
                interior_angle(top, v) + vertex_curvature(p, Face::top, v);
            CHECK_THAT(angle_at(dev.rim[i], dev.rim[i - 1], dev.rim[i + 1]),
                       WithinAbs(expected, 1e-9));
        }
    }
}

TEST_CASE("right prism develops to a straight strip") {
    const Prismatoid p = build_prismatoid({1.0, 0.0, 0.0, 0.3}, HexagonKind::regular);
    const Development dev = develop_band(p, 0);
    for (int i = 0; i <= 6; ++i) {
        CHECK_THAT(dev.rim[i].y, WithinAbs(0.3, 1e-12));
        CHECK_THAT(dev.bottom[i].y, WithinAbs(0.0, 1e-12));
    }
    // Total strip length = perimeter of the hexagon.
    CHECK_THAT(dev.rim[6].x, WithinAbs(6.0, 1e-12));
    CHECK_THAT(dev.gap, WithinAbs(pi / 3.0, 1e-12));  // the prism's deficit
}

TEST_CASE("cut index wraps modulo six") {
    const Prismatoid p = build_prismatoid({1.0, 0.05, 0.5, 0.137});
    const Development a = develop_band(p, 1);
    const Development b = develop_band(p, 7);
    CHECK(a.cut == b.cut);
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 4; ++k) CHECK(a.quads[j][k] == b.quads[j][k]);
}

TEST_CASE("developments at symmetric cuts are congruent") {
    const Prismatoid p = build_prismatoid({1.0, 0.05, 0.5, 0.137});
    for (const int cut : {0, 1}) {
        const Development a = develop_band(p, cut);
        const Development b = develop_band(p, cut + 2);
        for (int i = 0; i <= 6; ++i) {
            for (int j = i + 1; j <= 6; ++j) {
                CHECK_THAT(distance(b.rim[i], b.rim[j]),
                           WithinRel(std::max(distance(a.rim[i], a.rim[j]), 1e-30),
                                     1e-9));
                CHECK_THAT(distance(b.bottom[i], b.bottom[j]),
                           WithinRel(distance(a.bottom[i], a.bottom[j]), 1e-9));
            }
        }
    }
}

TEST_CASE("the band tiles the plane simply at the reference parameters") {
    for (const PrismatoidParams& params :
         {PrismatoidParams{1.0, 0.05, 0.5, 0.137}, PrismatoidParams{1.0, 0.05, 0.5, 0.095}}) {
        const Prismatoid p = build_prismatoid(params);
        const double tau = 1e-9 * signed_area(top_polygon(p));
        for (int cut = 0; cut < 6; ++cut) {
            const Development dev = develop_band(p, cut);
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    CHECK(convex_clip_area(dev.quads[i], dev.quads[j]) < tau);
        }
    }
}

TEST_CASE("flat solids cannot be developed") {
    const Prismatoid p = build_prismatoid({1.0, 0.05, 0.5, 0.0});
    CHECK_THROWS_AS(develop_band(p, 0), DegenerateGeometry);
    const Prismatoid thin = build_prismatoid({1.0, 0.05, 0.5, 1e-8});
    CHECK_THROWS_AS(develop_band(thin, 0), DegenerateGeometry);
}

TEST_CASE("placement lands the chosen edge on the rim") {
    const Prismatoid p = build_prismatoid({1.0, 0.05, 0.5, 0.137});
    const Hexagon2 top = top_polygon(p);
    for (int cut = 0; cut < 6; ++cut) {
        const Development dev = develop_band(p, cut);
        for (int attach = 0; attach < 6; ++attach) {
            const Placement placed = place_top(dev, top, attach);
            CHECK(placed.offset == ((attach - cut) % 6 + 6) % 6);
            CHECK_THAT(norm(placed.hexagon[attach] - dev.rim[placed.offset]),
                       WithinAbs(0.0, 1e-12));
            CHECK_THAT(
                norm(placed.hexagon[(attach + 1) % 6] - dev.rim[placed.offset + 1]),
                WithinAbs(0.0, 1e-12));
            // The placement is a congruence: all 15 pairwise distances survive.
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    CHECK_THAT(distance(placed.hexagon[i], placed.hexagon[j]),
                               WithinRel(distance(top[i], top[j]), 1e-9));
            // Orientation-preserving: the placed hexagon still winds CCW.
            CHECK_THAT(signed_area(placed.hexagon),
                       WithinRel(signed_area(top), 1e-12));
        }
    }
}

TEST_CASE("overlap accounting is per-face and additive") {
    const Prismatoid p = build_prismatoid({1.0, 0.05, 0.5, 0.137});
    const Development dev = develop_band(p, 0);
    const Placement placed = place_top(dev, top_polygon(p), 3);
    const OverlapResult hit = overlap(dev, placed);
    double sum = 0.0;
    for (int q = 0; q < 6; ++q) {
        sum += hit.per_quad[q];
        if (hit.per_quad[q] > 0.0) CHECK_FALSE(hit.pieces[q].empty());
        if (!hit.pieces[q].empty())
            CHECK_THAT(signed_area(hit.pieces[q]), WithinRel(hit.per_quad[q], 1e-12));
    }
    CHECK_THAT(hit.total, WithinRel(sum, 1e-12));
    CHECK(hit.total > 0.0);
}
