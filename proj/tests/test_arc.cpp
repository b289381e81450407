#include "support.hpp"

#include "arcknot/arc.hpp"
#include "arcknot/error.hpp"

#include <doctest.h>

using namespace arcknot;
using namespace arcknot::testing;

namespace {

ErrorKind rejection(std::initializer_list<std::array<long, 3>> pts) {
    try {
        arc_of(pts);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("arc was accepted");
    return ErrorKind::Internal;
}

SpatialArc collinear() { return arc_of({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}); }

}  // namespace

TEST_CASE("validation") {
    CHECK_NOTHROW(a1());
    CHECK_NOTHROW(a2());
    CHECK(rejection({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}) == ErrorKind::ClosedPath);
    CHECK(rejection({{0, 0, 0}, {1, 0, 0}, {1, 0, 0}, {2, 0, 0}}) == ErrorKind::RepeatedVertex);
    CHECK(rejection({{0, 0, 0}}) == ErrorKind::TooFewVertices);
    // Edges 0 and 2 cross at (1,0,0).
    CHECK(rejection({{0, 0, 0}, {2, 0, 0}, {1, 1, 0}, {1, -1, 0}}) == ErrorKind::SelfIntersection);
    // Consecutive edges folding back onto each other overlap.
    CHECK(rejection({{0, 0, 0}, {2, 0, 0}, {1, 0, 0}}) == ErrorKind::SelfIntersection);
    // A vertex touching a non-adjacent edge.
    CHECK(rejection({{0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {1, 0, 0}}) == ErrorKind::SelfIntersection);
    CHECK_NOTHROW(arc_of({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 1, 0}}));
}

TEST_CASE("self-intersection test agrees with the Cramer oracle on planar paths") {
    Rng rng(21);
    int accepted = 0, rejected = 0;
    for (int i = 0; i < 300; ++i) {
        std::vector<Vec3> v;
        std::vector<Vec2> p;
        for (int k = 0; k < 5; ++k) {
            long x = rng.uniform(-4, 4), y = rng.uniform(-4, 4);
            v.push_back(v3(x, y, 0));
            p.push_back({x, y});
        }
        bool degenerate = false;
        for (int k = 0; k + 1 < 5; ++k) degenerate = degenerate || v[k] == v[k + 1];
        if (degenerate || v.front() == v.back()) continue;
        // Oracle: any two non-adjacent closed edges meet, or adjacent edges overlap beyond the joint.
        bool hit = false;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 2; b < 4; ++b)
                if (oracle_segment_params(p[a], p[a + 1], p[b], p[b + 1])) hit = true;
        bool parallel_overlap = false;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                Vec2 d1 = p[a + 1] - p[a], d2 = p[b + 1] - p[b];
                if (cross2(d1, d2) != 0 || cross2(d1, p[b] - p[a]) != 0) continue;
                // Collinear pair: project onto d1 and compare intervals.
                Rat s0 = dot2(p[b] - p[a], d1) / dot2(d1, d1), s1 = dot2(p[b + 1] - p[a], d1) / dot2(d1, d1);
                Rat lo = std::max(Rat(0), std::min(s0, s1)), hi = std::min(Rat(1), std::max(s0, s1));
                if (lo < hi || (lo == hi && !(b == a + 1 && lo == 1))) parallel_overlap = true;
            }
        bool bad = hit || parallel_overlap;
        bool lib_bad = false;
        try {
            validate_arc(v);
        } catch (const Error& e) {
            lib_bad = true;
            CHECK(e.kind() == ErrorKind::SelfIntersection);
        }
        CHECK(lib_bad == bad);
        (bad ? rejected : accepted)++;
    }
    CHECK(accepted > 10);
    CHECK(rejected > 10);
}

TEST_CASE("front-pop data") {
    auto fp = front_pop(a2());
    REQUIRE(fp);
    CHECK(fp->edge_s == 0);
    CHECK(fp->edge_t == 2);
    CHECK(fp->u_s == dir(1, 0, 0));
    CHECK(Direction(fp->plane_s) == dir(0, 1, 2));
    CHECK(Direction(fp->plane_t) == dir(4, -2, -12));
    CHECK_FALSE(front_pop(collinear()));
    auto f1 = front_pop(a1());
    REQUIRE(f1);
    CHECK(f1->edge_s == 0);
    CHECK(f1->edge_t == 1);
}

TEST_CASE("front-pop lines swap under reversal") {
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        SpatialArc l = random_arc(rng);
        auto f = front_pop(l), r = front_pop(reverse_arc(l));
        REQUIRE(f);
        REQUIRE(r);
        CHECK(r->ell_s.same_set(f->ell_t));
        CHECK(r->ell_t.same_set(f->ell_s));
    }
}

TEST_CASE("frame") {
    Frame f = frame_of(a2());
    CHECK(Direction(f.e_x) == dir(2, -2, 1));
    CHECK(Direction(f.e_y) == dir(5, 4, -2));
    CHECK(Direction(f.e_z) == dir(0, 1, 2));
    CHECK(dot(f.e_y, v3(1, 0, 0)) > 0);
    // u_s orthogonal to u_gamma: e_y is u_s itself.
    Frame g = frame_of(arc_of({{0, 0, 0}, {0, 3, 0}, {2, 3, 1}, {4, 0, 0}}));
    CHECK(Direction(g.e_y) == dir(0, 1, 0));
    CHECK_THROWS_AS(frame_of(collinear()), Error);
}

TEST_CASE("frames are orthogonal and right-handed") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        Frame f = frame_of(random_arc(rng));
        CHECK(dot(f.e_x, f.e_y) == 0);
        CHECK(dot(f.e_x, f.e_z) == 0);
        CHECK(dot(f.e_y, f.e_z) == 0);
        CHECK(f.e_z == cross(f.e_x, f.e_y));
        CHECK(det3(f.e_x, f.e_y, f.e_z) > 0);
    }
}

TEST_CASE("inbound arcs") {
    CHECK(is_inbound_arc(a2()));
    CHECK(is_inbound_arc(a1()));
    CHECK_FALSE(is_inbound_arc(collinear()));
    // The front edge from (0,0,0) to (2,0,0) passes through (1,0,0) on edge 1.
    CHECK_FALSE(is_inbound_arc(arc_of({{0, 0, 0}, {1, 1, 0}, {1, -1, 0}, {2, 0, 0}})));
    CHECK_FALSE(is_inbound_arc(arc_of({{0, 0, 0}, {1, 1, 1}, {1, -1, -1}, {2, 0, 0}})));
    // Edge 1 passes above the front edge at (1,0,1/2).
    CHECK(is_inbound_arc(arc_of({{0, 0, 0}, {1, 1, 0}, {1, -1, 1}, {2, 0, 0}})));
    // The path (0,0,0),(2,0,0),(1,0,1),(1,0,-1) is not even a valid arc.
    CHECK(rejection({{0, 0, 0}, {2, 0, 0}, {1, 0, 1}, {1, 0, -1}}) == ErrorKind::SelfIntersection);
}

TEST_CASE("inbound and even are orientation independent") {
    Rng rng(24);
    for (int i = 0; i < 200; ++i) {
        SpatialArc l = random_arc(rng);
        CHECK(is_inbound_arc(l) == is_inbound_arc(reverse_arc(l)));
        CHECK(is_even_arc(l) == is_even_arc(reverse_arc(l)));
    }
}

TEST_CASE("even arcs") {
    CHECK(is_even_arc(a1()));
    CHECK_FALSE(is_even_arc(a2()));
    CHECK(is_even_arc(arc_of({{0, 0, 0}, {0, 2, 0}, {3, 2, 0}, {3, 0, 0}})));
    // Both pop planes are y = 0 although the middle of the arc leaves that plane.
    CHECK(is_even_arc(arc_of({{0, 0, 0}, {1, 0, 3}, {2, 5, 1}, {3, 0, 2}, {4, 0, 0}})));
    CHECK_FALSE(is_even_arc(arc_of({{0, 0, 0}, {1, 0, 3}, {2, 5, 1}, {3, 1, -2}, {4, 0, 0}})));
    CHECK_THROWS_AS(is_even_arc(collinear()), Error);
}

TEST_CASE("reversal") {
    CHECK(reverse_arc(reverse_arc(a1())) == a1());
    CHECK(reverse_arc(a2()).vertices()[0] == v3(2, -2, 1));
    CHECK(Direction(reverse_arc(a2()).front_vector()) == -Direction(a2().front_vector()));
}
