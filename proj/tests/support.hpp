#pragma once

#include "arcknot/arc.hpp"
#include "arcknot/error.hpp"
#include "arcknot/geom.hpp"
#include "arcknot/group.hpp"
#include "arcknot/knotting.hpp"
#include "arcknot/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace arcknot::testing {

inline Vec3 v3(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z)}; }

inline SpatialArc arc_of(std::initializer_list<std::array<long, 3>> pts) {
    std::vector<Vec3> v;
    for (const auto& p : pts) v.push_back(v3(p[0], p[1], p[2]));
    return validate_arc(std::move(v));
}

inline Direction dir(long x, long y, long z) { return Direction(v3(x, y, z)); }

inline SpatialArc a1() { return arc_of({{0, 0, 0}, {1, 1, 0}, {2, 0, 0}}); }
inline SpatialArc a2() { return arc_of({{0, 0, 0}, {4, 0, 0}, {4, 2, 1}, {2, -2, 1}}); }
inline SpatialArc open_trefoil() {
    return arc_of({{12, 9, 1}, {3, 9, 5}, {-5, 0, -1}, {-5, -11, -5}, {1, -15, 1}, {7, -7, 5},
                   {3, 5, -1}, {-7, 10, -5}, {-14, 6, 1}, {-10, -2, 5}, {2, -5, -1}, {12, 1, -5}});
}

/// Portable draws from a seeded mt19937_64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long uniform(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 g_;
};

/// Random valid arc with 3..max_vertices vertices and integer coordinates in [-10, 10].
inline SpatialArc random_arc(Rng& rng, std::size_t max_vertices = 8) {
    for (;;) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(3, static_cast<long>(max_vertices)));
        std::vector<Vec3> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(v3(rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)));
        try {
            return validate_arc(std::move(v));
        } catch (const Error&) {
        }
    }
}

inline Direction random_direction(Rng& rng, long h = 50) {
    for (;;) {
        Vec3 v = v3(rng.uniform(-h, h), rng.uniform(-h, h), rng.uniform(-h, h));
        if (!v.is_zero()) return Direction(v);
    }
}

// ---------------------------------------------------------------------------
// Independent oracles. None of these call the library routine they check.

inline Vec3 oracle_cross(const Vec3& a, const Vec3& b) {
    // Cofactor expansion of det [[i j k] [a] [b]].
    Rat i = a.y * b.z - a.z * b.y;
    Rat j = -(a.x * b.z - a.z * b.x);
    Rat k = a.x * b.y - a.y * b.x;
    return {i, j, k};
}

/// Intersection of closed 2D segments by Cramer's rule. Returns nullopt for
/// disjoint or parallel segments.
inline std::optional<std::pair<Rat, Rat>> oracle_segment_params(const Vec2& a, const Vec2& b, const Vec2& c,
                                                                const Vec2& d) {
    Rat r1 = b.x - a.x, r2 = b.y - a.y, s1 = d.x - c.x, s2 = d.y - c.y;
    Rat den = r1 * s2 - r2 * s1;
    if (den == 0) return std::nullopt;
    Rat qx = c.x - a.x, qy = c.y - a.y;
    Rat t = (qx * s2 - qy * s1) / den;
    Rat u = (qx * r2 - qy * r1) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    return std::make_pair(t, u);
}

/// Transverse crossings of non-adjacent edges of a projected polyline.
inline std::size_t oracle_crossing_count(const std::vector<Vec2>& p) {
    std::size_t count = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t j = i + 2; j + 1 < p.size(); ++j)
            if (auto hit = oracle_segment_params(p[i], p[i + 1], p[j], p[j + 1]))
                if (hit->first > 0 && hit->first < 1 && hit->second > 0 && hit->second < 1) ++count;
    return count;
}

/// Integer primitive representative of +-n with first nonzero entry positive.
inline std::array<Int, 3> oracle_canonical(const Vec3& n) {
    Int den = 1;
    for (const Rat* c : {&n.x, &n.y, &n.z}) den = lcm(den, Int(c->get_den()));
    std::array<Int, 3> v{Int(n.x * den), Int(n.y * den), Int(n.z * den)};
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    for (Int& c : v) c /= g;
    for (const Int& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (Int& x : v) x = -x;
        break;
    }
    return v;
}

/// Every plane through a vertex and a line, and every plane of a coplanar
/// line pair, over edge lines plus the front line; sorted and deduplicated.
inline std::vector<std::array<Int, 3>> oracle_trace_circles(const std::vector<Vec3>& p) {
    struct L {
        Vec3 base, dir;
    };
    std::vector<L> lines;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) lines.push_back({p[i], p[i + 1] - p[i]});
    lines.push_back({p.front(), p.back() - p.front()});
    bool collinear = true;
    for (const Vec3& q : p) collinear = collinear && oracle_cross(q - p.front(), lines.back().dir).is_zero();
    std::vector<std::array<Int, 3>> out;
    if (collinear) return out;
    for (const Vec3& q : p)
        for (const L& l : lines) {
            Vec3 n = oracle_cross(q - l.base, l.dir);
            if (!n.is_zero()) out.push_back(oracle_canonical(n));
        }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Vec3 w = lines[j].base - lines[i].base;
            Vec3 dd = oracle_cross(lines[i].dir, lines[j].dir);
            if (dd.is_zero()) {
                Vec3 n = oracle_cross(w, lines[i].dir);
                if (!n.is_zero()) out.push_back(oracle_canonical(n));
            } else if (w.x * dd.x + w.y * dd.y + w.z * dd.z == 0) {
                out.push_back(oracle_canonical(dd));
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Counts homomorphisms by trying every assignment of generators.
inline std::uint64_t oracle_count_homs(const GroupPresentation& p, const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<int> val(p.generators, 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& r : p.relators) {
            int acc = g.identity();
            for (int k : r) {
                int x = val[static_cast<std::size_t>(std::abs(k) - 1)];
                acc = g.mul(acc, k > 0 ? x : g.inv(x));
            }
            ok = ok && acc == g.identity();
        }
        if (ok) ++count;
        std::size_t i = 0;
        while (i < val.size() && ++val[i] == static_cast<int>(n)) val[i++] = 0;
        if (i == val.size()) break;
    }
    return count;
}

}  // namespace arcknot::testing
