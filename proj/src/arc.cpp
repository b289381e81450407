#include "arcknot/arc.hpp"
#include "arcknot/error.hpp"

#include <string>

namespace arcknot {

LineR3 SpatialArc::edge_line(std::size_t i) const {
    return LineR3(vertices_[i], vertices_[i + 1] - vertices_[i]);
}

LineR3 SpatialArc::front_line() const { return LineR3(start(), front_vector()); }

bool SpatialArc::collinear() const {
    LineR3 front = front_line();
    for (const Vec3& p : vertices_)
        if (!front.contains(p)) return false;
    return true;
}

SpatialArc validate_arc(std::vector<Vec3> v) {
    if (v.size() < 2) throw Error(ErrorKind::TooFewVertices, "an arc needs at least 2 vertices");
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1])
            throw Error(ErrorKind::RepeatedVertex, "vertices " + std::to_string(i) + " and " +
                                                       std::to_string(i + 1) + " coincide");
    if (v.front() == v.back()) throw Error(ErrorKind::ClosedPath, "first and last vertex coincide");

    const std::size_t edges = v.size() - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        for (std::size_t j = i + 1; j < edges; ++j) {
            auto hit = segment_overlap(v[i], v[i + 1], v[j], v[j + 1]);
            if (!hit) continue;
            // Consecutive edges may only share their common vertex.
            if (j == i + 1 && hit->first == 1 && hit->second == 1) continue;
            throw Error(ErrorKind::SelfIntersection,
                        "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
    }
    return SpatialArc(std::move(v));
}

SpatialArc reverse_arc(const SpatialArc& arc) {
    std::vector<Vec3> v(arc.vertices().rbegin(), arc.vertices().rend());
    return validate_arc(std::move(v));
}

FrontData front_of(const SpatialArc& arc) {
    return {arc.start(), arc.terminal(), arc.front_line(), Direction(arc.front_vector())};
}

std::optional<FrontPopData> front_pop(const SpatialArc& arc) {
    LineR3 front = arc.front_line();
    std::optional<std::size_t> first, last;
    for (std::size_t i = 0; i < arc.edge_count(); ++i) {
        if (arc.edge_line(i).same_set(front)) continue;
        if (!first) first = i;
        last = i;
    }
    if (!first) return std::nullopt;
    LineR3 ell_s = arc.edge_line(*first);
    LineR3 ell_t = arc.edge_line(*last);
    Vec3 u = arc.front_vector();
    return FrontPopData{*first,
                        *last,
                        ell_s,
                        ell_t,
                        Direction(ell_s.dir),
                        Direction(ell_t.dir),
                        cross(u, ell_s.dir),
                        cross(u, ell_t.dir)};
}

namespace {

FrontPopData require_pop(const SpatialArc& arc) {
    auto pop = front_pop(arc);
    if (!pop) throw Error(ErrorKind::CollinearArc, "arc lies on its front line");
    return *pop;
}

}  // namespace

Frame frame_of(const SpatialArc& arc) {
    FrontPopData pop = require_pop(arc);
    Vec3 ex = arc.front_vector();
    const Vec3& us = pop.u_s.vec();
    Vec3 ey = primitive(us - (dot(us, ex) / dot(ex, ex)) * ex);
    return {ex, ey, cross(ex, ey)};
}

bool is_inbound_arc(const SpatialArc& arc) {
    const auto& v = arc.vertices();
    for (std::size_t i = 0; i < arc.edge_count(); ++i) {
        auto hit = segment_overlap(arc.start(), arc.terminal(), v[i], v[i + 1]);
        if (hit && hit->second > 0 && hit->first < 1) return false;
    }
    return true;
}

bool is_even_arc(const SpatialArc& arc) {
    FrontPopData pop = require_pop(arc);
    return parallel(pop.plane_s, pop.plane_t);
}

bool front_pop_orientations_agree(const SpatialArc& arc) {
    FrontPopData pop = require_pop(arc);
    return parallel(pop.plane_s, pop.plane_t) && dot(pop.plane_s, pop.plane_t) > 0;
}

}  // namespace arcknot
