#pragma once

#include "arcknot/geom.hpp"

#include <optional>
#include <vector>

namespace arcknot {

/// A validated, embedded polygonal arc p_0 ... p_m oriented by vertex order.
class SpatialArc {
public:
    const std::vector<Vec3>& vertices() const { return vertices_; }
    std::size_t edge_count() const { return vertices_.size() - 1; }
    const Vec3& start() const { return vertices_.front(); }
    const Vec3& terminal() const { return vertices_.back(); }

    /// Oriented line of edge i (p_i -> p_{i+1}).
    LineR3 edge_line(std::size_t i) const;
    /// Oriented line through p_0 and p_m.
    LineR3 front_line() const;
    Vec3 front_vector() const { return terminal() - start(); }
    /// True when every vertex lies on the front line.
    bool collinear() const;

    friend bool operator==(const SpatialArc&, const SpatialArc&) = default;

private:
    friend SpatialArc validate_arc(std::vector<Vec3> vertices);
    explicit SpatialArc(std::vector<Vec3> v) : vertices_(std::move(v)) {}

    std::vector<Vec3> vertices_;
};

/// Throws Error with kind TooFewVertices, RepeatedVertex, ClosedPath or
/// SelfIntersection.
SpatialArc validate_arc(std::vector<Vec3> vertices);

SpatialArc reverse_arc(const SpatialArc& arc);

struct FrontData {
    Vec3 start, terminal;
    LineR3 front_line;
    Direction front_vector;
};

FrontData front_of(const SpatialArc& arc);

struct FrontPopData {
    std::size_t edge_s;  // index of the first edge off the front line
    std::size_t edge_t;  // index of the last edge off the front line
    LineR3 ell_s, ell_t;
    Direction u_s, u_t;
    /// Oriented normals u_gamma x u_s and u_gamma x u_t, not canonicalized.
    Vec3 plane_s, plane_t;
};

/// nullopt iff every edge lies on the front line.
std::optional<FrontPopData> front_pop(const SpatialArc& arc);

/// Rational right-handed orthogonal frame: e_x along the front vector,
/// e_y the part of u_s orthogonal to e_x, e_z = e_x x e_y.
struct Frame {
    Vec3 e_x, e_y, e_z;
};

/// Throws CollinearArc when the arc has no front-pop line.
Frame frame_of(const SpatialArc& arc);

bool is_inbound_arc(const SpatialArc& arc);

/// Throws CollinearArc when the arc has no front-pop line.
bool is_even_arc(const SpatialArc& arc);

/// For even arcs: true when the oriented front-pop planes agree in orientation.
bool front_pop_orientations_agree(const SpatialArc& arc);

}  // namespace arcknot
