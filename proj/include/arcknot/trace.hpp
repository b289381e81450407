#pragma once

#include "arcknot/arc.hpp"
#include "arcknot/geom.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arcknot {

/// Quadratic form Q(u) = sum c_ij u_i u_j, stored as integer coefficients of
/// (xx, yy, zz, xy, xz, yz) with gcd 1 and first nonzero entry positive.
///
/// Its zero set is the cone of viewing directions along which the images of
/// three pairwise non-adjacent edge lines (e; f, g) have the crossings of f
/// and g with e at the same parameter of e: the locus of lines meeting all
/// three edge lines. Crossing this cone swaps the order of two crossings
/// along e (a triple-point move), so it bounds diagram regions just like
/// the great circles do.
class QuadraticCone {
public:
    QuadraticCone(std::array<Int, 6> coeffs, std::array<std::size_t, 3> edges);

    const std::array<Int, 6>& coeffs() const { return c_; }
    /// (e, f, g): crossings of f and g along e.
    const std::array<std::size_t, 3>& edges() const { return edges_; }
    Rat eval(const Vec3& u) const;
    /// Symmetric bilinear form with bilinear(u, u) == eval(u).
    Rat bilinear(const Vec3& a, const Vec3& b) const;
    std::string to_string() const;

    friend bool operator==(const QuadraticCone& a, const QuadraticCone& b) { return a.c_ == b.c_; }
    friend bool operator<(const QuadraticCone& a, const QuadraticCone& b) { return a.c_ < b.c_; }

private:
    std::array<Int, 6> c_;
    std::array<std::size_t, 3> edges_;
};

/// Degeneracy locus of the projection on the direction sphere: great circles
/// (planes through a vertex and an edge or front line, and planes of
/// coplanar line pairs) plus the transversal cones.
struct TraceSet {
    std::vector<GreatCircleNormal> circles;  // sorted, unique
    std::vector<QuadraticCone> cones;        // sorted, unique
};

TraceSet trace_set(const SpatialArc& arc);
std::vector<GreatCircleNormal> trace_circles(const SpatialArc& arc);
std::vector<QuadraticCone> trace_cones(const SpatialArc& arc);

/// Signs of u against every circle normal and every cone, in TraceSet order.
struct RegionFingerprint {
    std::vector<std::int8_t> circle_signs;
    std::vector<std::int8_t> cone_signs;

    /// "+-+..." for circles, then "|" and the cone signs when there are any.
    std::string to_string() const;
    friend bool operator==(const RegionFingerprint&, const RegionFingerprint&) = default;
    friend auto operator<=>(const RegionFingerprint&, const RegionFingerprint&) = default;
};

/// Throws Error(OnTraceSet) naming the first vanishing entry.
RegionFingerprint sign_vector(const TraceSet& trace, const Direction& u);

/// Circle and cone indices on which u lies (empty iff u is off the trace set).
struct TraceHits {
    std::vector<std::size_t> circles;
    std::vector<std::size_t> cones;
    bool empty() const { return circles.empty() && cones.empty(); }
};

TraceHits trace_hits(const TraceSet& trace, const Direction& u);

enum class GenericityFailure {
    None,
    EdgeParallel,
    VertexCollision,
    VertexOnEdge,
    TriplePoint,
    OverlappingEdges,
    EndpointOnDiagram,
};

std::string_view to_string(GenericityFailure f);

struct GenericityReport {
    bool pass = true;
    GenericityFailure failure_kind = GenericityFailure::None;
    /// Offending vertex / edge indices; layout depends on the failure kind.
    std::vector<std::size_t> witness;
};

/// Basis (b1, b2) of the plane orthogonal to u with det(b1, b2, u) > 0.
std::pair<Vec3, Vec3> plane_basis(const Vec3& u);

/// Exact image coordinates of all vertices in plane_basis(u).
std::vector<Vec2> project_points(const std::vector<Vec3>& pts, const Vec3& u);

GenericityReport validate_generic(const SpatialArc& arc, const Direction& u);

/// Arc plus everything the direction search needs, computed once.
class ArcAnalysis {
public:
    explicit ArcAnalysis(SpatialArc arc);

    const SpatialArc& arc() const { return arc_; }
    const TraceSet& trace() const { return trace_; }
    const std::optional<Frame>& frame() const { return frame_; }

    /// Direction u'' in the region singled out for u: u itself when it is
    /// already off every trace circle with a generic projection, otherwise a
    /// rational rotation of u into the adjacent region chosen by the
    /// case analysis on the frame hemisphere. Throws CollinearDegenerate.
    Direction canonical_direction(const Direction& u) const;

    /// Off every trace circle and generic. A cone zero away from the edge
    /// segments is not a triple point and does not disqualify u.
    bool admissible(const Direction& u) const;

private:
    Direction latitude_step(const Direction& u) const;
    Direction upper_canonical(const Direction& u) const;

    SpatialArc arc_;
    TraceSet trace_;
    std::optional<Frame> frame_;
};

Direction canonical_direction(const SpatialArc& arc, const Direction& u);

/// Tangent-half-angle rotation of v about axis k with parameter s, scaled
/// by the positive factor 1 + s^2 |k|^2 (direction only):
/// (1 - s^2|k|^2) v + 2 s^2 (k.v) k + 2 s (k x v).
Vec3 cayley_rotate(const Vec3& v, const Vec3& k, const Rat& s);

/// Rational s > 0 such that no obstruction polynomial (circle or cone
/// restricted to the rotation path of v about k) has a root in (0, 2s].
/// Polynomials vanishing identically along the path are ignored.
Rat first_gap_parameter(const TraceSet& trace, const Vec3& v, const Vec3& k);

}  // namespace arcknot
