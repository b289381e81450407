#pragma once

#include "arcknot/arc.hpp"
#include "arcknot/trace.hpp"

#include <array>
#include <string>
#include <vector>

namespace arcknot {

/// Exact orthogonal projection of an arc along u onto the plane P_u, with
/// the plane oriented so that u is a positive normal.
struct ProjectionScene {
    Direction direction;
    Vec3 basis1, basis2;          // det(basis1, basis2, u) > 0
    std::vector<Vec2> points;     // image of every arc vertex
    std::vector<Rat> depths;      // u . p_i; larger depth is nearer the viewer
};

/// Throws Error(NotGeneric) when validate_generic fails.
ProjectionScene project(const SpatialArc& arc, const Direction& u);

struct Visit {
    std::size_t crossing;  // 0-based, numbered by first visit along the strand
    bool over;
    friend bool operator==(const Visit&, const Visit&) = default;
};

/// Oriented planar map of an arc diagram.
///
/// The strand runs start -> 2n crossing visits -> end, giving 2n+1 map edges.
/// Edge j carries dart 2j (forward, leaving event j) and dart 2j+1 (backward,
/// leaving event j+1); events are 0 = start, 1..2n = visits, 2n+1 = end.
/// Rotations at crossings follow from the over/under data and the sign
/// (+1 iff det(over direction, under direction) > 0). Faces are traced with
/// the face on the left of each dart.
class ArcDiagram {
public:
    ArcDiagram() = default;
    ArcDiagram(std::vector<Visit> visits, std::vector<int> signs, std::size_t outer_dart);

    std::size_t crossing_count() const { return signs_.size(); }
    const std::vector<Visit>& visits() const { return visits_; }
    const std::vector<int>& signs() const { return signs_; }
    std::size_t outer_dart() const { return outer_dart_; }

    std::size_t dart_count() const { return 2 * (2 * crossing_count() + 1); }
    std::size_t start_dart() const { return 0; }
    std::size_t end_dart() const { return dart_count() - 1; }
    static std::size_t twin(std::size_t d) { return d ^ 1U; }

    /// Counterclockwise darts at crossing c, beginning with the over-out dart.
    std::array<std::size_t, 4> rotation(std::size_t c) const;
    /// Next dart along the face on the left of d.
    std::size_t face_next(std::size_t d) const;
    /// Face id per dart, ids assigned in order of first appearance by dart index.
    std::vector<std::size_t> face_ids() const;
    std::size_t face_count() const;
    std::size_t outer_face() const { return face_ids()[outer_dart_]; }

    friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;

private:
    std::size_t ccw_prev(std::size_t d) const;

    std::vector<Visit> visits_;
    std::vector<int> signs_;
    std::size_t outer_dart_ = 0;
};

ArcDiagram build_diagram(const ProjectionScene& scene);

/// Byte-exact text form of an arc diagram; equal text iff isomorphic diagrams.
struct CanonicalCode {
    std::string text;
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const ArcDiagram& d);
/// Throws Error(Parse) on malformed or inconsistent text.
ArcDiagram decode(const CanonicalCode& code);
/// The strand token line without the "strand:" prefix, e.g. "1U+ 1O+".
std::string strand_tokens(const CanonicalCode& code);

/// The diagram seen from the other side of the plane: the plane orientation
/// is reversed and every crossing's over/under roles are exchanged. Crossing
/// signs are unchanged. Involution.
ArcDiagram mirror(const ArcDiagram& d);

/// Same picture with the strand traversed from the other end.
ArcDiagram reverse_strand(const ArcDiagram& d);

bool is_inbound_diagram(const ArcDiagram& d);

/// The image of the front edge meets the image of the arc only at the
/// endpoint images.
bool is_inbound_projection(const SpatialArc& arc, const Direction& u);

/// Canonical diagram for (arc, u). Throws CollinearDegenerate.
ArcDiagram diagram_for(const ArcAnalysis& analysis, const Direction& u);
CanonicalCode diagram_of(const ArcAnalysis& analysis, const Direction& u);
CanonicalCode diagram_of(const SpatialArc& arc, const Direction& u);

/// Presentational SVG of the projection with gaps at under-crossings.
std::string render_svg(const ProjectionScene& scene);

}  // namespace arcknot
