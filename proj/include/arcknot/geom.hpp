#pragma once

#include "arcknot/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace arcknot {

struct Vec3 {
    Rat x, y, z;

    Vec3() = default;
    Vec3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const Rat& s, const Vec3& a);

Rat dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Rat det3(const Vec3& a, const Vec3& b, const Vec3& c);
bool parallel(const Vec3& a, const Vec3& b);
/// Integer, gcd-1 multiple of v with the same orientation (v nonzero).
Vec3 primitive(const Vec3& v);
std::string to_string(const Vec3& v);

struct Vec2 {
    Rat x, y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

Vec2 operator-(const Vec2& a, const Vec2& b);
Rat cross2(const Vec2& a, const Vec2& b);
Rat dot2(const Vec2& a, const Vec2& b);
/// Sign of the turn a -> b -> c.
int orient2(const Vec2& a, const Vec2& b, const Vec2& c);

/// Ray class of a nonzero vector under positive scaling.
class Direction {
public:
    explicit Direction(Vec3 v);

    const Vec3& vec() const { return v_; }
    Direction operator-() const { return Direction(-v_); }

    friend bool operator==(const Direction& a, const Direction& b);

private:
    Vec3 v_;
};

/// Oriented line base + t*dir.
struct LineR3 {
    Vec3 base;
    Vec3 dir;

    LineR3(Vec3 base_, Vec3 dir_);

    bool contains(const Vec3& p) const;
    /// Same point set, orientation ignored.
    bool same_set(const LineR3& other) const;
    /// Same point set and same orientation.
    friend bool operator==(const LineR3& a, const LineR3& b);
};

/// Normal of a plane through the origin, normalized so that n and -n are
/// the same object: integer coordinates, gcd 1, first nonzero entry positive.
class GreatCircleNormal {
public:
    explicit GreatCircleNormal(const Vec3& n);

    const std::array<Int, 3>& coords() const { return c_; }
    Vec3 vec() const;
    std::string to_string() const;

    friend bool operator==(const GreatCircleNormal&, const GreatCircleNormal&) = default;
    friend auto operator<=>(const GreatCircleNormal& a, const GreatCircleNormal& b) {
        for (int i = 0; i < 3; ++i) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    std::array<Int, 3> c_;
};

enum class LinePairKind { Equal, ParallelDistinct, Intersecting, Skew };

struct LinePairRelation {
    LinePairKind kind;
    std::optional<Vec3> point;  // set for Intersecting
};

LinePairRelation classify_line_pair(const LineR3& l1, const LineR3& l2);

/// Canonical normal of the plane spanned by p and l. Throws PointOnLine.
GreatCircleNormal plane_normal_point_line(const Vec3& p, const LineR3& l);

/// Parameter interval [t0, t1] along [a, b] of its intersection with the
/// closed segment [c, d], or nullopt when they are disjoint.
std::optional<std::pair<Rat, Rat>> segment_overlap(const Vec3& a, const Vec3& b,
                                                   const Vec3& c, const Vec3& d);

bool segments_intersect(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

}  // namespace arcknot
