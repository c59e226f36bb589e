#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arccurve/gf.hpp"

namespace arccurve {

using Triple = std::array<FieldElement, 3>;

// A point of PG(2,q), normalized so that its last nonzero coordinate is 1.
struct ProjPoint {
    Triple coords{};
    const FieldElement& operator[](std::size_t i) const { return coords[i]; }
    auto operator<=>(const ProjPoint&) const = default;
};

// A line [u,v,w] of PG(2,q) with the same normalization as points.
struct ProjLine {
    Triple coeffs{};
    const FieldElement& operator[](std::size_t i) const { return coeffs[i]; }
    auto operator<=>(const ProjLine&) const = default;
};

// The Desarguesian plane over a field. Points (and dually lines) are indexed
// affine-first: (x,y,1) -> x*q + y, then (x,1,0) -> q^2 + x, then
// (1,0,0) -> q^2 + q.
class Plane {
public:
    explicit Plane(FieldPtr field);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::uint32_t q() const { return field_->order(); }
    std::size_t size() const { return std::size_t(q()) * q() + q() + 1; }

    // Throws InvalidInput on the zero triple.
    Triple normalize(Triple t) const;
    ProjPoint point(FieldElement x, FieldElement y, FieldElement z) const;
    ProjLine line(FieldElement u, FieldElement v, FieldElement w) const;

    bool incident(const ProjPoint& p, const ProjLine& l) const;
    FieldElement dot(const Triple& a, const Triple& b) const;
    Triple cross(const Triple& a, const Triple& b) const;

    // Throws InvalidInput if p == q.
    ProjLine line_through(const ProjPoint& p, const ProjPoint& q) const;
    ProjPoint meet(const ProjLine& l, const ProjLine& m) const;

    std::size_t index(const ProjPoint& p) const { return index_of(p.coords); }
    std::size_t index(const ProjLine& l) const { return index_of(l.coeffs); }
    ProjPoint point_at(std::size_t idx) const { return ProjPoint{triple_at(idx)}; }
    ProjLine line_at(std::size_t idx) const { return ProjLine{triple_at(idx)}; }

    std::vector<ProjPoint> points() const;
    std::vector<ProjLine> lines() const;
    std::vector<ProjPoint> line_points(const ProjLine& l) const;
    std::vector<ProjLine> lines_through(const ProjPoint& p) const;

    // Text form "x:y:z", elements in the field's printed form.
    std::string format(const ProjPoint& p) const;
    std::string format(const ProjLine& l) const;
    // Parses and normalizes.
    ProjPoint parse_point(std::string_view text) const;

private:
    std::size_t index_of(const Triple& t) const;
    Triple triple_at(std::size_t idx) const;
    // Points of the line dual to `t` (also lines through the point `t`).
    std::vector<Triple> orthogonal(const Triple& t) const;

    FieldPtr field_;
};

}  // namespace arccurve
