#include "arccurve/pg2.hpp"

#include <sstream>

#include "arccurve/error.hpp"

namespace arccurve {

Plane::Plane(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw InvalidInput("plane needs a field");
}

Triple Plane::normalize(Triple t) const {
    for (int i = 2; i >= 0; --i) {
        if (!t[i].is_zero()) {
            const FieldElement s = field_->inv(t[i]);
            for (auto& c : t) c = field_->mul(c, s);
            return t;
        }
    }
    throw InvalidInput("the zero triple is not a projective point");
}

ProjPoint Plane::point(FieldElement x, FieldElement y, FieldElement z) const {
    return ProjPoint{normalize({x, y, z})};
}

ProjLine Plane::line(FieldElement u, FieldElement v, FieldElement w) const {
    return ProjLine{normalize({u, v, w})};
}

FieldElement Plane::dot(const Triple& a, const Triple& b) const {
    const Field& f = *field_;
    return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

Triple Plane::cross(const Triple& a, const Triple& b) const {
    const Field& f = *field_;
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

bool Plane::incident(const ProjPoint& p, const ProjLine& l) const { return dot(p.coords, l.coeffs).is_zero(); }

ProjLine Plane::line_through(const ProjPoint& p, const ProjPoint& q) const {
    if (p == q) throw InvalidInput("line_through needs two distinct points");
    return ProjLine{normalize(cross(p.coords, q.coords))};
}

ProjPoint Plane::meet(const ProjLine& l, const ProjLine& m) const {
    if (l == m) throw InvalidInput("meet needs two distinct lines");
    return ProjPoint{normalize(cross(l.coeffs, m.coeffs))};
}

std::size_t Plane::index_of(const Triple& t) const {
    const std::size_t qq = q();
    if (t[2] == field_->one()) return t[0].value * qq + t[1].value;
    if (t[1] == field_->one()) return qq * qq + t[0].value;
    return qq * qq + qq;
}

Triple Plane::triple_at(std::size_t idx) const {
    const std::size_t qq = q();
    if (idx < qq * qq)
        return {FieldElement(static_cast<std::uint32_t>(idx / qq)), FieldElement(static_cast<std::uint32_t>(idx % qq)), field_->one()};
    if (idx < qq * qq + qq) return {FieldElement(static_cast<std::uint32_t>(idx - qq * qq)), field_->one(), field_->zero()};
    if (idx == qq * qq + qq) return {field_->one(), field_->zero(), field_->zero()};
    throw InvalidInput("point index out of range");
}

std::vector<ProjPoint> Plane::points() const {
    std::vector<ProjPoint> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(point_at(i));
    return out;
}

std::vector<ProjLine> Plane::lines() const {
    std::vector<ProjLine> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(line_at(i));
    return out;
}

// Two independent solutions a, b of t.x = 0 give all q+1 solutions as b and
// a + s*b.
std::vector<Triple> Plane::orthogonal(const Triple& t) const {
    const Field& f = *field_;
    const FieldElement z = f.zero(), o = f.one();
    Triple a, b;
    if (!t[2].is_zero()) {
        // Solve for the last coordinate from the first two.
        const FieldElement w = f.inv(t[2]);
        a = {o, z, f.neg(f.mul(t[0], w))};
        b = {z, o, f.neg(f.mul(t[1], w))};
    } else if (!t[1].is_zero()) {
        a = {o, f.neg(f.div(t[0], t[1])), z};
        b = {z, z, o};
    } else {
        a = {z, o, z};
        b = {z, z, o};
    }
    std::vector<Triple> out;
    out.reserve(q() + 1);
    out.push_back(normalize(b));
    for (const FieldElement s : f.elements())
        out.push_back(normalize({f.add(a[0], f.mul(s, b[0])), f.add(a[1], f.mul(s, b[1])), f.add(a[2], f.mul(s, b[2]))}));
    return out;
}

std::vector<ProjPoint> Plane::line_points(const ProjLine& l) const {
    std::vector<ProjPoint> out;
    for (auto& t : orthogonal(l.coeffs)) out.push_back(ProjPoint{t});
    return out;
}

std::vector<ProjLine> Plane::lines_through(const ProjPoint& p) const {
    std::vector<ProjLine> out;
    for (auto& t : orthogonal(p.coords)) out.push_back(ProjLine{t});
    return out;
}

std::string Plane::format(const ProjPoint& p) const {
    return field_->format(p[0]) + ":" + field_->format(p[1]) + ":" + field_->format(p[2]);
}

std::string Plane::format(const ProjLine& l) const {
    return "[" + field_->format(l[0]) + "," + field_->format(l[1]) + "," + field_->format(l[2]) + "]";
}

ProjPoint Plane::parse_point(std::string_view text) const {
    const std::string whole(text);
    Triple t;
    for (int i = 0; i < 3; ++i) {
        const auto colon = text.find(':');
        if ((i < 2) == (colon == std::string_view::npos))
            throw InvalidInput("point must have the form x:y:z, got '" + whole + "'");
        t[i] = field_->parse_element(text.substr(0, colon));
        if (colon != std::string_view::npos) text.remove_prefix(colon + 1);
    }
    return ProjPoint{normalize(t)};
}

}  // namespace arccurve
