#include "arccurve/pointsets.hpp"

#include <algorithm>
#include <random>

#include "arccurve/error.hpp"

namespace arccurve {

PointSet::PointSet(FieldPtr field, std::vector<ProjPoint> points) : plane_(std::move(field)), points_(std::move(points)) {
    member_.assign(plane_.size(), false);
    for (auto& p : points_) {
        p.coords = plane_.normalize(p.coords);
        const std::size_t idx = plane_.index(p);
        if (member_[idx]) throw InvalidInput("duplicate point " + plane_.format(p));
        member_[idx] = true;
    }
    std::sort(points_.begin(), points_.end(),
              [&](const ProjPoint& a, const ProjPoint& b) { return plane_.index(a) < plane_.index(b); });
}

PointSet PointSet::from_indices(FieldPtr field, std::vector<std::size_t> indices) {
    Plane plane(field);
    std::vector<ProjPoint> pts;
    pts.reserve(indices.size());
    for (auto i : indices) pts.push_back(plane.point_at(i));
    return PointSet(std::move(field), std::move(pts));
}

PointSet PointSet::united(const PointSet& other) const {
    if (!(field() == other.field())) throw InvalidInput("point sets over different fields");
    std::vector<ProjPoint> pts = points_;
    for (const auto& p : other.points_)
        if (!contains(p)) pts.push_back(p);
    return PointSet(field_ptr(), std::move(pts));
}

PointSet PointSet::without(const ProjPoint& p) const {
    std::vector<ProjPoint> pts;
    for (const auto& x : points_)
        if (x != p) pts.push_back(x);
    return PointSet(field_ptr(), std::move(pts));
}

LineSpectrum spectrum(const PointSet& k) {
    if (k.empty()) throw InvalidInput("spectrum of an empty point set");
    const Plane& plane = k.plane();
    const auto& member = k.membership();
    LineSpectrum s;
    for (std::size_t li = 0; li < plane.size(); ++li) {
        std::size_t n = 0;
        for (const auto& p : plane.line_points(plane.line_at(li)))
            if (member[plane.index(p)]) ++n;
        ++s.histogram[n];
    }
    for (const auto& [n, count] : s.histogram) {
        if (n > 0 && s.m0 == 0) s.m0 = n;
        s.M0 = std::max(s.M0, n);
    }
    return s;
}

bool is_maximal_arc(const PointSet& k, std::size_t n) {
    const std::size_t q = k.q();
    if (n < 1 || n > q + 1) throw InvalidInput("maximal arc degree must lie in 1..q+1");
    if (k.size() != (n - 1) * q + n) return false;
    for (const auto& [size, count] : spectrum(k).histogram)
        if (size != 0 && size != n) return false;
    return true;
}

std::vector<FieldElement> additive_span(const Field& field, std::span<const FieldElement> basis) {
    std::vector<FieldElement> span{field.zero()};
    for (auto b : basis) {
        const std::size_t n = span.size();
        for (std::size_t i = 0; i < n; ++i) span.push_back(field.add(span[i], b));
    }
    return span;
}

FieldElement default_denniston_nu(const Field& field) {
    if (field.characteristic() != 2) throw Unsupported("Denniston arcs need characteristic 2");
    for (auto x : field.elements())
        if (field.trace_absolute(x) == field.one()) return x;
    throw InconsistencyError("no element of trace 1");
}

PointSet denniston_arc(const FieldPtr& field, std::span<const FieldElement> basis, FieldElement nu) {
    const Field& f = *field;
    if (f.characteristic() != 2) throw Unsupported("Denniston arcs need characteristic 2");
    if (f.trace_absolute(nu) != f.one())
        throw InvalidInput("invalid nu " + f.format(nu) + ": absolute trace must be 1, otherwise the pencil conics meet on the line at infinity");
    if (basis.empty() || basis.size() > f.degree()) throw InvalidInput("subgroup basis must have 1..h elements");
    const auto group = additive_span(f, basis);
    std::vector<bool> in_group(f.order(), false);
    for (auto a : group) {
        if (in_group[a.value]) throw InvalidInput("subgroup basis is not GF(2)-independent");
        in_group[a.value] = true;
    }
    Plane plane(field);
    std::vector<ProjPoint> pts;
    for (auto x : f.elements()) {
        for (auto y : f.elements()) {
            const FieldElement v = f.add(f.add(f.mul(x, x), f.mul(x, y)), f.mul(nu, f.mul(y, y)));
            if (in_group[v.value]) pts.push_back(plane.point(x, y, f.one()));
        }
    }
    return PointSet(field, std::move(pts));
}

namespace {

constexpr std::pair<SetKind, const char*> kKindNames[] = {
    {SetKind::full_plane, "full_plane"},
    {SetKind::affine_plane, "affine_plane"},
    {SetKind::conic_points, "conic_points"},
    {SetKind::conic_plus_nucleus, "conic_plus_nucleus"},
    {SetKind::internal_points, "internal_points"},
    {SetKind::external_points, "external_points"},
    {SetKind::hermitian_unital, "hermitian_unital"},
    {SetKind::disjoint_conic_union, "disjoint_conic_union"},
};

void require_odd(const Field& f, const char* what) {
    if (f.characteristic() == 2) throw InvalidInput(std::string(what) + " requires odd q");
}

std::uint32_t exact_sqrt(std::uint32_t q) {
    std::uint32_t r = 0;
    while ((r + 1) * (r + 1) <= q) ++r;
    return r * r == q ? r : 0;
}

// Points off the conic classified by the number of tangent lines through them.
std::vector<ProjPoint> points_on_tangents(const FieldPtr& field, std::size_t wanted) {
    Plane plane(field);
    const HomogeneousForm c = reference_conic(field).form();
    std::vector<bool> on_conic(plane.size(), false);
    for (const auto& p : c.rational_zero_set(plane)) on_conic[plane.index(p)] = true;

    std::vector<std::size_t> tangent_count(plane.size(), 0);
    for (const auto& l : plane.lines()) {
        const auto pts = plane.line_points(l);
        std::size_t hits = 0;
        for (const auto& p : pts) hits += on_conic[plane.index(p)];
        if (hits != 1) continue;
        for (const auto& p : pts) ++tangent_count[plane.index(p)];
    }
    std::vector<ProjPoint> out;
    for (std::size_t i = 0; i < plane.size(); ++i)
        if (!on_conic[i] && tangent_count[i] == wanted) out.push_back(plane.point_at(i));
    return out;
}

}  // namespace

std::optional<SetKind> parse_set_kind(std::string_view name) {
    for (const auto& [kind, n] : kKindNames)
        if (name == n) return kind;
    return std::nullopt;
}

std::string to_string(SetKind kind) {
    for (const auto& [k, n] : kKindNames)
        if (k == kind) return n;
    return "unknown";
}

Conic reference_conic(const FieldPtr& field) {
    const Field& f = *field;
    return Conic(field, f.zero(), f.zero(), f.one(), f.neg(f.one()), f.zero(), f.zero());
}

HomogeneousForm hermitian_form(const FieldPtr& field) {
    const std::uint32_t r = exact_sqrt(field->order());
    if (r == 0) throw InvalidInput("the Hermitian unital needs a square q");
    const HomogeneousForm::Term terms[] = {{r + 1, 0, 0, field->one()}, {0, r + 1, 0, field->one()}, {0, 0, r + 1, field->one()}};
    return HomogeneousForm::from_terms(field, r + 1, terms);
}

std::vector<Conic> disjoint_conic_pencil(const FieldPtr& field, std::size_t t) {
    const Field& f = *field;
    require_odd(f, "a disjoint conic pencil");
    if (t < 1 || t > f.order() - 1) throw InvalidInput("number of conics must lie in 1..q-1");
    FieldElement nonsquare = f.zero();
    for (auto x : f.elements()) {
        if (!f.is_square(x)) {
            nonsquare = x;
            break;
        }
    }
    const FieldElement nu = f.neg(nonsquare);
    std::vector<Conic> out;
    for (std::uint32_t v = 1; out.size() < t; ++v) {
        const FieldElement lambda{v};
        out.emplace_back(field, f.one(), f.zero(), nu, f.zero(), f.zero(), f.neg(lambda));
    }
    return out;
}

PointSet generate(const FieldPtr& field, SetKind kind, const GenerateParams& params) {
    const Field& f = *field;
    Plane plane(field);
    switch (kind) {
        case SetKind::full_plane:
            return PointSet(field, plane.points());
        case SetKind::affine_plane: {
            std::vector<ProjPoint> pts;
            for (auto& p : plane.points())
                if (!p[2].is_zero()) pts.push_back(p);
            return PointSet(field, std::move(pts));
        }
        case SetKind::conic_points:
            return PointSet(field, reference_conic(field).points(plane));
        case SetKind::conic_plus_nucleus: {
            if (f.characteristic() != 2) throw InvalidInput("conic_plus_nucleus requires even q");
            const Conic c = reference_conic(field);
            auto pts = c.points(plane);
            pts.push_back(c.nucleus(plane));
            return PointSet(field, std::move(pts));
        }
        case SetKind::internal_points:
            require_odd(f, "internal_points");
            return PointSet(field, points_on_tangents(field, 0));
        case SetKind::external_points:
            require_odd(f, "external_points");
            return PointSet(field, points_on_tangents(field, 2));
        case SetKind::hermitian_unital:
            return PointSet(field, hermitian_form(field).rational_zero_set(plane));
        case SetKind::disjoint_conic_union: {
            std::vector<ProjPoint> pts;
            for (const auto& c : disjoint_conic_pencil(field, params.t)) {
                auto cp = c.points(plane);
                pts.insert(pts.end(), cp.begin(), cp.end());
            }
            return PointSet(field, std::move(pts));
        }
    }
    throw InvalidInput("unknown point-set kind");
}

PointSet random_pointset(const FieldPtr& field, std::size_t size, std::uint64_t seed) {
    Plane plane(field);
    if (size > plane.size()) throw InvalidInput("random set larger than the plane");
    std::vector<std::size_t> idx(plane.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // Partial Fisher-Yates with plain modulo draws, so the output depends only
    // on the mt19937_64 stream and not on the standard library's distributions.
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = i + rng() % (idx.size() - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(size);
    return PointSet::from_indices(field, std::move(idx));
}

}  // namespace arccurve
