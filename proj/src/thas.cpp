#include <array>
#include <set>

#include "arccurve/error.hpp"
#include "arccurve/pointsets.hpp"

namespace arccurve {

namespace {

using Vec2 = std::array<FieldElement, 2>;  // a vector of GF(r^2)^2
using Vec4 = std::array<FieldElement, 4>;  // coordinates over GF(r)

// GF(r^2)^2 viewed as a 4-dimensional GF(r)-space.
class SpreadModel {
public:
    SpreadModel(const Field& f, unsigned half, std::size_t first_choice) : f_(f), half_(half) {
        for (auto x : f.elements())
            if (f.in_subfield(x, half)) sub_.push_back(x);
        for (auto x : f.elements()) {
            if (!f.in_subfield(x, half)) {
                theta_ = x;
                break;
            }
        }
        find_symplectic_basis(first_choice);
    }

    const std::vector<FieldElement>& subfield() const { return sub_; }

    // Alternating GF(r)-form Tr_{r^2/r}(u0 v1 + u1 v0). Every GF(r^2)-line
    // through the origin is totally isotropic, so the Desarguesian spread is
    // a spread of W(r) for this form.
    FieldElement form(const Vec2& u, const Vec2& v) const {
        return f_.trace(f_.add(f_.mul(u[0], v[1]), f_.mul(u[1], v[0])), half_);
    }

    // Coordinates (c0..c3) w.r.t. a basis in which `form` reads
    // c0 d3 + c3 d0 + c1 d2 + c2 d1.
    Vec2 embed(const Vec4& c) const {
        Vec2 v{f_.zero(), f_.zero()};
        for (int i = 0; i < 4; ++i) v = add(v, scale(c[i], basis_[i]));
        return v;
    }

    Vec2 scale(FieldElement s, const Vec2& v) const { return {f_.mul(s, v[0]), f_.mul(s, v[1])}; }
    Vec2 add(const Vec2& a, const Vec2& b) const { return {f_.add(a[0], b[0]), f_.add(a[1], b[1])}; }

private:
    // b0 is the `first_choice`-th nonzero vector in enumeration order; the
    // rest are the first vectors satisfying the pairing conditions.
    void find_symplectic_basis(std::size_t first_choice) {
        std::vector<Vec2> vectors;
        for (auto c0 : sub_)
            for (auto c1 : sub_)
                for (auto c2 : sub_)
                    for (auto c3 : sub_) {
                        const Vec2 v{f_.add(c0, f_.mul(c1, theta_)), f_.add(c2, f_.mul(c3, theta_))};
                        if (!v[0].is_zero() || !v[1].is_zero()) vectors.push_back(v);
                    }
        auto pick = [&](auto&& pred) {
            for (const auto& v : vectors)
                if (pred(v)) return v;
            throw InconsistencyError("symplectic basis search failed");
        };
        const FieldElement one = f_.one();
        if (first_choice >= vectors.size()) throw InconsistencyError("symplectic basis search exhausted");
        basis_[0] = vectors[first_choice];
        basis_[3] = pick([&](const Vec2& v) { return form(basis_[0], v) == one; });
        auto orth = [&](const Vec2& v) { return form(basis_[0], v).is_zero() && form(basis_[3], v).is_zero(); };
        basis_[1] = pick(orth);
        basis_[2] = pick([&](const Vec2& v) { return orth(v) && form(basis_[1], v) == one; });
    }

    const Field& f_;
    unsigned half_;
    std::vector<FieldElement> sub_;
    FieldElement theta_;
    std::array<Vec2, 4> basis_;
};

// Absolute trace of an element of the subfield GF(2^half).
FieldElement subfield_trace(const Field& f, FieldElement x, unsigned half) {
    FieldElement s = f.zero();
    for (unsigned i = 0; i < half; ++i, x = f.square(x)) s = f.add(s, x);
    return s;
}

std::vector<Vec4> ovoid_points(const Field& f, const std::vector<FieldElement>& sub, unsigned half, OvoidKind kind) {
    std::vector<Vec4> out{{f.zero(), f.zero(), f.zero(), f.one()}};
    if (kind == OvoidKind::suzuki_tits) {
        // sigma: x -> x^(2^(e+1)) where r = 2^(2e+1), so sigma^2 is the Frobenius.
        const std::uint64_t sigma = 1ull << ((half + 1) / 2);
        for (auto x : sub)
            for (auto y : sub) {
                const FieldElement z =
                    f.add(f.add(f.mul(x, y), f.mul(f.square(x), f.pow(x, sigma))), f.pow(y, sigma));
                out.push_back({f.one(), x, y, z});
            }
    } else {
        // x0 x3 + x1^2 + x1 x2 + delta x2^2, polar form c0 d3 + c3 d0 + c1 d2 + c2 d1.
        FieldElement delta = f.zero();
        for (auto d : sub)
            if (subfield_trace(f, d, half) == f.one()) {
                delta = d;
                break;
            }
        for (auto x1 : sub)
            for (auto x2 : sub)
                out.push_back({f.one(), x1, x2, f.add(f.add(f.square(x1), f.mul(x1, x2)), f.mul(delta, f.square(x2)))});
    }
    return out;
}

}  // namespace

PointSet thas_arc(const FieldPtr& field, OvoidKind ovoid, SpreadClass cls) {
    const Field& f = *field;
    if (f.characteristic() != 2 || f.degree() % 2 != 0 || (f.degree() / 2) % 2 != 1)
        throw InvalidInput("Thas arcs need GF(r^2) with r an odd power of 2");
    const unsigned half = f.degree() / 2;
    const unsigned r = 1u << half;
    const unsigned s = 1u << ((half + 1) / 2);  // sqrt(2r)
    const unsigned order = cls == SpreadClass::small_torus ? r - s + 1 : r + s + 1;

    Plane plane(field);
    for (std::size_t choice = 0;; ++choice) {
        SpreadModel model(f, half, choice);
        // Affine cone with vertex at the origin: every GF(r)-multiple of every
        // ovoid point.
        std::set<std::size_t> idx;
        for (const auto& c : ovoid_points(f, model.subfield(), half, ovoid)) {
            const Vec2 v = model.embed(c);
            for (auto sc : model.subfield()) {
                const Vec2 w = model.scale(sc, v);
                idx.insert(plane.index(plane.point(w[0], w[1], f.one())));
            }
        }
        PointSet arc = PointSet::from_indices(field, {idx.begin(), idx.end()});
        if (cls == SpreadClass::any || has_vertex_symmetry(arc, order)) return arc;
    }
}

PointSet thas_arc_pg2_64(SpreadClass cls) {
    PointSet arc = thas_arc(Field::make(2, 6), OvoidKind::suzuki_tits, cls);
    if (arc.size() != 456 || !is_maximal_arc(arc, 8))
        throw ValidationError("constructed Thas arc is not a maximal (456,8)-arc");
    return arc;
}

namespace {

using Mat2 = std::array<FieldElement, 4>;

Mat2 mat_mul(const Field& f, const Mat2& a, const Mat2& b) {
    return {f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
            f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
}

bool preserves(const Field& f, const Mat2& m, const std::vector<bool>& affine) {
    const std::uint32_t q = f.order();
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) {
            if (!affine[x * q + y]) continue;
            const FieldElement X{x}, Y{y};
            const FieldElement u = f.add(f.mul(m[0], X), f.mul(m[1], Y));
            const FieldElement v = f.add(f.mul(m[2], X), f.mul(m[3], Y));
            if (!affine[u.value * q + v.value]) return false;
        }
    return true;
}

}  // namespace

bool has_vertex_symmetry(const PointSet& k, unsigned order) {
    if (order <= 1) return true;
    const Field& f = k.field();
    const std::uint32_t q = f.order();
    // Affine points (x, y, 1) have plane index x q + y.
    std::vector<bool> affine(k.membership().begin(), k.membership().begin() + std::size_t(q) * q);
    const Mat2 identity{f.one(), f.zero(), f.zero(), f.one()};

    for (auto tau : f.elements()) {
        // x^2 + tau x + 1 irreducible, and its companion matrix has order dividing `order`.
        bool reducible = false;
        for (auto x : f.elements())
            if (f.sub(f.add(f.square(x), f.mul(tau, x)), f.neg(f.one())).is_zero()) reducible = true;
        if (reducible) continue;
        const Mat2 companion{f.zero(), f.neg(f.one()), f.one(), f.neg(tau)};
        Mat2 power = identity;
        for (unsigned i = 0; i < order; ++i) power = mat_mul(f, power, companion);
        if (power != identity) continue;

        // Every M with trace -tau and determinant 1 is conjugate to the companion.
        for (auto a : f.elements()) {
            const FieldElement d = f.sub(f.neg(tau), a);
            const FieldElement ad_minus_1 = f.sub(f.mul(a, d), f.one());
            for (auto b : f.elements()) {
                if (!b.is_zero()) {
                    const Mat2 m{a, b, f.div(ad_minus_1, b), d};
                    if (preserves(f, m, affine)) return true;
                } else if (ad_minus_1.is_zero()) {
                    for (auto c : f.elements())
                        if (preserves(f, {a, b, c, d}, affine)) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace arccurve
