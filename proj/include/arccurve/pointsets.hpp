#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arccurve/forms.hpp"
#include "arccurve/gf.hpp"
#include "arccurve/pg2.hpp"

namespace arccurve {

// A set of distinct points of PG(2,q), kept sorted in plane index order.
// |K| = q t + alpha with t = floor(|K|/q), 0 <= alpha < q.
class PointSet {
public:
    // Throws InvalidInput on duplicates (reporting the offending point).
    PointSet(FieldPtr field, std::vector<ProjPoint> points);
    static PointSet from_indices(FieldPtr field, std::vector<std::size_t> indices);

    const Field& field() const { return plane_.field(); }
    const FieldPtr& field_ptr() const { return plane_.field_ptr(); }
    const Plane& plane() const { return plane_; }
    std::uint32_t q() const { return plane_.q(); }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    std::size_t t() const { return size() / q(); }
    std::size_t alpha() const { return size() % q(); }

    const std::vector<ProjPoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const ProjPoint& p) const { return member_[plane_.index(p)]; }
    // Membership bitmap over plane indices.
    const std::vector<bool>& membership() const { return member_; }

    PointSet united(const PointSet& other) const;
    PointSet without(const ProjPoint& p) const;

    bool operator==(const PointSet& other) const { return field() == other.field() && points_ == other.points_; }

private:
    Plane plane_;
    std::vector<ProjPoint> points_;
    std::vector<bool> member_;
};

struct LineSpectrum {
    std::map<std::size_t, std::size_t> histogram;  // |l ∩ K| -> number of lines
    std::size_t m0 = 0;  // least positive intersection size
    std::size_t M0 = 0;  // greatest intersection size
};

// Exact histogram over all lines. Throws InvalidInput on an empty set.
LineSpectrum spectrum(const PointSet& k);

// Every line meets K in 0 or n points and |K| = (n-1)q + n.
bool is_maximal_arc(const PointSet& k, std::size_t n);

// {(x,y,1) : x^2 + xy + nu y^2 in A}, A the GF(2)-span of `basis`.
// Requires characteristic 2, Tr(nu) = 1 and an independent basis.
PointSet denniston_arc(const FieldPtr& field, std::span<const FieldElement> basis, FieldElement nu);
// Elements of the additive subgroup spanned by `basis`, zero first.
std::vector<FieldElement> additive_span(const Field& field, std::span<const FieldElement> basis);
// Smallest element of absolute trace 1.
FieldElement default_denniston_nu(const Field& field);

enum class SetKind {
    full_plane,
    affine_plane,
    conic_points,
    conic_plus_nucleus,
    internal_points,
    external_points,
    hermitian_unital,
    disjoint_conic_union,
};

std::optional<SetKind> parse_set_kind(std::string_view name);
std::string to_string(SetKind kind);

// The reference conic Y^2 = XZ used by the conic-based generators.
Conic reference_conic(const FieldPtr& field);
// X^(r+1) + Y^(r+1) + Z^(r+1) with r^2 = q.
HomogeneousForm hermitian_form(const FieldPtr& field);
// Conics X^2 + nu Y^2 - lambda Z^2 for the first t nonzero lambda, with -nu
// the smallest nonsquare; pairwise disjoint. Odd q only.
std::vector<Conic> disjoint_conic_pencil(const FieldPtr& field, std::size_t t);

struct GenerateParams {
    std::size_t t = 0;  // disjoint_conic_union only
};

PointSet generate(const FieldPtr& field, SetKind kind, const GenerateParams& params = {});

// Uniformly random subset of the given size.
PointSet random_pointset(const FieldPtr& field, std::size_t size, std::uint64_t seed);

// Thas maximal (r^3 - r^2 + r, r)-arc in PG(2, r^2), r = 2^(2e+1): the affine
// cone over an ovoid of W(r), read in the Desarguesian spread model of
// GF(r^2)^2. `field` must be GF(r^2) with r an odd power of 2.
//
// The Suzuki-Tits ovoid meets the regular spreads of W(r) in more than one
// way, and the resulting arcs need not be projectively equivalent. SpreadClass
// picks the symplectic basis by a symmetry of the arc: small_torus asks for a
// vertex-fixing linear collineation of order r - sqrt(2r) + 1, large_torus for
// one of order r + sqrt(2r) + 1. `any` takes the first basis found.
enum class OvoidKind { suzuki_tits, elliptic_quadric };
enum class SpreadClass { any, small_torus, large_torus };
PointSet thas_arc(const FieldPtr& field, OvoidKind ovoid = OvoidKind::suzuki_tits, SpreadClass cls = SpreadClass::any);
// The (456, 8)-arc in PG(2,64) of the small_torus class. Throws
// ValidationError if the result is not a maximal arc of degree 8.
PointSet thas_arc_pg2_64(SpreadClass cls = SpreadClass::small_torus);

// Whether some M in SL(2,q) with M^order = I and irreducible characteristic
// polynomial maps the affine part of K onto itself, acting as
// (x, y, 1) -> (M (x, y), 1). Brute force over SL(2,q); meant for small q.
bool has_vertex_symmetry(const PointSet& k, unsigned order);

}  // namespace arccurve
