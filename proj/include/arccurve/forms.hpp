#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arccurve/gf.hpp"
#include "arccurve/pg2.hpp"

namespace arccurve {

struct Exponent {
    unsigned x = 0, y = 0, z = 0;
    auto operator<=>(const Exponent&) const = default;
};

// Degree-d ternary monomials in graded-lex order with X > Y > Z:
// X^d, X^(d-1)Y, X^(d-1)Z, X^(d-2)Y^2, ..., Z^d.
namespace monomials {
std::size_t count(unsigned degree);
std::size_t index(unsigned degree, Exponent e);
const std::vector<Exponent>& list(unsigned degree);
}  // namespace monomials

// Row-major 3x3 matrix over the field.
using Matrix3 = std::array<std::array<FieldElement, 3>, 3>;

class HomogeneousForm {
public:
    struct Term {
        unsigned x, y, z;
        FieldElement coeff;
    };

    // The zero form of the given degree.
    HomogeneousForm(FieldPtr field, unsigned degree);
    HomogeneousForm(FieldPtr field, unsigned degree, std::vector<FieldElement> coeffs);
    static HomogeneousForm from_terms(FieldPtr field, unsigned degree, std::span<const Term> terms);
    // uX + vY + wZ.
    static HomogeneousForm linear(FieldPtr field, FieldElement u, FieldElement v, FieldElement w);
    static HomogeneousForm linear(FieldPtr field, const ProjLine& l) { return linear(std::move(field), l[0], l[1], l[2]); }

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    unsigned degree() const { return degree_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(Exponent e) const { return coeffs_[monomials::index(degree_, e)]; }
    void set_coeff(Exponent e, FieldElement c) { coeffs_[monomials::index(degree_, e)] = c; }
    bool is_zero() const;

    FieldElement evaluate(const Triple& v) const;
    FieldElement evaluate(const ProjPoint& p) const { return evaluate(p.coords); }
    bool vanishes_at(const ProjPoint& p) const { return evaluate(p).is_zero(); }

    HomogeneousForm operator*(const HomogeneousForm& other) const;
    HomogeneousForm operator+(const HomogeneousForm& other) const;
    HomogeneousForm scaled(FieldElement s) const;
    HomogeneousForm pow(unsigned e) const;

    // First nonzero coefficient in grlex order scaled to 1.
    HomogeneousForm normalized() const;
    bool proportional_to(const HomogeneousForm& other) const;

    // f(H v): the equation of the image of {f = 0} under v -> H^{-1} v.
    HomogeneousForm compose(const Matrix3& h) const;

    // All points of PG(2,q) where the form vanishes, in plane index order.
    std::vector<ProjPoint> rational_zero_set(const Plane& plane) const;

    std::string to_string() const;

    bool operator==(const HomogeneousForm& other) const {
        return degree_ == other.degree_ && *field_ == *other.field_ && coeffs_ == other.coeffs_;
    }

private:
    FieldPtr field_;
    unsigned degree_;
    std::vector<FieldElement> coeffs_;
};

HomogeneousForm product(std::span<const HomogeneousForm> factors);

// aX^2 + bXY + cY^2 + dXZ + eYZ + fZ^2.
class Conic {
public:
    Conic(FieldPtr field, FieldElement a, FieldElement b, FieldElement c, FieldElement d, FieldElement e, FieldElement f);
    // Throws InvalidInput unless the form has degree 2.
    static Conic from_form(const HomogeneousForm& form);

    const Field& field() const { return *field_; }
    FieldElement a() const { return c_[0]; }
    FieldElement b() const { return c_[1]; }
    FieldElement c() const { return c_[2]; }
    FieldElement d() const { return c_[3]; }
    FieldElement e() const { return c_[4]; }
    FieldElement f() const { return c_[5]; }

    HomogeneousForm form() const;
    bool is_nondegenerate() const;

    // Characteristic 2: the common point (e, d, b) of all tangent lines.
    // Throws Unsupported for odd q and InvalidInput for degenerate conics.
    ProjPoint nucleus(const Plane& plane) const;

    std::vector<ProjPoint> points(const Plane& plane) const { return form().rational_zero_set(plane); }

private:
    FieldPtr field_;
    std::array<FieldElement, 6> c_;
};

// Brute force over rational points.
bool conics_disjoint(const Plane& plane, const Conic& c1, const Conic& c2);

}  // namespace arccurve
