#include "arccurve/forms.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "arccurve/error.hpp"

namespace arccurve {

namespace monomials {

std::size_t count(unsigned degree) { return std::size_t(degree + 1) * (degree + 2) / 2; }

std::size_t index(unsigned degree, Exponent e) {
    if (e.x + e.y + e.z != degree) throw InvalidInput("exponent does not match the form degree");
    const std::size_t rest = e.y + e.z;  // = degree - e.x
    return rest * (rest + 1) / 2 + (rest - e.y);
}

const std::vector<Exponent>& list(unsigned degree) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<Exponent>> cache;
    std::lock_guard lock(mu);
    auto& v = cache[degree];
    if (v.empty()) {
        for (unsigned x = degree + 1; x-- > 0;)
            for (unsigned y = degree - x + 1; y-- > 0;) v.push_back({x, y, degree - x - y});
    }
    return v;
}

}  // namespace monomials

HomogeneousForm::HomogeneousForm(FieldPtr field, unsigned degree)
    : field_(std::move(field)), degree_(degree), coeffs_(monomials::count(degree)) {}

HomogeneousForm::HomogeneousForm(FieldPtr field, unsigned degree, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != monomials::count(degree_)) throw InvalidInput("coefficient count does not match degree");
    for (auto c : coeffs_)
        if (c.value >= field_->order()) throw InvalidInput("coefficient out of field range");
}

HomogeneousForm HomogeneousForm::from_terms(FieldPtr field, unsigned degree, std::span<const Term> terms) {
    HomogeneousForm f(std::move(field), degree);
    for (const auto& t : terms) {
        const Exponent e{t.x, t.y, t.z};
        f.set_coeff(e, f.field_->add(f.coeff(e), t.coeff));
    }
    return f;
}

HomogeneousForm HomogeneousForm::linear(FieldPtr field, FieldElement u, FieldElement v, FieldElement w) {
    HomogeneousForm f(std::move(field), 1);
    f.coeffs_ = {u, v, w};
    return f;
}

bool HomogeneousForm::is_zero() const {
    for (auto c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

FieldElement HomogeneousForm::evaluate(const Triple& v) const {
    const Field& f = *field_;
    std::vector<FieldElement> px(degree_ + 1), py(degree_ + 1), pz(degree_ + 1);
    px[0] = py[0] = pz[0] = f.one();
    for (unsigned i = 1; i <= degree_; ++i) {
        px[i] = f.mul(px[i - 1], v[0]);
        py[i] = f.mul(py[i - 1], v[1]);
        pz[i] = f.mul(pz[i - 1], v[2]);
    }
    FieldElement sum = f.zero();
    const auto& mons = monomials::list(degree_);
    for (std::size_t i = 0; i < mons.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const auto& e = mons[i];
        sum = f.add(sum, f.mul(coeffs_[i], f.mul(px[e.x], f.mul(py[e.y], pz[e.z]))));
    }
    return sum;
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& other) const {
    if (!(*field_ == *other.field_)) throw InvalidInput("forms over different fields");
    const Field& f = *field_;
    HomogeneousForm out(field_, degree_ + other.degree_);
    const auto& ma = monomials::list(degree_);
    const auto& mb = monomials::list(other.degree_);
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < mb.size(); ++j) {
            if (other.coeffs_[j].is_zero()) continue;
            const Exponent e{ma[i].x + mb[j].x, ma[i].y + mb[j].y, ma[i].z + mb[j].z};
            const std::size_t k = monomials::index(out.degree_, e);
            out.coeffs_[k] = f.add(out.coeffs_[k], f.mul(coeffs_[i], other.coeffs_[j]));
        }
    }
    return out;
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& other) const {
    if (!(*field_ == *other.field_)) throw InvalidInput("forms over different fields");
    if (degree_ != other.degree_) throw InvalidInput("cannot add forms of different degrees");
    HomogeneousForm out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = field_->add(coeffs_[i], other.coeffs_[i]);
    return out;
}

HomogeneousForm HomogeneousForm::scaled(FieldElement s) const {
    HomogeneousForm out = *this;
    for (auto& c : out.coeffs_) c = field_->mul(c, s);
    return out;
}

HomogeneousForm HomogeneousForm::pow(unsigned e) const {
    HomogeneousForm out(field_, 0, {field_->one()});
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

HomogeneousForm HomogeneousForm::normalized() const {
    for (auto c : coeffs_)
        if (!c.is_zero()) return scaled(field_->inv(c));
    return *this;
}

bool HomogeneousForm::proportional_to(const HomogeneousForm& other) const {
    if (degree_ != other.degree_ || !(*field_ == *other.field_)) return false;
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    return normalized().coeffs_ == other.normalized().coeffs_;
}

HomogeneousForm HomogeneousForm::compose(const Matrix3& h) const {
    std::array<HomogeneousForm, 3> vars{HomogeneousForm::linear(field_, h[0][0], h[0][1], h[0][2]),
                                        HomogeneousForm::linear(field_, h[1][0], h[1][1], h[1][2]),
                                        HomogeneousForm::linear(field_, h[2][0], h[2][1], h[2][2])};
    std::array<std::vector<HomogeneousForm>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[v].push_back(HomogeneousForm(field_, 0, {field_->one()}));
        for (unsigned i = 1; i <= degree_; ++i) powers[v].push_back(powers[v].back() * vars[v]);
    }
    HomogeneousForm out(field_, degree_);
    const auto& mons = monomials::list(degree_);
    for (std::size_t i = 0; i < mons.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const auto& e = mons[i];
        out = out + (powers[0][e.x] * powers[1][e.y] * powers[2][e.z]).scaled(coeffs_[i]);
    }
    return out;
}

std::vector<ProjPoint> HomogeneousForm::rational_zero_set(const Plane& plane) const {
    if (!(plane.field() == *field_)) throw InvalidInput("form and plane are over different fields");
    std::vector<ProjPoint> out;
    for (std::size_t i = 0; i < plane.size(); ++i) {
        const ProjPoint p = plane.point_at(i);
        if (vanishes_at(p)) out.push_back(p);
    }
    return out;
}

std::string HomogeneousForm::to_string() const {
    std::ostringstream os;
    const auto& mons = monomials::list(degree_);
    bool first = true;
    for (std::size_t i = 0; i < mons.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = coeffs_[i] == field_->one();
        if (!unit || degree_ == 0) os << field_->format(coeffs_[i]);
        const char* names[] = {"X", "Y", "Z"};
        const unsigned ex[] = {mons[i].x, mons[i].y, mons[i].z};
        for (int v = 0; v < 3; ++v) {
            if (ex[v] == 0) continue;
            os << names[v];
            if (ex[v] > 1) os << "^" << ex[v];
        }
    }
    if (first) os << "0";
    return os.str();
}

HomogeneousForm product(std::span<const HomogeneousForm> factors) {
    if (factors.empty()) throw InvalidInput("product of no forms");
    HomogeneousForm out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
    return out;
}

Conic::Conic(FieldPtr field, FieldElement a, FieldElement b, FieldElement c, FieldElement d, FieldElement e, FieldElement f)
    : field_(std::move(field)), c_{a, b, c, d, e, f} {}

Conic Conic::from_form(const HomogeneousForm& form) {
    if (form.degree() != 2) throw InvalidInput("a conic needs a degree-2 form");
    return Conic(form.field_ptr(), form.coeff({2, 0, 0}), form.coeff({1, 1, 0}), form.coeff({0, 2, 0}),
                 form.coeff({1, 0, 1}), form.coeff({0, 1, 1}), form.coeff({0, 0, 2}));
}

HomogeneousForm Conic::form() const {
    const HomogeneousForm::Term terms[] = {{2, 0, 0, a()}, {1, 1, 0, b()}, {0, 2, 0, c()},
                                           {1, 0, 1, d()}, {0, 1, 1, e()}, {0, 0, 2, f()}};
    return HomogeneousForm::from_terms(field_, 2, terms);
}

bool Conic::is_nondegenerate() const {
    const Field& F = *field_;
    if (F.characteristic() == 2) {
        const Triple n{e(), d(), b()};
        if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) return false;  // a square of a line
        return !form().evaluate(n).is_zero();
    }
    // Odd characteristic: Gram matrix of the symmetric bilinear form.
    const FieldElement two = F.from_int(2);
    const FieldElement m[3][3] = {{F.mul(two, a()), b(), d()}, {b(), F.mul(two, c()), e()}, {d(), e(), F.mul(two, f())}};
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return F.sub(F.mul(m[r0][c0], m[r1][c1]), F.mul(m[r0][c1], m[r1][c0]));
    };
    const FieldElement det = F.add(F.sub(F.mul(m[0][0], minor(1, 2, 1, 2)), F.mul(m[0][1], minor(1, 2, 0, 2))),
                                   F.mul(m[0][2], minor(1, 2, 0, 1)));
    return !det.is_zero();
}

ProjPoint Conic::nucleus(const Plane& plane) const {
    if (field_->characteristic() != 2) throw Unsupported("conic nuclei exist only in characteristic 2");
    if (!is_nondegenerate()) throw InvalidInput("degenerate conic has no nucleus");
    return plane.point(e(), d(), b());
}

bool conics_disjoint(const Plane& plane, const Conic& c1, const Conic& c2) {
    const HomogeneousForm f1 = c1.form(), f2 = c2.form();
    for (std::size_t i = 0; i < plane.size(); ++i) {
        const ProjPoint p = plane.point_at(i);
        if (f1.vanishes_at(p) && f2.vanishes_at(p)) return false;
    }
    return true;
}

}  // namespace arccurve
