#include "arccurve/mindeg.hpp"

#include <algorithm>

#include "arccurve/error.hpp"

namespace arccurve {

FieldMatrix evaluation_matrix(const PointSet& k, unsigned degree) {
    const Field& f = k.field();
    const auto& mons = monomials::list(degree);
    FieldMatrix m(k.size(), mons.size());
    std::array<std::vector<FieldElement>, 3> powers;
    for (auto& v : powers) v.resize(degree + 1);
    std::size_t r = 0;
    for (const auto& p : k) {
        for (int c = 0; c < 3; ++c) {
            powers[c][0] = f.one();
            for (unsigned e = 1; e <= degree; ++e) powers[c][e] = f.mul(powers[c][e - 1], p[c]);
        }
        auto row = m.row(r++);
        for (std::size_t j = 0; j < mons.size(); ++j)
            row[j] = f.mul(f.mul(powers[0][mons[j].x], powers[1][mons[j].y]), powers[2][mons[j].z]);
    }
    return m;
}

VanishingSpace vanishing_space(const PointSet& k, unsigned degree) {
    const Field& f = k.field();
    FieldMatrix m = evaluation_matrix(k, degree);
    const Echelon ech = reduce_rref(f, m);
    VanishingSpace space;
    space.degree = degree;
    space.dimension = m.cols() - ech.rank;
    for (auto& v : kernel_basis(f, m, ech)) {
        HomogeneousForm form(k.field_ptr(), degree, std::move(v));
        if (!verify_certificate(k, form))
            throw InconsistencyError("kernel form of degree " + std::to_string(degree) + " does not vanish on the set");
        space.basis.push_back(std::move(form));
    }
    return space;
}

std::size_t vanishing_dimension(const PointSet& k, unsigned degree) {
    FieldMatrix m = evaluation_matrix(k, degree);
    return m.cols() - reduce_rref(k.field(), m).rank;
}

unsigned counting_lower_bound(const PointSet& k) {
    const std::size_t line = k.q() + 1;
    return static_cast<unsigned>((k.size() + line - 1) / line);
}

CurveCertificate min_degree(const PointSet& k, const MinDegreeOptions& options) {
    if (k.empty()) throw InvalidInput("minimum degree of an empty point set is undefined");
    const unsigned max_d = options.max_degree.value_or(k.q() + 1);
    for (unsigned d = std::max(1u, counting_lower_bound(k)); d <= max_d; ++d) {
        VanishingSpace space = vanishing_space(k, d);
        if (space.dimension == 0) continue;

        // The last echelon row has the latest leading monomial, which makes
        // it the least normalized kernel element in grlex coefficient order.
        CurveCertificate cert{d, space.basis.back().normalized(), space.dimension, false};
        if (!verify_certificate(k, cert.form)) throw InconsistencyError("certificate does not vanish on the set");
        if (vanishing_dimension(k, d - 1) != 0)
            throw InconsistencyError("degree " + std::to_string(d - 1) + " kernel is nontrivial below the reported minimum");
        cert.checked = true;
        return cert;
    }
    throw ValidationError("no curve of degree <= " + std::to_string(max_d) + " contains the set");
}

bool verify_certificate(const PointSet& k, const HomogeneousForm& form) {
    if (form.is_zero() || !(form.field() == k.field())) return false;
    return std::all_of(k.begin(), k.end(), [&](const ProjPoint& p) { return form.vanishes_at(p); });
}

}  // namespace arccurve
