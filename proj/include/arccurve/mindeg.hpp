#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arccurve/forms.hpp"
#include "arccurve/linalg.hpp"
#include "arccurve/pointsets.hpp"

namespace arccurve {

// Rows: points of K in set order. Columns: degree-d monomials in grlex order.
FieldMatrix evaluation_matrix(const PointSet& k, unsigned degree);

struct VanishingSpace {
    unsigned degree = 0;
    std::size_t dimension = 0;
    // Reduced echelon basis; each form has been re-evaluated on K.
    std::vector<HomogeneousForm> basis;
};

// Degree-d forms vanishing on K. Degree 0 is allowed and gives the trivial
// space for nonempty K.
VanishingSpace vanishing_space(const PointSet& k, unsigned degree);
std::size_t vanishing_dimension(const PointSet& k, unsigned degree);

struct CurveCertificate {
    unsigned degree = 0;
    HomogeneousForm form;  // normalized, grlex-least in the kernel
    std::size_t kernel_dim = 0;
    bool checked = false;
};

struct MinDegreeOptions {
    // Upper end of the search; defaults to q + 1, where X^q Y - X Y^q works.
    std::optional<unsigned> max_degree;
};

// ceil(|K| / (q + 1)): a curve of degree d <= q has at most d(q+1) points.
unsigned counting_lower_bound(const PointSet& k);

// Smallest d >= 1 admitting a nonzero form that vanishes on K. Throws
// InvalidInput for empty K and ValidationError when nothing is found up to
// the maximum degree.
CurveCertificate min_degree(const PointSet& k, const MinDegreeOptions& options = {});

// True when the form is nonzero and vanishes on every point of K.
bool verify_certificate(const PointSet& k, const HomogeneousForm& form);

}  // namespace arccurve
