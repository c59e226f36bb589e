#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arccurve/forms.hpp"
#include "arccurve/pointsets.hpp"

namespace arccurve {

// C_i : alpha_i X^2 + XY + beta_i Y^2 + lambda_i Z^2 = 0, i = 1, 2, over
// GF(2^h). Both have nucleus O = (0,0,1) and miss the line Z = 0.
struct NormalizedConicPair {
    FieldElement alpha1, beta1, lambda1, alpha2, beta2, lambda2;
};

// C_i : alpha_i X^2 + XY + beta_i Y^2 + lambda_i YZ = 0 through A = (0,0,1),
// with nuclei N_i = (lambda_i, 0, 1).
struct SharedPointConicPair {
    FieldElement alpha1, beta1, lambda1, alpha2, beta2, lambda2;
};

// Throws InvalidInput naming the first violated condition: lambda_i != 0,
// lambda1 != lambda2, alpha1 lambda2 != alpha2 lambda1,
// beta1 lambda2 != beta2 lambda1, Tr(alpha_i beta_i) = 1.
void validate_pair(const Field& f, const NormalizedConicPair& pair);
// alpha_i, lambda_i != 0, lambda1 != lambda2 and
// Tr((alpha1 lambda2 + alpha2 lambda1)(beta1 lambda2 + beta2 lambda1)) = 1.
void validate_pair(const Field& f, const SharedPointConicPair& pair);

Conic pair_conic(const FieldPtr& field, const NormalizedConicPair& pair, int i);
Conic pair_conic(const FieldPtr& field, const SharedPointConicPair& pair, int i);

// Rejection sampling against the algebraic conditions and then against a
// brute-force count of common points (none, resp. exactly one); the algebraic
// conditions alone do not guarantee it.
NormalizedConicPair random_normalized_pair(const FieldPtr& field, std::mt19937_64& rng);
SharedPointConicPair random_shared_point_pair(const FieldPtr& field, std::mt19937_64& rng);

// Throws InvalidInput unless the pair is valid and C_1, C_2 are disjoint.
// The conic completing C_1 and C_2 to a degree-4 maximal arc with O:
// ((alpha1 lambda1 + alpha2 lambda2)/s) X^2 + XY + ((beta1 lambda1 + beta2 lambda2)/s) Y^2 + s Z^2,
// s = lambda1 + lambda2.
Conic third_conic(const FieldPtr& field, const NormalizedConicPair& pair);

// (alpha1 lambda2 + alpha2 lambda1)(beta1 lambda2 + beta2 lambda1) / (lambda1^2 + lambda2^2).
FieldElement nu_invariant(const Field& f, const NormalizedConicPair& pair);

// H = [[1/a, 0, 0], [0, a, 0], [b, c, 1]] with
// a^2 = (alpha1 lambda2 + alpha2 lambda1)/s, b^2 = (1 + alpha1/a^2)/lambda1,
// c^2 = a^2 (beta1 + beta2)/s. C_i(Hv) is X^2 + XY + nu Y^2 + lambda_i Z^2.
Matrix3 normalizing_collineation(const Field& f, const NormalizedConicPair& pair);

struct SecantCounts {
    std::size_t u0 = 0, u2 = 0, u4 = 0;
};

// Lines through P (not in X) by how many points of X they carry. Throws
// ValidationError if one of them meets X in a number other than 0, 2 or 4.
SecantCounts secant_counts(const PointSet& x, const ProjPoint& p);

// Points P outside X lying on no 4-secant of X.
PointSet admissible_completions(const PointSet& x);

struct ThreeSecantWitness {
    FieldElement m, t;
    ProjPoint p1, p2;  // P_m on C_1 and P_t on C_2
    ProjLine line;
    std::size_t hits = 0;  // |line ∩ (C_1 ∪ C_2 ∪ {N_1, N_2})|
};

// P_m^i = (lambda_i m, lambda_i, alpha_i m^2 + m + beta_i).
ProjPoint shared_pair_point(const FieldPtr& field, const SharedPointConicPair& pair, int i, FieldElement m);

// Scans m, t in GF(q)*, m != t, for a line through P_m^1, P_t^2 and
// (0, eps, 1). eps must avoid 0, lambda1/beta1 and lambda2/beta2. Throws
// InconsistencyError if the scan finds nothing.
ThreeSecantWitness three_secant_witness(const FieldPtr& field, const SharedPointConicPair& pair, FieldElement eps);
bool admissible_epsilon(const Field& f, const SharedPointConicPair& pair, FieldElement eps);

struct SplitVerdict {
    bool pass = false;
    std::string shape;   // "line+conics", "conics+cubic" or "other"
    std::string reason;  // why it failed, empty on success
};

// Checks that the factors of a degree 2n-1 curve through a maximal arc of
// degree n have one of the shapes {1 line, n-1 conics} or {n-2 conics,
// 1 cubic}, with every conic nondegenerate, carrying q+1 points and containing
// no line. For n = 4 the conics must be pairwise disjoint with a common nucleus
// N in K, and the line must pass through N. Throws ValidationError if the
// product does not vanish on K.
SplitVerdict verify_split_structure(std::span<const HomogeneousForm> factors, const PointSet& k, std::size_t n);

// Factors of a degree 2n-1 curve through the Denniston arc: the conics
// X^2 + XY + nu Y^2 + a Z^2 for nonzero a in the subgroup, and the line X = 0.
std::vector<HomogeneousForm> denniston_witness(const FieldPtr& field, std::span<const FieldElement> basis, FieldElement nu);
// The conic Y^2 = XZ and the line X = 0 through its nucleus (0,1,0).
std::vector<HomogeneousForm> hyperoval_witness(const FieldPtr& field);

}  // namespace arccurve
