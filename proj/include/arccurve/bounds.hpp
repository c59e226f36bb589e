#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arccurve/mindeg.hpp"
#include "arccurve/pointsets.hpp"

namespace arccurve {

// Exact rational with positive denominator, always reduced.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    std::string to_string() const;
    double to_double() const { return double(num_) / double(den_); }
    auto operator<=>(const Rational& o) const { return num_ * o.den_ <=> o.num_ * den_; }
    bool operator==(const Rational& o) const = default;

private:
    std::int64_t num_, den_;
};

bool is_prime(std::uint64_t n);

// floor(q + 1 + (d-1)(d-2) sqrt(q)), computed in integers.
std::int64_t hasse_weil_rhs(std::int64_t d, std::int64_t q);

// Upper bound for N_q from 2 N_q <= nu (d-3) d + d (q+2). nu must be 1, 2 or
// a power of the characteristic. Without nu, q must be an odd prime (nu = 1).
Rational sv_line_rhs(std::int64_t d, std::int64_t q, std::optional<std::int64_t> nu = {});

// Upper bound for N_q from 5 N_q <= nu_sum (d-3) d + 2d(q+5), d >= 3.
// nu_sum = nu_1 + ... + nu_4 lies in 10..6d-1; it defaults to 10 for prime q > 5.
Rational sv_conic_rhs(std::int64_t d, std::int64_t q, std::optional<std::int64_t> nu_sum = {});

// Maximum number of singular points of an irreducible curve of degree d.
std::int64_t plucker_max_singular(std::int64_t d);

struct SetParameters {
    std::int64_t q = 0, t = 0, alpha = 0, m0 = 0, M0 = 0;
    bool q_prime = false;
};

// Conditions under which every curve through K has degree >= 2t.
struct MainCondition {
    std::int64_t general_rhs = 0;  // q > 8t^3-16t^2+2t+4-2m0(2t^2-5t+2)+2M0(2t-1)
    bool general_holds = false;
    std::int64_t prime_rhs = 0;  // q > 8t^2-16t+8-2alpha+2M0(2t-1), prime q only
    bool prime_holds = false;
    // Simplified forms obtained by bounding m0 and M0. Read with 12t^2 in the
    // cubic. They can claim too much when M0 exceeds the curve degree, so they
    // never enter a verdict.
    std::int64_t relaxed_rhs = 0;  // 8t^3-12t^2+4t-2alpha+2
    bool relaxed_holds = false;
    std::int64_t relaxed_prime_rhs = 0;  // 16t^2-24t-2alpha+8
    bool relaxed_prime_holds = false;
    bool holds = false;  // general, or prime form for prime q
    std::int64_t implied_bound = 0;  // 2t
};
MainCondition thm_main_condition(const SetParameters& s);

// Curves with no conic component: degree >= ceil(5t/2).
struct ConicCondition {
    Rational general_rhs;  // (750t^3-1725t^2+10(10M0+113)t-184-40(alpha+M0))/40
    bool general_holds = false;
    Rational prime_rhs;  // (125t^2+2(10M0-105)t-8(alpha+M0-9))/8, prime q > 5
    bool prime_holds = false;
    bool holds = false;
    std::int64_t implied_bound = 0;
};
ConicCondition thm_conic_condition(const SetParameters& s);

// A reducible curve with fewer than n-1 components through a maximal arc of
// degree n has degree >= q^(1/4). Empty when the component count does not
// qualify.
std::optional<std::int64_t> lemma_component_bound(std::int64_t q, std::int64_t n, std::int64_t num_components);

// Smallest d with d^4 >= q.
std::int64_t ceil_fourth_root(std::int64_t q);

std::int64_t barlotti_max(std::int64_t q, std::int64_t n);
// ceil(size / (q+1)).
std::int64_t trivial_min_degree(std::int64_t size, std::int64_t q);

// Maximal arcs of degree n: d >= 2n-1 once q exceeds a threshold. Two
// thresholds are in circulation, (2n-2)^2 and (2n-2)^4; verdicts use the
// larger one.
struct MaximalArcCondition {
    std::int64_t threshold_square = 0, threshold_fourth = 0;
    bool holds_square = false, holds_fourth = false;
    std::int64_t implied_bound = 0;  // 2n-1
};
MaximalArcCondition thm_maximal_arc_condition(std::int64_t q, std::int64_t n);

struct BoundEntry {
    std::string name;
    bool holds = false;
    std::int64_t implied_bound = 0;
    // Informational entries depend on hypotheses the validator cannot check
    // and never affect the verdict.
    bool informational = false;
    bool violated = false;  // holds, counts, and implied_bound > degree
    std::string detail;
};

struct BoundReport {
    SetParameters params;
    std::size_t size = 0;
    std::optional<std::int64_t> maximal_arc_degree;
    unsigned degree = 0;
    std::vector<BoundEntry> entries;
    bool consistent = true;

    std::string verdict() const { return consistent ? "CONSISTENT" : "INCONSISTENT"; }
    std::string to_json(int indent = 2) const;
};

SetParameters set_parameters(const PointSet& k);
SetParameters set_parameters(const PointSet& k, const LineSpectrum& spectrum);

// Evaluates every applicable bound for K and compares the implied lower bounds
// with the certificate degree. Throws InvalidInput if the certificate does not
// vanish on K.
BoundReport validate_bounds(const PointSet& k, const CurveCertificate& cert);

}  // namespace arccurve
