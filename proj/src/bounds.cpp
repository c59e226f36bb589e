#include "arccurve/bounds.hpp"

#include <cmath>
#include <numeric>

#include "arccurve/error.hpp"
#include "json.hpp"

namespace arccurve {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::int64_t Rational::floor() const {
    std::int64_t f = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --f;
    return f;
}

std::int64_t Rational::ceil() const { return -Rational(-num_, den_).floor(); }

std::string Rational::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Smallest prime factor, and whether n is a power of it.
std::pair<std::int64_t, bool> prime_power(std::int64_t n) {
    std::int64_t p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) p = n;
    std::int64_t m = n;
    while (m % p == 0) m /= p;
    return {p, m == 1};
}

void require_prime_power(std::int64_t q) {
    if (q < 2 || !prime_power(q).second) throw InvalidInput("q must be a prime power, got " + std::to_string(q));
}

}  // namespace

std::int64_t hasse_weil_rhs(std::int64_t d, std::int64_t q) {
    require_prime_power(q);
    if (d < 1) throw InvalidInput("degree must be at least 1");
    const std::uint64_t c = std::uint64_t(d - 1) * std::uint64_t(d - 2);
    // floor(c sqrt q) = isqrt(c^2 q)
    return q + 1 + static_cast<std::int64_t>(isqrt(c * c * std::uint64_t(q)));
}

Rational sv_line_rhs(std::int64_t d, std::int64_t q, std::optional<std::int64_t> nu) {
    require_prime_power(q);
    if (d < 1) throw InvalidInput("degree must be at least 1");
    const auto [p, _] = prime_power(q);
    if (!nu) {
        if (p == q && p != 2) nu = 1;
        else throw InvalidInput("the Frobenius order nu must be supplied unless q is an odd prime");
    }
    std::int64_t power = 1;
    while (power < *nu) power *= p;
    if (*nu != 1 && *nu != 2 && power != *nu)
        throw InvalidInput("invalid nu " + std::to_string(*nu) + ": must be 1, 2 or a power of " + std::to_string(p));
    return Rational(*nu * (d - 3) * d + d * (q + 2), 2);
}

Rational sv_conic_rhs(std::int64_t d, std::int64_t q, std::optional<std::int64_t> nu_sum) {
    require_prime_power(q);
    if (d < 3) throw InvalidInput("the conic bound needs degree at least 3");
    if (!nu_sum) {
        if (is_prime(q) && q > 5) nu_sum = 10;
        else throw InvalidInput("nu_1+...+nu_4 must be supplied unless q is a prime above 5");
    }
    if (*nu_sum < 10 || *nu_sum > 6 * d - 1)
        throw InvalidInput("nu_1+...+nu_4 = " + std::to_string(*nu_sum) + " outside 10.." + std::to_string(6 * d - 1));
    return Rational(*nu_sum * (d - 3) * d + 2 * d * (q + 5), 5);
}

std::int64_t plucker_max_singular(std::int64_t d) {
    if (d < 1) throw InvalidInput("degree must be at least 1");
    return (d - 1) * (d - 2) / 2;
}

namespace {

void check_parameters(const SetParameters& s) {
    if (s.t < 1) throw InvalidInput("t must be at least 1");
    if (s.m0 < 1 || s.m0 > s.M0) throw InvalidInput("need 1 <= m0 <= M0");
    if (s.alpha < 0 || s.alpha >= s.q) throw InvalidInput("need 0 <= alpha < q");
}

}  // namespace

MainCondition thm_main_condition(const SetParameters& s) {
    check_parameters(s);
    const std::int64_t t = s.t, a = s.alpha;
    MainCondition c;
    c.general_rhs = 8 * t * t * t - 16 * t * t + 2 * t + 4 - 2 * s.m0 * (2 * t * t - 5 * t + 2) + 2 * s.M0 * (2 * t - 1);
    c.general_holds = s.q > c.general_rhs;
    c.prime_rhs = 8 * t * t - 16 * t + 8 - 2 * a + 2 * s.M0 * (2 * t - 1);
    c.prime_holds = s.q_prime && s.q > c.prime_rhs;
    c.relaxed_rhs = 8 * t * t * t - 12 * t * t + 4 * t - 2 * a + 2;
    c.relaxed_holds = s.q > c.relaxed_rhs;
    c.relaxed_prime_rhs = 16 * t * t - 24 * t - 2 * a + 8;
    c.relaxed_prime_holds = s.q_prime && s.q > c.relaxed_prime_rhs;
    c.holds = c.general_holds || c.prime_holds;
    c.implied_bound = 2 * t;
    return c;
}

ConicCondition thm_conic_condition(const SetParameters& s) {
    check_parameters(s);
    const std::int64_t t = s.t, a = s.alpha, M = s.M0;
    ConicCondition c;
    c.general_rhs = Rational(750 * t * t * t - 1725 * t * t + 10 * (10 * M + 113) * t - 184 - 40 * (a + M), 40);
    c.general_holds = Rational(s.q) > c.general_rhs;
    c.prime_rhs = Rational(125 * t * t + 2 * (10 * M - 105) * t - 8 * (a + M - 9), 8);
    c.prime_holds = s.q_prime && s.q > 5 && Rational(s.q) > c.prime_rhs;
    c.holds = c.general_holds || c.prime_holds;
    c.implied_bound = (5 * t + 1) / 2;
    return c;
}

std::int64_t ceil_fourth_root(std::int64_t q) {
    std::int64_t d = 0;
    while (d * d * d * d < q) ++d;
    return d;
}

std::optional<std::int64_t> lemma_component_bound(std::int64_t q, std::int64_t n, std::int64_t num_components) {
    if (num_components < 1) throw InvalidInput("a curve has at least one component");
    if (num_components >= n - 1) return std::nullopt;
    return ceil_fourth_root(q);
}

std::int64_t barlotti_max(std::int64_t q, std::int64_t n) { return (n - 1) * q + n; }

std::int64_t trivial_min_degree(std::int64_t size, std::int64_t q) { return (size + q) / (q + 1); }

MaximalArcCondition thm_maximal_arc_condition(std::int64_t q, std::int64_t n) {
    if (n < 2) throw InvalidInput("maximal arc degree must be at least 2");
    MaximalArcCondition c;
    const std::int64_t b = 2 * n - 2;
    c.threshold_square = b * b;
    c.threshold_fourth = b * b * b * b;
    c.holds_square = q > c.threshold_square;
    c.holds_fourth = q > c.threshold_fourth;
    c.implied_bound = 2 * n - 1;
    return c;
}

SetParameters set_parameters(const PointSet& k) { return set_parameters(k, spectrum(k)); }

SetParameters set_parameters(const PointSet& k, const LineSpectrum& spec) {
    SetParameters s;
    s.q = k.q();
    s.t = static_cast<std::int64_t>(k.t());
    s.alpha = static_cast<std::int64_t>(k.alpha());
    s.m0 = static_cast<std::int64_t>(spec.m0);
    s.M0 = static_cast<std::int64_t>(spec.M0);
    s.q_prime = is_prime(k.q());
    return s;
}

namespace {

std::string cmp(std::int64_t q, const std::string& rhs) { return "q=" + std::to_string(q) + " > " + rhs; }

}  // namespace

BoundReport validate_bounds(const PointSet& k, const CurveCertificate& cert) {
    if (!verify_certificate(k, cert.form)) throw InvalidInput("certificate does not vanish on the point set");
    const LineSpectrum spec = spectrum(k);
    BoundReport r;
    r.params = set_parameters(k, spec);
    r.size = k.size();
    r.degree = cert.degree;
    const auto& s = r.params;
    const std::int64_t d = cert.degree;

    if (spec.histogram.size() <= 2 && spec.histogram.count(0) && k.size() == std::size_t(barlotti_max(s.q, s.M0)))
        r.maximal_arc_degree = s.M0;

    auto add = [&](BoundEntry e) {
        e.violated = e.holds && !e.informational && e.implied_bound > d;
        if (e.violated) r.consistent = false;
        r.entries.push_back(std::move(e));
    };

    add({"line_count", true, trivial_min_degree(std::int64_t(k.size()), s.q), false, false,
         "ceil(|K|/(q+1)); t=" + std::to_string(s.t)});
    add({"small_degree", d <= s.q, s.t, false, false, "d <= q implies d >= t"});

    if (s.t >= 1) {
        const MainCondition m = thm_main_condition(s);
        add({"two_t", m.holds, m.implied_bound, false, false,
             cmp(s.q, std::to_string(m.general_rhs)) + (m.general_holds ? " holds" : " fails") +
                 (s.q_prime ? "; prime form " + cmp(s.q, std::to_string(m.prime_rhs)) + (m.prime_holds ? " holds" : " fails")
                            : "")});
        add({"two_t_relaxed", m.relaxed_holds || m.relaxed_prime_holds, m.implied_bound, true, false,
             "interpreted as 8t^3-12t^2+4t-2alpha+2; " + cmp(s.q, std::to_string(m.relaxed_rhs)) +
                 (s.q_prime ? "; prime form " + cmp(s.q, std::to_string(m.relaxed_prime_rhs)) : "") +
                 "; assumes M0 <= d"});
        const ConicCondition c = thm_conic_condition(s);
        add({"five_halves_t", c.holds, c.implied_bound, true, false,
             cmp(s.q, c.general_rhs.to_string()) + (s.q_prime && s.q > 5 ? "; prime form " + cmp(s.q, c.prime_rhs.to_string()) : "") +
                 "; requires no conic component"});
        add({"non_rational_component", true, 2 * s.t + 1, true, false,
             "applies only if some component is not defined over GF(q)"});
    }

    if (r.maximal_arc_degree && *r.maximal_arc_degree >= 2) {
        const MaximalArcCondition m = thm_maximal_arc_condition(s.q, *r.maximal_arc_degree);
        add({"maximal_arc", m.holds_fourth, m.implied_bound, false, false,
             cmp(s.q, std::to_string(m.threshold_fourth)) + (m.holds_fourth ? " holds" : " fails") + "; with threshold " +
                 std::to_string(m.threshold_square) + (m.holds_square ? " it would hold" : " it would fail too")});
        if (auto b = lemma_component_bound(s.q, *r.maximal_arc_degree, 1))
            add({"few_components", true, *b, true, false,
                 "reducible curves with fewer than n-1 components; component count not computed"});
    }
    return r;
}

std::string BoundReport::to_json(int indent) const {
    nlohmann::json j;
    j["q"] = params.q;
    j["size"] = size;
    j["t"] = params.t;
    j["alpha"] = params.alpha;
    j["m0"] = params.m0;
    j["M0"] = params.M0;
    j["q_prime"] = params.q_prime;
    if (maximal_arc_degree) j["maximal_arc_degree"] = *maximal_arc_degree;
    j["degree"] = degree;
    j["hasse_weil_rhs"] = hasse_weil_rhs(std::max<std::int64_t>(degree, 1), params.q);
    j["plucker_max_singular"] = plucker_max_singular(std::max<std::int64_t>(degree, 1));
    auto& arr = j["bounds"] = nlohmann::json::array();
    for (const auto& e : entries)
        arr.push_back({{"name", e.name},
                       {"holds", e.holds},
                       {"implied_bound", e.implied_bound},
                       {"informational", e.informational},
                       {"violated", e.violated},
                       {"detail", e.detail}});
    j["verdict"] = verdict();
    return j.dump(indent);
}

}  // namespace arccurve
