// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes, or when the only failures are
// the pinned known deviations below and they fail exactly as recorded. With
// --strict any FAIL gives exit status 1.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arccurve/bounds.hpp"
#include "arccurve/constructions.hpp"
#include "arccurve/error.hpp"
#include "arccurve/io.hpp"
#include "arccurve/mindeg.hpp"
#include "arccurve/pointsets.hpp"
#include "oracles.hpp"

using namespace arccurve;

namespace {

// Pinned limits, in seconds.
constexpr double kLimitKnownDegrees = 10.0;
constexpr double kLimitMaximalArcs = 30.0;
constexpr double kLimitThas = 60.0;

constexpr int kPairsPerField = 20;
constexpr int kMinBoundSets = 50;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    // Signature of a failure, compared against the pinned deviations.
    std::string failure_key;
    std::vector<std::string> info;
};

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s << "s";
    return os.str();
}

std::vector<FieldElement> bits(unsigned k) {
    std::vector<FieldElement> b;
    for (unsigned i = 0; i < k; ++i) b.push_back(FieldElement{1u << i});
    return b;
}

Outcome known_degrees() {
    Outcome o;
    const auto start = Clock::now();
    std::vector<std::string> bad;
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) {
        const auto f = Field::parse(std::to_string(q));
        const auto d = min_degree(generate(f, SetKind::full_plane)).degree;
        if (d != q + 1) bad.push_back("PG(2," + std::to_string(q) + ")=" + std::to_string(d));
    }
    for (unsigned q : {3u, 4u, 5u, 7u, 8u}) {
        const auto f = Field::parse(std::to_string(q));
        const auto d = min_degree(generate(f, SetKind::affine_plane)).degree;
        if (d != q) bad.push_back("AG(2," + std::to_string(q) + ")=" + std::to_string(d));
    }
    const double t = seconds_since(start);
    o.pass = bad.empty() && t < kLimitKnownDegrees;
    o.detail = "full planes q+1, affine planes q; " + fmt_seconds(t) + " (limit " + fmt_seconds(kLimitKnownDegrees) + ")";
    for (const auto& b : bad) o.detail += "; mismatch " + b;
    return o;
}

Outcome maximal_arcs() {
    Outcome o;
    const auto start = Clock::now();
    std::vector<std::string> bad;

    const auto f16 = Field::parse("16");
    const auto basis = bits(2);
    const auto nu = default_denniston_nu(*f16);
    const auto den = denniston_arc(f16, basis, nu);
    const auto cert = min_degree(den);
    const auto witness = denniston_witness(f16, basis, nu);
    const auto split = verify_split_structure(witness, den, 4);
    if (cert.degree != 7) bad.push_back("Denniston(16,4) degree " + std::to_string(cert.degree));
    if (!split.pass) bad.push_back("Denniston split: " + split.reason);
    if (product(witness).degree() != cert.degree) bad.push_back("Denniston witness degree differs");

    for (unsigned q : {4u, 8u, 16u}) {
        const auto f = Field::parse(std::to_string(q));
        const auto h = generate(f, SetKind::conic_plus_nucleus);
        const auto c = min_degree(h);
        const auto w = hyperoval_witness(f);
        const auto s = verify_split_structure(w, h, 2);
        if (c.degree != 3) bad.push_back("hyperoval q=" + std::to_string(q) + " degree " + std::to_string(c.degree));
        if (!s.pass) bad.push_back("hyperoval q=" + std::to_string(q) + " split: " + s.reason);
    }
    const double t = seconds_since(start);
    o.pass = bad.empty() && t < kLimitMaximalArcs;
    o.detail = "Denniston(16,4)=" + std::to_string(cert.degree) + " shape " + split.shape +
               ", hyperovals q=4,8,16 degree 3 with line+conic witness; " + fmt_seconds(t) + " (limit " +
               fmt_seconds(kLimitMaximalArcs) + ")";
    for (const auto& b : bad) o.detail += "; " + b;
    return o;
}

Outcome thas() {
    Outcome o;
    const auto gen_start = Clock::now();
    const auto arc = thas_arc_pg2_64(SpreadClass::small_torus);
    const double gen_t = seconds_since(gen_start);
    const bool maximal = is_maximal_arc(arc, 8);

    const auto start = Clock::now();
    const auto cert = min_degree(arc);
    const double t = seconds_since(start);

    // Perturbed near-arcs must be rejected.
    std::size_t rejected = 0;
    std::mt19937_64 rng(64);
    const Plane& plane = arc.plane();
    for (int i = 0; i < 5; ++i) {
        const auto& drop = arc.points()[rng() % arc.size()];
        ProjPoint add = plane.point_at(rng() % plane.size());
        while (arc.contains(add)) add = plane.point_at(rng() % plane.size());
        const auto near = arc.without(drop).united(PointSet(arc.field_ptr(), {add}));
        try {
            io::validate_maximal_arc(near, 8);
        } catch (const ValidationError&) {
            ++rejected;
        }
    }

    o.pass = maximal && cert.degree == 22 && cert.checked && t < kLimitThas && rejected == 5;
    o.detail = "(456,8)-arc in PG(2,64): maximal=" + std::string(maximal ? "yes" : "no") +
               ", min degree " + std::to_string(cert.degree) + " in " + fmt_seconds(t) + " (limit " +
               fmt_seconds(kLimitThas) + "), built in " + fmt_seconds(gen_t) + ", perturbed arcs rejected " +
               std::to_string(rejected) + "/5";

    const auto large = thas_arc_pg2_64(SpreadClass::large_torus);
    o.info.push_back("the arc with an order-13 vertex symmetry (other spread class) needs degree " +
                     std::to_string(min_degree(large).degree));
    return o;
}

Outcome conic_unions() {
    Outcome o;
    std::vector<std::string> cells, failures;
    for (unsigned q : {5u, 7u, 9u})
        for (std::size_t t : {2u, 3u}) {
            const auto f = Field::parse(std::to_string(q));
            const auto conics = disjoint_conic_pencil(f, t);
            const auto k = generate(f, SetKind::disjoint_conic_union, {t});
            const auto cert = min_degree(k);
            std::vector<HomogeneousForm> forms;
            for (const auto& c : conics) forms.push_back(c.form());
            const bool product_ok = verify_certificate(k, product(forms));
            const std::string cell = "(" + std::to_string(q) + "," + std::to_string(t) + ")=" + std::to_string(cert.degree);
            cells.push_back(cell);
            if (cert.degree != 2 * t || !product_ok) {
                failures.push_back(cell + (product_ok ? "" : " product fails"));
                o.pass = false;
            }
        }
    o.detail = "min degree 2t, (q,t)=d:";
    for (const auto& c : cells) o.detail += " " + c;
    for (const auto& f : failures) {
        o.failure_key += (o.failure_key.empty() ? "" : ";") + f;
    }
    if (!o.pass) o.detail += "; expected 2t fails at " + o.failure_key;
    if (o.failure_key.find("(5,3)") != std::string::npos) {
        o.info.push_back("18 points always lie on a quintic (21 coefficients), so 6 is out of reach at (5,3)");
    }
    return o;
}

Outcome bound_consistency() {
    Outcome o;
    std::vector<PointSet> sets;
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const auto f = Field::parse(std::to_string(q));
        sets.push_back(generate(f, SetKind::full_plane));
        sets.push_back(generate(f, SetKind::affine_plane));
        sets.push_back(generate(f, SetKind::conic_points));
        if (q % 2 == 0) sets.push_back(generate(f, SetKind::conic_plus_nucleus));
        else {
            sets.push_back(generate(f, SetKind::internal_points));
            sets.push_back(generate(f, SetKind::external_points));
            for (std::size_t t = 1; t <= std::min<std::size_t>(3, (q - 1) / 2); ++t)
                sets.push_back(generate(f, SetKind::disjoint_conic_union, {t}));
        }
        if (q == 4 || q == 9 || q == 16) sets.push_back(generate(f, SetKind::hermitian_unital));
        const Plane plane(f);
        for (std::uint64_t seed = 0; seed < 3; ++seed)
            sets.push_back(random_pointset(f, 1 + (seed * 7919 + q) % (plane.size() - 1), seed + 100 * q));
        sets.push_back(PointSet(f, plane.line_points(plane.line_at(0))));
    }
    for (unsigned h : {3u, 4u, 5u}) {
        const auto f = Field::make(2, h);
        for (unsigned k = 1; k < h; ++k) sets.push_back(denniston_arc(f, bits(k), default_denniston_nu(*f)));
    }

    std::size_t checks = 0, violations = 0;
    std::map<std::string, std::size_t> informational_exceeded;
    std::vector<std::string> first_bad;
    for (const auto& k : sets) {
        const auto cert = min_degree(k);
        const auto r = validate_bounds(k, cert);
        for (const auto& e : r.entries) {
            if (!e.holds) continue;
            if (e.informational) {
                if (e.implied_bound > std::int64_t(cert.degree)) ++informational_exceeded[e.name];
                continue;
            }
            ++checks;
            if (e.implied_bound > std::int64_t(cert.degree)) {
                ++violations;
                if (first_bad.size() < 3)
                    first_bad.push_back(e.name + " at q=" + std::to_string(k.q()) + " |K|=" + std::to_string(k.size()));
            }
        }
    }
    o.pass = sets.size() >= std::size_t(kMinBoundSets) && violations == 0;
    o.detail = std::to_string(sets.size()) + " sets, " + std::to_string(checks) + " implications that hold, " +
               std::to_string(violations) + " violations";
    for (const auto& b : first_bad) o.detail += "; " + b;
    std::string info = "informational entries above the degree (hypotheses not checked):";
    for (const auto& [name, n] : informational_exceeded) info += " " + name + " " + std::to_string(n);
    if (informational_exceeded.empty()) info += " none";
    o.info.push_back(info);
    return o;
}

// Some line through P meets `x` in at least three points.
bool some_three_secant(const PointSet& x, const ProjPoint& p) {
    const Plane& plane = x.plane();
    for (const auto& l : plane.lines_through(p)) {
        std::size_t hits = 0;
        for (const auto& pt : plane.line_points(l)) hits += x.contains(pt);
        if (hits >= 3) return true;
    }
    return false;
}

Outcome constructions() {
    Outcome o;
    std::mt19937_64 rng(2024);
    std::vector<std::string> bad;
    std::size_t pairs = 0, points_checked = 0;
    for (unsigned q : {8u, 16u, 32u}) {
        const auto f = Field::parse(std::to_string(q));
        const Plane plane(f);
        const auto origin = plane.point(f->zero(), f->zero(), f->one());
        for (int i = 0; i < kPairsPerField; ++i, ++pairs) {
            const auto pair = random_normalized_pair(f, rng);
            const auto c1 = pair_conic(f, pair, 1), c2 = pair_conic(f, pair, 2);
            const auto c3 = third_conic(f, pair);
            const PointSet x = PointSet(f, c1.points(plane)).united(PointSet(f, c2.points(plane)));
            const PointSet completion = PointSet(f, c3.points(plane)).united(PointSet(f, {origin}));
            const PointSet k = x.united(completion);
            if (!is_maximal_arc(k, 4)) bad.push_back("q=" + std::to_string(q) + " completion not maximal");
            if (!(admissible_completions(x) == completion)) bad.push_back("q=" + std::to_string(q) + " completion not unique");
            if (f->trace_absolute(nu_invariant(*f, pair)) != f->one()) bad.push_back("q=" + std::to_string(q) + " Tr(nu)=0");
            for (const auto& p : plane.points()) {
                if (x.contains(p)) continue;
                const auto s = secant_counts(x, p);
                ++points_checked;
                if (s.u0 + s.u2 + s.u4 != q + 1 || 2 * s.u2 + 4 * s.u4 != 2 * q + 2) bad.push_back("identity");
                if (!k.contains(p) && (s.u0 != q / 4 || s.u4 != q / 4)) bad.push_back("u0=u4=q/4");
            }
        }
    }

    std::size_t cases = 0, witnessed = 0, weak = 0;
    std::vector<std::string> witness_fail_fields;
    for (unsigned q : {8u, 16u}) {
        const auto f = Field::parse(std::to_string(q));
        const Plane plane(f);
        std::size_t q_fail = 0, q_cases = 0;
        for (int i = 0; i < kPairsPerField; ++i) {
            const auto pair = random_shared_point_pair(f, rng);
            const auto c1 = pair_conic(f, pair, 1), c2 = pair_conic(f, pair, 2);
            const PointSet target = PointSet(f, c1.points(plane))
                                        .united(PointSet(f, c2.points(plane)))
                                        .united(PointSet(f, {c1.nucleus(plane), c2.nucleus(plane)}));
            for (auto eps : f->elements()) {
                if (!admissible_epsilon(*f, pair, eps)) continue;
                ++cases, ++q_cases;
                const auto pe = plane.point(f->zero(), eps, f->one());
                weak += some_three_secant(target, pe);
                try {
                    const auto w = three_secant_witness(f, pair, eps);
                    std::size_t hits = 0;
                    for (const auto& pt : plane.line_points(w.line)) hits += target.contains(pt);
                    if (hits >= 3 && plane.incident(pe, w.line)) ++witnessed;
                    else ++q_fail;
                } catch (const InconsistencyError&) {
                    ++q_fail;
                }
            }
        }
        if (q_fail) witness_fail_fields.push_back("q=" + std::to_string(q) + " " + std::to_string(q_fail) + "/" + std::to_string(q_cases));
    }

    const bool witnesses_ok = witnessed == cases;
    o.pass = bad.empty() && witnesses_ok;
    o.detail = std::to_string(pairs) + " disjoint pairs (q=8,16,32): completions maximal and unique, " +
               std::to_string(points_checked) + " secant counts; witnesses " + std::to_string(witnessed) + "/" +
               std::to_string(cases) + " admissible (pair, eps)";
    for (std::size_t i = 0; i < std::min<std::size_t>(bad.size(), 3); ++i) o.detail += "; " + bad[i];
    if (!bad.empty()) o.failure_key = "pairs";
    if (!witnesses_ok) {
        o.detail += "; no witness at";
        for (const auto& w : witness_fail_fields) o.detail += " " + w;
        for (const auto& w : witness_fail_fields) o.failure_key += (o.failure_key.empty() ? "" : ";") + w.substr(0, w.find(' '));
    }
    o.info.push_back("some line through (0,eps,1) is a 3-secant in " + std::to_string(weak) + "/" + std::to_string(cases) +
                     " cases");
    return o;
}

Outcome hasse_weil() {
    Outcome o;
    std::size_t conics = 0;
    std::vector<std::string> bad;
    std::mt19937_64 rng(7);
    auto audit = [&](const Conic& c, const Plane& plane) {
        if (!c.is_nondegenerate()) return;
        ++conics;
        const auto n = std::int64_t(c.points(plane).size());
        if (n > hasse_weil_rhs(2, plane.q())) bad.push_back("conic over q=" + std::to_string(plane.q()));
    };
    for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 32u}) {
        const auto f = Field::parse(std::to_string(q));
        const Plane plane(f);
        audit(reference_conic(f), plane);
        if (q % 2) {
            for (const auto& c : disjoint_conic_pencil(f, (q - 1) / 2)) audit(c, plane);
        } else if (q >= 8) {
            for (int i = 0; i < 5; ++i) {
                const auto pair = random_normalized_pair(f, rng);
                audit(pair_conic(f, pair, 1), plane);
                audit(pair_conic(f, pair, 2), plane);
                audit(third_conic(f, pair), plane);
            }
        }
    }
    std::string herm;
    bool equality_q4 = false;
    for (auto [q, r] : {std::pair{4, 2}, {9, 3}, {16, 4}}) {
        const auto f = Field::parse(std::to_string(q));
        const auto n = std::int64_t(hermitian_form(f).rational_zero_set(Plane(f)).size());
        const auto rhs = hasse_weil_rhs(r + 1, q);
        herm += " q=" + std::to_string(q) + ": " + std::to_string(n) + "<=" + std::to_string(rhs);
        if (n > rhs) bad.push_back("Hermitian q=" + std::to_string(q));
        if (q == 4) equality_q4 = n == 9 && rhs == 9;
    }
    o.pass = bad.empty() && equality_q4 && conics > 0;
    o.detail = std::to_string(conics) + " nondegenerate conics within q+1; Hermitian" + herm;
    for (const auto& b : bad) o.detail += "; exceeds: " + b;
    if (!equality_q4) o.detail += "; no equality at q=4";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t sets = 0, agree = 0;
    std::string first;
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = Field::parse(std::to_string(q));
        const std::size_t plane_size = Plane(f).size();
        for (std::size_t size = 1; size <= std::min<std::size_t>(8, plane_size); ++size)
            for (std::uint64_t seed = 0; seed < 8; ++seed) {
                const auto k = random_pointset(f, size, seed * 1000 + size * 10 + q);
                std::vector<Triple> pts;
                for (const auto& p : k) pts.push_back(p.coords);
                const auto got = min_degree(k).degree;
                const auto want = oracle::min_degree(*f, pts, 2);
                ++sets;
                const bool ok = want ? got == *want : got > 2;
                agree += ok;
                if (!ok && first.empty())
                    first = "q=" + std::to_string(q) + " |K|=" + std::to_string(size) + " seed " + std::to_string(seed);
            }
    }
    o.pass = agree == sets;
    o.detail = std::to_string(agree) + "/" + std::to_string(sets) + " sets agree with exhaustive search up to degree 2";
    if (!first.empty()) o.detail += "; first mismatch " + first;
    return o;
}

struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
    // Failure signature recorded after analysis; empty if none is expected.
    const char* known_failure;
};

}  // namespace

int main(int argc, char** argv) {
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const std::vector<Criterion> criteria{
        {1, "known minimum degrees", known_degrees, ""},
        {2, "maximal-arc attainment", maximal_arcs, ""},
        {3, "Thas (456,8)-arc", thas, ""},
        {4, "disjoint-conic unions", conic_unions, "(5,3)=5"},
        {5, "bound consistency", bound_consistency, ""},
        {6, "conic-pair constructions", constructions, "q=8"},
        {7, "Hasse-Weil audit", hasse_weil, ""},
        {8, "oracle equivalence", oracle_equivalence, ""},
    };

    int unexpected = 0, failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
            o.failure_key = "exception";
        }
        std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail
                  << "\n";
        for (const auto& i : o.info) std::cout << "    note: " << i << "\n";
        if (!o.pass) {
            ++failed;
            if (o.failure_key != c.known_failure) {
                ++unexpected;
                std::cout << "    unexpected failure (recorded deviation: "
                          << (*c.known_failure ? c.known_failure : "none") << ")\n";
            } else {
                std::cout << "    known deviation: " << c.known_failure << "\n";
            }
        } else if (*c.known_failure) {
            std::cout << "    note: recorded deviation " << c.known_failure << " no longer occurs\n";
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass";
    if (failed) std::cout << ", " << failed - unexpected << " known deviation(s), " << unexpected << " unexpected";
    std::cout << "\n";
    if (strict) return failed ? 1 : 0;
    return unexpected ? 1 : 0;
}
