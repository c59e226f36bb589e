#include "arccurve/constructions.hpp"

#include <algorithm>
#include <map>

#include "arccurve/error.hpp"

namespace arccurve {

namespace {

void require_char2(const Field& f) {
    if (f.characteristic() != 2) throw Unsupported("conic pair constructions need characteristic 2");
}

FieldElement random_element(const Field& f, std::mt19937_64& rng) { return FieldElement{std::uint32_t(rng() % f.order())}; }

}  // namespace

void validate_pair(const Field& f, const NormalizedConicPair& p) {
    require_char2(f);
    if (p.lambda1.is_zero() || p.lambda2.is_zero()) throw InvalidInput("degenerate conic: lambda_i must be nonzero");
    if (p.lambda1 == p.lambda2) throw InvalidInput("conics not disjoint: lambda1 = lambda2");
    if (f.mul(p.alpha1, p.lambda2) == f.mul(p.alpha2, p.lambda1))
        throw InvalidInput("conics not disjoint: alpha1 lambda2 = alpha2 lambda1");
    if (f.mul(p.beta1, p.lambda2) == f.mul(p.beta2, p.lambda1))
        throw InvalidInput("conics not disjoint: beta1 lambda2 = beta2 lambda1");
    if (f.trace_absolute(f.mul(p.alpha1, p.beta1)) != f.one() || f.trace_absolute(f.mul(p.alpha2, p.beta2)) != f.one())
        throw InvalidInput("conic meets the line Z = 0: Tr(alpha_i beta_i) must be 1");
}

void validate_pair(const Field& f, const SharedPointConicPair& p) {
    require_char2(f);
    if (p.alpha1.is_zero() || p.alpha2.is_zero()) throw InvalidInput("degenerate conic: alpha_i must be nonzero");
    if (p.lambda1.is_zero() || p.lambda2.is_zero()) throw InvalidInput("degenerate conic: lambda_i must be nonzero");
    if (p.lambda1 == p.lambda2) throw InvalidInput("nuclei coincide: lambda1 = lambda2");
    const FieldElement u = f.add(f.mul(p.alpha1, p.lambda2), f.mul(p.alpha2, p.lambda1));
    const FieldElement v = f.add(f.mul(p.beta1, p.lambda2), f.mul(p.beta2, p.lambda1));
    if (f.trace_absolute(f.mul(u, v)) != f.one()) throw InvalidInput("conics share more than one point");
}

Conic pair_conic(const FieldPtr& field, const NormalizedConicPair& p, int i) {
    const Field& f = *field;
    if (i == 1) return Conic(field, p.alpha1, f.one(), p.beta1, f.zero(), f.zero(), p.lambda1);
    if (i == 2) return Conic(field, p.alpha2, f.one(), p.beta2, f.zero(), f.zero(), p.lambda2);
    throw InvalidInput("conic index must be 1 or 2");
}

Conic pair_conic(const FieldPtr& field, const SharedPointConicPair& p, int i) {
    const Field& f = *field;
    if (i == 1) return Conic(field, p.alpha1, f.one(), p.beta1, f.zero(), p.lambda1, f.zero());
    if (i == 2) return Conic(field, p.alpha2, f.one(), p.beta2, f.zero(), p.lambda2, f.zero());
    throw InvalidInput("conic index must be 1 or 2");
}

NormalizedConicPair random_normalized_pair(const FieldPtr& field, std::mt19937_64& rng) {
    const Field& f = *field;
    require_char2(f);
    const Plane plane(field);
    for (;;) {
        NormalizedConicPair p{random_element(f, rng), random_element(f, rng), random_element(f, rng),
                              random_element(f, rng), random_element(f, rng), random_element(f, rng)};
        try {
            validate_pair(f, p);
        } catch (const InvalidInput&) {
            continue;
        }
        // The algebraic conditions are necessary only.
        if (conics_disjoint(plane, pair_conic(field, p, 1), pair_conic(field, p, 2))) return p;
    }
}

SharedPointConicPair random_shared_point_pair(const FieldPtr& field, std::mt19937_64& rng) {
    const Field& f = *field;
    require_char2(f);
    const Plane plane(field);
    for (;;) {
        SharedPointConicPair p{random_element(f, rng), random_element(f, rng), random_element(f, rng),
                               random_element(f, rng), random_element(f, rng), random_element(f, rng)};
        try {
            validate_pair(f, p);
        } catch (const InvalidInput&) {
            continue;
        }
        const auto c2 = pair_conic(field, p, 2).form();
        std::size_t common = 0;
        for (const auto& pt : pair_conic(field, p, 1).points(plane)) common += c2.vanishes_at(pt);
        if (common == 1) return p;
    }
}

Conic third_conic(const FieldPtr& field, const NormalizedConicPair& p) {
    const Field& f = *field;
    validate_pair(f, p);
    if (!conics_disjoint(Plane(field), pair_conic(field, p, 1), pair_conic(field, p, 2)))
        throw InvalidInput("conics C_1 and C_2 meet");
    const FieldElement s = f.add(p.lambda1, p.lambda2);
    const FieldElement a = f.div(f.add(f.mul(p.alpha1, p.lambda1), f.mul(p.alpha2, p.lambda2)), s);
    const FieldElement c = f.div(f.add(f.mul(p.beta1, p.lambda1), f.mul(p.beta2, p.lambda2)), s);
    return Conic(field, a, f.one(), c, f.zero(), f.zero(), s);
}

FieldElement nu_invariant(const Field& f, const NormalizedConicPair& p) {
    require_char2(f);
    if (p.lambda1 == p.lambda2) throw InvalidInput("nu is undefined for lambda1 = lambda2");
    const FieldElement u = f.add(f.mul(p.alpha1, p.lambda2), f.mul(p.alpha2, p.lambda1));
    const FieldElement v = f.add(f.mul(p.beta1, p.lambda2), f.mul(p.beta2, p.lambda1));
    return f.div(f.mul(u, v), f.add(f.square(p.lambda1), f.square(p.lambda2)));
}

Matrix3 normalizing_collineation(const Field& f, const NormalizedConicPair& p) {
    validate_pair(f, p);
    const FieldElement s = f.add(p.lambda1, p.lambda2);
    const FieldElement a2 = f.div(f.add(f.mul(p.alpha1, p.lambda2), f.mul(p.alpha2, p.lambda1)), s);
    if (a2.is_zero()) throw InvalidInput("normalizing collineation needs alpha1 lambda2 != alpha2 lambda1");
    const FieldElement a = f.sqrt_char2(a2);
    const FieldElement b = f.sqrt_char2(f.div(f.add(f.one(), f.div(p.alpha1, a2)), p.lambda1));
    const FieldElement c = f.mul(a, f.sqrt_char2(f.div(f.add(p.beta1, p.beta2), s)));
    return {{{f.inv(a), f.zero(), f.zero()}, {f.zero(), a, f.zero()}, {b, c, f.one()}}};
}

SecantCounts secant_counts(const PointSet& x, const ProjPoint& p) {
    if (x.contains(p)) throw InvalidInput("point " + x.plane().format(p) + " lies in the set");
    const Plane& plane = x.plane();
    SecantCounts s;
    for (const auto& l : plane.lines_through(p)) {
        std::size_t hits = 0;
        for (const auto& pt : plane.line_points(l)) hits += x.contains(pt);
        switch (hits) {
            case 0: ++s.u0; break;
            case 2: ++s.u2; break;
            case 4: ++s.u4; break;
            default:
                throw ValidationError("not a (0,2,4)-set: line " + plane.format(l) + " meets it in " + std::to_string(hits) +
                                      " points");
        }
    }
    return s;
}

PointSet admissible_completions(const PointSet& x) {
    std::vector<ProjPoint> out;
    for (const auto& p : x.plane().points())
        if (!x.contains(p) && secant_counts(x, p).u4 == 0) out.push_back(p);
    return PointSet(x.field_ptr(), std::move(out));
}

ProjPoint shared_pair_point(const FieldPtr& field, const SharedPointConicPair& p, int i, FieldElement m) {
    const Field& f = *field;
    const FieldElement alpha = i == 1 ? p.alpha1 : p.alpha2;
    const FieldElement beta = i == 1 ? p.beta1 : p.beta2;
    const FieldElement lambda = i == 1 ? p.lambda1 : p.lambda2;
    const FieldElement den = f.add(f.add(f.mul(alpha, f.square(m)), m), beta);
    return Plane(field).point(f.mul(lambda, m), lambda, den);
}

bool admissible_epsilon(const Field& f, const SharedPointConicPair& p, FieldElement eps) {
    if (eps.is_zero()) return false;
    // eps = lambda_i / beta_i  <=>  eps beta_i = lambda_i
    return f.mul(eps, p.beta1) != p.lambda1 && f.mul(eps, p.beta2) != p.lambda2;
}

ThreeSecantWitness three_secant_witness(const FieldPtr& field, const SharedPointConicPair& p, FieldElement eps) {
    const Field& f = *field;
    validate_pair(f, p);
    if (!admissible_epsilon(f, p, eps)) throw InvalidInput("epsilon " + f.format(eps) + " is 0 or lambda_i/beta_i");
    const Plane plane(field);
    const ProjPoint p_eps = plane.point(f.zero(), eps, f.one());
    const HomogeneousForm c1 = pair_conic(field, p, 1).form();
    const HomogeneousForm c2 = pair_conic(field, p, 2).form();
    const ProjPoint n1 = plane.point(p.lambda1, f.zero(), f.one());
    const ProjPoint n2 = plane.point(p.lambda2, f.zero(), f.one());

    const FieldElement l1l2 = f.mul(p.lambda1, p.lambda2);
    const FieldElement k_m2t = f.mul(f.mul(p.alpha1, p.lambda2), eps);
    const FieldElement k_mt2 = f.mul(f.mul(p.alpha2, p.lambda1), eps);
    const FieldElement k_mt = f.mul(eps, f.add(p.lambda1, p.lambda2));
    const FieldElement k_m = f.add(f.mul(f.mul(eps, p.lambda1), p.beta2), l1l2);
    const FieldElement k_t = f.add(f.mul(f.mul(eps, p.lambda2), p.beta1), l1l2);

    auto pole = [&](FieldElement alpha, FieldElement beta, FieldElement m) {
        return f.add(f.add(f.mul(alpha, f.square(m)), m), beta).is_zero();
    };
    for (auto m : f.elements()) {
        if (m.is_zero() || pole(p.alpha1, p.beta1, m)) continue;
        for (auto t : f.elements()) {
            if (t.is_zero() || t == m || pole(p.alpha2, p.beta2, t)) continue;
            const FieldElement mt = f.mul(m, t);
            FieldElement v = f.mul(k_m2t, f.mul(mt, m));
            v = f.add(v, f.mul(k_mt2, f.mul(mt, t)));
            v = f.add(v, f.mul(k_mt, mt));
            v = f.add(v, f.mul(k_m, m));
            v = f.add(v, f.mul(k_t, t));
            if (!v.is_zero()) continue;

            ThreeSecantWitness w{m, t, shared_pair_point(field, p, 1, m), shared_pair_point(field, p, 2, t), {}, 0};
            if (!c1.vanishes_at(w.p1) || !c2.vanishes_at(w.p2))
                throw InconsistencyError("parametrized point is not on its conic");
            w.line = plane.line_through(w.p1, w.p2);
            if (!plane.incident(p_eps, w.line))
                throw InconsistencyError("cubic solution does not give a line through (0, eps, 1)");
            for (const auto& pt : plane.line_points(w.line))
                w.hits += c1.vanishes_at(pt) || c2.vanishes_at(pt) || pt == n1 || pt == n2;
            if (w.hits < 3) throw InconsistencyError("witness line meets the configuration in fewer than 3 points");
            return w;
        }
    }
    throw InconsistencyError("no three-secant witness for epsilon " + f.format(eps));
}

SplitVerdict verify_split_structure(std::span<const HomogeneousForm> factors, const PointSet& k, std::size_t n) {
    SplitVerdict v;
    if (factors.empty()) throw InvalidInput("no factors given");
    const Plane& plane = k.plane();
    for (const auto& pt : k) {
        bool hit = false;
        for (const auto& g : factors) hit = hit || g.vanishes_at(pt);
        if (!hit) throw ValidationError("invalid certificate: the product does not vanish at " + plane.format(pt));
    }

    std::vector<const HomogeneousForm*> lines, conics, cubics, other;
    std::size_t total = 0;
    for (const auto& g : factors) {
        total += g.degree();
        switch (g.degree()) {
            case 1: lines.push_back(&g); break;
            case 2: conics.push_back(&g); break;
            case 3: cubics.push_back(&g); break;
            default: other.push_back(&g); break;
        }
    }
    auto fail = [&](std::string why) {
        v.pass = false;
        v.reason = std::move(why);
        return v;
    };
    if (lines.size() == 1 && conics.size() == n - 1 && cubics.empty() && other.empty()) v.shape = "line+conics";
    else if (n >= 2 && lines.empty() && conics.size() == n - 2 && cubics.size() == 1 && other.empty()) v.shape = "conics+cubic";
    else v.shape = "other";
    if (total != 2 * n - 1) return fail("total degree " + std::to_string(total) + " differs from 2n-1 = " + std::to_string(2 * n - 1));
    if (v.shape == "other") return fail("factor degrees match neither shape");

    std::vector<Conic> cs;
    for (const auto* g : conics) {
        Conic c = Conic::from_form(*g);
        if (!c.is_nondegenerate()) return fail("conic " + g->to_string() + " is degenerate");
        if (c.points(plane).size() != std::size_t(k.q()) + 1) return fail("conic " + g->to_string() + " does not have q+1 points");
        for (const auto& l : plane.lines()) {
            const auto pts = plane.line_points(l);
            if (std::all_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return g->vanishes_at(p); }))
                return fail("conic " + g->to_string() + " contains the line " + plane.format(l));
        }
        cs.push_back(std::move(c));
    }

    if (n == 4) {
        if (v.shape != "line+conics") return fail("degree 4 requires three conics and a line");
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                if (!conics_disjoint(plane, cs[i], cs[j])) return fail("conics are not pairwise disjoint");
        const ProjPoint nucleus = cs[0].nucleus(plane);
        for (const auto& c : cs)
            if (c.nucleus(plane) != nucleus) return fail("conics do not share a nucleus");
        if (!lines[0]->vanishes_at(nucleus))
            return fail("the nuclei of the conics do not lie on the line " + lines[0]->to_string());
        if (!k.contains(nucleus)) return fail("common nucleus " + plane.format(nucleus) + " is not in the set");
    }
    v.pass = true;
    return v;
}

std::vector<HomogeneousForm> denniston_witness(const FieldPtr& field, std::span<const FieldElement> basis, FieldElement nu) {
    const Field& f = *field;
    std::vector<HomogeneousForm> out;
    for (auto a : additive_span(f, basis))
        if (!a.is_zero()) out.push_back(Conic(field, f.one(), f.one(), nu, f.zero(), f.zero(), a).form());
    out.push_back(HomogeneousForm::linear(field, f.one(), f.zero(), f.zero()));
    return out;
}

std::vector<HomogeneousForm> hyperoval_witness(const FieldPtr& field) {
    const Field& f = *field;
    return {reference_conic(field).form(), HomogeneousForm::linear(field, f.one(), f.zero(), f.zero())};
}

}  // namespace arccurve
