#include "arccurve/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arccurve/bounds.hpp"
#include "arccurve/constructions.hpp"
#include "arccurve/error.hpp"
#include "arccurve/io.hpp"
#include "arccurve/mindeg.hpp"
#include "json.hpp"

namespace arccurve {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

FieldPtr field_from(const std::string& q, const std::string& modulus) {
    return modulus.empty() ? Field::parse(q) : Field::parse(q, std::string_view(modulus));
}

std::vector<FieldElement> parse_elements(const Field& f, const std::string& csv, std::size_t expected, const char* what) {
    std::vector<FieldElement> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(f.parse_element(item));
    if (out.size() != expected)
        throw InvalidInput(std::string(what) + " needs " + std::to_string(expected) + " comma-separated elements");
    return out;
}

json run_report(const std::string& command, const Field& f, Clock::time_point start) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["field"] = {{"q", f.order()}, {"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus_string()}};
    j["wall_time_ms"] = elapsed_ms(start);
    return j;
}

io::LoadOptions load_options(std::size_t maximal_arc) {
    io::LoadOptions o;
    if (maximal_arc) o.maximal_arc_degree = maximal_arc;
    return o;
}

struct GenArgs {
    std::string kind, q, modulus, out, nu, spread = "small_torus", ovoid = "suzuki_tits";
    std::size_t n = 0, t = 0, size = 0;
    std::uint64_t seed = 0;
    bool json = false;
};

PointSet generate_from(const GenArgs& a, const FieldPtr& field, std::optional<std::size_t>& maximal_degree) {
    const Field& f = *field;
    if (a.kind == "denniston") {
        if (f.characteristic() != 2) throw Unsupported("Denniston arcs need characteristic 2");
        std::size_t m = 0;
        while ((std::size_t(1) << m) < a.n) ++m;
        if (a.n < 2 || (std::size_t(1) << m) != a.n || a.n > f.order())
            throw InvalidInput("--n must be a power of 2 in 2..q");
        std::vector<FieldElement> basis;
        for (std::size_t i = 0; i < m; ++i) basis.push_back(FieldElement{std::uint32_t(1) << i});
        const FieldElement nu = a.nu.empty() ? default_denniston_nu(f) : f.parse_element(a.nu);
        maximal_degree = a.n;
        return denniston_arc(field, basis, nu);
    }
    if (a.kind == "thas") {
        const OvoidKind ovoid = a.ovoid == "elliptic_quadric" ? OvoidKind::elliptic_quadric : OvoidKind::suzuki_tits;
        if (a.ovoid != "elliptic_quadric" && a.ovoid != "suzuki_tits") throw InvalidInput("unknown ovoid " + a.ovoid);
        SpreadClass cls;
        if (a.spread == "small_torus") cls = SpreadClass::small_torus;
        else if (a.spread == "large_torus") cls = SpreadClass::large_torus;
        else if (a.spread == "any") cls = SpreadClass::any;
        else throw InvalidInput("unknown spread class " + a.spread);
        if (ovoid == OvoidKind::elliptic_quadric) cls = SpreadClass::any;
        PointSet arc = thas_arc(field, ovoid, cls);
        std::size_t r = 1;
        while (r * r < f.order()) ++r;
        maximal_degree = r;
        return arc;
    }
    if (a.kind == "random") {
        if (a.seed == 0 && a.size == 0) throw InvalidInput("random sets need --size and --seed");
        return random_pointset(field, a.size, a.seed);
    }
    static const std::pair<const char*, SetKind> aliases[] = {
        {"full", SetKind::full_plane},          {"affine", SetKind::affine_plane},
        {"conic", SetKind::conic_points},       {"hyperoval", SetKind::conic_plus_nucleus},
        {"internal", SetKind::internal_points}, {"external", SetKind::external_points},
        {"unital", SetKind::hermitian_unital},  {"disjoint_conics", SetKind::disjoint_conic_union},
    };
    std::optional<SetKind> kind = parse_set_kind(a.kind);
    for (const auto& [name, k] : aliases)
        if (a.kind == name) kind = k;
    if (!kind) throw InvalidInput("unknown kind '" + a.kind + "'");
    if (*kind == SetKind::conic_plus_nucleus) maximal_degree = 2;
    return generate(field, *kind, GenerateParams{a.t});
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    const FieldPtr field = field_from(a.q, a.modulus);
    std::optional<std::size_t> maximal_degree;
    const PointSet k = generate_from(a, field, maximal_degree);
    if (maximal_degree) io::validate_maximal_arc(k, *maximal_degree);
    if (a.out.empty()) io::write_pointset(out, k);
    else io::save_pointset(a.out, k);
    if (a.json) {
        json j = run_report("gen", *field, start);
        j["inputs"] = {{"kind", a.kind}, {"q", a.q}};
        if (a.kind == "random") j["inputs"]["seed"] = a.seed;
        j["outputs"] = {{"path", a.out}, {"size", k.size()}};
        if (maximal_degree) j["outputs"]["maximal_arc_degree"] = *maximal_degree;
        out << j.dump(2) << "\n";
    } else if (!a.out.empty()) {
        out << "wrote " << a.out << ": " << k.size() << " points\n";
    }
    return kExitOk;
}

struct MindegArgs {
    std::string in, cert_out;
    unsigned max_degree = 0;
    std::size_t maximal_arc = 0;
    bool json = false;
};

int cmd_mindeg(const MindegArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    const PointSet k = io::load_pointset(a.in, load_options(a.maximal_arc));
    MinDegreeOptions opts;
    if (a.max_degree) opts.max_degree = a.max_degree;
    const CurveCertificate cert = min_degree(k, opts);
    if (!a.cert_out.empty()) io::save_certificate(a.cert_out, cert.form);
    if (a.json) {
        const LineSpectrum s = spectrum(k);
        json j = run_report("mindeg", k.field(), start);
        j["inputs"] = {{"path", a.in}};
        j["q"] = k.q();
        j["size"] = k.size();
        j["t"] = k.t();
        j["alpha"] = k.alpha();
        j["m0"] = s.m0;
        j["M0"] = s.M0;
        j["degree"] = cert.degree;
        j["kernel_dim"] = cert.kernel_dim;
        j["checked"] = cert.checked;
        if (!a.cert_out.empty()) j["outputs"] = {{"certificate", a.cert_out}};
        j["wall_time_ms"] = elapsed_ms(start);
        out << j.dump(2) << "\n";
    } else {
        out << "degree " << cert.degree << " (kernel dimension " << cert.kernel_dim << ")\n";
        if (a.cert_out.empty()) io::write_certificate(out, cert.form);
    }
    return kExitOk;
}

struct BoundsArgs {
    std::string in, cert;
    std::size_t maximal_arc = 0;
    bool json = false;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    const PointSet k = io::load_pointset(a.in, load_options(a.maximal_arc));
    auto certificate = [&]() -> CurveCertificate {
        if (a.cert.empty()) return min_degree(k);
        const HomogeneousForm form = io::load_certificate(a.cert);
        if (!(form.field() == k.field())) throw InvalidInput("certificate and point set use different fields");
        return {form.degree(), form.normalized(), vanishing_dimension(k, form.degree()), false};
    };
    const BoundReport r = validate_bounds(k, certificate());
    if (a.json) {
        json j = json::parse(r.to_json());
        j["run"] = run_report("bounds", k.field(), start);
        out << j.dump(2) << "\n";
    } else {
        out << "q=" << r.params.q << " |K|=" << r.size << " t=" << r.params.t << " alpha=" << r.params.alpha
            << " m0=" << r.params.m0 << " M0=" << r.params.M0 << " degree=" << r.degree << "\n";
        for (const auto& e : r.entries)
            out << "  " << e.name << ": " << (e.holds ? "holds" : "fails") << ", implies d >= " << e.implied_bound
                << (e.informational ? " [informational]" : "") << (e.violated ? " VIOLATED" : "") << " (" << e.detail << ")\n";
        out << r.verdict() << "\n";
    }
    return r.consistent ? kExitOk : kExitInconsistent;
}

struct ConstructArgs {
    std::string q, modulus, pair, eps, out;
    bool json = false;
};

void emit_forms(const std::vector<HomogeneousForm>& forms, const std::string& path, std::ostream& out) {
    std::ostringstream os;
    for (const auto& g : forms) io::write_certificate(os, g);
    if (path.empty()) out << os.str();
    else io::write_file_atomic(path, os.str());
}

int cmd_third_conic(const ConstructArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    const FieldPtr field = field_from(a.q, a.modulus);
    const Field& f = *field;
    const auto e = parse_elements(f, a.pair, 6, "--pair");
    const NormalizedConicPair pair{e[0], e[1], e[2], e[3], e[4], e[5]};
    const Conic c3 = third_conic(field, pair);
    emit_forms({c3.form()}, a.out, out);
    if (a.json) {
        json j = run_report("construct third-conic", f, start);
        const Matrix3 h = normalizing_collineation(f, pair);
        json hj = json::array();
        for (const auto& row : h) hj.push_back({row[0].value, row[1].value, row[2].value});
        j["third_conic"] = c3.form().to_string();
        j["nu"] = nu_invariant(f, pair).value;
        j["collineation"] = hj;
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_witness(const ConstructArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    const FieldPtr field = field_from(a.q, a.modulus);
    const Field& f = *field;
    const auto e = parse_elements(f, a.pair, 6, "--pair");
    const SharedPointConicPair pair{e[0], e[1], e[2], e[3], e[4], e[5]};
    const ThreeSecantWitness w = three_secant_witness(field, pair, f.parse_element(a.eps));
    emit_forms({HomogeneousForm::linear(field, w.line)}, a.out, out);
    if (a.json) {
        const Plane plane(field);
        json j = run_report("construct witness", f, start);
        j["m"] = w.m.value;
        j["t"] = w.t.value;
        j["p1"] = plane.format(w.p1);
        j["p2"] = plane.format(w.p2);
        j["line"] = plane.format(w.line);
        j["hits"] = w.hits;
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string in, cert;
    std::size_t maximal_arc = 0;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    const PointSet k = io::load_pointset(a.in, load_options(a.maximal_arc));
    const HomogeneousForm form = io::load_certificate(a.cert);
    if (!(form.field() == k.field())) throw InvalidInput("certificate and point set use different fields");
    std::size_t misses = 0;
    std::string first_miss;
    for (const auto& p : k) {
        if (form.vanishes_at(p)) continue;
        if (!misses++) first_miss = k.plane().format(p);
    }
    const bool pass = misses == 0 && !form.is_zero();
    if (a.json) {
        json j = run_report("verify", k.field(), start);
        j["inputs"] = {{"points", a.in}, {"certificate", a.cert}};
        j["degree"] = form.degree();
        j["misses"] = misses;
        j["result"] = pass ? "PASS" : "FAIL";
        out << j.dump(2) << "\n";
    } else if (pass) {
        out << "PASS: degree " << form.degree() << " form vanishes on all " << k.size() << " points\n";
    } else {
        out << "FAIL: form does not vanish at " << misses << " point(s), first " << first_miss << "\n";
    }
    return pass ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum-degree curves through point sets of PG(2,q)", "arccurve"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a point set");
    g->add_option("--kind", gen.kind,
                  "full, affine, conic, hyperoval, internal, external, unital, disjoint_conics, denniston, thas, random")
        ->required();
    g->add_option("--q", gen.q, "Field order q or p^k")->required();
    g->add_option("--modulus", gen.modulus, "Irreducible modulus, constant term first");
    g->add_option("--n", gen.n, "Denniston arc degree");
    g->add_option("--nu", gen.nu, "Denniston nu (absolute trace 1)");
    g->add_option("--t", gen.t, "Number of disjoint conics");
    g->add_option("--size", gen.size, "Random set size");
    auto* seed_opt = g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--spread-class", gen.spread, "Thas arcs: small_torus, large_torus or any");
    g->add_option("--ovoid", gen.ovoid, "Thas arcs: suzuki_tits or elliptic_quadric");
    g->add_option("-o,--output", gen.out, "Output file (stdout if omitted)");
    g->add_flag("--json", gen.json, "Print a JSON run report");

    MindegArgs md;
    auto* m = app.add_subcommand("mindeg", "Minimum degree of a curve through a point set");
    m->add_option("-i,--input", md.in, "Point-set file")->required();
    m->add_option("--max-degree", md.max_degree, "Stop the search at this degree");
    m->add_option("--emit-certificate", md.cert_out, "Write the certificate form here");
    m->add_option("--expect-maximal-arc", md.maximal_arc, "Reject input that is not a maximal arc of this degree");
    m->add_flag("--json", md.json, "JSON report");

    BoundsArgs bd;
    auto* b = app.add_subcommand("bounds", "Evaluate the lower bounds against a certificate");
    b->add_option("-i,--input", bd.in, "Point-set file")->required();
    b->add_option("--cert", bd.cert, "Certificate file (computed if omitted)");
    b->add_option("--expect-maximal-arc", bd.maximal_arc, "Reject input that is not a maximal arc of this degree");
    b->add_flag("--json", bd.json, "JSON report");

    ConstructArgs tc, wt;
    auto* c = app.add_subcommand("construct", "Conic-pair constructions over GF(2^h)");
    c->require_subcommand(1);
    auto* c3 = c->add_subcommand("third-conic", "Conic completing a disjoint pair to a degree-4 maximal arc");
    c3->add_option("--q", tc.q, "Field order")->required();
    c3->add_option("--modulus", tc.modulus, "Irreducible modulus");
    c3->add_option("--pair", tc.pair, "alpha1,beta1,lambda1,alpha2,beta2,lambda2")->required();
    c3->add_option("-o,--output", tc.out, "Output file");
    c3->add_flag("--json", tc.json, "Also print nu and the normalizing collineation");
    auto* cw = c->add_subcommand("witness", "Three-secant line through (0,eps,1)");
    cw->add_option("--q", wt.q, "Field order")->required();
    cw->add_option("--modulus", wt.modulus, "Irreducible modulus");
    cw->add_option("--pair", wt.pair, "alpha1,beta1,lambda1,alpha2,beta2,lambda2")->required();
    cw->add_option("--eps", wt.eps, "Point (0,eps,1) on the Y axis")->required();
    cw->add_option("-o,--output", wt.out, "Output file");
    cw->add_flag("--json", wt.json, "Also print the witness points");

    VerifyArgs vf;
    auto* v = app.add_subcommand("verify", "Check a certificate against a point set");
    v->add_option("-i,--input", vf.in, "Point-set file")->required();
    v->add_option("--cert", vf.cert, "Certificate file")->required();
    v->add_option("--expect-maximal-arc", vf.maximal_arc, "Reject input that is not a maximal arc of this degree");
    v->add_flag("--json", vf.json, "JSON report");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (g->parsed()) {
            if (gen.kind == "random" && seed_opt->count() == 0) throw InvalidInput("random sets need an explicit --seed");
            return cmd_gen(gen, out);
        }
        if (m->parsed()) return cmd_mindeg(md, out);
        if (b->parsed()) return cmd_bounds(bd, out);
        if (c3->parsed()) return cmd_third_conic(tc, out);
        if (cw->parsed()) return cmd_witness(wt, out);
        if (v->parsed()) return cmd_verify(vf, out);
    } catch (const InconsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace arccurve
