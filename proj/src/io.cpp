#include "arccurve/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <unistd.h>

#include "arccurve/error.hpp"

namespace arccurve::io {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + msg);
}

// Next line that is not blank or a comment; false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        line = trim(raw);
        if (!line.empty() && line[0] != '#') return true;
    }
    return false;
}

std::optional<std::string> take_key(const std::string& token, const std::string& key) {
    if (token.rfind(key + "=", 0) == 0) return token.substr(key.size() + 1);
    return std::nullopt;
}

std::string field_tokens(const Field& f) {
    std::string s = f.spec_string();
    if (!f.has_default_modulus()) s += " modulus=" + f.modulus_string();
    return s;
}

}  // namespace

PointSet read_pointset(std::istream& in, const LoadOptions& options) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no)) throw InvalidInput("empty point-set file");

    std::istringstream header(line);
    std::string token;
    std::optional<std::string> spec, modulus;
    std::optional<std::size_t> count;
    while (header >> token) {
        if (auto v = take_key(token, "q")) {
            spec = *v;
        } else if (auto v = take_key(token, "n")) {
            try {
                count = std::stoull(*v);
            } catch (const std::exception&) {
                parse_error(line_no, "bad point count '" + *v + "'");
            }
        } else if (auto v = take_key(token, "modulus")) {
            modulus = *v;
        } else {
            parse_error(line_no, "unexpected header token '" + token + "'");
        }
    }
    if (!spec || !count) parse_error(line_no, "header must be 'q=<spec> n=<count>'");

    FieldPtr field;
    try {
        field = modulus ? Field::parse(*spec, std::string_view(*modulus)) : Field::parse(*spec);
    } catch (const InvalidInput& e) {
        parse_error(line_no, e.what());
    }
    Plane plane(field);
    std::vector<ProjPoint> pts;
    std::vector<std::size_t> seen_on(plane.size(), 0);
    while (next_line(in, line, line_no)) {
        ProjPoint p;
        try {
            p = plane.parse_point(line);
        } catch (const InvalidInput& e) {
            parse_error(line_no, e.what());
        }
        const std::size_t idx = plane.index(p);
        if (seen_on[idx])
            parse_error(line_no, "duplicate point " + plane.format(p) + " (first seen on line " + std::to_string(seen_on[idx]) + ")");
        seen_on[idx] = line_no;
        pts.push_back(p);
    }
    if (pts.size() != *count)
        throw InvalidInput("header announces " + std::to_string(*count) + " points but file has " + std::to_string(pts.size()));
    PointSet k(field, std::move(pts));
    if (options.maximal_arc_degree) validate_maximal_arc(k, *options.maximal_arc_degree);
    return k;
}

PointSet load_pointset(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return read_pointset(in, options);
    } catch (const InvalidInput& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

void write_pointset(std::ostream& out, const PointSet& k) {
    out << "q=" << field_tokens(k.field()) << " n=" << k.size() << "\n";
    for (const auto& p : k) out << k.plane().format(p) << "\n";
}

void save_pointset(const std::filesystem::path& path, const PointSet& k) {
    std::ostringstream os;
    write_pointset(os, k);
    write_file_atomic(path, os.str());
}

void validate_maximal_arc(const PointSet& k, std::size_t n) {
    const std::size_t q = k.q();
    if (n < 1 || n > q + 1) throw InvalidInput("maximal arc degree must lie in 1..q+1");
    if (k.size() != (n - 1) * q + n)
        throw ValidationError("not a maximal arc of degree " + std::to_string(n) + ": size " + std::to_string(k.size()) +
                              " differs from (n-1)q+n = " + std::to_string((n - 1) * q + n));
    const Plane& plane = k.plane();
    for (const auto& l : plane.lines()) {
        std::size_t hits = 0;
        for (const auto& p : plane.line_points(l)) hits += k.contains(p);
        if (hits != 0 && hits != n)
            throw ValidationError("not a maximal arc of degree " + std::to_string(n) + ": line " + plane.format(l) +
                                  " meets the set in " + std::to_string(hits) + " points");
    }
}

HomogeneousForm read_certificate(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no)) throw InvalidInput("empty certificate file");
    std::istringstream header(line);
    std::string w_degree, w_over, spec, extra;
    unsigned degree = 0;
    if (!(header >> w_degree >> degree >> w_over >> spec) || w_degree != "degree" || w_over != "over")
        parse_error(line_no, "header must be 'degree <d> over <q>'");
    std::optional<std::string> modulus;
    while (header >> extra) {
        if (auto v = take_key(extra, "modulus")) modulus = *v;
        else parse_error(line_no, "unexpected header token '" + extra + "'");
    }
    FieldPtr field;
    try {
        field = modulus ? Field::parse(spec, std::string_view(*modulus)) : Field::parse(spec);
    } catch (const InvalidInput& e) {
        parse_error(line_no, e.what());
    }

    HomogeneousForm form(field, degree);
    std::vector<bool> seen(monomials::count(degree), false);
    while (next_line(in, line, line_no)) {
        unsigned i = 0, j = 0, k = 0;
        char c1 = 0, c2 = 0, colon = 0;
        std::string coeff;
        std::istringstream ls(line);
        if (!(ls >> i >> c1 >> j >> c2 >> k >> colon >> coeff) || c1 != ',' || c2 != ',' || colon != ':')
            parse_error(line_no, "term must read 'i,j,k: coeff'");
        if (i + j + k != degree) parse_error(line_no, "exponents do not sum to the degree");
        const std::size_t idx = monomials::index(degree, {i, j, k});
        if (seen[idx]) parse_error(line_no, "repeated monomial");
        seen[idx] = true;
        try {
            form.set_coeff({i, j, k}, field->parse_element(coeff));
        } catch (const InvalidInput& e) {
            parse_error(line_no, e.what());
        }
    }
    if (form.is_zero()) throw InvalidInput("certificate form is zero");
    return form;
}

HomogeneousForm load_certificate(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return read_certificate(in);
    } catch (const InvalidInput& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

void write_certificate(std::ostream& out, const HomogeneousForm& form) {
    out << "degree " << form.degree() << " over " << field_tokens(form.field()) << "\n";
    const auto& mons = monomials::list(form.degree());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        if (form.coeffs()[i].is_zero()) continue;
        out << mons[i].x << "," << mons[i].y << "," << mons[i].z << ": " << form.field().format(form.coeffs()[i]) << "\n";
    }
}

void save_certificate(const std::filesystem::path& path, const HomogeneousForm& form) {
    std::ostringstream os;
    write_certificate(os, form);
    write_file_atomic(path, os.str());
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw InvalidInput("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace arccurve::io
