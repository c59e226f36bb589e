#include "arccurve/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

#include "arccurve/error.hpp"

namespace arccurve {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over GF(p), constant first

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = f * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InvalidInput(std::string("cannot parse ") + what + " '" + std::string(s) + "'");
    return v;
}

}  // namespace

Poly Field::default_modulus(std::uint32_t p, unsigned k) {
    static const std::map<std::pair<std::uint32_t, unsigned>, Poly> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{3, 2}, {2, 1, 1}},
    };
    if (k == 1) return {0, 1};
    if (auto it = table.find({p, k}); it != table.end()) return it->second;

    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly poly(k + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i, c /= p) poly[i] = static_cast<std::uint32_t>(c % p);
        poly[k] = 1;
        if (is_irreducible(p, poly)) return poly;
    }
    throw InconsistencyError("no irreducible polynomial found");
}

// Trial division by every monic polynomial of degree 1..deg/2. The root test
// is the degree-1 case.
bool Field::is_irreducible(std::uint32_t p, const Poly& poly_in) {
    Poly poly = poly_in;
    trim(poly);
    if (poly.size() < 2) return false;
    const std::size_t deg = poly.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i, c /= p) div[i] = static_cast<std::uint32_t>(c % p);
            div[d] = 1;
            if (poly_mod(poly, div, p).empty()) return false;
        }
    }
    return true;
}

FieldPtr Field::make(std::uint32_t p, unsigned k) { return make(p, k, default_modulus(p, k)); }

FieldPtr Field::make(std::uint32_t p, unsigned k, Poly modulus) {
    return FieldPtr(new Field(p, k, std::move(modulus)));
}

FieldPtr Field::parse(std::string_view spec, std::optional<std::string_view> modulus_csv) {
    std::uint32_t p = 0;
    unsigned k = 0;
    if (auto caret = spec.find('^'); caret != std::string_view::npos) {
        p = parse_uint(spec.substr(0, caret), "characteristic");
        k = parse_uint(spec.substr(caret + 1), "extension degree");
    } else {
        const std::uint32_t q = parse_uint(spec, "field order");
        for (std::uint32_t d = 2; d <= q; ++d) {
            if (q % d == 0) {
                p = d;
                break;
            }
        }
        if (p == 0) throw InvalidInput("field order must be a prime power: " + std::string(spec));
        std::uint32_t r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) throw InvalidInput("field order must be a prime power: " + std::string(spec));
    }
    if (!modulus_csv) return make(p, k);

    Poly modulus;
    std::string_view rest = *modulus_csv;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        modulus.push_back(parse_uint(rest.substr(0, comma), "modulus coefficient"));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return make(p, k, std::move(modulus));
}

Field::Field(std::uint32_t p, unsigned k, Poly modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw InvalidInput("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw InvalidInput("field order exceeds the supported maximum " + std::to_string(kMaxOrder));
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus_.size() != k + 1) throw InvalidInput("modulus must have degree " + std::to_string(k));
    for (auto c : modulus_)
        if (c >= p) throw InvalidInput("modulus coefficient out of range for GF(" + std::to_string(p) + ")");
    if (modulus_.back() != 1) throw InvalidInput("modulus must be monic");
    if (!is_irreducible(p, modulus_)) throw InvalidInput("modulus is reducible over GF(" + std::to_string(p) + ")");

    pow_p_.resize(k + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * p;

    // Smallest element of full multiplicative order, then log/exp from it.
    const auto factors = prime_factors(q_ - 1);
    auto pow_ref = [&](FieldElement a, std::uint32_t e) {
        FieldElement r = one();
        for (; e; e >>= 1) {
            if (e & 1) r = mul_reference(r, a);
            a = mul_reference(a, a);
        }
        return r;
    };
    primitive_ = one();
    for (std::uint32_t g = 1; g < q_; ++g) {
        const FieldElement cand{g};
        bool generator = true;
        for (auto r : factors) {
            if (pow_ref(cand, (q_ - 1) / r) == one()) {
                generator = false;
                break;
            }
        }
        if (generator) {
            primitive_ = cand;
            break;
        }
    }
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    FieldElement x = one();
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = exp_[i + q_ - 1] = x.value;
        log_[x.value] = i;
        x = mul_reference(x, primitive_);
    }
}

bool Field::has_default_modulus() const { return modulus_ == default_modulus(p_, k_); }

FieldElement Field::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement Field::element(std::uint32_t value) const {
    if (value >= q_) throw InvalidInput("element " + std::to_string(value) + " out of range for GF(" + std::to_string(q_) + ")");
    return FieldElement{value};
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t v = 0; v < q_; ++v) out.emplace_back(v);
    return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (p_ == 2) return FieldElement{a.value ^ b.value};
    if (k_ == 1) return FieldElement{(a.value + b.value) % p_};
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        const std::uint32_t da = a.value / pow_p_[i] % p_;
        const std::uint32_t db = b.value / pow_p_[i] % p_;
        r += (da + db) % p_ * pow_p_[i];
    }
    return FieldElement{r};
}

FieldElement Field::neg(FieldElement a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return FieldElement{(p_ - a.value) % p_};
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        const std::uint32_t d = a.value / pow_p_[i] % p_;
        r += (p_ - d) % p_ * pow_p_[i];
    }
    return FieldElement{r};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul_reference(FieldElement a, FieldElement b) const {
    if (p_ == 2) {
        // Shift-and-reduce on bitmasks.
        std::uint32_t r = 0, x = a.value, y = b.value;
        std::uint32_t red = 0;
        for (unsigned i = 0; i < k_; ++i)
            if (modulus_[i]) red |= 1u << i;
        while (y) {
            if (y & 1) r ^= x;
            y >>= 1;
            x <<= 1;
            if (x & q_) x = (x ^ q_) ^ red;
        }
        return FieldElement{r};
    }
    if (k_ == 1) return FieldElement{static_cast<std::uint32_t>(std::uint64_t(a.value) * b.value % p_)};
    Poly pa(k_), pb(k_);
    for (unsigned i = 0; i < k_; ++i) {
        pa[i] = a.value / pow_p_[i] % p_;
        pb[i] = b.value / pow_p_[i] % p_;
    }
    Poly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(pa[i]) * pb[j]) % p_);
    const Poly rem = poly_mod(prod, modulus_, p_);
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < rem.size(); ++i) r += rem[i] * pow_p_[i];
    return FieldElement{r};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = one();
    for (; e; e >>= 1) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
    }
    return r;
}

FieldElement Field::inv(FieldElement a) const {
    if (a.is_zero()) throw DivisionByZero();
    return pow(a, q_ - 2);
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

bool Field::in_subfield(FieldElement a, unsigned m) const {
    if (m == 0 || k_ % m != 0) throw InvalidInput("GF(p^" + std::to_string(m) + ") is not a subfield of GF(" + std::to_string(q_) + ")");
    std::uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p_;
    return pow(a, pm) == a;
}

FieldElement Field::trace(FieldElement a, unsigned m) const {
    if (m == 0 || k_ % m != 0) throw InvalidInput("GF(p^" + std::to_string(m) + ") is not a subfield of GF(" + std::to_string(q_) + ")");
    std::uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p_;
    FieldElement sum = zero(), x = a;
    for (unsigned i = 0; i < k_ / m; ++i) {
        sum = add(sum, x);
        x = pow(x, pm);
    }
    return sum;
}

FieldElement Field::sqrt_char2(FieldElement a) const {
    if (p_ != 2) throw Unsupported("sqrt_char2 requires characteristic 2; use is_square for odd q");
    return pow(a, q_ / 2);
}

std::vector<FieldElement> Field::solve_artin_schreier(FieldElement c) const {
    if (p_ != 2) throw Unsupported("Artin-Schreier solving requires characteristic 2");
    if (!trace_absolute(c).is_zero()) return {};
    for (std::uint32_t v = 0; v < q_; ++v) {
        const FieldElement z{v};
        if (add(mul(z, z), z) == c) return {z, add(z, one())};
    }
    throw InconsistencyError("trace-zero Artin-Schreier equation without a root");
}

bool Field::is_square(FieldElement a) const {
    if (p_ == 2) throw Unsupported("every element of GF(2^h) is a square");
    if (a.is_zero()) return true;
    return pow(a, (q_ - 1) / 2) == one();
}

std::string Field::format(FieldElement a) const { return std::to_string(a.value); }

FieldElement Field::parse_element(std::string_view text) const {
    return element(parse_uint(text, "field element"));
}

std::string Field::spec_string() const {
    if (has_default_modulus()) return std::to_string(q_);
    return std::to_string(p_) + "^" + std::to_string(k_);
}

std::string Field::modulus_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    return os.str();
}

}  // namespace arccurve
