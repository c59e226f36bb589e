#pragma once

// Brute-force reference implementations. They share only FieldElement and
// the field's add/mul with the library, and nothing else.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "arccurve/gf.hpp"
#include "arccurve/pg2.hpp"

namespace oracle {

using arccurve::Field;
using arccurve::FieldElement;
using arccurve::Triple;

// Schoolbook product of coefficient vectors followed by long division by the
// (monic) modulus.
inline std::uint32_t mul(const Field& f, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = f.characteristic();
    const unsigned k = f.degree();
    std::vector<std::uint64_t> x(k), y(k), prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i, a /= p, b /= p) x[i] = a % p, y[i] = b % p;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    const auto& m = f.modulus();
    for (unsigned top = 2 * k - 1; top >= k; --top) {
        const std::uint64_t c = prod[top];
        if (c == 0) continue;
        for (unsigned i = 0; i <= k; ++i) prod[top - k + i] = (prod[top - k + i] + (p - c) * m[i]) % p;
    }
    std::uint32_t out = 0;
    for (unsigned i = k; i-- > 0;) out = out * p + static_cast<std::uint32_t>(prod[i]);
    return out;
}

// All points of PG(2,q) as triples whose last nonzero coordinate is 1.
inline std::vector<Triple> points(const Field& f) {
    std::vector<Triple> out;
    const std::uint32_t q = f.order();
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y)
            for (std::uint32_t z = 0; z < q; ++z) {
                const std::uint32_t c[3] = {x, y, z};
                int last = -1;
                for (int i = 0; i < 3; ++i)
                    if (c[i]) last = i;
                if (last >= 0 && c[last] == 1) out.push_back({FieldElement{x}, FieldElement{y}, FieldElement{z}});
            }
    return out;
}

inline FieldElement dot(const Field& f, const Triple& a, const Triple& b) {
    FieldElement s = f.zero();
    for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

inline std::size_t line_hits(const Field& f, const std::vector<Triple>& k, const Triple& line) {
    std::size_t n = 0;
    for (const auto& p : k) n += dot(f, p, line).is_zero();
    return n;
}

// Degree-d exponents with X > Y > Z, highest X power first.
inline std::vector<std::array<unsigned, 3>> exponents(unsigned d) {
    std::vector<std::array<unsigned, 3>> out;
    for (unsigned x = d + 1; x-- > 0;)
        for (unsigned y = d - x + 1; y-- > 0;) out.push_back({x, y, d - x - y});
    return out;
}

inline FieldElement power(const Field& f, FieldElement a, unsigned e) {
    FieldElement r = f.one();
    while (e--) r = f.mul(r, a);
    return r;
}

inline FieldElement eval(const Field& f, unsigned d, const std::vector<FieldElement>& coeffs, const Triple& p) {
    const auto ex = exponents(d);
    FieldElement s = f.zero();
    for (std::size_t i = 0; i < ex.size(); ++i)
        s = f.add(s, f.mul(coeffs[i], f.mul(f.mul(power(f, p[0], ex[i][0]), power(f, p[1], ex[i][1])), power(f, p[2], ex[i][2]))));
    return s;
}

// Calls visit(coeffs) for every coefficient vector of degree-d forms.
template <class Visit>
void for_each_form(const Field& f, unsigned d, Visit&& visit) {
    const std::size_t n = exponents(d).size();
    std::vector<FieldElement> c(n, f.zero());
    for (;;) {
        if (!visit(c)) return;
        std::size_t i = 0;
        while (i < n && c[i].value + 1 == f.order()) c[i++] = f.zero();
        if (i == n) return;
        c[i] = FieldElement{c[i].value + 1};
    }
}

inline bool vanishes(const Field& f, unsigned d, const std::vector<FieldElement>& c, const std::vector<Triple>& k) {
    for (const auto& p : k)
        if (!eval(f, d, c, p).is_zero()) return false;
    return true;
}

// log_q of the number of degree-d forms vanishing on K.
inline std::size_t kernel_dim(const Field& f, unsigned d, const std::vector<Triple>& k) {
    std::size_t count = 0;
    for_each_form(f, d, [&](const std::vector<FieldElement>& c) {
        count += vanishes(f, d, c, k);
        return true;
    });
    std::size_t dim = 0;
    for (std::size_t c = count; c > 1; c /= f.order()) ++dim;
    return dim;
}

// Smallest d <= max_d admitting a nonzero vanishing form, by enumeration.
inline std::optional<unsigned> min_degree(const Field& f, const std::vector<Triple>& k, unsigned max_d) {
    for (unsigned d = 1; d <= max_d; ++d) {
        bool found = false;
        for_each_form(f, d, [&](const std::vector<FieldElement>& c) {
            bool zero = true;
            for (auto x : c) zero = zero && x.is_zero();
            if (!zero && vanishes(f, d, c, k)) found = true;
            return !found;
        });
        if (found) return d;
    }
    return std::nullopt;
}

}  // namespace oracle
