#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arccurve {

// An element of GF(p^k) in the polynomial basis 1, x, ..., x^(k-1).
// `value` packs the coordinate vector little-endian in base p, so for p = 2
// it is the usual bitmask and for k = 1 it is the residue itself.
struct FieldElement {
    std::uint32_t value = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    constexpr auto operator<=>(const FieldElement&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^k) with a fixed monic irreducible modulus. Immutable once built, so a
// single instance can be shared freely between threads.
//
// Multiplication goes through log/exp tables built at construction; the
// shift-and-reduce product `mul_reference` is kept as the definition the
// tables are derived from and checked against.
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    // Built-in modulus for (p, k); see `default_modulus`.
    static FieldPtr make(std::uint32_t p, unsigned k);
    // Explicit modulus, coefficients over GF(p) with the constant term first.
    static FieldPtr make(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);
    // "q" or "p^k", optionally with a comma-separated modulus override.
    static FieldPtr parse(std::string_view spec, std::optional<std::string_view> modulus_csv = {});

    // Table entries for GF(4..128) and GF(9); otherwise the smallest monic
    // irreducible of degree k in base-p order of its lower coefficients.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k);
    static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool is_prime_field() const { return k_ == 1; }
    bool has_default_modulus() const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }
    // Image of an integer in the prime subfield.
    FieldElement from_int(long long n) const;
    // Element with the given packed value; throws if value >= q.
    FieldElement element(std::uint32_t value) const;
    std::vector<FieldElement> elements() const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.is_zero() || b.is_zero()) return FieldElement{};
        return FieldElement{exp_[log_[a.value] + log_[b.value]]};
    }
    FieldElement mul_reference(FieldElement a, FieldElement b) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    FieldElement square(FieldElement a) const { return mul(a, a); }
    FieldElement frobenius(FieldElement a) const { return pow(a, p_); }

    // Relative trace to GF(p^m), m | k. The result is an element of the
    // subfield embedded in this field.
    FieldElement trace(FieldElement a, unsigned m) const;
    FieldElement trace_absolute(FieldElement a) const { return trace(a, 1); }
    bool in_subfield(FieldElement a, unsigned m) const;

    // Characteristic 2 only: the unique square root a^(q/2).
    FieldElement sqrt_char2(FieldElement a) const;
    // Characteristic 2 only: all z with z^2 + z = c (zero or two roots).
    std::vector<FieldElement> solve_artin_schreier(FieldElement c) const;
    // Odd q only: Euler's criterion.
    bool is_square(FieldElement a) const;

    // Log/exp access for the elimination kernel. log of zero is unspecified.
    std::uint32_t log(FieldElement a) const { return log_[a.value]; }
    FieldElement exp(std::uint32_t e) const { return FieldElement{exp_[e % (q_ - 1)]}; }
    // exp(la + lb) for two logs, without the modular reduction.
    FieldElement exp_sum(std::uint32_t la, std::uint32_t lb) const { return FieldElement{exp_[la + lb]}; }
    FieldElement primitive_element() const { return primitive_; }

    std::string format(FieldElement a) const;
    FieldElement parse_element(std::string_view text) const;
    // "q" when the modulus is the default, "p^k" otherwise (modulus printed
    // separately by `modulus_string`).
    std::string spec_string() const;
    std::string modulus_string() const;

private:
    Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_;  // p^i, i = 0..k
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1) so sums of logs need no reduction
    FieldElement primitive_;
};

}  // namespace arccurve
