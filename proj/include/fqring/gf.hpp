#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fqring/errors.hpp"

namespace fqring {

class FieldElement;

namespace detail {
struct FieldData;
}

/// Largest supported field order. Everything downstream enumerates over
/// field elements or points, so large fields are rejected at construction.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

/// Largest supported extension degree; irreducibility is checked by
/// exhaustive factor search, which is only sensible for small k.
inline constexpr std::uint32_t kMaxExtensionDegree = 8;

/// Description of F_q, q = p^k: the prime p, the degree k and a monic
/// irreducible modulus polynomial of degree k over F_p (coefficients stored
/// low degree first, so modulus[k] == 1). For k == 1 the modulus is t.
///
/// FieldSpec values are interned: two specs with the same (p, k, modulus)
/// share one immutable backing object, so copies are cheap, comparison is a
/// pointer check and FieldElements can hold plain pointers. Interned data
/// lives for the whole process.
class FieldSpec {
public:
    /// GF(p), p prime.
    static FieldSpec prime_field(std::uint32_t p);

    /// GF(p^k) with an explicit modulus, coefficients low degree first
    /// (length k+1, reduced mod p, must be monic and irreducible).
    static FieldSpec with_modulus(std::uint32_t p, std::uint32_t k,
                                  std::vector<std::uint32_t> modulus);

    /// GF(p^k) with the built-in default modulus (available for k == 1 and
    /// for p^k <= 64: the lexicographically smallest monic irreducible,
    /// coefficients compared low degree first).
    static FieldSpec with_default_modulus(std::uint32_t p, std::uint32_t k);

    /// GF(q) for a prime power q, using the default modulus.
    static FieldSpec from_order(std::uint64_t q);

    /// True if a default modulus table entry exists for (p, k).
    static bool has_default_modulus(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const;
    std::uint32_t k() const;
    std::uint32_t q() const;
    const std::vector<std::uint32_t>& modulus() const;
    bool modulus_is_default() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of t; requires k >= 2.
    FieldElement generator() const;
    /// Integer embedded into the prime subfield (value mod p).
    FieldElement from_int(std::int64_t v) const;
    /// Element with the given enumeration index in [0, q): the index's
    /// base-p digits are the coefficients, constant term first.
    FieldElement element(std::uint32_t index) const;
    /// Element from coefficients (low degree first, reduced mod p;
    /// at most k of them).
    FieldElement from_coeffs(std::span<const std::int64_t> coeffs) const;

    /// All q elements, each exactly once, in coefficient-lexicographic
    /// order with the constant term varying fastest (= index order).
    std::vector<FieldElement> enumerate() const;

    /// Canonical text form: "GF(2)", "GF(4; modulus=t^2+t+1)".
    const std::string& descriptor() const;

    bool operator==(const FieldSpec& other) const { return data_ == other.data_; }
    bool operator!=(const FieldSpec& other) const { return data_ != other.data_; }

    const detail::FieldData* data() const { return data_; }

private:
    explicit FieldSpec(const detail::FieldData* data) : data_(data) {}
    const detail::FieldData* data_;

    friend class FieldElement;
};

/// Immutable element of a FieldSpec. Internally an enumeration index in
/// [0, q) whose base-p digits are the coefficient vector.
class FieldElement {
public:
    FieldElement() : data_(nullptr), idx_(0) {}

    FieldSpec spec() const;
    std::uint32_t index() const { return idx_; }
    bool is_zero() const { return idx_ == 0; }

    /// Coefficient of t^i, i < k.
    std::uint32_t coeff(std::uint32_t i) const;
    std::vector<std::uint32_t> coeffs() const;

    bool operator==(const FieldElement& other) const {
        return data_ == other.data_ && idx_ == other.idx_;
    }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    friend FieldElement add(const FieldElement& a, const FieldElement& b);
    friend FieldElement sub(const FieldElement& a, const FieldElement& b);
    friend FieldElement mul(const FieldElement& a, const FieldElement& b);
    friend FieldElement neg(const FieldElement& a);
    /// Multiplicative inverse, computed as a^(q-2). Throws on zero.
    friend FieldElement inv(const FieldElement& a);
    /// Repeated squaring; 0^0 == 1 by convention.
    friend FieldElement pow(const FieldElement& a, std::uint64_t e);

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
    friend FieldElement operator-(const FieldElement& a) { return neg(a); }

private:
    FieldElement(const detail::FieldData* data, std::uint32_t idx)
        : data_(data), idx_(idx) {}

    const detail::FieldData* data_;
    std::uint32_t idx_;

    friend class FieldSpec;
    friend struct detail::FieldData;
};

/// Free-function spelling of FieldSpec::enumerate.
std::vector<FieldElement> enumerate(const FieldSpec& spec);

/// Renders an element as an integer literal (prime subfield) or a
/// polynomial-in-t literal such as "t+1" or "2*t^2+1".
std::string to_string(const FieldElement& a);

} // namespace fqring
