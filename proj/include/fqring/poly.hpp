#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fqring/errors.hpp"
#include "fqring/gf.hpp"

namespace fqring {

/// Exponent cap per variable. Keeps degrees within what repeated squaring
/// and the certificate constructions ever produce.
inline constexpr std::uint32_t kMaxExponent = 1u << 20;

/// Exponent vector, one entry per variable. All monomials inside one
/// Polynomial have exactly nvars entries.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: lower total degree first, ties broken by the
/// first differing exponent (x0 weighs heaviest). Shorter vectors compare as
/// if zero padded.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over a fixed FieldSpec with a fixed number
/// of variables. Terms with zero coefficient are never stored, so the term
/// map is a canonical form and operator== is structural equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, FieldElement, GrlexLess>;

    /// The zero polynomial.
    Polynomial(FieldSpec spec, std::size_t nvars);

    static Polynomial zero(FieldSpec spec, std::size_t nvars);
    static Polynomial constant(FieldSpec spec, std::size_t nvars, FieldElement c);
    static Polynomial one(FieldSpec spec, std::size_t nvars);
    /// The monomial x_i.
    static Polynomial variable(FieldSpec spec, std::size_t nvars, std::size_t i);

    FieldSpec spec() const { return spec_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t total_degree() const;
    /// Largest exponent of x_i across terms; -1 for the zero polynomial.
    std::int64_t degree_in(std::size_t i) const;
    /// Coefficient of the given monomial (zero when absent).
    FieldElement coefficient(const Monomial& m) const;
    FieldElement constant_term() const;
    /// True if the polynomial is a constant (including zero).
    bool is_constant() const;

    /// Adds c * x^m into this polynomial, merging with an existing term and
    /// erasing it if the sum cancels. m must have nvars entries, each below
    /// the exponent cap.
    Polynomial& add_term(Monomial m, FieldElement c);

    /// Value at a point with one coordinate per variable.
    FieldElement evaluate(std::span<const FieldElement> point) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const FieldElement& c, const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const FieldElement& c);

private:
    void check_compatible(const Polynomial& other) const;

    FieldSpec spec_;
    std::size_t nvars_;
    TermMap terms_;
};

/// Repeated squaring; f^0 == 1 for every f including zero.
Polynomial pow(const Polynomial& f, std::uint64_t e);

/// Same values on every point of F_q^n, exponents shrunk: each exponent
/// e >= 1 becomes ((e - 1) mod (q - 1)) + 1. Keeping exponents positive
/// (never collapsing to 0) preserves values at coordinates equal to zero.
Polynomial reduce_exponents(const Polynomial& f);

/// Reinterprets f in a ring with more variables (new ones unused).
Polynomial extend_vars(const Polynomial& f, std::size_t new_nvars);

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division for single-variable polynomials: a == q*b + r with
/// deg r < deg b. Throws DivisionByZeroError when b is zero and DomainError
/// when either input has more than one variable.
DivModResult univariate_divmod(const Polynomial& a, const Polynomial& b);

struct ExtGcdResult {
    Polynomial g;
    Polynomial u;
    Polynomial v;
};

/// Extended Euclid for single-variable polynomials: u*a + v*b == g with g
/// the monic gcd (zero when both inputs are zero).
ExtGcdResult univariate_ext_gcd(const Polynomial& a, const Polynomial& b);

} // namespace fqring
