#include "fqring/poly.hpp"

#include <algorithm>

namespace fqring {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t ea = i < a.size() ? a[i] : 0;
        const std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Polynomial::Polynomial(FieldSpec spec, std::size_t nvars)
    : spec_(spec), nvars_(nvars) {}

Polynomial Polynomial::zero(FieldSpec spec, std::size_t nvars) {
    return Polynomial(spec, nvars);
}

Polynomial Polynomial::constant(FieldSpec spec, std::size_t nvars,
                                FieldElement c) {
    Polynomial f(spec, nvars);
    f.add_term(Monomial(nvars, 0), c);
    return f;
}

Polynomial Polynomial::one(FieldSpec spec, std::size_t nvars) {
    return constant(spec, nvars, spec.one());
}

Polynomial Polynomial::variable(FieldSpec spec, std::size_t nvars,
                                std::size_t i) {
    if (i >= nvars) {
        throw DomainError("variable index " + std::to_string(i) +
                          " out of range for " + std::to_string(nvars) +
                          " variables");
    }
    Monomial m(nvars, 0);
    m[i] = 1;
    Polynomial f(spec, nvars);
    f.add_term(std::move(m), spec.one());
    return f;
}

std::int64_t Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    std::uint64_t d = 0;
    for (auto e : terms_.rbegin()->first) d += e;
    return static_cast<std::int64_t>(d);
}

std::int64_t Polynomial::degree_in(std::size_t i) const {
    if (i >= nvars_) {
        throw DomainError("variable index out of range");
    }
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max<std::int64_t>(d, m[i]);
    }
    return d;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? spec_.zero() : it->second;
}

FieldElement Polynomial::constant_term() const {
    return coefficient(Monomial(nvars_, 0));
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree() == 0);
}

Polynomial& Polynomial::add_term(Monomial m, FieldElement c) {
    if (m.size() != nvars_) {
        throw DomainError("monomial has " + std::to_string(m.size()) +
                          " exponents, expected " + std::to_string(nvars_));
    }
    for (auto e : m) {
        if (e > kMaxExponent) {
            throw CapacityError("exponent " + std::to_string(e) +
                                " exceeds the cap of 2^20");
        }
    }
    if (c.spec() != spec_) {
        throw SpecMismatchError("coefficient from " + c.spec().descriptor() +
                                " in a polynomial over " + spec_.descriptor());
    }
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != nvars_) {
        throw DomainError("point has " + std::to_string(point.size()) +
                          " coordinates, expected " + std::to_string(nvars_));
    }
    for (const auto& x : point) {
        if (x.spec() != spec_) {
            throw SpecMismatchError("point coordinate from a different field");
        }
    }
    FieldElement acc = spec_.zero();
    for (const auto& [m, c] : terms_) {
        FieldElement term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] != 0) term = term * pow(point[i], m[i]);
        }
        acc = acc + term;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return spec_ == other.spec_ && nvars_ == other.nvars_ &&
           terms_ == other.terms_;
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (spec_ != other.spec_) {
        throw SpecMismatchError("polynomials over different fields (" +
                                spec_.descriptor() + " vs " +
                                other.spec_.descriptor() + ")");
    }
    if (nvars_ != other.nvars_) {
        throw SpecMismatchError(
            "polynomials with different variable counts (" +
            std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) +
            ")");
    }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, neg(c));
    return r;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.spec_, a.nvars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, neg(c));
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.spec_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (std::size_t i = 0; i < a.nvars_; ++i) {
                const std::uint64_t e =
                    static_cast<std::uint64_t>(ma[i]) + mb[i];
                if (e > kMaxExponent) {
                    throw CapacityError(
                        "product exponent exceeds the cap of 2^20");
                }
                m[i] = static_cast<std::uint32_t>(e);
            }
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const FieldElement& c, const Polynomial& a) {
    Polynomial r(a.spec_, a.nvars_);
    for (const auto& [m, t] : a.terms_) r.add_term(m, c * t);
    return r;
}

Polynomial operator*(const Polynomial& a, const FieldElement& c) {
    return c * a;
}

Polynomial pow(const Polynomial& f, std::uint64_t e) {
    Polynomial result = Polynomial::one(f.spec(), f.nvars());
    Polynomial base = f;
    while (e) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = base * base;
    }
    return result;
}

Polynomial reduce_exponents(const Polynomial& f) {
    const std::uint32_t q = f.spec().q();
    Polynomial r(f.spec(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        Monomial rm(m);
        for (auto& e : rm) {
            if (e >= 1) e = (e - 1) % (q - 1) + 1;
        }
        r.add_term(std::move(rm), c);
    }
    return r;
}

Polynomial extend_vars(const Polynomial& f, std::size_t new_nvars) {
    if (new_nvars < f.nvars()) {
        throw DomainError("cannot shrink the variable count");
    }
    Polynomial r(f.spec(), new_nvars);
    for (const auto& [m, c] : f.terms()) {
        Monomial rm(m);
        rm.resize(new_nvars, 0);
        r.add_term(std::move(rm), c);
    }
    return r;
}

namespace {

void require_univariate(const Polynomial& f, const char* what) {
    if (f.nvars() != 1) {
        throw DomainError(std::string(what) +
                          " requires single-variable polynomials");
    }
}

FieldElement leading_coeff_1v(const Polynomial& f) {
    return f.terms().rbegin()->second;
}

} // namespace

DivModResult univariate_divmod(const Polynomial& a, const Polynomial& b) {
    require_univariate(a, "division");
    require_univariate(b, "division");
    if (a.spec() != b.spec()) {
        throw SpecMismatchError("division across different fields");
    }
    if (b.is_zero()) {
        throw DivisionByZeroError("polynomial division by zero");
    }
    const FieldSpec K = a.spec();
    Polynomial q(K, 1);
    Polynomial r = a;
    const std::int64_t db = b.total_degree();
    const FieldElement lb_inv = inv(leading_coeff_1v(b));
    while (!r.is_zero() && r.total_degree() >= db) {
        const std::int64_t dr = r.total_degree();
        const FieldElement factor = leading_coeff_1v(r) * lb_inv;
        Monomial shift{static_cast<std::uint32_t>(dr - db)};
        Polynomial t(K, 1);
        t.add_term(shift, factor);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

ExtGcdResult univariate_ext_gcd(const Polynomial& a, const Polynomial& b) {
    require_univariate(a, "gcd");
    require_univariate(b, "gcd");
    const FieldSpec K = a.spec();
    // Invariants: u0*a + v0*b == r0 and u1*a + v1*b == r1.
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial::one(K, 1), u1 = Polynomial::zero(K, 1);
    Polynomial v0 = Polynomial::zero(K, 1), v1 = Polynomial::one(K, 1);
    while (!r1.is_zero()) {
        auto [q, rem] = univariate_divmod(r0, r1);
        Polynomial u2 = u0 - q * u1;
        Polynomial v2 = v0 - q * v1;
        r0 = r1; r1 = rem;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero()) {
        const FieldElement norm = inv(leading_coeff_1v(r0));
        r0 = norm * r0;
        u0 = norm * u0;
        v0 = norm * v0;
    }
    return {r0, u0, v0};
}

} // namespace fqring
