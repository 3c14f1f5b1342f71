#include "fqring/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace fqring {
namespace detail {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

using Coeffs = std::vector<std::uint32_t>;

void strip(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m over F_p, m monic. Dense, low degree first.
Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    strip(a);
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint32_t s = static_cast<std::uint32_t>(lead * m[i] % p);
            a[shift + i] = (a[shift + i] + p - s) % p;
        }
        strip(a);
    }
    return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return r;
}

// Exhaustive irreducibility test: no monic factor of degree <= k/2.
bool is_irreducible(const Coeffs& m, std::uint32_t p) {
    const std::size_t k = m.size() - 1;
    if (k == 1) return true;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        Coeffs f(d + 1, 0);
        f[d] = 1;
        // Odometer over the d lower coefficients.
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            if (poly_mod(m, f, p).empty()) return false;
        }
    }
    return true;
}

std::string modulus_to_string(const Coeffs& m) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << m[i];
        } else {
            if (m[i] != 1) out << m[i] << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

} // namespace

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    Coeffs modulus;
    bool default_modulus = false;
    std::string descriptor;

    // Lookup tables for small fields; raw digit arithmetic otherwise.
    bool has_tables = false;
    std::vector<std::uint16_t> add_tab;
    std::vector<std::uint16_t> mul_tab;
    std::vector<std::uint16_t> neg_tab;
    std::vector<std::uint16_t> inv_tab;

    static constexpr std::uint32_t kTableLimit = 256;

    void decode(std::uint32_t idx, Coeffs& out) const {
        out.assign(k, 0);
        for (std::uint32_t i = 0; i < k && idx; ++i) {
            out[i] = idx % p;
            idx /= p;
        }
    }

    std::uint32_t encode(const Coeffs& c) const {
        std::uint32_t idx = 0;
        for (std::size_t i = std::min<std::size_t>(c.size(), k); i-- > 0;) {
            idx = idx * p + c[i];
        }
        return idx;
    }

    std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0, mult = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            r += (a % p + b % p) % p * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        return r;
    }

    std::uint32_t neg_raw(std::uint32_t a) const {
        std::uint32_t r = 0, mult = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            r += (p - a % p) % p * mult;
            a /= p;
            mult *= p;
        }
        return r;
    }

    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        Coeffs ca, cb;
        decode(a, ca);
        decode(b, cb);
        Coeffs prod = poly_mod(poly_mul(ca, cb, p), modulus, p);
        return encode(prod);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return has_tables ? add_tab[a * q + b] : add_raw(a, b);
    }
    std::uint32_t negate(std::uint32_t a) const {
        return has_tables ? neg_tab[a] : neg_raw(a);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return has_tables ? mul_tab[a * q + b] : mul_raw(a, b);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t result = 1; // 0^0 == 1
        std::uint32_t base = a;
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    std::uint32_t invert(std::uint32_t a) const {
        if (has_tables) return inv_tab[a];
        return pow(a, q - 2);
    }

    void build_tables() {
        if (q > kTableLimit) return;
        add_tab.resize(static_cast<std::size_t>(q) * q);
        mul_tab.resize(static_cast<std::size_t>(q) * q);
        neg_tab.resize(q);
        inv_tab.resize(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            neg_tab[a] = static_cast<std::uint16_t>(neg_raw(a));
            for (std::uint32_t b = 0; b < q; ++b) {
                add_tab[a * q + b] = static_cast<std::uint16_t>(add_raw(a, b));
                mul_tab[a * q + b] = static_cast<std::uint16_t>(mul_raw(a, b));
            }
        }
        has_tables = true;
        inv_tab[0] = 0;
        for (std::uint32_t a = 1; a < q; ++a) {
            inv_tab[a] = static_cast<std::uint16_t>(pow(a, q - 2));
        }
    }
};

namespace {

// Lexicographically smallest (coefficients compared low degree first) monic
// irreducible of degree k over F_p.
Coeffs search_default_modulus(std::uint32_t p, std::uint32_t k) {
    Coeffs m(k + 1, 0);
    m[k] = 1;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    // code's most significant digit is the constant term, so plain counting
    // enumerates candidates in the documented order.
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = k; i-- > 0;) {
            m[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (is_irreducible(m, p)) return m;
    }
    throw DomainError("no irreducible polynomial found (internal)");
}

struct Registry {
    std::mutex mu;
    std::map<std::tuple<std::uint32_t, std::uint32_t, Coeffs>,
             std::unique_ptr<FieldData>>
        fields;
};

Registry& registry() {
    static Registry* r = new Registry();
    return *r;
}

const FieldData* intern(std::uint32_t p, std::uint32_t k, Coeffs modulus,
                        bool is_default) {
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_tuple(p, k, modulus);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second.get();

    auto data = std::make_unique<FieldData>();
    data->p = p;
    data->k = k;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    data->q = static_cast<std::uint32_t>(q);
    data->modulus = modulus;
    data->default_modulus = is_default;
    if (k == 1) {
        data->descriptor = "GF(" + std::to_string(p) + ")";
    } else {
        data->descriptor = "GF(" + std::to_string(q) +
                           "; modulus=" + modulus_to_string(modulus) + ")";
    }
    data->build_tables();
    const FieldData* raw = data.get();
    reg.fields.emplace(std::move(key), std::move(data));
    return raw;
}

void validate_pk(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) {
        throw DomainError("field characteristic " + std::to_string(p) +
                          " is not prime");
    }
    if (k < 1 || k > kMaxExtensionDegree) {
        throw CapacityError("extension degree k must be in [1, " +
                            std::to_string(kMaxExtensionDegree) + "], got " +
                            std::to_string(k));
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw CapacityError("field order exceeds cap of 2^16");
        }
    }
}

} // namespace
} // namespace detail

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    detail::validate_pk(p, 1);
    return FieldSpec(detail::intern(p, 1, {0, 1}, true));
}

FieldSpec FieldSpec::with_modulus(std::uint32_t p, std::uint32_t k,
                                  std::vector<std::uint32_t> modulus) {
    detail::validate_pk(p, k);
    if (modulus.size() != static_cast<std::size_t>(k) + 1) {
        throw DomainError("modulus must have exactly k+1 coefficients");
    }
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) {
        throw DomainError("modulus must be monic");
    }
    if (k == 1) {
        if (modulus[0] != 0) {
            throw DomainError("for k=1 the modulus must be the polynomial t");
        }
    } else if (!detail::is_irreducible(modulus, p)) {
        throw DomainError("modulus " + detail::modulus_to_string(modulus) +
                          " is reducible over GF(" + std::to_string(p) + ")");
    }
    bool is_default =
        has_default_modulus(p, k) &&
        modulus == detail::search_default_modulus(p, k);
    return FieldSpec(detail::intern(p, k, std::move(modulus), is_default));
}

bool FieldSpec::has_default_modulus(std::uint32_t p, std::uint32_t k) {
    if (k == 1) return true;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    return q <= 64;
}

FieldSpec FieldSpec::with_default_modulus(std::uint32_t p, std::uint32_t k) {
    detail::validate_pk(p, k);
    if (k == 1) return prime_field(p);
    if (!has_default_modulus(p, k)) {
        throw DomainError(
            "no default modulus for GF(" + std::to_string(p) + "^" +
            std::to_string(k) + ") (defaults cover p^k <= 64); pass one "
            "explicitly, e.g. GF(q; modulus=...)");
    }
    return FieldSpec(
        detail::intern(p, k, detail::search_default_modulus(p, k), true));
}

FieldSpec FieldSpec::from_order(std::uint64_t q) {
    if (q < 2 || q > kMaxFieldOrder) {
        throw CapacityError("field order must be in [2, 2^16]");
    }
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return prime_field(static_cast<std::uint32_t>(q)); // q prime
    std::uint32_t k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) {
        throw DomainError(std::to_string(q) + " is not a prime power");
    }
    return with_default_modulus(p, k);
}

std::uint32_t FieldSpec::p() const { return data_->p; }
std::uint32_t FieldSpec::k() const { return data_->k; }
std::uint32_t FieldSpec::q() const { return data_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const {
    return data_->modulus;
}
bool FieldSpec::modulus_is_default() const { return data_->default_modulus; }
const std::string& FieldSpec::descriptor() const { return data_->descriptor; }

FieldElement FieldSpec::zero() const { return FieldElement(data_, 0); }
FieldElement FieldSpec::one() const { return FieldElement(data_, 1); }

FieldElement FieldSpec::generator() const {
    if (data_->k < 2) {
        throw DomainError("generator t requires an extension field (k >= 2)");
    }
    return FieldElement(data_, data_->p);
}

FieldElement FieldSpec::from_int(std::int64_t v) const {
    std::int64_t m = v % data_->p;
    if (m < 0) m += data_->p;
    return FieldElement(data_, static_cast<std::uint32_t>(m));
}

FieldElement FieldSpec::element(std::uint32_t index) const {
    if (index >= data_->q) {
        throw DomainError("element index " + std::to_string(index) +
                          " out of range for " + descriptor());
    }
    return FieldElement(data_, index);
}

FieldElement FieldSpec::from_coeffs(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > data_->k) {
        throw DomainError("too many coefficients for " + descriptor());
    }
    std::uint32_t idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        std::int64_t c = coeffs[i] % data_->p;
        if (c < 0) c += data_->p;
        idx = idx * data_->p + static_cast<std::uint32_t>(c);
    }
    return FieldElement(data_, idx);
}

std::vector<FieldElement> FieldSpec::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(data_->q);
    for (std::uint32_t i = 0; i < data_->q; ++i) {
        out.push_back(FieldElement(data_, i));
    }
    return out;
}

std::vector<FieldElement> enumerate(const FieldSpec& spec) {
    return spec.enumerate();
}

FieldSpec FieldElement::spec() const {
    if (data_ == nullptr) throw DomainError("null field element");
    return FieldSpec(data_);
}

std::uint32_t FieldElement::coeff(std::uint32_t i) const {
    std::uint32_t idx = idx_;
    for (std::uint32_t j = 0; j < i; ++j) idx /= data_->p;
    return idx % data_->p;
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
    std::vector<std::uint32_t> out(data_->k);
    std::uint32_t idx = idx_;
    for (std::uint32_t i = 0; i < data_->k; ++i) {
        out[i] = idx % data_->p;
        idx /= data_->p;
    }
    return out;
}

namespace {
void check_same(const detail::FieldData* a, const detail::FieldData* b) {
    if (a == nullptr || b == nullptr) throw DomainError("null field element");
    if (a != b) {
        throw SpecMismatchError("field elements belong to different fields (" +
                                a->descriptor + " vs " + b->descriptor + ")");
    }
}
} // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
    check_same(a.data_, b.data_);
    return FieldElement(a.data_, a.data_->add(a.idx_, b.idx_));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    check_same(a.data_, b.data_);
    return FieldElement(a.data_, a.data_->add(a.idx_, a.data_->negate(b.idx_)));
}

FieldElement neg(const FieldElement& a) {
    if (a.data_ == nullptr) throw DomainError("null field element");
    return FieldElement(a.data_, a.data_->negate(a.idx_));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    check_same(a.data_, b.data_);
    return FieldElement(a.data_, a.data_->mul(a.idx_, b.idx_));
}

FieldElement inv(const FieldElement& a) {
    if (a.data_ == nullptr) throw DomainError("null field element");
    if (a.idx_ == 0) {
        throw DivisionByZeroError("inverse of zero in " + a.data_->descriptor);
    }
    return FieldElement(a.data_, a.data_->invert(a.idx_));
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
    if (a.data_ == nullptr) throw DomainError("null field element");
    return FieldElement(a.data_, a.data_->pow(a.idx_, e));
}

std::string to_string(const FieldElement& a) {
    const auto cs = a.coeffs();
    bool extension_part = false;
    for (std::size_t i = 1; i < cs.size(); ++i) {
        if (cs[i] != 0) extension_part = true;
    }
    if (!extension_part) return std::to_string(cs[0]);
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << cs[i];
        } else {
            if (cs[i] != 1) out << cs[i] << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace fqring
