#include "fqring/ideal.hpp"

#include <optional>

namespace fqring {

Ideal::Ideal(PointSet ring, std::vector<RingElement> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
    if (gens_.empty()) {
        throw DomainError("ideal needs at least one generator");
    }
    for (const auto& g : gens_) {
        if (g.ring() != ring_) {
            throw SpecMismatchError("generator lives in a different ring");
        }
    }
}

Ideal Ideal::principal(RingElement g) {
    PointSet ring = g.ring();
    std::vector<RingElement> gens;
    gens.push_back(std::move(g));
    return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::zero(const PointSet& ring) {
    return principal(embed(Polynomial::zero(ring.spec(), ring.nvars()), ring));
}

Ideal Ideal::unit(const PointSet& ring) {
    return principal(embed(Polynomial::one(ring.spec(), ring.nvars()), ring));
}

namespace {

void check_same_ring(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) {
        throw SpecMismatchError("ideals over different point sets");
    }
}

void check_same_ring(const RingElement& phi, const Ideal& J) {
    if (phi.ring() != J.ring()) {
        throw SpecMismatchError("element and ideal over different point sets");
    }
}

// At each point, the least generator index with a nonzero value there;
// nullopt where every generator vanishes.
std::vector<std::optional<std::size_t>> least_nonzero_generator(const Ideal& J) {
    const std::size_t npts = J.ring().size();
    std::vector<std::optional<std::size_t>> pick(npts);
    for (std::size_t a = 0; a < npts; ++a) {
        for (std::size_t j = 0; j < J.generators().size(); ++j) {
            if (!J.generators()[j].value_at(a).is_zero()) {
                pick[a] = j;
                break;
            }
        }
    }
    return pick;
}

// Selector functions psi_i: psi_j(a) = 1 exactly when j is the least index
// with a nonzero generator value at a. Requires an empty variety.
std::vector<RingElement> pointwise_selectors(const Ideal& J) {
    const PointSet& S = J.ring();
    const FieldSpec K = S.spec();
    const auto pick = least_nonzero_generator(J);
    std::vector<std::vector<FieldElement>> psi_values(
        J.generators().size(),
        std::vector<FieldElement>(S.size(), K.zero()));
    for (std::size_t a = 0; a < S.size(); ++a) {
        psi_values[*pick[a]][a] = K.one();
    }
    std::vector<RingElement> psi;
    psi.reserve(psi_values.size());
    for (auto& vals : psi_values) {
        psi.push_back(interpolate(S, std::move(vals)));
    }
    return psi;
}

} // namespace

SubsetOfS variety(const Ideal& J) {
    const std::size_t npts = J.ring().size();
    std::vector<bool> flags(npts);
    for (std::size_t a = 0; a < npts; ++a) {
        bool all_zero = true;
        for (const auto& g : J.generators()) {
            if (!g.value_at(a).is_zero()) {
                all_zero = false;
                break;
            }
        }
        flags[a] = all_zero;
    }
    return SubsetOfS(J.ring(), std::move(flags));
}

Ideal vanishing_ideal(const SubsetOfS& T) {
    const PointSet& S = T.ambient();
    const FieldSpec K = S.spec();
    std::vector<FieldElement> values(S.size(), K.zero());
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (!T.contains(i)) values[i] = K.one();
    }
    return Ideal::principal(interpolate(S, std::move(values)));
}

bool membership(const RingElement& phi, const Ideal& J) {
    check_same_ring(phi, J);
    const SubsetOfS V = variety(J);
    for (std::size_t a = 0; a < phi.values().size(); ++a) {
        if (V.contains(a) && !phi.value_at(a).is_zero()) return false;
    }
    return true;
}

MembershipCertificate certify(const RingElement& phi, const Ideal& J) {
    check_same_ring(phi, J);
    if (!membership(phi, J)) {
        throw NonMemberError("element does not belong to the ideal");
    }
    const PointSet& S = J.ring();
    const FieldSpec K = S.spec();
    const auto pick = least_nonzero_generator(J);
    std::vector<std::vector<FieldElement>> h_values(
        J.generators().size(),
        std::vector<FieldElement>(S.size(), K.zero()));
    for (std::size_t a = 0; a < S.size(); ++a) {
        if (!pick[a]) continue; // variety point: phi vanishes, cofactors stay 0
        const std::size_t j = *pick[a];
        h_values[j][a] =
            phi.value_at(a) * inv(J.generators()[j].value_at(a));
    }
    MembershipCertificate cert;
    cert.m = 1;
    cert.cofactors.reserve(h_values.size());
    for (auto& vals : h_values) {
        cert.cofactors.push_back(interpolate(S, std::move(vals)));
    }
    return cert;
}

bool verify_certificate(const RingElement& phi, const Ideal& J,
                        const MembershipCertificate& cert) {
    check_same_ring(phi, J);
    if (cert.m < 1 || cert.cofactors.size() != J.generators().size()) {
        return false;
    }
    RingElement acc = embed(
        Polynomial::zero(J.ring().spec(), J.ring().nvars()), J.ring());
    for (std::size_t i = 0; i < cert.cofactors.size(); ++i) {
        if (cert.cofactors[i].ring() != J.ring()) return false;
        acc = r_add(acc, r_mul(cert.cofactors[i], J.generators()[i]));
    }
    return acc == r_pow(phi, cert.m);
}

RingElement single_nonvanishing_witness(const Ideal& J) {
    if (is_proper(J)) {
        throw ProperIdealError(
            "ideal is proper: its variety is nonempty, so every element "
            "vanishes somewhere");
    }
    const auto psi = pointwise_selectors(J);
    RingElement acc = embed(
        Polynomial::zero(J.ring().spec(), J.ring().nvars()), J.ring());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        acc = r_add(acc, r_mul(psi[i], J.generators()[i]));
    }
    return acc;
}

MembershipCertificate unit_certificate(const Ideal& J) {
    if (is_proper(J)) {
        throw ProperIdealError("ideal is proper: [1] is not a member");
    }
    const FieldSpec K = J.ring().spec();
    const auto psi = pointwise_selectors(J);
    RingElement witness = embed(
        Polynomial::zero(K, J.ring().nvars()), J.ring());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        witness = r_add(witness, r_mul(psi[i], J.generators()[i]));
    }
    const RingElement scale = r_pow(witness, K.q() - 2);
    MembershipCertificate cert;
    cert.m = 1;
    cert.cofactors.reserve(psi.size());
    for (const auto& p : psi) {
        cert.cofactors.push_back(r_mul(scale, p));
    }
    return cert;
}

RabinowitschLift rabinowitsch_lift(const Ideal& J, const RingElement& phi) {
    check_same_ring(phi, J);
    const PointSet& S = J.ring();
    const FieldSpec K = S.spec();
    const std::size_t n = S.nvars();
    const std::uint64_t ext_size =
        static_cast<std::uint64_t>(S.size()) * K.q();
    if (ext_size > kMaxPoints) {
        throw CapacityError("extended point set |S|*q exceeds the cap of 2^16");
    }

    std::vector<std::vector<FieldElement>> ext_points;
    ext_points.reserve(ext_size);
    for (std::size_t a = 0; a < S.size(); ++a) {
        for (std::uint32_t c = 0; c < K.q(); ++c) {
            std::vector<FieldElement> pt(S.point(a).begin(), S.point(a).end());
            pt.push_back(K.element(c));
            ext_points.push_back(std::move(pt));
        }
    }
    PointSet ext = PointSet::of(K, n + 1, std::move(ext_points));

    std::vector<RingElement> gens;
    gens.reserve(J.generators().size() + 1);
    for (const auto& g : J.generators()) {
        gens.push_back(embed(extend_vars(g.representative(), n + 1), ext));
    }
    const RingElement y = embed(Polynomial::variable(K, n + 1, n), ext);
    const RingElement phi_ext =
        embed(extend_vars(phi.representative(), n + 1), ext);
    const RingElement one = embed(Polynomial::one(K, n + 1), ext);
    gens.push_back(r_sub(one, r_mul(y, phi_ext)));

    Ideal lifted(ext, std::move(gens));
    return RabinowitschLift{std::move(ext), std::move(lifted)};
}

bool is_proper(const Ideal& J) {
    return !variety(J).empty();
}

Ideal sum(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    std::vector<RingElement> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal product(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    std::vector<RingElement> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& a : I.generators()) {
        for (const auto& b : J.generators()) {
            gens.push_back(r_mul(a, b));
        }
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    return vanishing_ideal(set_union(variety(I), variety(J)));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    return vanishing_ideal(set_difference(variety(I), variety(J)));
}

Ideal radical(const Ideal& J) {
    return J;
}

bool equal_ideals(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    return variety(I) == variety(J);
}

bool is_maximal(const Ideal& J) {
    return variety(J).count() == 1;
}

BezoutWitness bezout_witness(std::uint32_t m, FieldSpec spec) {
    if (m < 1) {
        throw DomainError("the exponent m must be at least 1");
    }
    const std::uint32_t q = spec.q();
    Polynomial xm(spec, 1);
    xm.add_term(Monomial{m}, spec.one());
    Polynomial field_eq(spec, 1);
    field_eq.add_term(Monomial{q}, spec.one());
    field_eq.add_term(Monomial{1}, -spec.one());
    auto [g, u, v] = univariate_ext_gcd(xm, field_eq);

    const Polynomial x = Polynomial::variable(spec, 1, 0);
    if (g != x || u * xm + v * field_eq != x) {
        throw Error("Bezout witness failed its defining identity");
    }
    return BezoutWitness{m, q, u, v};
}

RingElement apply_univariate(const Polynomial& f, const RingElement& phi) {
    if (f.nvars() != 1) {
        throw DomainError("substitution needs a single-variable polynomial");
    }
    if (f.spec() != phi.ring().spec()) {
        throw SpecMismatchError("polynomial over a different field");
    }
    const PointSet& S = phi.ring();
    RingElement acc = embed(Polynomial::zero(S.spec(), S.nvars()), S);
    const std::int64_t deg = f.total_degree();
    for (std::int64_t e = deg; e >= 0; --e) {
        acc = r_mul(acc, phi);
        const FieldElement c = f.coefficient(Monomial{static_cast<std::uint32_t>(e)});
        if (!c.is_zero()) {
            acc = r_add(acc, embed(Polynomial::constant(S.spec(), S.nvars(), c), S));
        }
    }
    return acc;
}

} // namespace fqring
