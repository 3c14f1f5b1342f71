#pragma once

#include <cstdint>
#include <vector>

#include "fqring/ring.hpp"

namespace fqring {

/// Finitely generated ideal of K[S], kept as an explicit generator list.
/// Generator lists are not canonical; semantic comparisons go through
/// varieties (see equal_ideals).
class Ideal {
public:
    Ideal(PointSet ring, std::vector<RingElement> generators);

    static Ideal principal(RingElement g);
    /// The zero ideal ⟨[0]⟩.
    static Ideal zero(const PointSet& ring);
    /// The whole ring as ⟨[1]⟩.
    static Ideal unit(const PointSet& ring);

    const PointSet& ring() const { return ring_; }
    const std::vector<RingElement>& generators() const { return gens_; }

private:
    PointSet ring_;
    std::vector<RingElement> gens_;
};

/// Witness for phi ∈ ⟨phi_1..phi_s⟩: cofactors h_i with
/// sum_i h_i * phi_i = phi^m.
struct MembershipCertificate {
    std::uint32_t m = 1;
    std::vector<RingElement> cofactors;
};

/// Cofactors u, v with u(x)*x^m + v(x)*(x^q - x) = x, witnessing that
/// x generates the same ideal as x^m in K[x] modulo the field equation.
struct BezoutWitness {
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    Polynomial u;
    Polynomial v;
};

/// Result of adjoining a fresh variable y: the extended point set
/// S × F_q and the lifted ideal ⟨phi_1, .., phi_s, [1] - [y]*phi⟩.
struct RabinowitschLift {
    PointSet extended_ring;
    Ideal lifted;
};

/// Points of S at which every generator (equivalently every element)
/// of J vanishes.
SubsetOfS variety(const Ideal& J);

/// All functions vanishing on T, returned as the principal ideal generated
/// by the indicator of S ∖ T. T = S gives ⟨[0]⟩ and T = ∅ gives ⟨[1]⟩.
Ideal vanishing_ideal(const SubsetOfS& T);

/// phi ∈ J, decided by vanishing on variety(J) (vacuously true when the
/// variety is empty, in which case J is the whole ring).
bool membership(const RingElement& phi, const Ideal& J);

/// Explicit certificate with m = 1: at each point of S the least-index
/// generator that is nonzero there absorbs phi's value; elsewhere all
/// cofactors vanish. Throws NonMemberError when phi ∉ J.
MembershipCertificate certify(const RingElement& phi, const Ideal& J);

/// Checks sum_i cofactors[i] * generators[i] == phi^m exactly.
bool verify_certificate(const RingElement& phi, const Ideal& J,
                        const MembershipCertificate& cert);

/// For an ideal with empty variety, a single element of J that vanishes
/// nowhere on S. Throws ProperIdealError when the variety is nonempty.
RingElement single_nonvanishing_witness(const Ideal& J);

/// Certificate writing [1] as a combination of the generators, via the
/// nonvanishing witness w: [1] = w^{q-2} * w. Throws ProperIdealError
/// when J is proper.
MembershipCertificate unit_certificate(const Ideal& J);

/// The extended ring S × F_q with generators lifted by extend_vars plus
/// [1] - [y]*phi. Its variety is empty exactly when phi vanishes on
/// variety(J). Throws CapacityError when |S|*q exceeds the point cap.
RabinowitschLift rabinowitsch_lift(const Ideal& J, const RingElement& phi);

/// True iff J ≠ K[S], equivalently variety(J) ≠ ∅.
bool is_proper(const Ideal& J);

/// Concatenated generators.
Ideal sum(const Ideal& I, const Ideal& J);
/// All pairwise generator products.
Ideal product(const Ideal& I, const Ideal& J);
/// Computed through the correspondence: the vanishing ideal of the union
/// of the two varieties.
Ideal intersect(const Ideal& I, const Ideal& J);
/// The ideal quotient I : J = {phi : phi*psi ∈ I for all psi ∈ J},
/// computed as the vanishing ideal of variety(I) ∖ variety(J).
Ideal quotient(const Ideal& I, const Ideal& J);
/// Identity: every ideal of K[S] is radical.
Ideal radical(const Ideal& J);

/// Semantic equality: equal varieties.
bool equal_ideals(const Ideal& I, const Ideal& J);

/// True iff the variety is a single point.
bool is_maximal(const Ideal& J);

/// Extended-Euclid witness that gcd(x^m, x^q - x) = x.
BezoutWitness bezout_witness(std::uint32_t m, FieldSpec spec);

/// Substitutes phi into a single-variable polynomial (Horner scheme).
RingElement apply_univariate(const Polynomial& f, const RingElement& phi);

} // namespace fqring
