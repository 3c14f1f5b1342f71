#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fqring/ideal.hpp"
#include "fqring/parallel.hpp"
#include "fqring/rng.hpp"

namespace fqring {

inline constexpr std::size_t kMaxReportedFailures = 10;

/// Outcome of re-checking one statement over one configuration. `failures`
/// holds the first counterexamples with inputs spelled out as evaluation
/// vectors; failure_count is the true total. elapsed_seconds is
/// informational only and never serialized, so identical runs print
/// identical bytes.
struct VerificationReport {
    std::string statement_id;
    std::string context;
    std::uint64_t instance_count = 0;
    std::uint64_t failure_count = 0;
    std::vector<std::string> failures;
    double elapsed_seconds = 0.0;

    bool pass() const { return failure_count == 0; }
};

using MembershipFn = std::function<bool(const RingElement&, const Ideal&)>;

struct VerifyOptions {
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    ExecMode mode = default_exec_mode();
    /// Forces the exhaustive (true) or sampled (false) arm where a verifier
    /// would otherwise choose by instance count.
    std::optional<bool> force_exhaustive;
    /// Substitute membership predicate, hooked into the strong-identity
    /// verifier so tests can prove the suite catches a seeded bug. Empty
    /// means the library's own membership.
    MembershipFn membership_override;
};

/// statement "prop-3.1": subsets of S and ideals of K[S] correspond.
/// Enumerates all 2^|S| subsets T: variety(vanishing_ideal(T)) == T and
/// vanishing_ideal(T) is maximal exactly for singletons; checks inclusion
/// reversal over subset pairs (all pairs while 3^|S| stays small, seeded
/// samples beyond). Requires |S| <= 16.
VerificationReport verify_correspondence(const PointSet& S,
                                         const VerifyOptions& opt = {});

/// statement "thm-2.1": the vanishing ideal of the variety of J is J, and
/// membership certificates exist. Random ideals (up to 3 generators) and a
/// random element per trial; cross-checks membership against the
/// vanish-on-variety definition, against the span oracle when q^|S| is
/// within the oracle cap, certifies members, and replays the
/// variable-adjunction emptiness criterion when |S|*q fits.
VerificationReport verify_nullstellensatz(const PointSet& S,
                                          const VerifyOptions& opt = {});

/// statement "prop-2.2": a proper ideal has a nonempty variety. Enumerates
/// all ordered generator pairs while (q^|S|)^2 stays small (seeded samples
/// beyond); when the variety is empty the unit certificate and the
/// nowhere-vanishing witness must both check out, and when it is nonempty
/// both constructions must refuse.
VerificationReport verify_weak(const PointSet& S, const VerifyOptions& opt = {});

/// statement "prop-2.1": every ideal of K[S] equals its radical. Random
/// (phi, m): ⟨phi⟩ = ⟨phi^m⟩, membership of phi in ⟨phi^m⟩, and the
/// reconstruction phi = u(phi)*phi^m from the Bezout witness.
VerificationReport verify_radical(const PointSet& S,
                                  const VerifyOptions& opt = {});

/// statement "prop-3.2": ideal quotient corresponds to variety difference.
/// Subset pairs (T1, T2): quotient(I_S(T1), I_S(T2)) = I_S(T1 ∖ T2), plus
/// agreement with the definitional quotient computed by enumerating all
/// q^|S| functions (run on a deterministic stride of pairs when the full
/// sweep would exceed the work budget). Requires q^|S| within the oracle cap.
VerificationReport verify_quotient(const PointSet& S,
                                   const VerifyOptions& opt = {});

/// statement "prop-3.3": the two identities tying products of (q-1)-th
/// powers to intersections and sums. Function pairs ([f], [g]), exhaustive
/// while (q^|S|)^2 stays small, seeded samples beyond; each instance checks
/// both variety equalities and both ideal equalities.
VerificationReport verify_prop33(const PointSet& S,
                                 const VerifyOptions& opt = {});

/// statement "cor-2.3": [f] vanishes on all of F_q^n iff [f] is the zero
/// function. Sampled polynomials with exponents up to 2q over the full
/// grid. Requires q^n <= 2^12.
VerificationReport verify_corollary_2_3(FieldSpec spec, std::size_t nvars,
                                        const VerifyOptions& opt = {});

struct VerifyGrid {
    std::vector<FieldSpec> fields;
    std::vector<std::size_t> nvars;
    std::uint32_t random_subsets_per_cell = 5;
};

/// Runs every verifier over each (field, nvars) cell: the full grid plus
/// seeded random proper subsets. Verifiers whose size preconditions a cell
/// does not meet are skipped. Report order is fixed by grid order.
std::vector<VerificationReport> verify_all(const VerifyGrid& grid,
                                           const VerifyOptions& opt = {});

/// True when q^|S| is within the span-oracle cap of 2^16.
bool oracle_membership_feasible(const Ideal& J);

/// Decides phi ∈ J independently of variety computations: builds the set
/// of all K[S]-combinations of the generators as the F_q-linear span of
/// the point-supported generator slices, then looks phi up. Exact;
/// throws CapacityError beyond the cap.
bool oracle_membership(const RingElement& phi, const Ideal& J);

/// Same question by direct enumeration of all cofactor tuples; exponential
/// in the generator count, so capped at (q^|S|)^s <= 2^20. Used to
/// cross-check the span oracle at tiny sizes.
bool oracle_membership_tuples(const RingElement& phi, const Ideal& J);

/// Uniform random element of K[S] (uniform evaluation vector).
RingElement random_function(const PointSet& S, SplitMix64& rng);
/// Ideal with 1..max_gens uniform random generators.
Ideal random_ideal(const PointSet& S, SplitMix64& rng,
                   std::uint32_t max_gens = 3);
/// Uniform random subset (each point flagged by a fair coin).
SubsetOfS random_subset(const PointSet& S, SplitMix64& rng);
/// Nonempty proper random subset of the points of `ambient`, as its own
/// PointSet; size uniform in [1, |ambient| - 1].
PointSet random_proper_subset(const PointSet& ambient, SplitMix64& rng);
/// Random sparse polynomial: up to max_terms monomials, every exponent
/// uniform in [0, max_exponent].
Polynomial random_polynomial(FieldSpec spec, std::size_t nvars,
                             SplitMix64& rng, std::uint32_t max_exponent,
                             std::uint32_t max_terms = 4);

} // namespace fqring
