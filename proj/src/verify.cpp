#include "fqring/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fqring/errors.hpp"

namespace fqring {

namespace {

// Caps chosen so every enumeration below stays well under a second per
// configuration on one core; acceptance-sized configurations all fall on
// the exhaustive side.
constexpr std::uint64_t kOracleCap = 1ull << 16;   // span oracle: q^|S|
constexpr std::uint64_t kTupleCap = 1ull << 20;    // cofactor tuples: (q^|S|)^s
constexpr std::uint64_t kPairCap = 1ull << 16;     // exhaustive pair sweeps
constexpr std::uint64_t kSweepHardCap = 1024;      // q^|S| when a sweep is forced
constexpr std::uint64_t kBruteBudget = 1ull << 26; // quotient double enumeration

constexpr std::uint64_t kStreamCorrespondence = 1;
constexpr std::uint64_t kStreamNull = 2;
constexpr std::uint64_t kStreamWeak = 3;
constexpr std::uint64_t kStreamRadical = 4;
constexpr std::uint64_t kStreamQuotient = 5;
constexpr std::uint64_t kStreamProp33 = 6;
constexpr std::uint64_t kStreamCor23 = 7;
constexpr std::uint64_t kStreamGridSubset = 8;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double stop() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base == 0 || r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

std::string values_str(const std::vector<FieldElement>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) s += ",";
        s += to_string(v[i]);
    }
    s += ")";
    return s;
}

std::string gens_str(const Ideal& J) {
    std::string s = "[";
    const auto& gens = J.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i != 0) s += "; ";
        s += values_str(gens[i].values());
    }
    s += "]";
    return s;
}

std::string subset_str(const SubsetOfS& T) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : T.indices()) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(i);
    }
    s += "}";
    return s;
}

std::string poly_str(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*x^(";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j != 0) s += ",";
            s += std::to_string(m[j]);
        }
        s += ")";
    }
    return s;
}

std::string describe(const PointSet& S) {
    std::string s = S.spec().descriptor() + "^" + std::to_string(S.nvars()) +
                    " |S|=" + std::to_string(S.size());
    if (S.is_full()) s += " full";
    return s;
}

std::vector<bool> mask_flags(std::uint64_t mask, std::size_t n) {
    std::vector<bool> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = ((mask >> i) & 1u) != 0;
    return f;
}

std::vector<FieldElement> decode_function(FieldSpec K, std::size_t npts,
                                          std::uint64_t code) {
    std::vector<FieldElement> v;
    v.reserve(npts);
    const std::uint64_t q = K.q();
    for (std::size_t a = 0; a < npts; ++a) {
        v.push_back(K.element(static_cast<std::uint32_t>(code % q)));
        code /= q;
    }
    return v;
}

/// Runs check(i) over [0, count), serially or under OpenMP. Each instance
/// writes only its own slot; the reduction happens serially in index order,
/// so both modes produce byte-identical reports.
template <typename Fn>
void run_instances(VerificationReport& rep, const char* label,
                   std::uint64_t count, ExecMode mode, Fn&& check) {
    std::vector<std::string> slots(static_cast<std::size_t>(count));
    for_each_index(static_cast<std::size_t>(count), mode, [&](std::size_t i) {
        try {
            slots[i] = check(static_cast<std::uint64_t>(i));
        } catch (const std::exception& e) {
            slots[i] = std::string("unexpected error: ") + e.what();
        }
    });
    rep.instance_count += count;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::string& msg = slots[static_cast<std::size_t>(i)];
        if (msg.empty()) continue;
        ++rep.failure_count;
        if (rep.failures.size() < kMaxReportedFailures) {
            rep.failures.push_back(std::string(label) + " " + std::to_string(i) +
                                   ": " + msg);
        }
    }
}

MembershipFn effective_membership(const VerifyOptions& opt) {
    if (opt.membership_override) return opt.membership_override;
    return [](const RingElement& phi, const Ideal& J) { return membership(phi, J); };
}

RingElement ring_one(const PointSet& S) {
    return RingElement::from_values(
        S, std::vector<FieldElement>(S.size(), S.spec().one()));
}

} // namespace

bool oracle_membership_feasible(const Ideal& J) {
    return pow_capped(J.ring().spec().q(), J.ring().size(), kOracleCap) <= kOracleCap;
}

bool oracle_membership(const RingElement& phi, const Ideal& J) {
    if (!(phi.ring() == J.ring()))
        throw SpecMismatchError(
            "oracle_membership: element and ideal live in different rings");
    if (!oracle_membership_feasible(J))
        throw CapacityError("span oracle enumerates q^|S| functions; needs q^|S| <= 65536");
    const PointSet& S = J.ring();
    const FieldSpec K = S.spec();
    const std::uint32_t q = static_cast<std::uint32_t>(K.q());
    const std::size_t npts = S.size();
    std::vector<std::uint32_t> powq(npts + 1);
    powq[0] = 1;
    for (std::size_t a = 0; a < npts; ++a) powq[a + 1] = powq[a] * q;
    const std::uint32_t total = powq[npts];

    // An ideal is exactly the K-linear span of the one-point slices of its
    // generators: h*g = sum_a h(a)g(a)*delta_a. Functions are encoded in
    // base q by the enumeration index of their value at each point, and the
    // span is closed one independent slice at a time (each extension
    // multiplies the span size by q).
    std::vector<char> seen(total, 0);
    std::vector<std::uint32_t> span;
    span.reserve(total);
    span.push_back(0);
    seen[0] = 1;
    for (const RingElement& g : J.generators()) {
        for (std::size_t a = 0; a < npts; ++a) {
            const FieldElement gv = g.value_at(a);
            if (gv.is_zero()) continue;
            if (seen[gv.index() * powq[a]]) continue;
            const std::size_t snapshot = span.size();
            std::vector<std::uint32_t> bumped(q);
            for (std::uint32_t c = 1; c < q; ++c) {
                const FieldElement cb = mul(K.element(c), gv);
                for (std::uint32_t d = 0; d < q; ++d)
                    bumped[d] = add(K.element(d), cb).index();
                for (std::size_t s = 0; s < snapshot; ++s) {
                    const std::uint32_t v = span[s];
                    const std::uint32_t da = (v / powq[a]) % q;
                    const std::uint32_t w = v - da * powq[a] + bumped[da] * powq[a];
                    if (!seen[w]) {
                        seen[w] = 1;
                        span.push_back(w);
                    }
                }
            }
        }
    }
    std::uint32_t code = 0;
    for (std::size_t a = 0; a < npts; ++a)
        code += static_cast<std::uint32_t>(phi.value_at(a).index()) * powq[a];
    return seen[code] != 0;
}

bool oracle_membership_tuples(const RingElement& phi, const Ideal& J) {
    if (!(phi.ring() == J.ring()))
        throw SpecMismatchError(
            "oracle_membership_tuples: element and ideal live in different rings");
    const PointSet& S = J.ring();
    const FieldSpec K = S.spec();
    const std::uint64_t q = K.q();
    const std::size_t npts = S.size();
    const std::size_t s = J.generators().size();
    const std::uint64_t F = pow_capped(q, npts, kTupleCap);
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < s; ++i) {
        if (F > kTupleCap || tuples > kTupleCap / F)
            throw CapacityError(
                "cofactor-tuple sweep needs (q^|S|)^s <= 2^20");
        tuples *= F;
    }
    if (s == 0) return phi.is_zero();
    std::vector<std::uint64_t> powq(npts + 1);
    powq[0] = 1;
    for (std::size_t a = 0; a < npts; ++a) powq[a + 1] = powq[a] * q;
    for (std::uint64_t t = 0; t < tuples; ++t) {
        bool match = true;
        for (std::size_t a = 0; a < npts && match; ++a) {
            FieldElement acc = K.zero();
            std::uint64_t tt = t;
            for (std::size_t gi = 0; gi < s; ++gi) {
                const std::uint64_t hcode = tt % F;
                tt /= F;
                const std::uint32_t hd =
                    static_cast<std::uint32_t>((hcode / powq[a]) % q);
                acc = add(acc, mul(K.element(hd), J.generators()[gi].value_at(a)));
            }
            match = acc == phi.value_at(a);
        }
        if (match) return true;
    }
    return false;
}

RingElement random_function(const PointSet& S, SplitMix64& rng) {
    const FieldSpec K = S.spec();
    std::vector<FieldElement> v;
    v.reserve(S.size());
    for (std::size_t a = 0; a < S.size(); ++a)
        v.push_back(K.element(static_cast<std::uint32_t>(rng.below(K.q()))));
    return RingElement::from_values(S, std::move(v));
}

Ideal random_ideal(const PointSet& S, SplitMix64& rng, std::uint32_t max_gens) {
    if (max_gens == 0) throw DomainError("random_ideal needs max_gens >= 1");
    const std::uint32_t s = 1 + static_cast<std::uint32_t>(rng.below(max_gens));
    std::vector<RingElement> gens;
    gens.reserve(s);
    for (std::uint32_t i = 0; i < s; ++i) gens.push_back(random_function(S, rng));
    return Ideal(S, std::move(gens));
}

SubsetOfS random_subset(const PointSet& S, SplitMix64& rng) {
    std::vector<bool> flags(S.size());
    for (std::size_t a = 0; a < S.size(); ++a) flags[a] = rng.coin();
    return SubsetOfS(S, std::move(flags));
}

PointSet random_proper_subset(const PointSet& ambient, SplitMix64& rng) {
    const std::size_t npts = ambient.size();
    if (npts < 2)
        throw DomainError("a nonempty proper subset needs an ambient set of >= 2 points");
    const std::size_t size = 1 + static_cast<std::size_t>(rng.below(npts - 1));
    std::vector<std::size_t> idx(npts);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(npts - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<std::vector<FieldElement>> pts;
    pts.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        auto pt = ambient.point(idx[i]);
        pts.emplace_back(pt.begin(), pt.end());
    }
    return PointSet::of(ambient.spec(), ambient.nvars(), std::move(pts));
}

Polynomial random_polynomial(FieldSpec spec, std::size_t nvars, SplitMix64& rng,
                             std::uint32_t max_exponent, std::uint32_t max_terms) {
    if (max_terms == 0) throw DomainError("random_polynomial needs max_terms >= 1");
    Polynomial f(spec, nvars);
    const std::uint32_t nterms = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
    for (std::uint32_t t = 0; t < nterms; ++t) {
        Monomial m(nvars);
        for (std::size_t j = 0; j < nvars; ++j)
            m[j] = static_cast<std::uint32_t>(rng.below(max_exponent + 1ull));
        f.add_term(std::move(m),
                   spec.element(static_cast<std::uint32_t>(rng.below(spec.q()))));
    }
    return f;
}

VerificationReport verify_correspondence(const PointSet& S, const VerifyOptions& opt) {
    Timer timer;
    const std::size_t npts = S.size();
    if (npts > 16)
        throw CapacityError(
            "verify_correspondence enumerates 2^|S| subsets; needs |S| <= 16");
    VerificationReport rep;
    rep.statement_id = "prop-3.1";
    const std::uint64_t nsub = 1ull << npts;
    const bool exhaustive_pairs =
        opt.force_exhaustive.value_or(nsub * nsub <= kPairCap);
    const std::uint64_t pair_count = exhaustive_pairs ? nsub * nsub : opt.trials;
    rep.context = describe(S) + "; subsets=" + std::to_string(nsub) + "; pairs=" +
                  (exhaustive_pairs ? "all " + std::to_string(pair_count)
                                    : "sampled " + std::to_string(pair_count)) +
                  "; seed=" + std::to_string(opt.seed);

    run_instances(rep, "subset", nsub, opt.mode,
                  [&](std::uint64_t i) -> std::string {
        SubsetOfS T(S, mask_flags(i, npts));
        Ideal I = vanishing_ideal(T);
        SubsetOfS V = variety(I);
        if (!(V == T))
            return "variety(vanishing_ideal(T)) != T for T=" + subset_str(T) +
                   ", got " + subset_str(V);
        const bool want_maximal = T.count() == 1;
        if (is_maximal(I) != want_maximal)
            return "is_maximal(vanishing_ideal(T)) != (|T| == 1) for T=" +
                   subset_str(T);
        return {};
    });

    run_instances(rep, "pair", pair_count, opt.mode,
                  [&](std::uint64_t i) -> std::string {
        std::uint64_t m1;
        std::uint64_t m2;
        if (exhaustive_pairs) {
            m1 = i / nsub;
            m2 = i % nsub;
        } else {
            SplitMix64 rng(mix_seed(opt.seed, kStreamCorrespondence, i));
            m1 = rng.below(nsub);
            m2 = rng.below(nsub);
        }
        SubsetOfS T1(S, mask_flags(m1, npts));
        SubsetOfS T2(S, mask_flags(m2, npts));
        Ideal I1 = vanishing_ideal(T1);
        Ideal I2 = vanishing_ideal(T2);
        bool contained = true;
        for (const RingElement& g : I2.generators())
            contained = contained && membership(g, I1);
        if (contained != is_subset(T1, T2))
            return "vanishing_ideal(T2) <= vanishing_ideal(T1) disagrees with "
                   "T1 <= T2 for T1=" + subset_str(T1) + ", T2=" + subset_str(T2);
        return {};
    });

    rep.elapsed_seconds = timer.stop();
    return rep;
}

VerificationReport verify_nullstellensatz(const PointSet& S, const VerifyOptions& opt) {
    Timer timer;
    VerificationReport rep;
    rep.statement_id = "thm-2.1";
    const std::size_t npts = S.size();
    const FieldSpec K = S.spec();
    const std::uint64_t q = K.q();
    const bool oracle_on = pow_capped(q, npts, kOracleCap) <= kOracleCap;
    const bool lift_on = npts * q <= kMaxPoints;
    const MembershipFn mem = effective_membership(opt);
    rep.context = describe(S) + "; trials=" + std::to_string(opt.trials) +
                  "; seed=" + std::to_string(opt.seed) +
                  "; oracle=" + (oracle_on ? "on" : "off") +
                  "; lift=" + (lift_on ? "on" : "off") +
                  (opt.membership_override ? "; membership=injected" : "");

    run_instances(rep, "trial", opt.trials, opt.mode,
                  [&](std::uint64_t i) -> std::string {
        SplitMix64 rng(mix_seed(opt.seed, kStreamNull, i));
        Ideal J = random_ideal(S, rng);
        RingElement phi = random_function(S, rng);
        const std::string inputs =
            " for gens=" + gens_str(J) + ", phi=" + values_str(phi.values());

        std::vector<bool> defv(npts);
        bool proper = false;
        for (std::size_t a = 0; a < npts; ++a) {
            bool z = true;
            for (const RingElement& g : J.generators())
                z = z && g.value_at(a).is_zero();
            defv[a] = z;
            proper = proper || z;
        }
        SubsetOfS V = variety(J);
        if (V.flags() != defv)
            return "variety(J) disagrees with direct generator evaluation" + inputs;
        if (is_proper(J) != proper)
            return "is_proper(J) != (variety nonempty)" + inputs;
        if (proper) {
            Ideal IV = vanishing_ideal(V);
            if (!equal_ideals(IV, J))
                return "vanishing_ideal(variety(J)) != J" + inputs;
            if (oracle_on && !oracle_membership(IV.generators().front(), J))
                return "generator of vanishing_ideal(variety(J)) is not a "
                       "combination of J's generators" + inputs;
        }

        bool def_member = true;
        for (std::size_t a = 0; a < npts; ++a) {
            if (defv[a] && !phi.value_at(a).is_zero()) {
                def_member = false;
                break;
            }
        }
        if (mem(phi, J) != def_member)
            return "membership(phi, J) disagrees with vanish-on-variety" + inputs;
        if (oracle_on && oracle_membership(phi, J) != def_member)
            return "span oracle disagrees with vanish-on-variety" + inputs;

        if (def_member) {
            MembershipCertificate cert = certify(phi, J);
            if (cert.m != 1) return "certificate exponent m != 1" + inputs;
            if (!verify_certificate(phi, J, cert))
                return "certificate identity sum(h_i*g_i) == phi failed" + inputs;
        } else {
            try {
                certify(phi, J);
                return "certify accepted a non-member" + inputs;
            } catch (const NonMemberError&) {
            }
        }

        if (lift_on) {
            RabinowitschLift lift = rabinowitsch_lift(J, phi);
            if (is_proper(lift.lifted) == def_member)
                return std::string("adjoined-variable criterion disagrees: lifted ideal ") +
                       (def_member ? "stayed proper" : "became improper") + inputs;
        }
        return {};
    });

    rep.elapsed_seconds = timer.stop();
    return rep;
}

VerificationReport verify_weak(const PointSet& S, const VerifyOptions& opt) {
    Timer timer;
    VerificationReport rep;
    rep.statement_id = "prop-2.2";
    const std::size_t npts = S.size();
    const FieldSpec K = S.spec();
    const std::uint64_t F = pow_capped(K.q(), npts, kSweepHardCap);
    const bool exhaustive = opt.force_exhaustive.value_or(F * F <= kPairCap);
    if (exhaustive && F > kSweepHardCap)
        throw CapacityError("exhaustive generator-pair sweep needs q^|S| <= 1024");
    const std::uint64_t count = exhaustive ? F * F : opt.trials;
    rep.context = describe(S) + "; pairs=" +
                  (exhaustive ? "all " + std::to_string(count)
                              : "sampled " + std::to_string(count)) +
                  "; seed=" + std::to_string(opt.seed);
    const RingElement one = ring_one(S);

    run_instances(rep, "pair", count, opt.mode,
                  [&](std::uint64_t i) -> std::string {
        auto make_pair = [&]() -> std::pair<RingElement, RingElement> {
            if (exhaustive)
                return {RingElement::from_values(S, decode_function(K, npts, i / F)),
                        RingElement::from_values(S, decode_function(K, npts, i % F))};
            SplitMix64 rng(mix_seed(opt.seed, kStreamWeak, i));
            RingElement a = random_function(S, rng);
            RingElement b = random_function(S, rng);
            return {std::move(a), std::move(b)};
        };
        auto [g1, g2] = make_pair();
        Ideal J(S, {g1, g2});
        const std::string inputs = " for gens=" + gens_str(J);

        bool empty_variety = true;
        for (std::size_t a = 0; a < npts; ++a) {
            if (g1.value_at(a).is_zero() && g2.value_at(a).is_zero()) {
                empty_variety = false;
                break;
            }
        }
        if (is_proper(J) == empty_variety)
            return "is_proper disagrees with direct evaluation" + inputs;

        if (empty_variety) {
            RingElement w = single_nonvanishing_witness(J);
            if (!w.is_nowhere_zero())
                return "witness vanishes somewhere" + inputs +
                       ", w=" + values_str(w.values());
            MembershipCertificate uc = unit_certificate(J);
            if (uc.m != 1) return "unit certificate exponent m != 1" + inputs;
            if (!verify_certificate(one, J, uc))
                return "unit certificate identity sum(h_i*g_i) == [1] failed" + inputs;
        } else {
            try {
                single_nonvanishing_witness(J);
                return "witness produced though the variety is nonempty" + inputs;
            } catch (const ProperIdealError&) {
            }
            try {
                unit_certificate(J);
                return "unit certificate produced for a proper ideal" + inputs;
            } catch (const ProperIdealError&) {
            }
        }
        return {};
    });

    rep.elapsed_seconds = timer.stop();
    return rep;
}

VerificationReport verify_radical(const PointSet& S, const VerifyOptions& opt) {
    Timer timer;
    VerificationReport rep;
    rep.statement_id = "prop-2.1";
    const FieldSpec K = S.spec();
    const std::uint64_t q = K.q();
    rep.context = describe(S) + "; trials=" + std::to_string(opt.trials) +
                  "; m<=" + std::to_string(2 * q) +
                  "; seed=" + std::to_string(opt.seed);

    run_instances(rep, "trial", opt.trials, opt.mode,
                  [&](std::uint64_t i) -> std::string {
        SplitMix64 rng(mix_seed(opt.seed, kStreamRadical, i));
        RingElement phi = random_function(S, rng);
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(2 * q));
        const std::string inputs =
            " for phi=" + values_str(phi.values()) + ", m=" + std::to_string(m);
        RingElement phim = r_pow(phi, m);
        Ideal I1 = Ideal::principal(phi);
        Ideal Im = Ideal::principal(phim);
        if (!equal_ideals(I1, Im)) return "<phi> != <phi^m>" + inputs;
        if (!membership(phi, Im)) return "phi is not a member of <phi^m>" + inputs;
        if (!equal_ideals(radical(Im), Im)) return "radical changed the ideal" + inputs;
        BezoutWitness bw = bezout_witness(m, K);
        RingElement rebuilt = r_mul(apply_univariate(bw.u, phi), phim);
        if (!(rebuilt == phi)) return "u(phi) * phi^m != phi" + inputs;
        return {};
    });

    rep.elapsed_seconds = timer.stop();
    return rep;
}

VerificationReport verify_quotient(const PointSet& S, const VerifyOptions& opt) {
    Timer timer;
    VerificationReport rep;
    rep.statement_id = "prop-3.2";
    const std::size_t npts = S.size();
    const FieldSpec K = S.spec();
    const std::uint64_t q = K.q();
    const std::uint64_t F = pow_capped(q, npts, kOracleCap);
    if (F > kOracleCap)
        throw CapacityError(
            "verify_quotient enumerates q^|S| functions; needs q^|S| <= 65536");
    const std::uint64_t nsub = 1ull << npts;
    const bool exhaustive = opt.force_exhaustive.value_or(nsub * nsub <= kPairCap);
    const std::uint64_t count = exhaustive ? nsub * nsub : opt.trials;
    const std::uint64_t per_pair = F * F * npts;
    std::uint64_t stride = 0;
    if (per_pair <= kBruteBudget) {
        stride = std::max<std::uint64_t>(1, count * per_pair / kBruteBudget);
        if (stride > count) stride = count;
    }
    rep.context = describe(S) + "; pairs=" +
                  (exhaustive ? "all " + std::to_string(count)
                              : "sampled " + std::to_string(count)) +
                  "; brute=" +
                  (stride == 0 ? "off"
                   : stride == 1 ? "all"
                                 : "stride " + std::to_string(stride)) +
                  "; seed=" + std::to_string(opt.seed);

    run_instances(rep, "pair", count, opt.mode,
                  [&](std::uint64_t i) -> std::string {
        std::uint64_t m1;
        std::uint64_t m2;
        if (exhaustive) {
            m1 = i / nsub;
            m2 = i % nsub;
        } else {
            SplitMix64 rng(mix_seed(opt.seed, kStreamQuotient, i));
            m1 = rng.below(nsub);
            m2 = rng.below(nsub);
        }
        SubsetOfS T1(S, mask_flags(m1, npts));
        SubsetOfS T2(S, mask_flags(m2, npts));
        const std::string inputs =
            " for T1=" + subset_str(T1) + ", T2=" + subset_str(T2);
        Ideal I1 = vanishing_ideal(T1);
        Ideal I2 = vanishing_ideal(T2);
        Ideal Q = quotient(I1, I2);
        SubsetOfS D = set_difference(T1, T2);
        if (!equal_ideals(Q, vanishing_ideal(D)))
            return "quotient != vanishing ideal of the set difference" + inputs;

        if (stride != 0 && i % stride == 0) {
            // Definitional quotient, no shortcuts: phi is in (I1 : I2) iff
            // phi*psi vanishes on T1 for every psi vanishing on T2. Functions
            // are swept as base-q digit vectors; a product of field elements
            // vanishes iff one factor does, so only zero-patterns matter.
            const std::vector<bool> vq = variety(Q).flags();
            const std::vector<bool>& t1 = T1.flags();
            const std::vector<bool>& t2 = T2.flags();
            std::vector<std::uint8_t> pd(npts);
            std::vector<std::uint8_t> sd(npts);
            for (std::uint64_t fc = 0; fc < F; ++fc) {
                std::uint64_t t = fc;
                for (std::size_t a = 0; a < npts; ++a) {
                    pd[a] = static_cast<std::uint8_t>(t % q);
                    t /= q;
                }
                bool brute_in = true;
                for (std::uint64_t gc = 0; gc < F && brute_in; ++gc) {
                    std::uint64_t u = gc;
                    bool vanishes_on_t2 = true;
                    for (std::size_t a = 0; a < npts; ++a) {
                        sd[a] = static_cast<std::uint8_t>(u % q);
                        u /= q;
                        if (sd[a] != 0 && t2[a]) {
                            vanishes_on_t2 = false;
                            break;
                        }
                    }
                    if (!vanishes_on_t2) continue;
                    for (std::size_t a = 0; a < npts; ++a) {
                        if (t1[a] && pd[a] != 0 && sd[a] != 0) {
                            brute_in = false;
                            break;
                        }
                    }
                }
                bool quotient_in = true;
                for (std::size_t a = 0; a < npts; ++a) {
                    if (vq[a] && pd[a] != 0) {
                        quotient_in = false;
                        break;
                    }
                }
                if (brute_in != quotient_in)
                    return "definitional quotient disagrees for function code " +
                           std::to_string(fc) + inputs;
            }
        }
        return {};
    });

    rep.elapsed_seconds = timer.stop();
    return rep;
}

VerificationReport verify_prop33(const PointSet& S, const VerifyOptions& opt) {
    Timer timer;
    VerificationReport rep;
    rep.statement_id = "prop-3.3";
    const std::size_t npts = S.size();
    const FieldSpec K = S.spec();
    const std::uint64_t q = K.q();
    const std::uint64_t F = pow_capped(q, npts, kSweepHardCap);
    const bool exhaustive = opt.force_exhaustive.value_or(F * F <= kPairCap);
    if (exhaustive && F > kSweepHardCap)
        throw CapacityError("exhaustive function-pair sweep needs q^|S| <= 1024");
    const std::uint64_t count = exhaustive ? F * F : opt.trials;
    const bool oracle_on = pow_capped(q, npts, kOracleCap) <= kOracleCap;
    rep.context = describe(S) + "; pairs=" +
                  (exhaustive ? "all " + std::to_string(count)
                              : "sampled " + std::to_string(count)) +
                  "; oracle=" + (oracle_on ? "on" : "off") +
                  "; seed=" + std::to_string(opt.seed);
    const RingElement one = ring_one(S);
    const std::uint64_t e = q - 1;

    run_instances(rep, "pair", count, opt.mode,
                  [&](std::uint64_t i) -> std::string {
        auto make_pair = [&]() -> std::pair<RingElement, RingElement> {
            if (exhaustive)
                return {RingElement::from_values(S, decode_function(K, npts, i / F)),
                        RingElement::from_values(S, decode_function(K, npts, i % F))};
            SplitMix64 rng(mix_seed(opt.seed, kStreamProp33, i));
            RingElement a = random_function(S, rng);
            RingElement b = random_function(S, rng);
            return {std::move(a), std::move(b)};
        };
        auto [f, g] = make_pair();
        const std::string inputs =
            " for f=" + values_str(f.values()) + ", g=" + values_str(g.values());
        RingElement fe = r_pow(f, e);
        RingElement ge = r_pow(g, e);

        Ideal lhs1 = Ideal::principal(r_sub(r_mul(fe, ge), one));
        Ideal rhs1 = sum(Ideal::principal(r_sub(fe, one)),
                         Ideal::principal(r_sub(ge, one)));
        if (!(variety(lhs1) == variety(rhs1)))
            return "variety identity (fg)^(q-1)-1 vs intersection failed" + inputs;
        if (!equal_ideals(lhs1, rhs1))
            return "ideal identity <(fg)^(q-1)-1> = <f^(q-1)-1> + <g^(q-1)-1> failed" +
                   inputs;
        if (oracle_on) {
            if (!oracle_membership(lhs1.generators().front(), rhs1))
                return "(fg)^(q-1)-1 escapes the span of the sum's generators" + inputs;
            for (const RingElement& gen : rhs1.generators())
                if (!oracle_membership(gen, lhs1))
                    return "a sum generator escapes the span of <(fg)^(q-1)-1>" + inputs;
        }

        Ideal lhs2 = Ideal::principal(r_sub(r_mul(fe, ge), r_add(fe, ge)));
        Ideal rhs2 = sum(Ideal::principal(f), Ideal::principal(g));
        if (!(variety(lhs2) == variety(rhs2)))
            return "variety identity (fg)^(q-1)-f^(q-1)-g^(q-1) vs union failed" + inputs;
        if (!equal_ideals(lhs2, rhs2))
            return "ideal identity <(fg)^(q-1)-f^(q-1)-g^(q-1)> = <f> + <g> failed" +
                   inputs;
        if (oracle_on) {
            if (!oracle_membership(lhs2.generators().front(), rhs2))
                return "(fg)^(q-1)-f^(q-1)-g^(q-1) escapes the span of <f> + <g>" +
                       inputs;
            for (const RingElement& gen : rhs2.generators())
                if (!oracle_membership(gen, lhs2))
                    return "a generator of <f> + <g> escapes the span of the "
                           "power combination" + inputs;
        }
        return {};
    });

    rep.elapsed_seconds = timer.stop();
    return rep;
}

VerificationReport verify_corollary_2_3(FieldSpec spec, std::size_t nvars,
                                        const VerifyOptions& opt) {
    Timer timer;
    VerificationReport rep;
    rep.statement_id = "cor-2.3";
    const std::uint64_t q = spec.q();
    if (pow_capped(q, nvars, 4096) > 4096)
        throw CapacityError("verify_corollary_2_3 needs q^n <= 4096");
    PointSet S = PointSet::full(spec, nvars);
    const std::size_t npts = S.size();
    const std::uint64_t count = nvars + opt.trials;
    rep.context = describe(S) + "; field-equations=" + std::to_string(nvars) +
                  "; trials=" + std::to_string(opt.trials) +
                  "; max-exponent=" + std::to_string(2 * q) +
                  "; seed=" + std::to_string(opt.seed);

    run_instances(rep, "instance", count, opt.mode,
                  [&](std::uint64_t i) -> std::string {
        Polynomial f = Polynomial::zero(spec, nvars);
        if (i < nvars) {
            // x_i^q - x_i, the field equation for coordinate i.
            Monomial hi(nvars);
            Monomial lo(nvars);
            hi[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(q);
            lo[static_cast<std::size_t>(i)] = 1;
            f.add_term(std::move(hi), spec.one());
            f.add_term(std::move(lo), neg(spec.one()));
        } else {
            SplitMix64 rng(mix_seed(opt.seed, kStreamCor23, i));
            f = random_polynomial(spec, nvars, rng,
                                  static_cast<std::uint32_t>(2 * q));
        }
        const std::string inputs = " for f=" + poly_str(f);
        RingElement el = embed(f, S);
        bool vanishes_everywhere = true;
        for (std::size_t a = 0; a < npts; ++a) {
            if (!f.evaluate(S.point(a)).is_zero()) {
                vanishes_everywhere = false;
                break;
            }
        }
        if (el.is_zero() != vanishes_everywhere)
            return "embedded element is zero but f does not vanish everywhere "
                   "(or vice versa)" + inputs;
        if (el.representative().is_zero() != vanishes_everywhere)
            return "reduced representative is the zero polynomial exactly when "
                   "f vanishes on the whole grid: violated" + inputs;
        if (i < nvars && !vanishes_everywhere)
            return "field equation does not vanish on the grid" + inputs;
        if (variety(Ideal::principal(el)).is_all() != vanishes_everywhere)
            return "variety of <[f]> is the whole grid iff f vanishes "
                   "everywhere: violated" + inputs;
        return {};
    });

    rep.elapsed_seconds = timer.stop();
    return rep;
}

std::vector<VerificationReport> verify_all(const VerifyGrid& grid,
                                           const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    for (const FieldSpec& K : grid.fields) {
        for (const std::size_t n : grid.nvars) {
            if (pow_capped(K.q(), n, kMaxPoints) > kMaxPoints)
                throw CapacityError("grid cell " + K.descriptor() + "^" +
                                    std::to_string(n) + " exceeds the point cap");
            PointSet full = PointSet::full(K, n);
            std::vector<PointSet> cells;
            cells.push_back(full);
            if (full.size() >= 2) {
                for (std::uint32_t k = 0; k < grid.random_subsets_per_cell; ++k) {
                    SplitMix64 rng(mix_seed(
                        opt.seed, kStreamGridSubset,
                        (static_cast<std::uint64_t>(K.q()) << 24) ^
                            (static_cast<std::uint64_t>(n) << 16) ^ k));
                    cells.push_back(random_proper_subset(full, rng));
                }
            }
            for (const PointSet& S : cells) {
                if (S.size() <= 16) out.push_back(verify_correspondence(S, opt));
                out.push_back(verify_nullstellensatz(S, opt));
                out.push_back(verify_weak(S, opt));
                out.push_back(verify_radical(S, opt));
                if (pow_capped(K.q(), S.size(), kOracleCap) <= kOracleCap)
                    out.push_back(verify_quotient(S, opt));
                out.push_back(verify_prop33(S, opt));
            }
            if (pow_capped(K.q(), n, 4096) <= 4096)
                out.push_back(verify_corollary_2_3(K, n, opt));
        }
    }
    return out;
}

} // namespace fqring
