#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "fqring/expr.hpp"
#include "fqring/gf.hpp"
#include "fqring/ideal.hpp"
#include "fqring/ring.hpp"
#include "fqring/verify.hpp"

using namespace fqring;

namespace {

bool same_report(const VerificationReport& a, const VerificationReport& b) {
    return a.statement_id == b.statement_id && a.context == b.context &&
           a.instance_count == b.instance_count &&
           a.failure_count == b.failure_count && a.failures == b.failures;
}

VerifyOptions opts(std::uint64_t trials, std::uint64_t seed,
                   ExecMode mode = default_exec_mode()) {
    VerifyOptions o;
    o.trials = trials;
    o.seed = seed;
    o.mode = mode;
    return o;
}

PointSet sub3(FieldSpec spec) {
    // {0, 1} inside the line over the given field.
    return PointSet::of(spec, 1,
                        {{spec.element(0)}, {spec.element(1)}});
}

} // namespace

TEST_CASE("every statement verifier passes on small full grids") {
    for (std::uint64_t q : {2ull, 3ull}) {
        for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
            PointSet S = PointSet::full(FieldSpec::from_order(q), n);
            VerifyOptions o = opts(40, 5);
            std::vector<VerificationReport> reports;
            reports.push_back(verify_correspondence(S, o));
            reports.push_back(verify_nullstellensatz(S, o));
            reports.push_back(verify_weak(S, o));
            reports.push_back(verify_radical(S, o));
            if (S.size() <= 8) reports.push_back(verify_quotient(S, o));
            reports.push_back(verify_prop33(S, o));
            for (const VerificationReport& r : reports) {
                CAPTURE(r.statement_id);
                CAPTURE(r.context);
                CHECK(r.pass());
                CHECK(r.instance_count > 0);
                CHECK(r.failures.empty());
            }
        }
    }
}

TEST_CASE("verifiers pass on the extension field and on proper subsets") {
    PointSet f4line = PointSet::full(FieldSpec::from_order(4), 1);
    PointSet sub = sub3(FieldSpec::from_order(5));
    for (const PointSet& S : {f4line, sub}) {
        VerifyOptions o = opts(30, 9);
        CHECK(verify_correspondence(S, o).pass());
        CHECK(verify_nullstellensatz(S, o).pass());
        CHECK(verify_weak(S, o).pass());
        CHECK(verify_radical(S, o).pass());
        CHECK(verify_quotient(S, o).pass());
        CHECK(verify_prop33(S, o).pass());
    }
    CHECK(verify_corollary_2_3(FieldSpec::from_order(4), 2, opts(50, 3)).pass());
}

TEST_CASE("serial and parallel execution produce identical reports") {
    PointSet S = PointSet::full(FieldSpec::from_order(3), 1);
    for (int which = 0; which < 6; ++which) {
        auto run = [&](ExecMode mode) {
            VerifyOptions o = opts(50, 11, mode);
            switch (which) {
                case 0: return verify_correspondence(S, o);
                case 1: return verify_nullstellensatz(S, o);
                case 2: return verify_weak(S, o);
                case 3: return verify_radical(S, o);
                case 4: return verify_quotient(S, o);
                default: return verify_prop33(S, o);
            }
        };
        VerificationReport rs = run(ExecMode::Serial);
        VerificationReport rp = run(ExecMode::Parallel);
        CAPTURE(rs.statement_id);
        CHECK(same_report(rs, rp));
    }
    VerificationReport cs =
        verify_corollary_2_3(FieldSpec::from_order(2), 2, opts(60, 2, ExecMode::Serial));
    VerificationReport cp =
        verify_corollary_2_3(FieldSpec::from_order(2), 2, opts(60, 2, ExecMode::Parallel));
    CHECK(same_report(cs, cp));
}

TEST_CASE("reports are deterministic across repeated runs") {
    PointSet S = PointSet::full(FieldSpec::from_order(4), 1);
    VerificationReport a = verify_nullstellensatz(S, opts(25, 77));
    VerificationReport b = verify_nullstellensatz(S, opts(25, 77));
    CHECK(same_report(a, b));
    // Different seeds change the sampled instances but not the verdict.
    VerificationReport c = verify_nullstellensatz(S, opts(25, 78));
    CHECK(c.pass());
}

TEST_CASE("a membership that ignores one variety point is caught") {
    PointSet S = PointSet::full(FieldSpec::from_order(2), 1);
    VerifyOptions o = opts(100, 0);
    o.membership_override = [](const RingElement& phi, const Ideal& J) {
        SubsetOfS V = variety(J);
        bool skipped = false;
        for (std::size_t i = 0; i < V.ambient().size(); ++i) {
            if (!V.contains(i)) continue;
            if (!skipped) { skipped = true; continue; } // ignore first point
            if (!phi.value_at(i).is_zero()) return false;
        }
        return true;
    };
    VerificationReport r = verify_nullstellensatz(S, o);
    CHECK_FALSE(r.pass());
    CHECK(r.failure_count >= 1);
    CHECK(!r.failures.empty());
    CHECK(r.failures.size() <= kMaxReportedFailures);
    CHECK(r.failures.size() <= r.failure_count);
    CHECK(r.context.find("membership=injected") != std::string::npos);
}

TEST_CASE("the failure list is truncated but the count is exact") {
    PointSet S = PointSet::full(FieldSpec::from_order(3), 1);
    VerifyOptions o = opts(200, 1);
    o.membership_override = [](const RingElement&, const Ideal&) {
        return false; // reject everything, including genuine members
    };
    VerificationReport r = verify_nullstellensatz(S, o);
    CHECK_FALSE(r.pass());
    CHECK(r.failure_count > kMaxReportedFailures);
    CHECK(r.failures.size() == kMaxReportedFailures);
}

TEST_CASE("the brute-force membership oracles agree with the library") {
    PointSet S = PointSet::full(FieldSpec::from_order(3), 1);
    SplitMix64 rng(321);
    int checked_tuples = 0;
    for (int it = 0; it < 150; ++it) {
        Ideal J = random_ideal(S, rng, 2);
        RingElement phi = random_function(S, rng);
        REQUIRE(oracle_membership_feasible(J));
        bool lib = membership(phi, J);
        CHECK(oracle_membership(phi, J) == lib);
        if (J.generators().size() <= 2) {
            CHECK(oracle_membership_tuples(phi, J) == lib);
            ++checked_tuples;
        }
    }
    CHECK(checked_tuples > 0);
}

TEST_CASE("the span oracle rejects functions outside a principal ideal") {
    PointSet S = PointSet::full(FieldSpec::from_order(3), 1);
    Ideal J(S, {embed(parse_polynomial("x", S.spec(), 1), S)});
    RingElement one = embed(parse_polynomial("1", S.spec(), 1), S);
    RingElement x2 = embed(parse_polynomial("x^2", S.spec(), 1), S);
    CHECK_FALSE(oracle_membership(one, J));
    CHECK(oracle_membership(x2, J));
    CHECK_FALSE(oracle_membership_tuples(one, J));
    CHECK(oracle_membership_tuples(x2, J));
}

TEST_CASE("capacity guards reject oversized verification requests") {
    FieldSpec f2 = FieldSpec::from_order(2);
    PointSet big = PointSet::full(f2, 5); // 32 points
    CHECK_THROWS_AS(verify_correspondence(big, opts(5, 0)), CapacityError);
    CHECK_THROWS_AS(verify_quotient(PointSet::full(f2, 5), opts(5, 0)),
                    CapacityError);
    CHECK_THROWS_AS(verify_corollary_2_3(f2, 13, opts(5, 0)), CapacityError);
    // Forcing the exhaustive arm beyond the hard sweep cap is refused.
    PointSet f4sq = PointSet::full(FieldSpec::from_order(4), 2);
    VerifyOptions forced = opts(5, 0);
    forced.force_exhaustive = true;
    CHECK_THROWS_AS(verify_weak(f4sq, forced), CapacityError);
    // The tuple oracle refuses blowups: 16^16 choices per cofactor.
    PointSet line16 = PointSet::full(FieldSpec::from_order(16), 1);
    SplitMix64 rng(1);
    Ideal J = random_ideal(line16, rng, 3);
    RingElement phi = random_function(line16, rng);
    CHECK_THROWS_AS(oracle_membership_tuples(phi, J), CapacityError);
}

TEST_CASE("forcing the sampled arm switches the context to trial counting") {
    PointSet S = PointSet::full(FieldSpec::from_order(2), 1);
    VerifyOptions o = opts(30, 4);
    o.force_exhaustive = false;
    VerificationReport r = verify_weak(S, o);
    CHECK(r.pass());
    CHECK(r.context.find("pairs=sampled 30") != std::string::npos);
    CHECK(r.instance_count == 30);
    o.force_exhaustive = true;
    VerificationReport e = verify_weak(S, o);
    CHECK(e.context.find("pairs=all 16") != std::string::npos);
    CHECK(e.instance_count == 16);
}

TEST_CASE("contexts spell out the configuration") {
    PointSet S = sub3(FieldSpec::from_order(3));
    VerificationReport r = verify_nullstellensatz(S, opts(12, 99));
    CHECK(r.statement_id == "thm-2.1");
    CHECK(r.context.find("GF(3)^1 |S|=2") != std::string::npos);
    CHECK(r.context.find("trials=12") != std::string::npos);
    CHECK(r.context.find("seed=99") != std::string::npos);
    PointSet F = PointSet::full(FieldSpec::from_order(3), 1);
    VerificationReport rf = verify_correspondence(F, opts(12, 0));
    CHECK(rf.statement_id == "prop-3.1");
    CHECK(rf.context.find("|S|=3 full") != std::string::npos);
}

TEST_CASE("the grid driver covers every cell and statement") {
    VerifyGrid grid;
    grid.fields = {FieldSpec::from_order(2), FieldSpec::from_order(3)};
    grid.nvars = {1};
    grid.random_subsets_per_cell = 2;
    std::vector<VerificationReport> reports = verify_all(grid, opts(15, 0));
    CHECK(!reports.empty());
    std::size_t corr = 0, strong = 0, weak = 0, rad = 0, quot = 0, p33 = 0,
                cor23 = 0;
    for (const VerificationReport& r : reports) {
        CAPTURE(r.statement_id);
        CAPTURE(r.context);
        CHECK(r.pass());
        if (r.statement_id == "prop-3.1") ++corr;
        if (r.statement_id == "thm-2.1") ++strong;
        if (r.statement_id == "prop-2.2") ++weak;
        if (r.statement_id == "prop-2.1") ++rad;
        if (r.statement_id == "prop-3.2") ++quot;
        if (r.statement_id == "prop-3.3") ++p33;
        if (r.statement_id == "cor-2.3") ++cor23;
    }
    // 2 fields x (1 full + 2 subsets) cells for the per-set statements,
    // one grid-level report per field for the reduced-form statement.
    CHECK(corr == 6);
    CHECK(strong == 6);
    CHECK(weak == 6);
    CHECK(rad == 6);
    CHECK(quot == 6);
    CHECK(p33 == 6);
    CHECK(cor23 == 2);
    CHECK(reports.size() == 38);

    // Determinism of the whole batch.
    std::vector<VerificationReport> again = verify_all(grid, opts(15, 0));
    REQUIRE(again.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i)
        CHECK(same_report(reports[i], again[i]));

    VerifyGrid huge;
    huge.fields = {FieldSpec::from_order(4)};
    huge.nvars = {9}; // 4^9 points exceeds the cap
    CHECK_THROWS_AS(verify_all(huge, opts(1, 0)), CapacityError);
}

TEST_CASE("random generators respect their documented ranges") {
    PointSet S = PointSet::full(FieldSpec::from_order(4), 1);
    SplitMix64 rng(8);
    for (int it = 0; it < 100; ++it) {
        Ideal J = random_ideal(S, rng, 3);
        CHECK(J.generators().size() >= 1);
        CHECK(J.generators().size() <= 3);
        PointSet T = random_proper_subset(S, rng);
        CHECK(T.size() >= 1);
        CHECK(T.size() < S.size());
        for (std::size_t i = 0; i < T.size(); ++i)
            CHECK(S.index_of(T.point(i)).has_value());
        Polynomial f = random_polynomial(S.spec(), 2, rng, 6, 4);
        CHECK(f.nvars() == 2);
        CHECK(f.degree_in(0) <= 6);
        CHECK(f.degree_in(1) <= 6);
        SubsetOfS R = random_subset(S, rng);
        CHECK(R.count() <= S.size());
    }
}
