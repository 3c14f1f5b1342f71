#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "fqring/expr.hpp"
#include "fqring/gf.hpp"
#include "fqring/ring.hpp"
#include "fqring/rng.hpp"

using namespace fqring;

namespace {

Polynomial P(const std::string& text, FieldSpec spec, std::size_t nvars) {
    return parse_polynomial(text, spec, nvars);
}

std::vector<FieldElement> pt1(FieldSpec f, std::uint32_t a) {
    return {f.element(a)};
}

std::vector<FieldElement> pt2(FieldSpec f, std::uint32_t a, std::uint32_t b) {
    return {f.element(a), f.element(b)};
}

RingElement random_element(const PointSet& S, SplitMix64& rng) {
    std::vector<FieldElement> vals;
    for (std::size_t i = 0; i < S.size(); ++i)
        vals.push_back(S.spec().element(
            static_cast<std::uint32_t>(rng.below(S.spec().q()))));
    return RingElement::from_values(S, std::move(vals));
}

} // namespace

TEST_CASE("full grids enumerate points in canonical order") {
    FieldSpec f2 = FieldSpec::from_order(2);
    PointSet S = PointSet::full(f2, 2);
    REQUIRE(S.size() == 4);
    CHECK(S.is_full());
    // Lexicographic, first coordinate most significant.
    const std::uint32_t expected[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        auto p = S.point(i);
        CHECK(p[0].index() == expected[i][0]);
        CHECK(p[1].index() == expected[i][1]);
        CHECK(S.index_of(p) == i);
    }
    CHECK(PointSet::full(FieldSpec::from_order(4), 3).size() == 64);
    CHECK_THROWS_AS(PointSet::full(f2, 17), CapacityError);
}

TEST_CASE("explicit point sets sort, deduplicate and validate") {
    FieldSpec f3 = FieldSpec::from_order(3);
    PointSet S = PointSet::of(
        f3, 1, {pt1(f3, 2), pt1(f3, 0), pt1(f3, 2), pt1(f3, 0)});
    REQUIRE(S.size() == 2);
    CHECK(S.point(0)[0].index() == 0);
    CHECK(S.point(1)[0].index() == 2);
    CHECK_FALSE(S.is_full());
    CHECK_FALSE(S.index_of(pt1(f3, 1)).has_value());
    CHECK(S == PointSet::of(f3, 1, {pt1(f3, 0), pt1(f3, 2)}));
    CHECK(S != PointSet::full(f3, 1));

    CHECK_THROWS_AS(PointSet::of(f3, 1, {}), DomainError);
    CHECK_THROWS_AS(PointSet::of(f3, 2, {pt1(f3, 0)}), DomainError);
    FieldSpec f2 = FieldSpec::from_order(2);
    CHECK_THROWS_AS(PointSet::of(f3, 1, {pt1(f2, 0)}), SpecMismatchError);
}

TEST_CASE("a full explicit listing is recognized as the whole grid") {
    FieldSpec f2 = FieldSpec::from_order(2);
    PointSet S = PointSet::of(
        f2, 2, {pt2(f2, 1, 1), pt2(f2, 0, 1), pt2(f2, 1, 0), pt2(f2, 0, 0)});
    CHECK(S.is_full());
    CHECK(S == PointSet::full(f2, 2));
}

TEST_CASE("indicator representatives hit 1 at their point and 0 elsewhere") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        FieldSpec spec = FieldSpec::from_order(q);
        PointSet S = PointSet::full(spec, 2);
        for (std::size_t i = 0; i < S.size(); ++i) {
            const Polynomial& d = S.indicator_representative(i);
            for (std::size_t j = 0; j < S.size(); ++j) {
                FieldElement v = d.evaluate(S.point(j));
                CHECK(v == (i == j ? spec.one() : spec.zero()));
            }
            CHECK(d.degree_in(0) <= static_cast<std::int64_t>(q) - 1);
            CHECK(d.degree_in(1) <= static_cast<std::int64_t>(q) - 1);
        }
    }
}

TEST_CASE("frozen indicator on the 3-element line at the origin") {
    FieldSpec f3 = FieldSpec::from_order(3);
    PointSet S = PointSet::full(f3, 1);
    CHECK(S.indicator_representative(0) == P("2*x^2 + 1", f3, 1));
    CHECK(indicator(S, 0).representative() == P("2*x^2 + 1", f3, 1));
}

TEST_CASE("subset algebra agrees with bitmask arithmetic") {
    FieldSpec f2 = FieldSpec::from_order(2);
    PointSet S = PointSet::full(f2, 3);
    REQUIRE(S.size() == 8);
    auto from_mask = [&](unsigned mask) {
        std::vector<bool> flags(8);
        for (std::size_t i = 0; i < 8; ++i) flags[i] = (mask >> i) & 1u;
        return SubsetOfS(S, flags);
    };
    auto to_mask = [&](const SubsetOfS& t) {
        unsigned m = 0;
        for (std::size_t i = 0; i < 8; ++i)
            if (t.contains(i)) m |= 1u << i;
        return m;
    };
    for (unsigned a = 0; a < 256; ++a) {
        SubsetOfS ta = from_mask(a);
        CHECK(ta.count() == static_cast<std::size_t>(__builtin_popcount(a)));
        CHECK(to_mask(ta.complement()) == (~a & 0xffu));
        CHECK(ta.empty() == (a == 0));
        CHECK(ta.is_all() == (a == 0xffu));
        for (unsigned b = 0; b < 256; b += 37) {
            SubsetOfS tb = from_mask(b);
            CHECK(to_mask(set_union(ta, tb)) == (a | b));
            CHECK(to_mask(set_intersection(ta, tb)) == (a & b));
            CHECK(to_mask(set_difference(ta, tb)) == (a & ~b));
            CHECK(is_subset(ta, tb) == ((a & ~b) == 0));
        }
    }
    CHECK(SubsetOfS::none(S).empty());
    CHECK(SubsetOfS::all(S).is_all());
    std::vector<std::size_t> idx{1, 5};
    SubsetOfS sel = SubsetOfS::of_indices(S, idx);
    CHECK(sel.indices() == idx);
    CHECK_THROWS_AS(SubsetOfS(S, std::vector<bool>(3)), DomainError);
    std::vector<std::size_t> bad{9};
    CHECK_THROWS_AS(SubsetOfS::of_indices(S, bad), DomainError);
}

TEST_CASE("embedding is a ring homomorphism onto evaluation vectors") {
    for (std::uint64_t q : {3ull, 4ull}) {
        FieldSpec spec = FieldSpec::from_order(q);
        PointSet S = PointSet::full(spec, 2);
        SplitMix64 rng(q * 31);
        for (int it = 0; it < 25; ++it) {
            Polynomial f(spec, 2), g(spec, 2);
            for (int t = 0; t < 3; ++t) {
                f.add_term({static_cast<std::uint32_t>(rng.below(4)),
                            static_cast<std::uint32_t>(rng.below(4))},
                           spec.element(static_cast<std::uint32_t>(rng.below(q))));
                g.add_term({static_cast<std::uint32_t>(rng.below(4)),
                            static_cast<std::uint32_t>(rng.below(4))},
                           spec.element(static_cast<std::uint32_t>(rng.below(q))));
            }
            CHECK(embed(f + g, S) == embed(f, S) + embed(g, S));
            CHECK(embed(f * g, S) == embed(f, S) * embed(g, S));
            CHECK(embed(-f, S) == -embed(f, S));
            for (std::size_t i = 0; i < S.size(); ++i)
                CHECK(embed(f, S).value_at(i) == f.evaluate(S.point(i)));
        }
    }
}

TEST_CASE("equality is functional: field equations embed to the same class") {
    FieldSpec f3 = FieldSpec::from_order(3);
    PointSet S = PointSet::full(f3, 1);
    CHECK(embed(P("x^3", f3, 1), S) == embed(P("x", f3, 1), S));
    CHECK(embed(P("x^3 + 2*x", f3, 1), S).is_zero());
    CHECK(embed(P("x^2 + 1", f3, 1), S) != embed(P("x + 1", f3, 1), S));
    // Representatives of embeddings are exponent-reduced.
    RingElement e = embed(P("x^7", f3, 1), S);
    CHECK(e.representative() == P("x", f3, 1));
}

TEST_CASE("interpolation reproduces prescribed value vectors") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        FieldSpec spec = FieldSpec::from_order(q);
        PointSet full = PointSet::full(spec, 1);
        std::vector<std::vector<FieldElement>> sub;
        for (std::uint32_t a = 0; a + 1 < q; ++a) sub.push_back(pt1(spec, a));
        PointSet S = q > 2 ? PointSet::of(spec, 1, sub) : full;
        SplitMix64 rng(q * 101);
        for (int it = 0; it < 20; ++it) {
            std::vector<FieldElement> vals;
            for (std::size_t i = 0; i < S.size(); ++i)
                vals.push_back(spec.element(
                    static_cast<std::uint32_t>(rng.below(q))));
            RingElement e = interpolate(S, vals);
            CHECK(e.values() == vals);
            // The representative induces exactly these values.
            for (std::size_t i = 0; i < S.size(); ++i)
                CHECK(e.representative().evaluate(S.point(i)) == vals[i]);
            CHECK(RingElement::from_values(S, vals) == e);
        }
        std::vector<FieldElement> wrong(S.size() + 1, spec.zero());
        CHECK_THROWS_AS(interpolate(S, wrong), DomainError);
    }
}

TEST_CASE("indicators form a complete orthogonal family of idempotents") {
    FieldSpec f4 = FieldSpec::from_order(4);
    PointSet S = PointSet::of(
        f4, 1, {pt1(f4, 0), pt1(f4, 2), pt1(f4, 3)});
    RingElement total = indicator(S, 0);
    for (std::size_t i = 0; i < S.size(); ++i) {
        RingElement d = indicator(S, i);
        CHECK(d * d == d);
        for (std::size_t j = 0; j < S.size(); ++j) {
            CHECK(d.value_at(j) == (i == j ? f4.one() : f4.zero()));
            if (j != i) CHECK((d * indicator(S, j)).is_zero());
        }
        if (i > 0) total = total + d;
    }
    CHECK(total.is_one());
    // Addressed by point.
    CHECK(indicator(S, S.point(1)) == indicator(S, 1));
    CHECK_THROWS_AS(indicator(S, pt1(f4, 1)), DomainError);
}

TEST_CASE("power and scalar operations act pointwise") {
    FieldSpec f5 = FieldSpec::from_order(5);
    PointSet S = PointSet::full(f5, 1);
    SplitMix64 rng(2024);
    for (int it = 0; it < 20; ++it) {
        RingElement a = random_element(S, rng);
        RingElement b = random_element(S, rng);
        for (std::size_t i = 0; i < S.size(); ++i) {
            CHECK((a + b).value_at(i) == add(a.value_at(i), b.value_at(i)));
            CHECK((a * b).value_at(i) == mul(a.value_at(i), b.value_at(i)));
            CHECK((a - b).value_at(i) == sub(a.value_at(i), b.value_at(i)));
            CHECK(r_pow(a, 3).value_at(i) == pow(a.value_at(i), 3));
            CHECK(r_scale(f5.from_int(2), a).value_at(i) ==
                  mul(f5.from_int(2), a.value_at(i)));
        }
        // Fermat on functions: a^q == a, and a^(q-1) is 0/1-valued.
        CHECK(r_pow(a, 5) == a);
        RingElement support = r_pow(a, 4);
        for (std::size_t i = 0; i < S.size(); ++i) {
            bool zero = a.value_at(i).is_zero();
            CHECK(support.value_at(i) == (zero ? f5.zero() : f5.one()));
        }
        CHECK(a.is_nowhere_zero() == support.is_one());
    }
}

TEST_CASE("vanishing generators of a point set vanish exactly on it") {
    for (std::uint64_t q : {2ull, 3ull}) {
        FieldSpec spec = FieldSpec::from_order(q);
        PointSet grid = PointSet::full(spec, 2);
        // A proper subset: drop the last grid point.
        std::vector<std::vector<FieldElement>> pts;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
            pts.emplace_back(grid.point(i).begin(), grid.point(i).end());
        PointSet S = PointSet::of(spec, 2, pts);
        std::vector<Polynomial> gens = ideal_of_pointset(S);
        REQUIRE_FALSE(gens.empty());
        for (std::size_t gi = 0; gi < grid.size(); ++gi) {
            bool in_s = S.index_of(grid.point(gi)).has_value();
            bool all_vanish = true;
            for (const Polynomial& g : gens)
                if (!g.evaluate(grid.point(gi)).is_zero()) all_vanish = false;
            CHECK(all_vanish == in_s);
        }
    }
}

TEST_CASE("the full grid's vanishing generators are the field equations") {
    FieldSpec f3 = FieldSpec::from_order(3);
    PointSet S = PointSet::full(f3, 2);
    std::vector<Polynomial> gens = ideal_of_pointset(S);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == P("x^3 + 2*x", f3, 2));
    CHECK(gens[1] == P("y^3 + 2*y", f3, 2));
}

TEST_CASE("value vectors must match the ring in size and field") {
    FieldSpec f3 = FieldSpec::from_order(3);
    FieldSpec f2 = FieldSpec::from_order(2);
    PointSet S = PointSet::full(f3, 1);
    std::vector<FieldElement> foreign{f2.one(), f2.zero(), f2.one()};
    CHECK_THROWS_AS(RingElement::from_values(S, foreign), SpecMismatchError);
    std::vector<FieldElement> short_vec{f3.one()};
    CHECK_THROWS_AS(RingElement::from_values(S, short_vec), DomainError);
    PointSet other = PointSet::of(f3, 1, {pt1(f3, 0)});
    RingElement a = embed(P("x", f3, 1), S);
    RingElement b = embed(P("x", f3, 1), other);
    CHECK_THROWS_AS(a + b, SpecMismatchError);
}
