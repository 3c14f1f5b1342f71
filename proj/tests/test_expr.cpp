#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "fqring/expr.hpp"
#include "fqring/gf.hpp"
#include "fqring/poly.hpp"
#include "fqring/rng.hpp"

using namespace fqring;

namespace {

Polynomial P(const std::string& text, FieldSpec spec, std::size_t nvars) {
    return parse_polynomial(text, spec, nvars);
}

std::size_t error_position(const std::string& text, FieldSpec spec,
                           std::size_t nvars) {
    try {
        parse_polynomial(text, spec, nvars);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a parse error for: " << text);
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("canonical text orders terms by degree, then leading variable") {
    FieldSpec f3 = FieldSpec::from_order(3);
    CHECK(to_string(P("1 + 2*x + x^2", f3, 1)) == "x^2 + 2*x + 1");
    CHECK(to_string(P("y + x", f3, 2)) == "x + y");
    CHECK(to_string(P("x*y + z^3", f3, 3)) == "z^3 + x*y");
    CHECK(to_string(Polynomial::zero(f3, 2)) == "0");
    CHECK(to_string(Polynomial::one(f3, 2)) == "1");
    // Coefficient 1 is omitted on nonconstant monomials, exponent 1 is bare.
    CHECK(to_string(P("x^1", f3, 1)) == "x");
    CHECK(to_string(P("2*x^2*y", f3, 2)) == "2*x^2*y");
    // Beyond three variables the alias letters give way to indexed names.
    CHECK(to_string(P("x0*x3 + x1", f3, 4)) == "x0*x3 + x1");
}

TEST_CASE("extension coefficients print in parentheses and reparse") {
    FieldSpec f4 = FieldSpec::from_order(4);
    Polynomial f = P("(t + 1)*x + t", f4, 1);
    CHECK(to_string(f) == "(t+1)*x + t");
    CHECK(P(to_string(f), f4, 1) == f);
    // Constants need no parentheses, in or out of a larger sum.
    CHECK(to_string(P("t*t", f4, 0)) == "t+1");
    Polynomial g = P("x + t + 1", f4, 1);
    CHECK(to_string(g) == "x + t+1");
    CHECK(P(to_string(g), f4, 1) == g);
}

TEST_CASE("parsing follows precedence with explicit products only") {
    FieldSpec f5 = FieldSpec::from_order(5);
    CHECK(P("2 + 3*x^2", f5, 1) == P("3*x*x + 2", f5, 1));
    CHECK(P("(x + 1)^2", f5, 1) == P("x^2 + 2*x + 1", f5, 1));
    CHECK(P("-x", f5, 1) == P("4*x", f5, 1));
    CHECK(P("x - x", f5, 1).is_zero());
    CHECK(P("2^3", f5, 0).constant_term() == f5.from_int(3));
    // A missing '*' is an error, never an implicit product.
    CHECK_THROWS_AS(P("2x", f5, 1), ParseError);
    CHECK_THROWS_AS(P("x y", f5, 2), ParseError);
    CHECK_THROWS_AS(P("(x+1)(x+2)", f5, 1), ParseError);
}

TEST_CASE("parse errors carry exact character offsets") {
    FieldSpec f3 = FieldSpec::from_order(3);
    CHECK(error_position("x +", f3, 1) == 3);
    CHECK(error_position("x^", f3, 1) == 2);
    CHECK(error_position("x^y", f3, 2) == 2);
    CHECK(error_position("(x", f3, 1) == 2);
    CHECK(error_position("x)", f3, 1) == 1);
    CHECK(error_position("x0 + q", f3, 2) == 5);
    CHECK(error_position("x5", f3, 2) == 0);
    CHECK(error_position("x + $", f3, 1) == 4);
    CHECK(error_position("", f3, 1) == 0);
}

TEST_CASE("variable aliases track the ring arity") {
    FieldSpec f3 = FieldSpec::from_order(3);
    CHECK(P("x", f3, 1) == P("x0", f3, 1));
    CHECK(P("y", f3, 2) == P("x1", f3, 2));
    CHECK(P("z", f3, 3) == P("x2", f3, 3));
    // y means nothing on a 1-variable ring, aliases vanish above arity 3.
    CHECK_THROWS_AS(P("y", f3, 1), ParseError);
    CHECK_THROWS_AS(P("x", f3, 4), ParseError);
    CHECK(P("x10", f3, 11).degree_in(10) == 1);
    CHECK(P("x03", f3, 4) == P("x3", f3, 4)); // leading zeros are tolerated
}

TEST_CASE("the generator symbol needs an extension field") {
    CHECK_THROWS_AS(P("t", FieldSpec::from_order(3), 1), ParseError);
    FieldSpec f9 = FieldSpec::from_order(9);
    CHECK(P("t^2", f9, 0).constant_term() == f9.from_int(2));
    CHECK(P("t*x", f9, 1).coefficient({1}) == f9.generator());
}

TEST_CASE("random polynomials survive a print-parse round trip") {
    // 1005 polynomials per field across three arities.
    for (std::uint64_t q : {2ull, 3ull, 4ull, 9ull}) {
        FieldSpec spec = FieldSpec::from_order(q);
        SplitMix64 rng(q * 1009);
        for (std::size_t nvars : {std::size_t{1}, std::size_t{3}, std::size_t{5}}) {
            for (int it = 0; it < 335; ++it) {
                Polynomial f(spec, nvars);
                int terms = static_cast<int>(rng.below(5));
                for (int t = 0; t < terms; ++t) {
                    Monomial m(nvars);
                    for (std::size_t j = 0; j < nvars; ++j)
                        m[j] = static_cast<std::uint32_t>(rng.below(5));
                    f.add_term(m, spec.element(static_cast<std::uint32_t>(
                                   rng.below(q))));
                }
                CHECK(P(to_string(f), spec, nvars) == f);
            }
        }
    }
}

TEST_CASE("field descriptors parse in both spellings and round-trip") {
    CHECK(parse_field_descriptor("GF(2)") == FieldSpec::from_order(2));
    CHECK(parse_field_descriptor("GF(3^2)") == FieldSpec::from_order(9));
    CHECK(parse_field_descriptor("GF(8)") == FieldSpec::from_order(8));
    CHECK(parse_field_descriptor(" GF( 25 ) ") == FieldSpec::from_order(25));
    CHECK(parse_field_descriptor("GF(9; modulus=t^2+1)") ==
          FieldSpec::from_order(9));
    FieldSpec other = parse_field_descriptor("GF(9; modulus=t^2+2*t+2)");
    CHECK(other != FieldSpec::from_order(9));
    CHECK(other.q() == 9);
    CHECK(parse_field_descriptor(other.descriptor()) == other);
    for (std::uint64_t q : {2ull, 4ull, 27ull, 49ull}) {
        FieldSpec f = FieldSpec::from_order(q);
        CHECK(parse_field_descriptor(f.descriptor()) == f);
    }
}

TEST_CASE("descriptor errors distinguish syntax from field construction") {
    // Syntactically fine but no such field: the construction error surfaces.
    CHECK_THROWS_AS(parse_field_descriptor("GF(6)"), DomainError);
    CHECK_THROWS_AS(parse_field_descriptor("GF(1)"), CapacityError);
    CHECK_THROWS_AS(parse_field_descriptor("GF()"), ParseError);
    CHECK_THROWS_AS(parse_field_descriptor("EF(4)"), ParseError);
    CHECK_THROWS_AS(parse_field_descriptor("GF(4; modulus=t^2+1)"),
                    DomainError); // reducible
    CHECK_THROWS_AS(parse_field_descriptor("GF(4; modulus=t^3+t+1)"),
                    ParseError); // degree mismatch
    CHECK_THROWS_AS(parse_field_descriptor("GF(4; modulus=x^2+x+1)"),
                    ParseError); // only t may appear
    CHECK_THROWS_AS(parse_field_descriptor("GF(4) extra"), ParseError);
}

TEST_CASE("elements parse as constant expressions over the field") {
    FieldSpec f9 = FieldSpec::from_order(9);
    CHECK(parse_element("2", f9) == f9.from_int(2));
    CHECK(parse_element("t + 1", f9) == add(f9.generator(), f9.one()));
    CHECK(parse_element("2*t^2", f9) ==
          mul(f9.from_int(2), pow(f9.generator(), 2)));
    CHECK_THROWS_AS(parse_element("x", f9), ParseError);
}

TEST_CASE("point set files round-trip through their text form") {
    FieldSpec f3 = FieldSpec::from_order(3);
    PointSet S = PointSet::of(
        f3, 2,
        {{f3.element(0), f3.element(1)}, {f3.element(2), f3.element(2)}});
    std::string text = to_string(S);
    CHECK(parse_pointset(text) == S);
    PointSet F = PointSet::full(f3, 2);
    CHECK(parse_pointset(to_string(F)) == F);
    CHECK(to_string(F).find("FULL") != std::string::npos);

    PointSet G = parse_pointset(
        "# a comment\nGF(4; modulus=t^2+t+1) n=1\n\n0\nt+1\n");
    CHECK(G.size() == 2);
    CHECK(G.spec() == FieldSpec::from_order(4));
    CHECK(G.point(1)[0] == parse_element("t+1", G.spec()));
}

TEST_CASE("point set errors report line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_pointset(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("expected a parse error");
        return static_cast<std::size_t>(-1);
    };
    CHECK(line_of("") == 0);
    CHECK(line_of("GF(3)") == 0);              // missing n=
    CHECK(line_of("GF(3) n=2") == 0);          // no points
    CHECK(line_of("GF(3) n=2\n0\n") == 1);     // arity mismatch, second line
    CHECK(line_of("GF(3) n=1\n0\nq\n") == 2);  // bad element, third line
    // Integer literals reduce through the prime subfield, so 4 means 1.
    PointSet P = parse_pointset("GF(3) n=1\n0\n4\n");
    CHECK(P.size() == 2);
    CHECK(P.point(1)[0].index() == 1);
}

TEST_CASE("problem files bundle a ring, named polynomials and an operation") {
    std::string text =
        "# demo\n"
        "FIELD GF(4)\n"
        "VARS 2\n"
        "POINTS\n"
        "0, 0\n"
        "1, t\n"
        "t, t+1\n"
        "POLY f = x*y + t\n"
        "POLY g = x + y\n"
        "OP member gens=f phi=g\n";
    ProblemFile pf = parse_problem(text);
    CHECK(pf.field == FieldSpec::from_order(4));
    CHECK(pf.nvars == 2);
    CHECK(pf.points.size() == 3);
    REQUIRE(pf.polys.size() == 2);
    CHECK(pf.find("f") != nullptr);
    CHECK(*pf.find("f") == P("x*y + t", pf.field, 2));
    CHECK(pf.find("missing") == nullptr);
    CHECK(pf.op == "member");
    REQUIRE(pf.op_args.size() == 2);
    CHECK(pf.op_args[0].first == "gens");
    CHECK(pf.op_args[0].second == "f");
    CHECK(pf.op_args[1].second == "g");

    ProblemFile full = parse_problem(
        "FIELD GF(2)\nVARS 1\nPOINTS FULL\nPOLY h = x\n");
    CHECK(full.points.is_full());
    CHECK(full.op.empty());
}

TEST_CASE("problem file structure errors carry their line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_problem(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("expected a parse error");
        return static_cast<std::size_t>(-1);
    };
    // Line positions are 0-based, matching character offsets elsewhere.
    CHECK(line_of("VARS 1\n") == 0);                        // FIELD first
    CHECK(line_of("FIELD GF(2)\nPOLY f = x\n") == 1);       // VARS before POLY
    CHECK(line_of("FIELD GF(2)\nFIELD GF(3)\n") == 1);      // duplicate
    CHECK(line_of("FIELD GF(2)\nVARS 1\nPOLY f = x\nPOLY f = x\n") == 3);
    CHECK(line_of("FIELD GF(2)\nVARS 1\nPOLY f = q\n") == 2);
    CHECK(line_of("FIELD GF(2)\nVARS 1\nOP\n") == 2);       // missing name
    CHECK(line_of("FIELD GF(2)\nVARS 1\nBOGUS x\n") == 2);
    CHECK(line_of("FIELD GF(2)\nVARS 2\n") == 0);           // missing POINTS
    // POINTS FULL may sit on the section header itself.
    ProblemFile pf = parse_problem("FIELD GF(2)\nVARS 2\nPOINTS FULL\n");
    CHECK(pf.points.is_full());
}
