#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fqring/gf.hpp"
#include "fqring/poly.hpp"
#include "fqring/ring.hpp"

namespace fqring {

/// Canonical text form: terms in descending graded-lex order joined by
/// " + "; monomials as '*'-separated variable powers; coefficient 1 omitted
/// from nonconstant monomials; multi-term extension coefficients
/// parenthesized. Rings with up to three variables print x, y, z; larger
/// rings print x0, x1, ...
std::string to_string(const Polynomial& f);

/// Grammar (products always spelled with '*'):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natural)?
///   base   := natural | 't' | variable | '(' expr ')'
/// Variables are x0..x{n-1}; x, y, z are accepted as aliases when the ring
/// has at most three variables. 't' is the extension-field generator.
/// Throws ParseError carrying a 0-based character offset.
Polynomial parse_polynomial(const std::string& text, FieldSpec spec,
                            std::size_t nvars);

/// "GF(q)", "GF(p^k)", or either with "; modulus=<monic polynomial in t>".
FieldSpec parse_field_descriptor(const std::string& text);

/// A single field element: a constant expression such as "2" or "t^2+1".
FieldElement parse_element(const std::string& text, FieldSpec spec);

/// Point set text format: a header "GF(q) n=<nvars>" followed either by the
/// single line "FULL" or by one point per line as comma-separated element
/// expressions. '#' starts a comment line; blank lines are skipped.
/// ParseError positions are 0-based line numbers.
PointSet parse_pointset(const std::string& text);
std::string to_string(const PointSet& S);

/// Line-oriented problem description:
///   FIELD GF(9)            (required; before POINTS and POLY)
///   VARS 2                 (required; before POINTS and POLY)
///   POINTS FULL            (or a bare POINTS followed by point lines)
///   POLY f = x^2 + t*y     (any number; names unique)
///   OP member phi=f        (optional; default operation and arguments)
/// ParseError positions are 0-based line numbers.
struct ProblemFile {
    FieldSpec field;
    std::size_t nvars;
    PointSet points;
    std::vector<std::pair<std::string, Polynomial>> polys;
    std::string op;
    std::vector<std::pair<std::string, std::string>> op_args;

    /// Named polynomial, or nullptr when absent.
    const Polynomial* find(const std::string& name) const;
};

ProblemFile parse_problem(const std::string& text);

} // namespace fqring
