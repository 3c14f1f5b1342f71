#include "fqring/expr.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqring/errors.hpp"

namespace fqring {

namespace {

struct Token {
    enum Kind {
        Number,
        Ident,
        Plus,
        Minus,
        Star,
        Caret,
        LParen,
        RParen,
        Semicolon,
        Equals,
        End,
    };
    Kind kind;
    std::size_t pos;
    std::uint64_t number = 0;
    std::string ident;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Number: return "a number";
        case Token::Ident: return "a name";
        case Token::Plus: return "'+'";
        case Token::Minus: return "'-'";
        case Token::Star: return "'*'";
        case Token::Caret: return "'^'";
        case Token::LParen: return "'('";
        case Token::RParen: return "')'";
        case Token::Semicolon: return "';'";
        case Token::Equals: return "'='";
        case Token::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            std::size_t digits = 0;
            while (i < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[i]))) {
                v = v * 10 + static_cast<std::uint64_t>(src[i] - '0');
                ++digits;
                if (digits > 15)
                    throw ParseError(start, "numeric literal too large");
                ++i;
            }
            out.push_back({Token::Number, start, v, {}});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (i < src.size() &&
                   std::isalnum(static_cast<unsigned char>(src[i]))) {
                name += src[i];
                ++i;
            }
            out.push_back({Token::Ident, start, 0, std::move(name)});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Plus; break;
            case '-': kind = Token::Minus; break;
            case '*': kind = Token::Star; break;
            case '^': kind = Token::Caret; break;
            case '(': kind = Token::LParen; break;
            case ')': kind = Token::RParen; break;
            case ';': kind = Token::Semicolon; break;
            case '=': kind = Token::Equals; break;
            default:
                throw ParseError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, i, 0, {}});
        ++i;
    }
    out.push_back({Token::End, src.size(), 0, {}});
    return out;
}

/// Recursive-descent evaluator over a shared token stream. `t_is_variable`
/// switches 't' from the extension-field generator to variable 0 (used for
/// modulus polynomials, which live in F_p[t]).
class ExprParser {
public:
    ExprParser(const std::vector<Token>& toks, std::size_t start, FieldSpec spec,
               std::size_t nvars, bool t_is_variable)
        : toks_(toks),
          i_(start),
          spec_(spec),
          nvars_(nvars),
          t_is_variable_(t_is_variable) {}

    Polynomial expr() {
        bool negate = false;
        if (peek().kind == Token::Minus) {
            ++i_;
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool minus = peek().kind == Token::Minus;
            ++i_;
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    const Token& peek() const { return toks_[i_]; }

    std::size_t cursor() const { return i_; }

    void expect(Token::Kind kind) {
        if (peek().kind != kind)
            throw ParseError(peek().pos, std::string("expected ") +
                                             token_name(kind) + ", found " +
                                             token_name(peek().kind));
        ++i_;
    }

private:
    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == Token::Star) {
            ++i_;
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (peek().kind != Token::Caret) return b;
        ++i_;
        const Token& e = peek();
        if (e.kind != Token::Number)
            throw ParseError(e.pos, "expected a natural-number exponent");
        if (e.number > kMaxExponent)
            throw ParseError(e.pos, "exponent exceeds the cap of 2^20");
        ++i_;
        return pow(b, e.number);
    }

    Polynomial base() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Number: {
                ++i_;
                return Polynomial::constant(
                    spec_, nvars_,
                    spec_.from_int(static_cast<std::int64_t>(t.number % spec_.p())));
            }
            case Token::Ident: {
                ++i_;
                if (t.ident == "t" && !t_is_variable_) {
                    if (spec_.k() == 1)
                        throw ParseError(
                            t.pos,
                            "'t' denotes the extension generator; this field is prime");
                    return Polynomial::constant(spec_, nvars_, spec_.generator());
                }
                return Polynomial::variable(spec_, nvars_, resolve(t));
            }
            case Token::LParen: {
                ++i_;
                Polynomial inner = expr();
                expect(Token::RParen);
                return inner;
            }
            default:
                throw ParseError(t.pos, std::string("expected a value, found ") +
                                            token_name(t.kind));
        }
    }

    std::size_t resolve(const Token& t) {
        const std::string& name = t.ident;
        if (t_is_variable_) {
            if (name == "t") return 0;
            throw ParseError(t.pos, "only 't' may appear in a modulus polynomial");
        }
        if (nvars_ <= 3) {
            if (name == "x" && nvars_ >= 1) return 0;
            if (name == "y" && nvars_ >= 2) return 1;
            if (name == "z" && nvars_ >= 3) return 2;
        }
        if (name.size() >= 2 && name[0] == 'x') {
            bool digits = true;
            for (std::size_t j = 1; j < name.size(); ++j)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[j]));
            if (digits) {
                if (name.size() > 7)
                    throw ParseError(t.pos, "variable index too large");
                const std::uint64_t idx = std::stoull(name.substr(1));
                if (idx >= nvars_)
                    throw ParseError(t.pos, "variable " + name + " is out of range; the ring has " +
                                                std::to_string(nvars_) + " variable(s)");
                return static_cast<std::size_t>(idx);
            }
        }
        throw ParseError(t.pos, "unknown symbol '" + name + "'");
    }

    const std::vector<Token>& toks_;
    std::size_t i_;
    FieldSpec spec_;
    std::size_t nvars_;
    bool t_is_variable_;
};

} // namespace

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& terms = f.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Monomial& m = it->first;
        const FieldElement& c = it->second;
        if (!out.empty()) out += " + ";
        std::string mon;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += (f.nvars() <= 3 ? std::string(1, "xyz"[j])
                                   : "x" + std::to_string(j));
            if (m[j] > 1) mon += "^" + std::to_string(m[j]);
        }
        std::string cs = to_string(c);
        if (mon.empty()) {
            out += cs;
        } else if (c == f.spec().one()) {
            out += mon;
        } else {
            // A multi-term coefficient needs parentheses next to a monomial.
            if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
            out += cs + "*" + mon;
        }
    }
    return out;
}

Polynomial parse_polynomial(const std::string& text, FieldSpec spec,
                            std::size_t nvars) {
    const std::vector<Token> toks = lex(text);
    ExprParser p(toks, 0, spec, nvars, false);
    Polynomial f = p.expr();
    p.expect(Token::End);
    return f;
}

FieldElement parse_element(const std::string& text, FieldSpec spec) {
    const std::vector<Token> toks = lex(text);
    ExprParser p(toks, 0, spec, 0, false);
    Polynomial f = p.expr();
    p.expect(Token::End);
    return f.constant_term();
}

FieldSpec parse_field_descriptor(const std::string& text) {
    const std::vector<Token> toks = lex(text);
    std::size_t i = 0;
    auto need = [&](Token::Kind kind, const char* what) {
        if (toks[i].kind != kind)
            throw ParseError(toks[i].pos, std::string("expected ") + what);
        return toks[i++];
    };
    const Token gf = need(Token::Ident, "GF(...)");
    if (gf.ident != "GF") throw ParseError(gf.pos, "expected GF(...)");
    need(Token::LParen, "'('");
    const Token order = need(Token::Number, "a field order");
    std::optional<std::uint32_t> explicit_k;
    if (toks[i].kind == Token::Caret) {
        ++i;
        explicit_k = static_cast<std::uint32_t>(
            need(Token::Number, "an extension degree").number);
    }
    if (toks[i].kind == Token::Semicolon) {
        ++i;
        const Token kw = need(Token::Ident, "modulus=...");
        if (kw.ident != "modulus") throw ParseError(kw.pos, "expected modulus=...");
        need(Token::Equals, "'='");
        std::uint32_t p;
        std::uint32_t k;
        if (explicit_k) {
            p = static_cast<std::uint32_t>(order.number);
            k = *explicit_k;
        } else {
            // Factor a prime power: q = p^k.
            std::uint64_t q = order.number;
            if (q < 2) throw ParseError(order.pos, "field order must be at least 2");
            std::uint64_t d = 2;
            while (d * d <= q && q % d != 0) ++d;
            p = static_cast<std::uint32_t>(d * d <= q ? d : q);
            k = 0;
            std::uint64_t r = q;
            while (r % p == 0) {
                r /= p;
                ++k;
            }
            if (r != 1)
                throw ParseError(order.pos, "field order is not a prime power");
        }
        ExprParser mp(toks, i, FieldSpec::prime_field(p), 1, true);
        Polynomial m = mp.expr();
        i = mp.cursor();
        if (m.degree_in(0) != static_cast<std::int64_t>(k))
            throw ParseError(toks[i].pos,
                             "modulus degree disagrees with the extension degree");
        std::vector<std::uint32_t> coeffs(k + 1, 0);
        for (const auto& [mono, c] : m.terms()) coeffs[mono[0]] = c.coeff(0);
        need(Token::RParen, "')'");
        need(Token::End, "end of input");
        return FieldSpec::with_modulus(p, k, std::move(coeffs));
    }
    need(Token::RParen, "')'");
    need(Token::End, "end of input");
    if (explicit_k)
        return FieldSpec::with_default_modulus(
            static_cast<std::uint32_t>(order.number), *explicit_k);
    return FieldSpec::from_order(order.number);
}

namespace {

struct Line {
    std::size_t number; // 0-based
    std::string text;   // trimmed
};

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<Line> meaningful_lines(const std::string& text) {
    std::vector<Line> out;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        const std::string raw =
            text.substr(start, nl == std::string::npos ? nl : nl - start);
        const std::string t = trim(raw);
        if (!t.empty() && t[0] != '#') out.push_back({lineno, t});
        if (nl == std::string::npos) break;
        start = nl + 1;
        ++lineno;
    }
    return out;
}

/// Rethrows a nested expression error with the line number as position and
/// the column folded into the message.
template <typename Fn>
auto at_line(std::size_t lineno, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ParseError(lineno, std::string(e.what()) + " (line " +
                                     std::to_string(lineno + 1) + ", column " +
                                     std::to_string(e.position() + 1) + ")");
    }
}

std::vector<FieldElement> parse_point(const std::string& text, FieldSpec spec,
                                      std::size_t nvars, std::size_t lineno) {
    std::vector<FieldElement> pt;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        pt.push_back(at_line(lineno, [&] { return parse_element(trim(piece), spec); }));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (pt.size() != nvars)
        throw ParseError(lineno, "expected " + std::to_string(nvars) +
                                     " coordinates, found " +
                                     std::to_string(pt.size()) + " (line " +
                                     std::to_string(lineno + 1) + ")");
    return pt;
}

} // namespace

PointSet parse_pointset(const std::string& text) {
    const std::vector<Line> lines = meaningful_lines(text);
    if (lines.empty()) throw ParseError(0, "missing point set header");
    const std::string& header = lines[0].text;
    const std::size_t marker = header.rfind(" n=");
    if (marker == std::string::npos)
        throw ParseError(lines[0].number,
                         "point set header must look like 'GF(q) n=<nvars>'");
    const FieldSpec spec = at_line(lines[0].number, [&] {
        return parse_field_descriptor(header.substr(0, marker));
    });
    std::size_t nvars = 0;
    {
        const std::string tail = trim(header.substr(marker + 3));
        if (tail.empty()) throw ParseError(lines[0].number, "missing variable count");
        for (char c : tail) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(lines[0].number, "variable count must be a number");
            nvars = nvars * 10 + static_cast<std::size_t>(c - '0');
            if (nvars > 1000)
                throw ParseError(lines[0].number, "variable count too large");
        }
    }
    if (lines.size() == 1)
        throw ParseError(lines[0].number, "expected FULL or at least one point line");
    if (lines.size() == 2 && lines[1].text == "FULL")
        return PointSet::full(spec, nvars);
    std::vector<std::vector<FieldElement>> pts;
    for (std::size_t li = 1; li < lines.size(); ++li)
        pts.push_back(parse_point(lines[li].text, spec, nvars, lines[li].number));
    return PointSet::of(spec, nvars, std::move(pts));
}

std::string to_string(const PointSet& S) {
    std::string out =
        S.spec().descriptor() + " n=" + std::to_string(S.nvars()) + "\n";
    if (S.is_full()) {
        out += "FULL\n";
        return out;
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto pt = S.point(i);
        for (std::size_t j = 0; j < pt.size(); ++j) {
            if (j != 0) out += ",";
            out += to_string(pt[j]);
        }
        out += "\n";
    }
    return out;
}

const Polynomial* ProblemFile::find(const std::string& name) const {
    for (const auto& [n, f] : polys)
        if (n == name) return &f;
    return nullptr;
}

ProblemFile parse_problem(const std::string& text) {
    const std::vector<Line> lines = meaningful_lines(text);
    std::optional<FieldSpec> field;
    std::optional<std::size_t> nvars;
    bool points_seen = false;
    bool points_full = false;
    bool collecting_points = false;
    std::vector<std::vector<FieldElement>> pts;
    std::vector<std::pair<std::string, Polynomial>> polys;
    std::string op;
    std::vector<std::pair<std::string, std::string>> op_args;

    auto first_word = [](const std::string& s) {
        const std::size_t sp = s.find_first_of(" \t");
        return sp == std::string::npos ? s : s.substr(0, sp);
    };
    auto rest_after = [](const std::string& s) {
        const std::size_t sp = s.find_first_of(" \t");
        return sp == std::string::npos ? std::string() : trim(s.substr(sp));
    };

    for (const Line& line : lines) {
        const std::string word = first_word(line.text);
        if (word == "FIELD") {
            if (field) throw ParseError(line.number, "duplicate FIELD");
            field = at_line(line.number,
                            [&] { return parse_field_descriptor(rest_after(line.text)); });
            collecting_points = false;
        } else if (word == "VARS") {
            if (nvars) throw ParseError(line.number, "duplicate VARS");
            const std::string v = rest_after(line.text);
            if (v.empty()) throw ParseError(line.number, "VARS needs a number");
            std::size_t n = 0;
            for (char c : v) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError(line.number, "VARS needs a number");
                n = n * 10 + static_cast<std::size_t>(c - '0');
                if (n > 1000) throw ParseError(line.number, "VARS too large");
            }
            nvars = n;
            collecting_points = false;
        } else if (word == "POINTS") {
            if (points_seen) throw ParseError(line.number, "duplicate POINTS");
            if (!field || !nvars)
                throw ParseError(line.number, "POINTS must come after FIELD and VARS");
            points_seen = true;
            const std::string rest = rest_after(line.text);
            if (rest == "FULL") {
                points_full = true;
            } else if (rest.empty()) {
                collecting_points = true;
            } else {
                pts.push_back(parse_point(rest, *field, *nvars, line.number));
                collecting_points = true;
            }
        } else if (word == "POLY") {
            if (!field || !nvars)
                throw ParseError(line.number, "POLY must come after FIELD and VARS");
            collecting_points = false;
            const std::string rest = rest_after(line.text);
            const std::size_t eq = rest.find('=');
            if (eq == std::string::npos)
                throw ParseError(line.number, "POLY needs the form 'POLY <name> = <expr>'");
            const std::string name = trim(rest.substr(0, eq));
            if (name.empty())
                throw ParseError(line.number, "POLY needs a name");
            for (char c : name)
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                    throw ParseError(line.number, "POLY name must be alphanumeric");
            for (const auto& [n, f] : polys)
                if (n == name)
                    throw ParseError(line.number, "duplicate POLY name '" + name + "'");
            Polynomial f = at_line(line.number, [&] {
                return parse_polynomial(rest.substr(eq + 1), *field, *nvars);
            });
            polys.emplace_back(name, std::move(f));
        } else if (word == "OP") {
            if (!op.empty()) throw ParseError(line.number, "duplicate OP");
            collecting_points = false;
            std::string rest = rest_after(line.text);
            if (rest.empty()) throw ParseError(line.number, "OP needs an operation name");
            op = first_word(rest);
            rest = rest_after(rest);
            while (!rest.empty()) {
                const std::string kv = first_word(rest);
                rest = rest_after(rest);
                const std::size_t eq = kv.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw ParseError(line.number,
                                     "OP arguments must look like key=value");
                op_args.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
            }
        } else if (collecting_points) {
            pts.push_back(parse_point(line.text, *field, *nvars, line.number));
        } else {
            throw ParseError(line.number, "unknown directive '" + word + "'");
        }
    }

    if (!field) throw ParseError(0, "missing FIELD");
    if (!nvars) throw ParseError(0, "missing VARS");
    if (!points_seen) throw ParseError(0, "missing POINTS");
    PointSet S = points_full ? PointSet::full(*field, *nvars)
                             : [&] {
                                   if (pts.empty())
                                       throw ParseError(
                                           0, "POINTS needs FULL or at least one point");
                                   return PointSet::of(*field, *nvars, std::move(pts));
                               }();
    return ProblemFile{*field, *nvars, std::move(S), std::move(polys),
                       std::move(op), std::move(op_args)};
}

} // namespace fqring
