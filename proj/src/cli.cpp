#include "fqring/cli.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fqring/errors.hpp"
#include "fqring/expr.hpp"
#include "fqring/ideal.hpp"
#include "fqring/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace fqring::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        out.push_back(trimmed(
            s.substr(start, comma == std::string::npos ? comma : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// The resolved ring a subcommand operates in, plus the problem file (when
/// one supplied it) for name lookups and OP defaults.
struct Context {
    FieldSpec spec;
    std::size_t nvars;
    PointSet S;
    std::optional<ProblemFile> pf;
    std::string active_op;
};

struct CommonArgs {
    std::string field;
    int nvars = -1;
    std::string points;
    std::string problem;
    bool json = false;
};

Context resolve_context(const CommonArgs& a, const std::string& subname) {
    if (!a.problem.empty()) {
        if (!a.points.empty())
            throw DomainError("use either --problem or --points, not both");
        ProblemFile pf = parse_problem(read_file(a.problem));
        if (!a.field.empty() && !(parse_field_descriptor(a.field) == pf.field))
            throw DomainError("--field disagrees with the problem file");
        if (a.nvars >= 0 && static_cast<std::size_t>(a.nvars) != pf.nvars)
            throw DomainError("--nvars disagrees with the problem file");
        FieldSpec spec = pf.field;
        const std::size_t nv = pf.nvars;
        PointSet S = pf.points;
        return Context{spec, nv, std::move(S), std::move(pf), subname};
    }
    if (a.points.empty())
        throw DomainError("--points (or --problem) is required");
    if (a.points == "FULL") {
        if (a.field.empty()) throw DomainError("--points FULL needs --field");
        if (a.nvars < 1) throw DomainError("--points FULL needs --nvars >= 1");
        FieldSpec spec = parse_field_descriptor(a.field);
        PointSet S = PointSet::full(spec, static_cast<std::size_t>(a.nvars));
        return Context{spec, static_cast<std::size_t>(a.nvars), std::move(S),
                       std::nullopt, subname};
    }
    PointSet S = parse_pointset(read_file(a.points));
    if (!a.field.empty() && !(parse_field_descriptor(a.field) == S.spec()))
        throw DomainError("--field disagrees with the point set file");
    if (a.nvars >= 0 && static_cast<std::size_t>(a.nvars) != S.nvars())
        throw DomainError("--nvars disagrees with the point set file");
    FieldSpec spec = S.spec();
    const std::size_t nv = S.nvars();
    return Context{spec, nv, std::move(S), std::nullopt, subname};
}

std::string op_default(const Context& ctx, const std::string& key) {
    if (!ctx.pf || ctx.pf->op != ctx.active_op) return {};
    for (const auto& [k, v] : ctx.pf->op_args)
        if (k == key) return v;
    return {};
}

Polynomial resolve_poly(const Context& ctx, const std::string& text) {
    const std::string t = trimmed(text);
    if (ctx.pf) {
        if (const Polynomial* f = ctx.pf->find(t)) return *f;
    }
    return parse_polynomial(t, ctx.spec, ctx.nvars);
}

RingElement resolve_element(const Context& ctx, const std::string& text) {
    return embed(resolve_poly(ctx, text), ctx.S);
}

std::string required_arg(const Context& ctx, const std::string& cli_value,
                         const char* flag, const char* opkey) {
    if (!cli_value.empty()) return cli_value;
    const std::string d = op_default(ctx, opkey);
    if (!d.empty()) return d;
    throw DomainError(std::string("missing ") + flag);
}

Ideal resolve_ideal(const Context& ctx, std::vector<std::string> gens,
                    const char* flag, const char* opkey) {
    if (gens.empty()) {
        const std::string d = op_default(ctx, opkey);
        if (!d.empty()) gens = split_commas(d);
    }
    if (gens.empty())
        throw DomainError(std::string("missing ") + flag + " (generators)");
    std::vector<RingElement> els;
    els.reserve(gens.size());
    for (const std::string& g : gens) els.push_back(resolve_element(ctx, g));
    return Ideal(ctx.S, std::move(els));
}

std::string point_text(std::span<const FieldElement> pt) {
    std::string s;
    for (std::size_t j = 0; j < pt.size(); ++j) {
        if (j != 0) s += ",";
        s += to_string(pt[j]);
    }
    return s;
}

ordered_json element_json(const FieldElement& e) {
    ordered_json a = ordered_json::array();
    for (std::uint32_t c : e.coeffs()) a.push_back(c);
    return a;
}

ordered_json point_json(std::span<const FieldElement> pt) {
    ordered_json a = ordered_json::array();
    for (const FieldElement& e : pt) a.push_back(element_json(e));
    return a;
}

ordered_json pointset_json(const PointSet& S) {
    ordered_json o;
    o["full"] = S.is_full();
    o["size"] = S.size();
    ordered_json pts = ordered_json::array();
    for (std::size_t i = 0; i < S.size(); ++i) pts.push_back(point_json(S.point(i)));
    o["points"] = std::move(pts);
    return o;
}

ordered_json envelope(const Context& ctx, const std::string& operation) {
    ordered_json o;
    o["field"] = ctx.spec.descriptor();
    o["nvars"] = ctx.nvars;
    o["pointset"] = pointset_json(ctx.S);
    o["operation"] = operation;
    return o;
}

void emit(std::ostream& out, const ordered_json& o) { out << o.dump(2) << "\n"; }

ordered_json generators_json(const Ideal& J) {
    ordered_json a = ordered_json::array();
    for (const RingElement& g : J.generators())
        a.push_back(to_string(g.representative()));
    return a;
}

ordered_json certificate_json(const MembershipCertificate& cert) {
    ordered_json o;
    o["m"] = cert.m;
    ordered_json cof = ordered_json::array();
    for (const RingElement& h : cert.cofactors)
        cof.push_back(to_string(h.representative()));
    o["cofactors"] = std::move(cof);
    return o;
}

void print_generators(std::ostream& out, const Ideal& J) {
    for (const RingElement& g : J.generators())
        out << to_string(g.representative()) << "\n";
}

void print_certificate(std::ostream& out, const MembershipCertificate& cert) {
    out << "m: " << cert.m << "\n";
    for (std::size_t i = 0; i < cert.cofactors.size(); ++i)
        out << "h" << i << ": " << to_string(cert.cofactors[i].representative())
            << "\n";
}

ordered_json report_json(const VerificationReport& r) {
    ordered_json o;
    o["statement_id"] = r.statement_id;
    o["context"] = r.context;
    o["instances"] = r.instance_count;
    o["failures"] = r.failure_count;
    ordered_json ce = ordered_json::array();
    for (const std::string& f : r.failures) ce.push_back(f);
    o["counterexamples"] = std::move(ce);
    return o;
}

void print_report_line(std::ostream& out, const VerificationReport& r) {
    out << (r.pass() ? "PASS" : "FAIL") << " " << r.statement_id << " [" << r.context
        << "] instances=" << r.instance_count << " failures=" << r.failure_count
        << "\n";
    for (const std::string& f : r.failures) out << "  counterexample: " << f << "\n";
}

struct Args {
    CommonArgs common;
    std::vector<std::string> gens;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    std::string phi;
    std::string subset;
    std::string op_name;
    std::string verify_target;
    std::string qlist = "2,3";
    std::string nlist = "1,2";
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::string mode = to_string(default_exec_mode());
};

int do_variety(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal J = resolve_ideal(ctx, a.gens, "--gens", "gens");
    SubsetOfS V = variety(J);
    if (a.common.json) {
        ordered_json o = envelope(ctx, "variety");
        ordered_json pts = ordered_json::array();
        for (std::size_t i : V.indices()) pts.push_back(point_json(ctx.S.point(i)));
        ordered_json res;
        res["size"] = V.count();
        res["points"] = std::move(pts);
        o["result"] = std::move(res);
        emit(out, o);
    } else {
        out << "points: " << V.count() << "\n";
        for (std::size_t i : V.indices()) out << point_text(ctx.S.point(i)) << "\n";
    }
    return 0;
}

int do_ideal_of(const Context& ctx, const Args& a, std::ostream& out) {
    std::string subset = a.subset;
    if (subset.empty()) subset = op_default(ctx, "subset");
    if (subset.empty()) {
        const std::vector<Polynomial> gens = ideal_of_pointset(ctx.S);
        if (a.common.json) {
            ordered_json o = envelope(ctx, "ideal-of");
            ordered_json gs = ordered_json::array();
            for (const Polynomial& g : gens) gs.push_back(to_string(g));
            ordered_json res;
            res["generators"] = std::move(gs);
            o["result"] = std::move(res);
            emit(out, o);
        } else {
            for (const Polynomial& g : gens) out << to_string(g) << "\n";
        }
        return 0;
    }
    PointSet T0 = parse_pointset(read_file(subset));
    if (!(T0.spec() == ctx.spec) || T0.nvars() != ctx.nvars)
        throw DomainError("subset file does not match the ambient ring");
    std::vector<bool> flags(ctx.S.size(), false);
    for (std::size_t i = 0; i < T0.size(); ++i) {
        const auto idx = ctx.S.index_of(T0.point(i));
        if (!idx)
            throw DomainError("subset point not in S: " + point_text(T0.point(i)));
        flags[*idx] = true;
    }
    Ideal I = vanishing_ideal(SubsetOfS(ctx.S, std::move(flags)));
    if (a.common.json) {
        ordered_json o = envelope(ctx, "ideal-of");
        ordered_json res;
        res["generators"] = generators_json(I);
        o["result"] = std::move(res);
        emit(out, o);
    } else {
        print_generators(out, I);
    }
    return 0;
}

int do_member(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal J = resolve_ideal(ctx, a.gens, "--gens", "gens");
    RingElement phi =
        resolve_element(ctx, required_arg(ctx, a.phi, "--phi", "phi"));
    const bool in = membership(phi, J);
    if (a.common.json) {
        ordered_json o = envelope(ctx, "member");
        o["result"] = in;
        if (in) o["certificate"] = certificate_json(certify(phi, J));
        emit(out, o);
    } else {
        out << (in ? "true" : "false") << "\n";
        if (in) print_certificate(out, certify(phi, J));
    }
    return in ? 0 : 1;
}

int do_certify(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal J = resolve_ideal(ctx, a.gens, "--gens", "gens");
    RingElement phi =
        resolve_element(ctx, required_arg(ctx, a.phi, "--phi", "phi"));
    ordered_json o = envelope(ctx, "certify");
    try {
        const MembershipCertificate cert = certify(phi, J);
        if (a.common.json) {
            o["result"] = true;
            o["certificate"] = certificate_json(cert);
            emit(out, o);
        } else {
            out << "true\n";
            print_certificate(out, cert);
        }
        return 0;
    } catch (const NonMemberError&) {
        if (a.common.json) {
            o["result"] = false;
            emit(out, o);
        } else {
            out << "false\n";
        }
        return 1;
    }
}

int do_unit_cert(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal J = resolve_ideal(ctx, a.gens, "--gens", "gens");
    ordered_json o = envelope(ctx, "unit-cert");
    try {
        const MembershipCertificate cert = unit_certificate(J);
        if (a.common.json) {
            o["result"] = true;
            o["certificate"] = certificate_json(cert);
            emit(out, o);
        } else {
            out << "true\n";
            print_certificate(out, cert);
        }
        return 0;
    } catch (const ProperIdealError&) {
        if (a.common.json) {
            o["result"] = false;
            emit(out, o);
        } else {
            out << "false\n";
        }
        return 1;
    }
}

int do_op(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal I = resolve_ideal(ctx, a.lhs, "--lhs", "lhs");
    Ideal J = resolve_ideal(ctx, a.rhs, "--rhs", "rhs");
    std::optional<Ideal> R;
    if (a.op_name == "sum") R = sum(I, J);
    else if (a.op_name == "product") R = product(I, J);
    else if (a.op_name == "intersect") R = intersect(I, J);
    else if (a.op_name == "quotient") R = quotient(I, J);
    else throw DomainError("unknown operation: " + a.op_name);
    if (a.common.json) {
        ordered_json o = envelope(ctx, a.op_name);
        ordered_json res;
        res["generators"] = generators_json(*R);
        o["result"] = std::move(res);
        emit(out, o);
    } else {
        print_generators(out, *R);
    }
    return 0;
}

int do_radical(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal J = resolve_ideal(ctx, a.gens, "--gens", "gens");
    Ideal R = radical(J);
    if (a.common.json) {
        ordered_json o = envelope(ctx, "radical");
        ordered_json res;
        res["generators"] = generators_json(R);
        o["result"] = std::move(res);
        emit(out, o);
    } else {
        print_generators(out, R);
    }
    return 0;
}

int do_equal(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal I = resolve_ideal(ctx, a.lhs, "--lhs", "lhs");
    Ideal J = resolve_ideal(ctx, a.rhs, "--rhs", "rhs");
    const bool eq = equal_ideals(I, J);
    if (a.common.json) {
        ordered_json o = envelope(ctx, "equal");
        o["result"] = eq;
        emit(out, o);
    } else {
        out << (eq ? "true" : "false") << "\n";
    }
    return eq ? 0 : 1;
}

int do_maximal(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal J = resolve_ideal(ctx, a.gens, "--gens", "gens");
    const bool mx = is_maximal(J);
    if (a.common.json) {
        ordered_json o = envelope(ctx, "maximal");
        o["result"] = mx;
        emit(out, o);
    } else {
        out << (mx ? "true" : "false") << "\n";
    }
    return mx ? 0 : 1;
}

int do_rabinowitsch(const Context& ctx, const Args& a, std::ostream& out) {
    Ideal J = resolve_ideal(ctx, a.gens, "--gens", "gens");
    RingElement phi =
        resolve_element(ctx, required_arg(ctx, a.phi, "--phi", "phi"));
    const RabinowitschLift lift = rabinowitsch_lift(J, phi);
    if (a.common.json) {
        ordered_json o = envelope(ctx, "rabinowitsch");
        ordered_json res;
        res["extended_pointset"] = pointset_json(lift.extended_ring);
        res["generators"] = generators_json(lift.lifted);
        res["variety_empty"] = !is_proper(lift.lifted);
        o["result"] = std::move(res);
        emit(out, o);
    } else {
        out << "extended points: " << lift.extended_ring.size() << "\n";
        out << "generators:\n";
        print_generators(out, lift.lifted);
        out << "variety empty: " << (is_proper(lift.lifted) ? "false" : "true")
            << "\n";
    }
    return 0;
}

int do_reduce(const Context& ctx, const Args& a, std::ostream& out) {
    RingElement el =
        resolve_element(ctx, required_arg(ctx, a.phi, "--phi", "phi"));
    const RingElement canonical = interpolate(ctx.S, el.values());
    if (a.common.json) {
        ordered_json o = envelope(ctx, "reduce");
        ordered_json res;
        res["representative"] = to_string(canonical.representative());
        ordered_json vals = ordered_json::array();
        for (const FieldElement& v : el.values()) vals.push_back(element_json(v));
        res["values"] = std::move(vals);
        o["result"] = std::move(res);
        emit(out, o);
    } else {
        out << to_string(canonical.representative()) << "\n";
    }
    return 0;
}

int do_verify(const Args& a, std::ostream& out) {
    if (a.verify_target != "all")
        throw DomainError("the only supported verification target is 'all'");
    VerifyGrid grid;
    for (const std::string& qs : split_commas(a.qlist)) {
        if (qs.empty()) throw DomainError("--q needs a comma-separated list of orders");
        grid.fields.push_back(parse_field_descriptor("GF(" + qs + ")"));
    }
    for (const std::string& ns : split_commas(a.nlist)) {
        std::size_t n = 0;
        if (ns.empty()) throw DomainError("--n needs a comma-separated list of counts");
        for (char c : ns) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DomainError("--n needs numbers");
            n = n * 10 + static_cast<std::size_t>(c - '0');
            if (n > 16) throw DomainError("--n values must be at most 16");
        }
        if (n == 0) throw DomainError("--n values must be at least 1");
        grid.nvars.push_back(n);
    }
    VerifyOptions opt;
    opt.trials = a.trials;
    opt.seed = a.seed;
    opt.mode = a.mode == "serial" ? ExecMode::Serial : ExecMode::Parallel;
    const std::vector<VerificationReport> reports = verify_all(grid, opt);
    bool pass = true;
    std::uint64_t instances = 0;
    for (const VerificationReport& r : reports) {
        pass = pass && r.pass();
        instances += r.instance_count;
    }
    if (a.common.json) {
        ordered_json o;
        o["operation"] = "verify";
        o["target"] = "all";
        ordered_json qs = ordered_json::array();
        for (const FieldSpec& K : grid.fields) qs.push_back(K.q());
        o["q"] = std::move(qs);
        ordered_json ns = ordered_json::array();
        for (std::size_t n : grid.nvars) ns.push_back(n);
        o["n"] = std::move(ns);
        o["trials"] = opt.trials;
        o["seed"] = opt.seed;
        o["result"] = pass ? "pass" : "fail";
        ordered_json rs = ordered_json::array();
        for (const VerificationReport& r : reports) rs.push_back(report_json(r));
        o["report"] = std::move(rs);
        emit(out, o);
    } else {
        for (const VerificationReport& r : reports) print_report_line(out, r);
        out << (pass ? "PASS" : "FAIL") << " (" << reports.size() << " reports, "
            << instances << " instances)\n";
    }
    return pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    Args a;
    CLI::App app{"exact ideal-variety computations in coordinate rings of finite point sets"};
    app.name("fqring");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", a.common.field,
                        "field descriptor, e.g. GF(3) or GF(4; modulus=t^2+t+1)");
        sub->add_option("--nvars", a.common.nvars, "number of variables");
        sub->add_option("--points", a.common.points,
                        "point set: FULL or a point-set file");
        sub->add_option("--problem", a.common.problem,
                        "problem file (FIELD/VARS/POINTS/POLY/OP)");
        sub->add_flag("--json", a.common.json, "emit JSON on stdout");
    };
    auto add_gens = [&](CLI::App* sub) {
        sub->add_option("--gens", a.gens,
                        "ideal generator: expression or problem-file name (repeatable)");
    };
    auto add_phi = [&](CLI::App* sub) {
        sub->add_option("--phi", a.phi, "element: expression or problem-file name");
    };

    CLI::App* variety = app.add_subcommand(
        "variety", "points of S where every generator vanishes");
    add_common(variety);
    add_gens(variety);

    CLI::App* ideal_of = app.add_subcommand(
        "ideal-of",
        "polynomial generators of the vanishing ideal of S (or, with --subset, "
        "the principal vanishing ideal of a subset inside K[S])");
    add_common(ideal_of);
    ideal_of->add_option("--subset", a.subset, "point-set file listing a subset of S");

    CLI::App* member =
        app.add_subcommand("member", "decide whether phi lies in the ideal");
    add_common(member);
    add_gens(member);
    add_phi(member);

    CLI::App* certify_cmd = app.add_subcommand(
        "certify", "cofactor certificate with sum(h_i*g_i) = phi");
    add_common(certify_cmd);
    add_gens(certify_cmd);
    add_phi(certify_cmd);

    CLI::App* unit_cert = app.add_subcommand(
        "unit-cert", "certificate writing [1] as a combination of the generators");
    add_common(unit_cert);
    add_gens(unit_cert);

    CLI::App* op = app.add_subcommand("op", "binary ideal operation");
    add_common(op);
    op->add_option("operation", a.op_name, "sum | product | intersect | quotient")
        ->required()
        ->check(CLI::IsMember({"sum", "product", "intersect", "quotient"}));
    op->add_option("--lhs", a.lhs, "left ideal generator (repeatable)");
    op->add_option("--rhs", a.rhs, "right ideal generator (repeatable)");

    CLI::App* radical_cmd = app.add_subcommand("radical", "radical of the ideal");
    add_common(radical_cmd);
    add_gens(radical_cmd);

    CLI::App* equal = app.add_subcommand("equal", "decide whether two ideals are equal");
    add_common(equal);
    equal->add_option("--lhs", a.lhs, "left ideal generator (repeatable)");
    equal->add_option("--rhs", a.rhs, "right ideal generator (repeatable)");

    CLI::App* maximal =
        app.add_subcommand("maximal", "decide whether the ideal is maximal");
    add_common(maximal);
    add_gens(maximal);

    CLI::App* rabinowitsch = app.add_subcommand(
        "rabinowitsch", "adjoin y and lift to the ideal plus 1 - y*phi");
    add_common(rabinowitsch);
    add_gens(rabinowitsch);
    add_phi(rabinowitsch);

    CLI::App* reduce =
        app.add_subcommand("reduce", "canonical representative of [phi] in K[S]");
    add_common(reduce);
    add_phi(reduce);

    CLI::App* verify = app.add_subcommand(
        "verify", "re-check the library's statements over a grid of rings");
    verify->add_option("target", a.verify_target, "what to verify: all")
        ->required()
        ->check(CLI::IsMember({"all"}));
    verify->add_option("--q", a.qlist, "comma-separated field orders (default 2,3)");
    verify->add_option("--n", a.nlist, "comma-separated variable counts (default 1,2)");
    verify->add_option("--trials", a.trials, "sampled instances per verifier");
    verify->add_option("--seed", a.seed, "base seed for sampled instances");
    verify->add_option("--mode", a.mode, "serial | parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));
    verify->add_flag("--json", a.common.json, "emit JSON on stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream buf;
        const int code = app.exit(e, out, buf);
        err << buf.str();
        return code == 0 ? 0 : 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (name == "verify") return do_verify(a, out);
        const Context ctx = resolve_context(a.common, name == "op" ? a.op_name : name);
        if (name == "variety") return do_variety(ctx, a, out);
        if (name == "ideal-of") return do_ideal_of(ctx, a, out);
        if (name == "member") return do_member(ctx, a, out);
        if (name == "certify") return do_certify(ctx, a, out);
        if (name == "unit-cert") return do_unit_cert(ctx, a, out);
        if (name == "op") return do_op(ctx, a, out);
        if (name == "radical") return do_radical(ctx, a, out);
        if (name == "equal") return do_equal(ctx, a, out);
        if (name == "maximal") return do_maximal(ctx, a, out);
        if (name == "rabinowitsch") return do_rabinowitsch(ctx, a, out);
        if (name == "reduce") return do_reduce(ctx, a, out);
        throw DomainError("unknown subcommand: " + name);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (position " << e.position() << ")\n";
        return 2;
    } catch (const NegativeResultError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace fqring::cli
