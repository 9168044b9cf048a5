#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "uqsl/braiding.hpp"
#include "uqsl/homological.hpp"
#include "uqsl/serialize.hpp"

namespace uqslcat {

using namespace uqsl;

namespace {

constexpr int kDefaultMaxP = 6;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw std::domain_error(what + " must be an integer, got \"" + s + "\"");
}

int max_p(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("UQSLCAT_MAX_P")) {
        const int v = parse_int(env, "UQSLCAT_MAX_P");
        if (v < 2) throw std::domain_error("UQSLCAT_MAX_P must be at least 2");
        return v;
    }
    return kDefaultMaxP;
}

void check_p(int p, int bound) {
    if (p < 2) throw std::domain_error("p must be at least 2, got " + std::to_string(p));
    if (p > bound)
        throw std::domain_error("p = " + std::to_string(p) + " exceeds the bound " + std::to_string(bound) +
                                " (raise it with --max-p or UQSLCAT_MAX_P)");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot read input file \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw std::domain_error("input file \"" + path + "\" is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::domain_error("cannot write output file \"" + path + "\"");
    out << j.dump(2) << "\n";
}

/// Options shared by the verbs.
struct Common {
    int p = 0;
    int max_p = 0;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

/// A module from --module LABEL or --input FILE; p comes from the file if absent.
QMod load_module(Common& c, const std::string& module, const std::string& input) {
    if (module.empty() == input.empty()) throw std::domain_error("give exactly one of --module and --input");
    if (!input.empty()) {
        QMod m;
        try {
            m = qmod_from_json(read_json_file(input));
        } catch (const std::invalid_argument& e) {
            throw std::domain_error(e.what());
        }
        if (c.p != 0 && c.p != m.p())
            throw std::domain_error("--p " + std::to_string(c.p) + " does not match the input module's p = " +
                                    std::to_string(m.p()));
        c.p = m.p();
        check_p(c.p, max_p(c.max_p));
        return m;
    }
    if (c.p == 0) throw std::domain_error("--p is required with --module");
    check_p(c.p, max_p(c.max_p));
    const ModuleArg arg = parse_module(module, c.p);
    return arg.regular ? regular_module(c.p) : build_named(c.p, arg.label);
}

void require_p(Common& c) {
    if (c.p == 0) throw std::domain_error("--p is required");
    check_p(c.p, max_p(c.max_p));
}

ModuleLabel irreducible_label(const std::string& text, int p, const char* flag) {
    const ModuleArg s = parse_module(text, p);
    if (s.regular || s.label.family != Family::X)
        throw std::domain_error(std::string(flag) + " must name an irreducible module X+:s or X-:s");
    return s.label;
}

std::string decomp_text(const DecompReport& r) {
    std::vector<std::string> parts;
    for (const auto& e : r.entries) parts.push_back(e.label.to_string() + ":" + std::to_string(e.mult));
    return "{" + join(parts, ", ") + "}";
}

std::string triplets_text(const Matrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) os << "  [" << i << "," << j << "] " << m(i, j).to_string() << "\n";
    return os.str();
}

std::string summand_list(const std::vector<ModuleLabel>& ls) {
    std::vector<std::string> names;
    for (const auto& l : ls) names.push_back(l.to_string());
    return names.empty() ? "0" : join(names, " + ");
}

/// x+1, x+2, x-1, x-2 relative to the pair (X^a_s, X^{-a}_{p-s}).
const ExtClass& x_class(const XBasis& x, const std::string& token) {
    if (token == "x+1") return x.plus1;
    if (token == "x+2") return x.plus2;
    if (token == "x-1") return x.minus1;
    if (token == "x-2") return x.minus2;
    throw std::domain_error("unknown degree-one class \"" + token + "\" (use x+1, x+2, x-1, x-2)");
}

}  // namespace

CycNum parse_field_element(const std::string& text, int p) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::domain_error("empty field element");
    static const std::regex term(R"(([+-]?)(\d*)(\*?q(\^(-?\d+))?)?)");
    CycNum acc(2 * p);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::smatch m;
        const std::string rest = s.substr(pos);
        if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0 ||
            (m[2].length() == 0 && m[3].length() == 0) || (pos > 0 && m[1].length() == 0))
            throw std::domain_error("cannot parse field element \"" + text + "\" at \"" + rest + "\"");
        const mpz_class coeff = m[2].length() ? mpz_class(m[2].str()) : mpz_class(1);
        const long exp = m[3].length() == 0 ? 0 : m[5].length() ? std::stol(m[5].str()) : 1;
        CycNum t = qpow(p, exp) * CycNum(2 * p, mpq_class(coeff));
        acc += m[1].str() == "-" ? -t : t;
        pos += m.length(0);
    }
    return acc;
}

ModuleArg parse_module(const std::string& text, int p) {
    ModuleArg out;
    if (text == "Reg") {
        out.regular = true;
        return out;
    }
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    const std::string bad = "module label \"" + text + "\" ";
    if (parts.empty() || parts[0].size() != 2 || (parts[0][1] != '+' && parts[0][1] != '-'))
        throw std::domain_error(bad + "must start with X+, X-, W+, ..., e.g. X+:1");
    ModuleLabel& l = out.label;
    l.sign = parts[0][1] == '+' ? 1 : -1;
    std::size_t want = 0;
    switch (parts[0][0]) {
        case 'X': l.family = Family::X; want = 2; break;
        case 'P': l.family = Family::P; want = 2; break;
        case 'W': l.family = Family::W; want = 3; break;
        case 'M': l.family = Family::M; want = 3; break;
        case 'O': l.family = Family::O; want = 4; break;
        default: throw std::domain_error(bad + "has unknown family '" + parts[0].substr(0, 1) + "'");
    }
    if (parts.size() != want) throw std::domain_error(bad + "has the wrong number of fields");
    l.s = parse_int(parts[1], "s");
    const int smax = l.family == Family::X ? p : p - 1;
    if (l.s < 1 || l.s > smax)
        throw std::domain_error(bad + "needs 1 <= s <= " + std::to_string(smax) + " at p = " + std::to_string(p));
    if (want >= 3) {
        l.n = parse_int(parts[2], "n");
        const int nmin = l.family == Family::O ? 1 : 2;
        if (l.n < nmin) throw std::domain_error(bad + "needs n >= " + std::to_string(nmin));
    }
    if (want == 4) {
        const auto slash = parts[3].find('/');
        if (slash == std::string::npos) throw std::domain_error(bad + "needs z written as z1/z2");
        const CycNum z1 = parse_field_element(parts[3].substr(0, slash), p);
        const CycNum z2 = parse_field_element(parts[3].substr(slash + 1), p);
        if (z1.is_zero() && z2.is_zero()) throw std::domain_error(bad + "needs z1/z2 not both zero");
        l.z = CP1::make(z1, z2);
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation theory of the restricted quantum group at q = exp(i pi / p)", "uqslcat"};
    app.require_subcommand(1);
    Common c;
    auto common = [&](CLI::App* sub, bool needs_p = true) {
        auto* opt = sub->add_option("--p", c.p, "root of unity order p");
        if (needs_p) opt->check(CLI::PositiveNumber);
        sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-p", c.max_p, "bound on p (default 6, or UQSLCAT_MAX_P)");
    };
    std::string module, input, output, from, to, word, sign = "+";
    int deg = 1, length = 4, field_order = 0, s_index = 1;
    bool hopf = false, certificate = false;

    auto* build = app.add_subcommand("build", "build a named module and print it as JSON or text");
    common(build);
    build->add_option("--module", module, "X+:s, W-:s:n, M+:s:n, O+:s:n:z1/z2, P+:s or Reg")->required();
    build->add_option("--output", output, "also write the JSON to this file");

    auto* verify = app.add_subcommand("verify", "check the module relations, or the Hopf axioms with --hopf");
    common(verify);
    verify->add_option("--module", module);
    verify->add_option("--input", input, "module JSON file");
    verify->add_flag("--hopf", hopf, "verify the Hopf algebra axioms at p");

    auto* decomp = app.add_subcommand("decompose", "decompose into named indecomposables");
    common(decomp);
    decomp->add_option("--module", module);
    decomp->add_option("--input", input, "module JSON file");
    decomp->add_flag("--certificate", certificate, "include the isomorphism certificate");

    auto* blocks = app.add_subcommand("blocks", "Casimir block decomposition");
    common(blocks);
    blocks->add_option("--module", module);
    blocks->add_option("--input", input, "module JSON file");

    auto* hom = app.add_subcommand("hom", "dimension of Hom(from, to)");
    common(hom);
    hom->add_option("--from", from)->required();
    hom->add_option("--to", to)->required();

    auto* ext = app.add_subcommand("ext", "dimension of Ext^deg(from, to) between irreducibles");
    common(ext);
    ext->add_option("--from", from)->required();
    ext->add_option("--to", to)->required();
    ext->add_option("--deg", deg, "degree")->check(CLI::NonNegativeNumber);

    auto* resolve = app.add_subcommand("resolve", "minimal projective resolution of an irreducible");
    common(resolve);
    resolve->add_option("--module", module)->required();
    resolve->add_option("--length", length, "number of boundary maps")->check(CLI::NonNegativeNumber);

    auto* yoneda = app.add_subcommand("yoneda", "Yoneda product of degree-one classes x+1, x+2, x-1, x-2");
    common(yoneda);
    yoneda->add_option("--sign", sign, "sign a of X^a_s")->check(CLI::IsMember({"+", "-"}));
    yoneda->add_option("--s", s_index, "index s of X^a_s, 1 <= s <= p-1");
    yoneda->add_option("--word", word, "comma-separated classes, rightmost applied first")->required();

    auto* kron = app.add_subcommand("kron-classify", "Kronecker canonical form of a quiver representation");
    common(kron, false);
    kron->add_option("--input", input, "quiver representation JSON file")->required();
    kron->add_option("--field-order", field_order, "work over Q(zeta_N); 0 means the entries' field");

    auto* braid = app.add_subcommand("braid-check", "R-matrix and ribbon axioms (p = 2)");
    common(braid);

    auto* center = app.add_subcommand("center", "dimension of the center");
    common(center);

    if (!args.empty() && !args[0].starts_with("-") && !app.get_subcommand_no_throw(args[0])) {
        err << "uqslcat: unknown verb \"" << args[0] << "\"\n";
        return kDomainError;
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "uqslcat: " << e.what() << "\n";
        return kDomainError;
    }

    try {
        if (*build) {
            const QMod m = load_module(c, module, "");
            const Json j = to_json(m);
            if (!output.empty()) write_json_file(output, j);
            if (c.json()) {
                out << j.dump(2) << "\n";
            } else {
                out << (m.label().empty() ? module : m.label()) << " p=" << m.p() << " dim=" << m.dim() << "\n";
                std::vector<std::string> ws;
                for (int w : m.weights()) ws.push_back(std::to_string(w));
                out << "weights (K = q^w): " << join(ws, " ") << "\n";
                out << "E:\n" << triplets_text(m.E()) << "F:\n" << triplets_text(m.F());
            }
        } else if (*verify) {
            if (hopf) {
                require_p(c);
                const HopfReport r = verify_hopf(c.p);
                if (c.json()) {
                    Json j = Json::array();
                    for (const auto& a : r.axioms) j.push_back({{"axiom", a.name}, {"ok", a.ok}, {"detail", a.detail}});
                    out << Json{{"p", c.p}, {"ok", r.all_ok()}, {"axioms", j}}.dump(2) << "\n";
                } else {
                    for (const auto& a : r.axioms)
                        out << (a.ok ? "ok    " : "FAIL  ") << a.name << (a.detail.empty() ? "" : ": " + a.detail)
                            << "\n";
                }
                return r.all_ok() ? kOk : kClassificationFailure;
            }
            const QMod m = load_module(c, module, input);
            const ModuleCheck r = verify_module(m);
            if (c.json())
                out << Json{{"ok", r.ok}, {"violated", r.violated}}.dump(2) << "\n";
            else
                out << (r.ok ? "ok" : "violated: " + r.violated) << "\n";
            return r.ok ? kOk : kDomainError;
        } else if (*decomp) {
            const QMod m = load_module(c, module, input);
            const DecompReport r = decompose(m);
            if (c.json()) {
                out << to_json(r, certificate).dump(2) << "\n";
            } else {
                out << decomp_text(r) << "\n";
                if (certificate)
                    out << "summands: " << summand_list(r.summands) << "\ncertificate " << r.certificate.rows()
                        << "x" << r.certificate.cols() << ":\n"
                        << triplets_text(r.certificate);
            }
        } else if (*blocks) {
            const QMod m = load_module(c, module, input);
            const auto bs = block_decompose(m);
            if (c.json()) {
                Json j = Json::array();
                for (const auto& b : bs) j.push_back({{"s", b.s}, {"dim", b.module.dim()}});
                out << j.dump(2) << "\n";
            } else {
                for (const auto& b : bs) out << "beta_" << b.s << ": dim " << b.module.dim() << "\n";
            }
        } else if (*hom) {
            require_p(c);
            const QMod a = load_module(c, from, ""), b = load_module(c, to, "");
            const int d = static_cast<int>(hom_space(a, b).size());
            if (c.json())
                out << Json{{"p", c.p}, {"from", from}, {"to", to}, {"dim", d}}.dump(2) << "\n";
            else
                out << d << "\n";
        } else if (*ext) {
            require_p(c);
            const ModuleLabel a = irreducible_label(from, c.p, "--from"), b = irreducible_label(to, c.p, "--to");
            ExtCalculator calc(c.p);
            const int d = calc.ext_dim(a.sign, a.s, b.sign, b.s, deg);
            if (c.json())
                out << Json{{"p", c.p}, {"from", a.to_string()}, {"to", b.to_string()}, {"degree", deg}, {"dim", d}}
                           .dump(2)
                    << "\n";
            else
                out << d << "\n";
        } else if (*resolve) {
            require_p(c);
            const ModuleLabel a = irreducible_label(module, c.p, "--module");
            const Resolution r = minimal_resolution(irreducible(c.p, a.sign, a.s), length);
            std::string why;
            const bool ok = verify_resolution(r, &why);
            if (c.json()) {
                Json terms = Json::array();
                for (const auto& t : r.summands) {
                    Json names = Json::array();
                    for (const auto& l : t) names.push_back(l.to_string());
                    terms.push_back(names);
                }
                out << Json{{"p", c.p},
                            {"module", a.to_string()},
                            {"terms", terms},
                            {"terminated", r.terminated},
                            {"verified", ok}}
                           .dump(2)
                    << "\n";
            } else {
                for (std::size_t k = 0; k < r.summands.size(); ++k)
                    out << "P_" << k << " = " << summand_list(r.summands[k]) << "\n";
                if (r.terminated) out << "terminated\n";
                out << (ok ? "verified" : "NOT verified: " + why) << "\n";
            }
            return ok ? kOk : kClassificationFailure;
        } else if (*yoneda) {
            require_p(c);
            if (s_index < 1 || s_index > c.p - 1)
                throw std::domain_error("--s must satisfy 1 <= s <= " + std::to_string(c.p - 1));
            std::vector<std::string> tokens;
            std::stringstream ss(word);
            for (std::string t; std::getline(ss, t, ',');) tokens.push_back(t);
            if (tokens.empty()) throw std::domain_error("--word is empty");
            ExtCalculator calc(c.p);
            const XBasis x = calc.ext_basis_x(sign == "+" ? 1 : -1, s_index);
            ExtClass acc = x_class(x, tokens.back());
            for (auto it = tokens.rbegin() + 1; it != tokens.rend(); ++it) acc = calc.product(x_class(x, *it), acc);
            const bool zero = calc.is_zero(acc);
            if (c.json())
                out << Json{{"p", c.p},
                            {"word", word},
                            {"degree", acc.degree},
                            {"source", acc.source.to_string()},
                            {"target", acc.target.to_string()},
                            {"zero", zero}}
                           .dump(2)
                    << "\n";
            else
                out << "degree " << acc.degree << ": " << acc.source.to_string() << " -> " << acc.target.to_string()
                    << ", " << (zero ? "zero" : "nonzero") << "\n";
        } else if (*kron) {
            QuiverRep rep;
            try {
                rep = quiver_from_json(read_json_file(input));
            } catch (const std::invalid_argument& e) {
                throw std::domain_error(e.what());
            }
            if (field_order < 0) throw std::domain_error("--field-order must be non-negative");
            const QuiverDecomp d = classify(rep, field_order);
            if (c.json()) {
                out << to_json(d).dump(2) << "\n";
            } else {
                std::vector<std::string> names;
                for (const auto& b : d.blocks) names.push_back(b.to_string());
                out << (names.empty() ? "0" : join(names, " + ")) << "\n";
            }
        } else if (*braid) {
            require_p(c);
            const BraidReport r = verify_braiding(c.p);
            if (c.json()) {
                Json j = Json::array();
                for (const auto& ch : r.checks) j.push_back({{"check", ch.name}, {"ok", ch.ok}});
                out << Json{{"p", c.p}, {"ok", r.all_ok()}, {"checks", j}}.dump(2) << "\n";
            } else {
                for (const auto& ch : r.checks) out << (ch.ok ? "ok    " : "FAIL  ") << ch.name << "\n";
            }
            return r.all_ok() ? kOk : kClassificationFailure;
        } else if (*center) {
            require_p(c);
            const int d = static_cast<int>(center_basis(c.p).size());
            if (c.json())
                out << Json{{"p", c.p}, {"center_dim", d}}.dump(2) << "\n";
            else
                out << d << "\n";
        }
    } catch (const ClassificationError& e) {
        err << "uqslcat: classification failed: " << e.what() << "\n";
        return kClassificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "uqslcat: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::domain_error& e) {
        err << "uqslcat: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "uqslcat: internal failure: " << e.what() << "\n";
        return kClassificationFailure;
    }
    return kOk;
}

}  // namespace uqslcat
