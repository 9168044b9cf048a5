#include "uqsl/serialize.hpp"

#include <stdexcept>

namespace uqsl {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("json: " + what);
}

const Json& field(const Json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    require(v.is_number_integer(), std::string("field \"") + key + "\" is not an integer");
    return v.get<int>();
}

const PBWAlgebra& algebra_of(const Json& j) {
    const int p = int_field(j, "p");
    require(p >= 2, "p must be at least 2");
    const bool ext = j.contains("extended") && j.at("extended").get<bool>();
    return ext ? PBWAlgebra::extended(p) : PBWAlgebra::restricted(p);
}

int checked_exponent(const Json& v, int bound, const char* what) {
    require(v.is_number_integer(), std::string(what) + " is not an integer");
    const int x = v.get<int>();
    require(x >= 0 && x < bound, std::string(what) + " out of range");
    return x;
}

/// A CP1 entry: a fraction string or a full CycNum object.
CycNum entry_from_json(const Json& v) {
    if (v.is_string()) return CycNum(1, parse_fraction(v.get<std::string>()));
    return cycnum_from_json(v);
}

Json entry_to_json(const CycNum& x) {
    if (x.is_rational()) return x.coeff(0).get_str();
    return to_json(x);
}

Family family_from_char(char c) {
    switch (c) {
        case 'X': return Family::X;
        case 'W': return Family::W;
        case 'M': return Family::M;
        case 'O': return Family::O;
        case 'P': return Family::P;
        default: throw std::invalid_argument(std::string("json: unknown module family '") + c + "'");
    }
}

}  // namespace

mpq_class parse_fraction(const std::string& s) {
    mpq_class out;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            out = mpq_class(mpz_class(s, 10));
        } else {
            const mpz_class num(s.substr(0, slash), 10), den(s.substr(slash + 1), 10);
            if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
            out = mpq_class(num, den);
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("json: bad fraction \"" + s + "\"");
    }
    out.canonicalize();
    return out;
}

Json to_json(const CycNum& x) {
    Json j;
    j["order"] = x.order();
    std::vector<std::string> cs;
    for (const auto& c : x.raw()) cs.push_back(c.get_str());
    j["coeffs"] = cs;
    return j;
}

CycNum cycnum_from_json(const Json& j) {
    const int order = int_field(j, "order");
    require(order >= 1, "field order must be positive");
    const Json& cs = field(j, "coeffs");
    require(cs.is_array(), "coeffs must be an array");
    std::vector<mpq_class> c;
    for (const auto& s : cs) {
        require(s.is_string(), "coefficients must be fraction strings");
        c.push_back(parse_fraction(s.get<std::string>()));
    }
    if (order == 1) {
        require(c.size() <= 1, "a rational has at most one coefficient");
        return c.empty() ? CycNum() : CycNum(1, c[0]);
    }
    require(static_cast<int>(c.size()) <= euler_phi(order), "too many coefficients for the field");
    return CycNum(order, std::move(c));
}

Json matrix_to_triplets(const Matrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out.push_back(Json::array({i, j, to_json(m(i, j))}));
    return out;
}

Matrix matrix_from_triplets(const Json& j, int rows, int cols) {
    require(j.is_array(), "matrix must be a triplet list");
    Matrix m(rows, cols);
    for (const auto& t : j) {
        require(t.is_array() && t.size() == 3, "matrix entries are [i, j, value]");
        const int r = checked_exponent(t[0], rows, "row index");
        const int c = checked_exponent(t[1], cols, "column index");
        m(r, c) = cycnum_from_json(t[2]);
    }
    return m;
}

Json matrix_to_rows(const Matrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

Matrix matrix_from_rows(const Json& j, int rows, int cols) {
    require(j.is_array() && static_cast<int>(j.size()) == rows, "matrix must have one array per row");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(j[i].is_array() && static_cast<int>(j[i].size()) == cols, "matrix row has the wrong length");
        for (int k = 0; k < cols; ++k) m(i, k) = cycnum_from_json(j[i][k]);
    }
    return m;
}

Json to_json(const AlgElem& x) {
    const PBWAlgebra& alg = x.algebra();
    Json j;
    j["p"] = alg.p();
    j["extended"] = alg.is_extended();
    j["terms"] = Json::array();
    for (const auto& [idx, c] : x.terms()) {
        const PBWIndex d = alg.decode(idx);
        j["terms"].push_back({{"e", d.e}, {"f", d.f}, {"k", d.l}, {"c", to_json(c)}});
    }
    return j;
}

AlgElem alg_elem_from_json(const Json& j) {
    const PBWAlgebra& alg = algebra_of(j);
    const Json& ts = field(j, "terms");
    require(ts.is_array(), "terms must be an array");
    AlgElem out(alg);
    for (const auto& t : ts) {
        const int e = checked_exponent(field(t, "e"), alg.p(), "E exponent");
        const int f = checked_exponent(field(t, "f"), alg.p(), "F exponent");
        const int l = checked_exponent(field(t, "k"), alg.cartan_order(), "Cartan exponent");
        out = out + alg.basis(alg.index(e, f, l)).scaled(cycnum_from_json(field(t, "c")));
    }
    return out;
}

Json to_json(const TensorElem& x) {
    const PBWAlgebra& alg = x.algebra();
    Json j;
    j["p"] = alg.p();
    j["extended"] = alg.is_extended();
    j["arity"] = x.arity();
    // sort by key so the output is deterministic
    std::map<std::uint64_t, CycNum> sorted(x.terms().begin(), x.terms().end());
    j["terms"] = Json::array();
    for (const auto& [key, c] : sorted) {
        Json factors = Json::array();
        for (int idx : x.decode(key)) {
            const PBWIndex d = alg.decode(idx);
            factors.push_back(Json::array({d.e, d.f, d.l}));
        }
        j["terms"].push_back({{"factors", factors}, {"c", to_json(c)}});
    }
    return j;
}

TensorElem tensor_elem_from_json(const Json& j) {
    const PBWAlgebra& alg = algebra_of(j);
    const int arity = int_field(j, "arity");
    require(arity >= 1, "arity must be positive");
    TensorElem out(alg, arity);
    for (const auto& t : field(j, "terms")) {
        const Json& fs = field(t, "factors");
        require(fs.is_array() && static_cast<int>(fs.size()) == arity, "factor count does not match the arity");
        std::vector<int> idx;
        for (const auto& f : fs) {
            require(f.is_array() && f.size() == 3, "factors are [e, f, k]");
            idx.push_back(alg.index(checked_exponent(f[0], alg.p(), "E exponent"),
                                    checked_exponent(f[1], alg.p(), "F exponent"),
                                    checked_exponent(f[2], alg.cartan_order(), "Cartan exponent")));
        }
        out.add(out.encode(idx), cycnum_from_json(field(t, "c")));
    }
    return out;
}

Json to_json(const QMod& m) {
    Json j;
    j["p"] = m.p();
    j["dim"] = m.dim();
    j["weights"] = m.weights();
    j["E"] = matrix_to_triplets(m.E());
    j["F"] = matrix_to_triplets(m.F());
    j["K"] = matrix_to_triplets(m.K());
    j["label"] = m.label();
    return j;
}

QMod qmod_from_json(const Json& j) {
    const int p = int_field(j, "p");
    require(p >= 2, "p must be at least 2");
    const int n = int_field(j, "dim");
    require(n >= 0, "dim must be non-negative");
    const Json& ws = field(j, "weights");
    require(ws.is_array() && static_cast<int>(ws.size()) == n, "weights must list one exponent per basis vector");
    std::vector<int> w;
    for (const auto& x : ws) w.push_back(checked_exponent(x, 2 * p, "weight exponent"));
    const std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
    QMod m(p, w, matrix_from_triplets(field(j, "E"), n, n), matrix_from_triplets(field(j, "F"), n, n), label);
    if (j.contains("K")) require(matrix_from_triplets(j.at("K"), n, n) == m.K(), "K does not match the weights");
    return m;
}

Json to_json(const QuiverRep& rep) {
    return {{"d0", rep.d0}, {"d1", rep.d1}, {"r", matrix_to_rows(rep.r)}, {"rbar", matrix_to_rows(rep.rbar)}};
}

QuiverRep quiver_from_json(const Json& j) {
    const int d0 = int_field(j, "d0"), d1 = int_field(j, "d1");
    require(d0 >= 0 && d1 >= 0, "dimensions must be non-negative");
    return QuiverRep(d0, d1, matrix_from_rows(field(j, "r"), d1, d0), matrix_from_rows(field(j, "rbar"), d1, d0));
}

Json to_json(const CP1& z) { return Json::array({entry_to_json(z.z1), entry_to_json(z.z2)}); }

CP1 cp1_from_json(const Json& j) {
    require(j.is_array() && j.size() == 2, "a point of CP^1 is a pair");
    return CP1::make(entry_from_json(j[0]), entry_from_json(j[1]));
}

Json to_json(const ModuleLabel& l) {
    Json j;
    j["label"] = l.base_name();
    if (l.family == Family::W || l.family == Family::M || l.family == Family::O) j["n"] = l.n;
    if (l.family == Family::O) j["z"] = to_json(l.z);
    return j;
}

ModuleLabel label_from_json(const Json& j) {
    const Json& name = field(j, "label");
    require(name.is_string(), "label must be a string");
    const std::string s = name.get<std::string>();
    require(s.size() >= 4 && (s[1] == '+' || s[1] == '-') && s[2] == '_', "label \"" + s + "\" is not like X+_1");
    ModuleLabel l;
    l.family = family_from_char(s[0]);
    l.sign = s[1] == '+' ? 1 : -1;
    try {
        std::size_t used = 0;
        l.s = std::stoi(s.substr(3), &used);
        require(used == s.size() - 3, "trailing characters in label \"" + s + "\"");
    } catch (const std::logic_error&) {
        throw std::invalid_argument("json: bad index in label \"" + s + "\"");
    }
    if (l.family == Family::W || l.family == Family::M || l.family == Family::O) l.n = int_field(j, "n");
    if (l.family == Family::O) l.z = cp1_from_json(field(j, "z"));
    return l;
}

Json to_json(const DecompReport& r, bool with_certificate) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json x = to_json(e.label);
        x["mult"] = e.mult;
        entries.push_back(x);
    }
    if (!with_certificate) return entries;
    Json summands = Json::array();
    for (const auto& l : r.summands) summands.push_back(to_json(l));
    return {{"entries", entries},
            {"summands", summands},
            {"certificate",
             {{"rows", r.certificate.rows()},
              {"cols", r.certificate.cols()},
              {"entries", matrix_to_triplets(r.certificate)}}}};
}

DecompReport decomp_from_json(const Json& j) {
    DecompReport r;
    const Json& entries = j.is_array() ? j : field(j, "entries");
    require(entries.is_array(), "entries must be an array");
    for (const auto& e : entries) {
        const int mult = int_field(e, "mult");
        require(mult > 0, "multiplicities must be positive");
        r.entries.push_back({label_from_json(e), mult});
    }
    if (j.is_object()) {
        for (const auto& s : field(j, "summands")) r.summands.push_back(label_from_json(s));
        const Json& c = field(j, "certificate");
        r.certificate = matrix_from_triplets(field(c, "entries"), int_field(c, "rows"), int_field(c, "cols"));
    }
    return r;
}

Json to_json(const QuiverDecomp& d) {
    Json out = Json::array();
    for (const auto& b : d.blocks) {
        Json x;
        x["kind"] = b.kind == KronBlock::Kind::Rho ? "rho" : b.kind == KronBlock::Kind::RhoBar ? "rhobar" : "reg";
        x["n"] = b.n;
        if (b.kind == KronBlock::Kind::Regular) x["z"] = to_json(b.z);
        out.push_back(x);
    }
    return out;
}

}  // namespace uqsl
