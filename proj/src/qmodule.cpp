#include "uqsl/qmodule.hpp"

#include <sstream>
#include <stdexcept>

#include "uqsl/algebra.hpp"

namespace uqsl {

namespace {

int mod(long a, int n) {
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void check_p(int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
}

void check_sign(int a) {
    if (a != 1 && a != -1) throw std::invalid_argument("sign must be + or -");
}

void check_s(int p, int s, int hi) {
    if (s < 1 || s > hi)
        throw std::invalid_argument("s = " + std::to_string(s) + " out of range 1.." + std::to_string(hi));
}

CycNum sgn(int a) { return CycNum(1, static_cast<long>(a)); }

/// Writes the X^a_s action onto basis vectors off .. off+s-1 and their weights.
void place_irreducible(int p, int a, int s, int off, Matrix& E, Matrix& F, std::vector<int>& w) {
    for (int n = 0; n < s; ++n) {
        w[off + n] = weight_exponent(p, a, s - 1 - 2 * n);
        if (n >= 1) E(off + n - 1, off + n) = sgn(a) * qint(p, n) * qint(p, s - n);
        if (n + 1 < s) F(off + n + 1, off + n) = CycNum(1, 1L);
    }
}

}  // namespace

QMod::QMod(int p, std::vector<int> weights, Matrix E, Matrix F, std::string label)
    : p_(p), w_(std::move(weights)), e_(std::move(E)), f_(std::move(F)), label_(std::move(label)) {
    check_p(p);
    const int d = dim();
    if (e_.rows() != d || e_.cols() != d || f_.rows() != d || f_.cols() != d)
        throw std::invalid_argument("module matrices do not match the number of weights");
    for (auto& x : w_) x = mod(x, 2 * p);
}

Matrix QMod::K() const {
    Matrix k(dim(), dim());
    for (int i = 0; i < dim(); ++i) k(i, i) = qpow(p_, w_[i]);
    return k;
}

Matrix QMod::K_inv() const {
    Matrix k(dim(), dim());
    for (int i = 0; i < dim(); ++i) k(i, i) = qpow(p_, -w_[i]);
    return k;
}

int weight_exponent(int p, int a, int m) { return mod(m + (a < 0 ? p : 0), 2 * p); }

QMod irreducible(int p, int a, int s) {
    check_p(p);
    check_sign(a);
    check_s(p, s, p);
    Matrix E(s, s), F(s, s);
    std::vector<int> w(s);
    place_irreducible(p, a, s, 0, E, F, w);
    return QMod(p, w, E, F, ModuleLabel{Family::X, a, s}.to_string());
}

QMod build_W2(int p, int a, int s) {
    check_p(p);
    check_sign(a);
    check_s(p, s, p - 1);
    // a_n at 0.., b_n at s.., x_k at 2s..
    const int t = p - s, dim = 2 * s + t;
    const int A = 0, B = s, X = 2 * s;
    Matrix E(dim, dim), F(dim, dim);
    std::vector<int> w(dim);
    place_irreducible(p, a, s, A, E, F, w);
    place_irreducible(p, a, s, B, E, F, w);
    place_irreducible(p, -a, t, X, E, F, w);
    E(X + t - 1, A + 0) = CycNum(1, 1L);
    F(X + 0, B + s - 1) = CycNum(1, 1L);
    return QMod(p, w, E, F, ModuleLabel{Family::W, a, s, 2}.to_string());
}

QMod build_M2(int p, int a, int s) {
    check_p(p);
    check_sign(a);
    check_s(p, s, p - 1);
    // a_n at 0.., x_k at s.., y_k at s+t..
    const int t = p - s, dim = s + 2 * t;
    const int A = 0, X = s, Y = s + t;
    Matrix E(dim, dim), F(dim, dim);
    std::vector<int> w(dim);
    place_irreducible(p, a, s, A, E, F, w);
    place_irreducible(p, -a, t, X, E, F, w);
    place_irreducible(p, -a, t, Y, E, F, w);
    E(X + t - 1, A + 0) = CycNum(1, 1L);
    F(Y + 0, A + s - 1) = CycNum(1, 1L);
    return QMod(p, w, E, F, ModuleLabel{Family::M, a, s, 2}.to_string());
}

QMod build_O1(int p, int a, int s, const CP1& z) {
    check_p(p);
    check_sign(a);
    check_s(p, s, p - 1);
    const int t = p - s;
    const int A = 0, X = s;
    Matrix E(p, p), F(p, p);
    std::vector<int> w(p);
    place_irreducible(p, a, s, A, E, F, w);
    place_irreducible(p, -a, t, X, E, F, w);
    E(X + t - 1, A + 0) = z.z2;
    F(X + 0, A + s - 1) = z.z1;
    return QMod(p, w, E, F, ModuleLabel{Family::O, a, s, 1, z}.to_string());
}

QMod build_P(int p, int a, int s) {
    check_p(p);
    check_sign(a);
    check_s(p, s, p - 1);
    // a_n (socle) at 0.., b_n (top) at s.., x_k at 2s.., y_k at 2s+t..
    const int t = p - s, dim = 2 * p;
    const int A = 0, B = s, X = 2 * s, Y = 2 * s + t;
    Matrix E(dim, dim), F(dim, dim);
    std::vector<int> w(dim);
    place_irreducible(p, a, s, A, E, F, w);
    place_irreducible(p, a, s, B, E, F, w);
    place_irreducible(p, -a, t, X, E, F, w);
    place_irreducible(p, -a, t, Y, E, F, w);
    E(A + s - 1, Y + 0) = CycNum(1, 1L);
    for (int n = 1; n < s; ++n) E(A + n - 1, B + n) = CycNum(1, 1L);
    E(X + t - 1, B + 0) = CycNum(1, 1L);
    F(A + 0, X + t - 1) = CycNum(1, 1L);
    F(Y + 0, B + s - 1) = CycNum(1, 1L);
    return QMod(p, w, E, F, ModuleLabel{Family::P, a, s}.to_string());
}

QMod build_verma(int p, int a, int s) {
    if (s == p) return irreducible(p, a, s);
    QMod m = build_O1(p, a, s, CP1::make(CycNum(1, 1L), CycNum()));
    m.set_label(std::string("V") + (a > 0 ? "+" : "-") + "_" + std::to_string(s));
    return m;
}

QMod build_coverma(int p, int a, int s) {
    if (s == p) return irreducible(p, a, s);
    QMod m = build_O1(p, a, s, CP1::infinity());
    m.set_label(std::string("Vbar") + (a > 0 ? "+" : "-") + "_" + std::to_string(s));
    return m;
}

QMod build_glued(int p, int a, int s, const QuiverRep& rep) {
    check_p(p);
    check_sign(a);
    check_s(p, s, p - 1);
    if (rep.r.rows() != rep.d1 || rep.r.cols() != rep.d0 || rep.rbar.rows() != rep.d1 || rep.rbar.cols() != rep.d0)
        throw std::invalid_argument("malformed quiver representation");
    const int t = p - s;
    const int dim = rep.d0 * s + rep.d1 * t;
    Matrix E(dim, dim), F(dim, dim);
    std::vector<int> w(dim);
    const int socle = rep.d0 * s;
    for (int j = 0; j < rep.d0; ++j) place_irreducible(p, a, s, j * s, E, F, w);
    for (int i = 0; i < rep.d1; ++i) place_irreducible(p, -a, t, socle + i * t, E, F, w);
    for (int j = 0; j < rep.d0; ++j)
        for (int i = 0; i < rep.d1; ++i) {
            F(socle + i * t, j * s + s - 1) = rep.r(i, j);
            E(socle + i * t + t - 1, j * s) = rep.rbar(i, j);
        }
    return QMod(p, w, E, F);
}

// ---------------------------------------------------------------------------

bool ModuleLabel::operator==(const ModuleLabel& o) const {
    if (family != o.family || sign != o.sign || s != o.s) return false;
    if (family == Family::W || family == Family::M) return n == o.n;
    if (family == Family::O) return n == o.n && z == o.z;
    return true;
}

std::string ModuleLabel::base_name() const {
    const char* f = "XWMOP";
    std::ostringstream os;
    os << f[static_cast<int>(family)] << (sign > 0 ? '+' : '-') << '_' << s;
    return os.str();
}

std::string ModuleLabel::to_string() const {
    std::ostringstream os;
    os << base_name();
    if (family == Family::W || family == Family::M) os << '(' << n << ')';
    if (family == Family::O) os << '(' << n << ',' << z.to_string() << ')';
    return os.str();
}

QMod build_named(int p, const ModuleLabel& l) {
    QMod m;
    switch (l.family) {
        case Family::X: m = irreducible(p, l.sign, l.s); break;
        case Family::P: m = build_P(p, l.sign, l.s); break;
        case Family::W:
            if (l.n < 2) throw std::invalid_argument("W(n) needs n >= 2");
            m = build_glued(p, l.sign, l.s, QuiverRep::rho(l.n - 1));
            break;
        case Family::M:
            if (l.n < 2) throw std::invalid_argument("M(n) needs n >= 2");
            m = build_glued(p, l.sign, l.s, QuiverRep::rho_bar(l.n - 1));
            break;
        case Family::O:
            if (l.n < 1) throw std::invalid_argument("O(n, z) needs n >= 1");
            m = build_glued(p, l.sign, l.s, QuiverRep::regular(l.n, l.z));
            break;
    }
    m.set_label(l.to_string());
    return m;
}

// ---------------------------------------------------------------------------

ModuleCheck verify_module(const QMod& m) {
    const int p = m.p(), d = m.dim();
    const auto& w = m.weights();
    auto fail = [](std::string why) { return ModuleCheck{false, std::move(why)}; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (!m.E()(i, j).is_zero() && w[i] != mod(w[j] + 2, 2 * p)) return fail("K E K^-1 = q^2 E");
            if (!m.F()(i, j).is_zero() && w[i] != mod(w[j] - 2, 2 * p)) return fail("K F K^-1 = q^-2 F");
        }
    if (!m.E().pow(p).is_zero()) return fail("E^p = 0");
    if (!m.F().pow(p).is_zero()) return fail("F^p = 0");
    const CycNum q = qroot(p);
    const Matrix comm = m.E() * m.F() - m.F() * m.E();
    const Matrix rhs = (m.K() - m.K_inv()).scaled((q - q.inverse()).inverse());
    if (comm != rhs) return fail("[E,F] = (K - K^-1)/(q - q^-1)");
    return {};
}

QMod direct_sum(const QMod& a, const QMod& b) { return direct_sum(std::vector<QMod>{a, b}); }

QMod direct_sum(const std::vector<QMod>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty direct sum");
    const int p = parts[0].p();
    std::vector<Matrix> es, fs;
    std::vector<int> w;
    for (const auto& m : parts) {
        if (m.p() != p) throw std::invalid_argument("direct sum of modules with different p");
        es.push_back(m.E());
        fs.push_back(m.F());
        w.insert(w.end(), m.weights().begin(), m.weights().end());
    }
    return QMod(p, w, block_diag(es), block_diag(fs));
}

QMod tensor(const QMod& a, const QMod& b) {
    if (a.p() != b.p()) throw std::invalid_argument("tensor product of modules with different p");
    const Matrix ia = Matrix::identity(a.dim()), ib = Matrix::identity(b.dim());
    const Matrix E = kronecker(ia, b.E()) + kronecker(a.E(), b.K());
    const Matrix F = kronecker(a.K_inv(), b.F()) + kronecker(a.F(), ib);
    std::vector<int> w;
    for (int x : a.weights())
        for (int y : b.weights()) w.push_back(x + y);
    return QMod(a.p(), w, E, F);
}

QMod dual(const QMod& m) {
    const Matrix E = -(m.K_inv() * m.E().transpose());
    const Matrix F = -(m.F().transpose() * m.K());
    std::vector<int> w;
    for (int x : m.weights()) w.push_back(-x);
    return QMod(m.p(), w, E, F);
}

QMod regular_module(int p) {
    const auto& alg = PBWAlgebra::restricted(p);
    const int n = 2 * p, dim = alg.dim();
    // left multiplication on the PBW basis
    Matrix LE(dim, dim), LF(dim, dim);
    for (int b = 0; b < dim; ++b) {
        Terms te, tf;
        alg.mul_monomials(alg.index(1, 0, 0), b, CycNum(1, 1L), te);
        alg.mul_monomials(alg.index(0, 1, 0), b, CycNum(1, 1L), tf);
        for (const auto& [idx, c] : te) LE(idx, b) = c;
        for (const auto& [idx, c] : tf) LF(idx, b) = c;
    }
    // change to E^i F^j e_t, e_t = (1/2p) sum_l q^{-tl} K^l
    Matrix T(dim, dim), Tinv(dim, dim);
    const CycNum inv_n(n, mpq_class(1, n));
    std::vector<int> w(dim);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            for (int t = 0; t < n; ++t) {
                const int col = alg.index(i, j, t);
                w[col] = 2 * (i - j) + t;
                for (int l = 0; l < n; ++l) {
                    T(alg.index(i, j, l), col) = inv_n * qpow(p, -static_cast<long>(t) * l);
                    Tinv(col, alg.index(i, j, l)) = qpow(p, static_cast<long>(t) * l);
                }
            }
    QMod m(p, w, Tinv * LE * T, Tinv * LF * T, "Reg");
    return m;
}

std::map<int, int> weight_character(const QMod& m) {
    std::map<int, int> c;
    for (int x : m.weights()) ++c[x];
    return c;
}

}  // namespace uqsl
