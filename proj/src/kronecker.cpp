#include "uqsl/kronecker.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Dense>

namespace uqsl {

namespace {

const CycNum kOne(1, 1L);

// ---------------------------------------------------------------------------
// Polynomials over the field, low degree first, no trailing zeros.

using Poly = std::vector<CycNum>;

void trim(Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly monic(Poly f) {
    trim(f);
    if (f.empty()) return f;
    const CycNum inv = f.back().inverse();
    for (auto& c : f) c *= inv;
    return f;
}

/// Quotient and remainder of f by g (g nonzero).
std::pair<Poly, Poly> divmod(Poly f, const Poly& g) {
    trim(f);
    if (degree(f) < degree(g)) return {{}, f};
    Poly q(f.size() - g.size() + 1);
    const CycNum lead = g.back().inverse();
    for (int k = degree(f) - degree(g); k >= 0; --k) {
        const CycNum c = f[k + degree(g)] * lead;
        q[k] = c;
        if (c.is_zero()) continue;
        for (int i = 0; i <= degree(g); ++i) f[k + i] -= c * g[i];
    }
    trim(f);
    trim(q);
    return {q, f};
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly derivative(const Poly& f) {
    Poly d;
    for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * CycNum(1, static_cast<long>(k)));
    trim(d);
    return d;
}

CycNum evaluate(const Poly& f, const CycNum& x) {
    CycNum acc;
    for (int k = degree(f); k >= 0; --k) acc = acc * x + f[k];
    return acc;
}

std::string poly_string(const Poly& f) {
    std::ostringstream os;
    bool first = true;
    for (int k = degree(f); k >= 0; --k) {
        if (f[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << f[k].to_string() << ')';
        if (k > 0) os << "*T" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return first ? "0" : os.str();
}

/// Characteristic polynomial det(T - A) by Faddeev-LeVerrier.
Poly charpoly(const Matrix& a) {
    const int n = a.rows();
    Poly c(n + 1);
    c[n] = kOne;
    Matrix m(n, n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        for (int i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        const Matrix am = a * m;
        CycNum tr;
        for (int i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / CycNum(1, static_cast<long>(k));
    }
    return c;
}

// ---------------------------------------------------------------------------
// Exact roots in Q(zeta_N), located numerically and confirmed exactly.

mpq_class rationalize(double x) {
    const double tol = 1e-9 * std::max(1.0, std::fabs(x));
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double rest = x;
    for (int it = 0; it < 40; ++it) {
        const double fl = std::floor(rest);
        const long a = static_cast<long>(fl);
        const long h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (std::fabs(x - static_cast<double>(h1) / static_cast<double>(k1)) < tol || k1 > 100000000L) break;
        const double frac = rest - fl;
        if (frac < 1e-15) break;
        rest = 1.0 / frac;
    }
    mpq_class r(h1, k1);
    r.canonicalize();
    return r;
}

std::vector<std::complex<double>> numeric_roots(const Poly& f, int j) {
    const int d = degree(f);
    if (d <= 0) return {};
    const std::complex<double> lead = f[d].to_complex(j);
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -f[i].to_complex(j) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

/// Distinct roots of the square-free polynomial g in Q(zeta_order).
std::vector<CycNum> field_roots(const Poly& g, int order) {
    const int phi = euler_phi(order);
    std::vector<int> embeddings;
    if (order <= 2) {
        embeddings.push_back(1);
    } else {
        for (int j = 1; 2 * j < order; ++j)
            if (std::gcd(j, order) == 1) embeddings.push_back(j);
    }
    std::vector<std::vector<std::complex<double>>> roots;
    for (int j : embeddings) roots.push_back(numeric_roots(g, j));

    std::vector<CycNum> found;
    auto known = [&](const CycNum& x) {
        for (const auto& y : found)
            if (y == x) return true;
        return false;
    };
    const bool real_only = order <= 2;
    const int rows_per = real_only ? 1 : 2;
    Eigen::MatrixXd sys(rows_per * static_cast<int>(embeddings.size()), phi);
    for (std::size_t e = 0; e < embeddings.size(); ++e)
        for (int k = 0; k < phi; ++k) {
            const double ang = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(k) * embeddings[e]) % order) / order;
            sys(rows_per * e, k) = std::cos(ang);
            if (!real_only) sys(rows_per * e + 1, k) = std::sin(ang);
        }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sys);

    std::vector<int> choice(embeddings.size(), 0);
    for (const auto& r1 : roots[0]) {
        if (real_only && std::fabs(r1.imag()) > 1e-6) continue;
        // enumerate the matching roots under the remaining embeddings
        const std::size_t others = embeddings.size() - 1;
        std::vector<std::size_t> idx(others, 0);
        bool done = false;
        while (!done) {
            Eigen::VectorXd rhs(sys.rows());
            rhs(0) = r1.real();
            if (!real_only) rhs(1) = r1.imag();
            for (std::size_t e = 0; e < others; ++e) {
                rhs(2 * (e + 1)) = roots[e + 1][idx[e]].real();
                rhs(2 * (e + 1) + 1) = roots[e + 1][idx[e]].imag();
            }
            const Eigen::VectorXd c = qr.solve(rhs);
            if ((sys * c - rhs).norm() < 1e-6 * std::max(1.0, rhs.norm())) {
                std::vector<mpq_class> coeffs;
                for (int k = 0; k < phi; ++k) coeffs.push_back(rationalize(c(k)));
                const CycNum x(order, coeffs);
                if (evaluate(g, x).is_zero()) {
                    if (!known(x)) found.push_back(x);
                    break;
                }
            }
            std::size_t e = 0;
            while (e < others && ++idx[e] == roots[e + 1].size()) idx[e++] = 0;
            done = e == others;
        }
    }
    return found;
}

// ---------------------------------------------------------------------------
// Representation helpers

/// Solutions (P0, P1) of P1 a.r = b.r P0 and P1 a.rbar = b.rbar P0.
std::vector<std::pair<Matrix, Matrix>> hom_pairs(const QuiverRep& a, const QuiverRep& b) {
    const int n0 = b.d0 * a.d0, n1 = b.d1 * a.d1, nv = n0 + n1;
    if (nv == 0) return {};
    SparseEchelon ech(nv);
    auto v0 = [&](int i, int j) { return i * a.d0 + j; };       // P0(i, j)
    auto v1 = [&](int i, int j) { return n0 + i * a.d1 + j; };  // P1(i, j)
    for (const auto* pair : {&a.r, &a.rbar}) {
        const Matrix& ma = *pair;
        const Matrix& mb = pair == &a.r ? b.r : b.rbar;
        for (int i = 0; i < b.d1; ++i)
            for (int k = 0; k < a.d0; ++k) {
                std::map<int, CycNum> row;
                for (int j = 0; j < a.d1; ++j)
                    if (!ma(j, k).is_zero()) row[v1(i, j)] += ma(j, k);
                for (int j = 0; j < b.d0; ++j)
                    if (!mb(i, j).is_zero()) row[v0(j, k)] -= mb(i, j);
                SparseRow sr;
                for (auto& [x, v] : row)
                    if (!v.is_zero()) sr.emplace_back(x, v);
                if (!sr.empty()) ech.add_row(sr);
            }
    }
    const Matrix ns = ech.nullspace();
    std::vector<std::pair<Matrix, Matrix>> out;
    for (int k = 0; k < ns.cols(); ++k) {
        Matrix p0(b.d0, a.d0), p1(b.d1, a.d1);
        for (int i = 0; i < b.d0; ++i)
            for (int j = 0; j < a.d0; ++j) p0(i, j) = ns(v0(i, j), k);
        for (int i = 0; i < b.d1; ++i)
            for (int j = 0; j < a.d1; ++j) p1(i, j) = ns(v1(i, j), k);
        out.emplace_back(std::move(p0), std::move(p1));
    }
    return out;
}

QuiverRep dual_rep(const QuiverRep& r) { return QuiverRep(r.d1, r.d0, r.r.transpose(), r.rbar.transpose()); }

/// A summand with its embedding (e0, e1) into an ambient representation.
struct Part {
    KronBlock block;
    Matrix e0, e1;
};

/// A subrepresentation given by bases (e0, e1) and its induced maps.
struct Sub {
    QuiverRep rep;
    Matrix e0, e1;
};

Sub restrict_rep(const QuiverRep& amb, const Matrix& k0, const Matrix& k1) {
    const Matrix l1 = k1.cols() ? left_inverse(k1) : Matrix(0, amb.d1);
    const Matrix r = k0.cols() && k1.cols() ? l1 * (amb.r * k0) : Matrix(k1.cols(), k0.cols());
    const Matrix rb = k0.cols() && k1.cols() ? l1 * (amb.rbar * k0) : Matrix(k1.cols(), k0.cols());
    if (k1 * r != amb.r * k0 || k1 * rb != amb.rbar * k0)
        throw ClassificationError("complement is not a subrepresentation");
    return {QuiverRep(k0.cols(), k1.cols(), r, rb), k0, k1};
}

/// Kernel vectors of the pencil of degree eps, as columns of length (eps+1)*d0.
Matrix pencil_kernel(const QuiverRep& R, int eps) {
    const int d0 = R.d0, d1 = R.d1;
    Matrix t((eps + 2) * d1, (eps + 1) * d0);
    for (int i = 0; i <= eps; ++i) {
        t.place(R.r, i * d1, i * d0);
        t.place(R.rbar, (i + 1) * d1, i * d0);
    }
    return nullspace(t);
}

/// A retraction (psi0, psi1) of R onto the embedded summand (i0, i1) of shape c.
std::pair<Matrix, Matrix> retraction(const QuiverRep& R, const QuiverRep& c, const Matrix& i0, const Matrix& i1) {
    const int m0 = c.d0, m1 = c.d1;
    const int n0 = m0 * R.d0, nv = n0 + m1 * R.d1;
    auto v0 = [&](int i, int j) { return i * R.d0 + j; };
    auto v1 = [&](int i, int j) { return n0 + i * R.d1 + j; };
    const int eqs = 2 * m1 * R.d0 + m0 * m0 + m1 * m1;
    Matrix a(eqs, nv), b(eqs, 1);
    int row = 0;
    for (int which = 0; which < 2; ++which) {
        const Matrix& mr = which ? R.rbar : R.r;
        const Matrix& mc = which ? c.rbar : c.r;
        for (int i = 0; i < m1; ++i)
            for (int k = 0; k < R.d0; ++k, ++row) {
                for (int j = 0; j < R.d1; ++j) a(row, v1(i, j)) += mr(j, k);
                for (int j = 0; j < m0; ++j) a(row, v0(j, k)) -= mc(i, j);
            }
    }
    for (int i = 0; i < m0; ++i)
        for (int k = 0; k < m0; ++k, ++row) {
            for (int j = 0; j < R.d0; ++j) a(row, v0(i, j)) = i0(j, k);
            if (i == k) b(row, 0) = kOne;
        }
    for (int i = 0; i < m1; ++i)
        for (int k = 0; k < m1; ++k, ++row) {
            for (int j = 0; j < R.d1; ++j) a(row, v1(i, j)) = i1(j, k);
            if (i == k) b(row, 0) = kOne;
        }
    const auto x = solve(a, b);
    if (!x) throw ClassificationError("no retraction onto a minimal singular block");
    Matrix p0(m0, R.d0), p1(m1, R.d1);
    for (int i = 0; i < m0; ++i)
        for (int j = 0; j < R.d0; ++j) p0(i, j) = (*x)(v0(i, j), 0);
    for (int i = 0; i < m1; ++i)
        for (int j = 0; j < R.d1; ++j) p1(i, j) = (*x)(v1(i, j), 0);
    return {p0, p1};
}

/// Splits off every rho_n summand, smallest n first.
std::pair<std::vector<Part>, Sub> peel_singular(const QuiverRep& R) {
    std::vector<Part> parts;
    Sub cur{R, Matrix::identity(R.d0), Matrix::identity(R.d1)};
    while (cur.rep.d0 > 0) {
        const QuiverRep& S = cur.rep;
        int eps = -1;
        Matrix ker;
        for (int e = 0; e < S.d0 && e <= S.d1; ++e) {
            ker = pencil_kernel(S, e);
            if (ker.cols() > 0) {
                eps = e;
                break;
            }
        }
        if (eps < 0) break;
        Matrix i0(S.d0, eps + 1);
        for (int i = 0; i <= eps; ++i) {
            const CycNum sign(1, (i % 2) ? -1L : 1L);
            for (int k = 0; k < S.d0; ++k) i0(k, eps - i) = ker(i * S.d0 + k, 0) * sign;
        }
        const Matrix i1 = eps ? (S.r * i0).select_cols([&] {
            std::vector<int> c(eps);
            std::iota(c.begin(), c.end(), 0);
            return c;
        }())
                              : Matrix(S.d1, 0);
        const QuiverRep c = QuiverRep::rho(eps);
        if (S.r * i0 != i1 * c.r || S.rbar * i0 != i1 * c.rbar || rank(i0) != eps + 1 || rank(i1) != eps)
            throw ClassificationError("minimal pencil kernel does not embed a singular block");
        const auto [p0, p1] = retraction(S, c, i0, i1);
        parts.push_back({KronBlock{KronBlock::Kind::Rho, eps, CP1::affine(CycNum())}, cur.e0 * i0, cur.e1 * i1});
        const Matrix k0 = nullspace(p0);
        const Matrix k1 = p1.rows() ? nullspace(p1) : Matrix::identity(S.d1);
        Sub next = restrict_rep(S, k0, k1);
        cur = {next.rep, cur.e0 * k0, cur.e1 * k1};
    }
    return {parts, cur};
}

/// Jordan chains of a nilpotent matrix; each chain is [e_0 .. e_{n-1}] with A e_j = e_{j-1}, A e_0 = 0.
std::vector<Matrix> jordan_chains(const Matrix& a) {
    const int k = a.rows();
    std::vector<Matrix> kers{Matrix(k, 0)};
    Matrix power = Matrix::identity(k);
    while (kers.back().cols() < k) {
        power = power * a;
        kers.push_back(nullspace(power));
        if (static_cast<int>(kers.size()) > k + 1) throw ClassificationError("matrix is not nilpotent");
    }
    const int m = static_cast<int>(kers.size()) - 1;
    std::vector<std::vector<std::vector<CycNum>>> level(m + 1);
    std::vector<Matrix> chains;
    for (int i = m; i >= 1; --i) {
        std::vector<Matrix> base{kers[i - 1]};
        for (const auto& v : level[i]) base.push_back(Matrix::column(v));
        const Matrix known = hstack(base, k);
        const Matrix cand = hstack({known, kers[i]}, k);
        for (int c : independent_columns(cand)) {
            if (c < known.cols()) continue;
            Matrix chain(k, i);
            std::vector<CycNum> v = kers[i].col(c - known.cols());
            for (int j = i - 1; j >= 0; --j) {
                chain.set_col(j, v);
                if (j < i - 1) level[j + 1].push_back(v);
                v = mat_vec(a, v);
            }
            chains.push_back(std::move(chain));
        }
    }
    return chains;
}

/// Classification of a regular representation (r + c rbar invertible for some c).
std::vector<Part> classify_regular(const QuiverRep& R, int order) {
    std::vector<Part> parts;
    const int n = R.d0;
    if (n == 0) return parts;
    if (R.d1 != n) throw ClassificationError("regular part is not square");
    std::optional<Matrix> minv;
    CycNum c;
    for (long t = 0; t <= 2L * n + 2 && !minv; ++t) {
        c = CycNum(1, t % 2 ? (t + 1) / 2 : -(t / 2));
        minv = inverse(R.r + R.rbar.scaled(c));
    }
    if (!minv) throw ClassificationError("regular part has a singular pencil");
    const Matrix M = R.r + R.rbar.scaled(c);
    const Matrix T = *minv * R.rbar;
    const Poly f = charpoly(T);
    const Poly g = divmod(f, gcd(f, derivative(f))).first;
    const std::vector<CycNum> thetas = field_roots(g, order);
    if (static_cast<int>(thetas.size()) < degree(g)) {
        Poly rest = g;
        for (const auto& th : thetas) rest = divmod(rest, Poly{-th, kOne}).first;
        throw ClassificationError("eigenvalue-outside-field: " + poly_string(monic(rest)));
    }
    for (const auto& theta : thetas) {
        const Matrix G = nullspace((T - Matrix::identity(n).scaled(theta)).pow(n));
        const Matrix H = M * G;
        const Matrix lh = left_inverse(H);
        const Matrix rG = lh * (R.r * G), rbG = lh * (R.rbar * G);
        const CycNum head = kOne - c * theta;
        const bool at_infinity = head.is_zero();
        const CP1 z = at_infinity ? CP1::infinity() : CP1::affine(theta / head);
        const int k = G.cols();
        Matrix A;
        if (at_infinity) {
            A = *inverse(rbG) * rG;
        } else {
            A = *inverse(rG) * rbG - Matrix::identity(k).scaled(z.z2);
        }
        for (const Matrix& b0 : jordan_chains(A)) {
            const Matrix b1 = (at_infinity ? rbG : rG) * b0;
            parts.push_back({KronBlock{KronBlock::Kind::Regular, b0.cols(), z}, G * b0, H * b1});
        }
    }
    return parts;
}

int entry_order(const QuiverRep& rep) {
    int order = 1;
    for (const Matrix* m : {&rep.r, &rep.rbar})
        for (int i = 0; i < m->rows(); ++i)
            for (int j = 0; j < m->cols(); ++j)
                if (!(*m)(i, j).is_rational()) order = std::lcm(order, (*m)(i, j).order());
    return order;
}

}  // namespace

// ---------------------------------------------------------------------------

QuiverRep KronBlock::canonical() const {
    switch (kind) {
        case Kind::Rho: return QuiverRep::rho(n);
        case Kind::RhoBar: return QuiverRep::rho_bar(n);
        case Kind::Regular: return QuiverRep::regular(n, z);
    }
    return {};
}

bool KronBlock::operator==(const KronBlock& o) const {
    return kind == o.kind && n == o.n && (kind != Kind::Regular || z == o.z);
}

std::string KronBlock::to_string() const {
    switch (kind) {
        case Kind::Rho: return "rho_" + std::to_string(n);
        case Kind::RhoBar: return "rhobar_" + std::to_string(n);
        case Kind::Regular: return "reg_" + std::to_string(n) + "(" + z.to_string() + ")";
    }
    return "";
}

QuiverRep QuiverDecomp::canonical() const {
    QuiverRep out;
    for (const auto& b : blocks) out = out + b.canonical();
    return out;
}

QuiverDecomp classify(const QuiverRep& rep, int field_order) {
    const int order = field_order > 0 ? std::lcm(field_order, entry_order(rep)) : entry_order(rep);
    std::vector<Part> all;

    auto [sing, rest] = peel_singular(rep);
    all = sing;

    // preinjective parts are the singular parts of the dual
    QuiverRep regular = rest.rep;
    Matrix reg_e0 = rest.e0, reg_e1 = rest.e1;
    if (rest.rep.d0 + rest.rep.d1 > 0) {
        const QuiverRep D = dual_rep(rest.rep);
        auto [dsing, drest] = peel_singular(D);
        std::vector<Matrix> h0, h1;
        for (const auto& pt : dsing) {
            h0.push_back(pt.e0);
            h1.push_back(pt.e1);
        }
        h0.push_back(drest.e0);
        h1.push_back(drest.e1);
        const auto g0 = inverse(hstack(h1, D.d1).transpose());
        const auto g1 = inverse(hstack(h0, D.d0).transpose());
        if (!g0 || !g1) throw ClassificationError("dual splitting is not a basis");
        int c0 = 0, c1 = 0;
        auto take = [](const Matrix& m, int from, int count) {
            std::vector<int> idx(count);
            std::iota(idx.begin(), idx.end(), from);
            return m.select_cols(idx);
        };
        for (const auto& pt : dsing) {
            const int n = pt.block.n;
            all.push_back({KronBlock{KronBlock::Kind::RhoBar, n, CP1::affine(CycNum())}, rest.e0 * take(*g0, c0, n),
                           rest.e1 * take(*g1, c1, n + 1)});
            c0 += n;
            c1 += n + 1;
        }
        regular = dual_rep(drest.rep);
        reg_e0 = rest.e0 * take(*g0, c0, regular.d0);
        reg_e1 = rest.e1 * take(*g1, c1, regular.d1);
    }
    for (auto& pt : classify_regular(regular, order)) all.push_back({pt.block, reg_e0 * pt.e0, reg_e1 * pt.e1});

    QuiverDecomp out;
    std::vector<Matrix> b0, b1;
    for (const auto& pt : all) {
        out.blocks.push_back(pt.block);
        b0.push_back(pt.e0);
        b1.push_back(pt.e1);
    }
    out.b0 = hstack(b0, rep.d0);
    out.b1 = hstack(b1, rep.d1);
    const QuiverRep canon = out.canonical();
    if (out.b0.cols() != rep.d0 || out.b1.cols() != rep.d1 || rank(out.b0) != rep.d0 || rank(out.b1) != rep.d1 ||
        rep.r * out.b0 != out.b1 * canon.r || rep.rbar * out.b0 != out.b1 * canon.rbar)
        throw ClassificationError("Kronecker certificate failed to verify");
    return out;
}

std::vector<std::pair<Matrix, Matrix>> endomorphisms(const QuiverRep& rep) { return hom_pairs(rep, rep); }

bool is_indecomposable_oracle(const QuiverRep& rep) {
    const auto end = endomorphisms(rep);
    const int n = static_cast<int>(end.size());
    if (n == 0) return false;
    Matrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            CycNum t;
            const Matrix x0 = end[i].first * end[j].first, x1 = end[i].second * end[j].second;
            for (int k = 0; k < x0.rows(); ++k) t += x0(k, k);
            for (int k = 0; k < x1.rows(); ++k) t += x1(k, k);
            gram(i, j) = t;
            gram(j, i) = t;
        }
    return rank(gram) == 1;
}

bool quiver_isomorphic(const QuiverRep& a, const QuiverRep& b) {
    if (a.d0 != b.d0 || a.d1 != b.d1) return false;
    if (a.d0 + a.d1 == 0) return true;
    const auto H = hom_pairs(a, b);
    if (H.empty()) return false;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-7, 7);
    for (int attempt = 0; attempt < 12; ++attempt) {
        Matrix p0(b.d0, a.d0), p1(b.d1, a.d1);
        for (const auto& [h0, h1] : H) {
            const CycNum c(1, static_cast<long>(coef(rng)));
            p0 = p0 + h0.scaled(c);
            p1 = p1 + h1.scaled(c);
        }
        if (rank(p0) == a.d0 && rank(p1) == a.d1) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Functors

FunctorImage functor_F(const QMod& m, int a, int s) {
    const int p = m.p(), t = p - s;
    const QMod M2 = build_M2(p, a, s);
    const QMod Xs = irreducible(p, -a, t);
    FunctorImage img;
    img.v0 = hom_space(M2, m);
    img.v1 = hom_space(Xs, m);
    const int d0 = static_cast<int>(img.v0.size()), d1 = static_cast<int>(img.v1.size());

    const auto ch = weight_character(m);
    auto mult = [&](int w) {
        auto it = ch.find(w);
        return it == ch.end() ? 0 : it->second;
    };
    const int top_mult = mult(weight_exponent(p, a, s - 1));
    const int soc_mult = mult(weight_exponent(p, -a, t - 1));
    if (soc_mult != d1 || top_mult != d0 || static_cast<int>(hom_space(m, irreducible(p, a, s)).size()) != top_mult ||
        m.dim() != d0 * s + d1 * t)
        throw std::domain_error("functor F: module is not glued from tops X" + std::string(a > 0 ? "+" : "-") +
                                "_" + std::to_string(s) + " over its socle");

    // images of x_0 identify Hom(X^{-a}_{p-s}, m) with a subspace of m
    Matrix x0_images(m.dim(), d1);
    for (int i = 0; i < d1; ++i) x0_images.set_col(i, img.v1[i].col(0));
    Matrix r(d1, d0), rb(d1, d0);
    const int X = s, Y = s + t;
    for (int j = 0; j < d0; ++j)
        for (int which = 0; which < 2; ++which) {
            const auto sol = solve(x0_images, Matrix::column(img.v0[j].col(which ? X : Y)));
            if (!sol) throw std::domain_error("functor F: socle image outside the socle copies");
            Matrix& target = which ? rb : r;
            for (int i = 0; i < d1; ++i) target(i, j) = (*sol)(i, 0);
        }
    img.rep = QuiverRep(d0, d1, r, rb);
    return img;
}

QuiverRep functor_F_rep(const QMod& m, int a, int s) { return functor_F(m, a, s).rep; }

QMod functor_G(const QuiverRep& rep, int p, int a, int s) { return build_glued(p, a, s, rep); }

ModMap functor_counit(const FunctorImage& img, int p, int a, int s) {
    const int t = p - s;
    const int d0 = img.rep.d0, d1 = img.rep.d1;
    const int dim_m = d0 ? img.v0[0].rows() : (d1 ? img.v1[0].rows() : 0);
    ModMap f(dim_m, d0 * s + d1 * t);
    for (int j = 0; j < d0; ++j)
        for (int n = 0; n < s; ++n) f.set_col(j * s + n, img.v0[j].col(n));
    for (int i = 0; i < d1; ++i)
        for (int k = 0; k < t; ++k) f.set_col(d0 * s + i * t + k, img.v1[i].col(k));
    return f;
}

ModuleLabel label_for_block(const KronBlock& b, int a, int s, int p) {
    switch (b.kind) {
        case KronBlock::Kind::Rho:
            if (b.n == 0) return ModuleLabel{Family::X, a, s};
            return ModuleLabel{Family::W, a, s, b.n + 1};
        case KronBlock::Kind::RhoBar:
            if (b.n == 0) return ModuleLabel{Family::X, -a, p - s};
            return ModuleLabel{Family::M, a, s, b.n + 1};
        case KronBlock::Kind::Regular: return ModuleLabel{Family::O, a, s, b.n, b.z};
    }
    return {};
}

}  // namespace uqsl
