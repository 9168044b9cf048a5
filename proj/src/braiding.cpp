#include "uqsl/braiding.hpp"

#include <deque>
#include <stdexcept>

namespace uqsl {

namespace {

constexpr int kOrder = 8;

void require_p2(int p) {
    if (p != 2) throw std::domain_error("the R-matrix and ribbon element are implemented for p = 2 only");
}

CycNum z8(long k) { return CycNum::zeta(kOrder, k); }

Matrix embed8(const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(i, j) = m(i, j).embed(kOrder);
    return out;
}

TensorElem unit2(const PBWAlgebra& alg) { return TensorElem::pure({alg.one(), alg.one()}); }

/// Matrices of every extended basis monomial on m.
std::vector<Matrix> monomial_actions(const QMod& m, int branch) {
    const auto& alg = PBWAlgebra::extended(2);
    const Matrix E = embed8(m.E()), F = embed8(m.F()), k = k_action(m, branch);
    const int n = m.dim();
    std::vector<Matrix> ep{Matrix::identity(n), E}, fp{Matrix::identity(n), F};
    std::vector<Matrix> kp{Matrix::identity(n)};
    for (int l = 1; l < kOrder; ++l) kp.push_back(kp.back() * k);
    std::vector<Matrix> out(alg.dim());
    for (int idx = 0; idx < alg.dim(); ++idx) {
        const PBWIndex d = alg.decode(idx);
        out[idx] = ep[d.e] * fp[d.f] * kp[d.l];
    }
    return out;
}

}  // namespace

TensorElem r_matrix(int p) {
    require_p2(p);
    const auto& alg = PBWAlgebra::extended(2);
    TensorElem r(alg, 2);
    const CycNum eighth(1, mpq_class(1, 8));
    for (long n = 0; n < kOrder; ++n)
        for (long m = 0; m < kOrder; ++m) {
            r.add(r.encode({alg.index(0, 0, static_cast<int>(n)), alg.index(0, 0, static_cast<int>(m))}),
                  eighth * z8(-n * m));
            r.add(r.encode({alg.index(1, 0, static_cast<int>(n)), alg.index(0, 1, static_cast<int>(m))}),
                  eighth * CycNum(1, 2L) * z8(2 * n - 2 * m - n * m + 2));
        }
    return r;
}

TensorElem r_matrix_inverse(int p) {
    require_p2(p);
    const auto& alg = PBWAlgebra::extended(2);
    const HopfMaps& h = standard_hopf(alg);
    const TensorElem r = r_matrix(p);
    TensorElem inv(alg, 2);
    for (const auto& [key, c] : r.terms()) {
        const auto idx = r.decode(key);
        const TensorElem piece = TensorElem::pure({h.antipode_basis(idx[0]), alg.basis(idx[1])}).scaled(c);
        inv = inv + piece;
    }
    const TensorElem one = unit2(alg);
    if (r * inv != one || inv * r != one) throw std::runtime_error("(S x id)(R) is not the inverse of R");
    return inv;
}

AlgElem to_extended(const AlgElem& x) {
    const auto& src = x.algebra();
    if (src.is_extended()) return x;
    const auto& ext = PBWAlgebra::extended(src.p());
    Terms t;
    for (const auto& [idx, c] : x.terms()) {
        const PBWIndex d = src.decode(idx);
        t[ext.index(d.e, d.f, 2 * d.l)] = c.embed(ext.cartan_order());
    }
    return AlgElem(ext, t);
}

AlgElem ribbon_element(int p) {
    require_p2(p);
    const auto& alg = PBWAlgebra::extended(2);
    const AlgElem one = alg.one(), K = alg.K(), FE = alg.F() * alg.E();
    const AlgElem K2 = K * K;
    const CycNum i = z8(2), sqrt2 = z8(1) + z8(-1);
    const CycNum pre = (CycNum(1, 1L) - i) / (CycNum(1, 2L) * sqrt2);
    const AlgElem left = (alg.scalar(z8(1)) - (K * FE).scaled(CycNum(1, 2L) * z8(-1))) * (one + K2);
    const AlgElem right = (K + FE.scaled(CycNum(1, 2L) * i)) * (one - K2);
    return (left + right).scaled(pre);
}

bool BraidReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

BraidReport verify_braiding(int p) {
    require_p2(p);
    BraidReport rep;
    const auto& alg = PBWAlgebra::extended(2);
    const HopfMaps& h = standard_hopf(alg);
    rep.checks.push_back({"extended Hopf axioms", verify_hopf(alg, HopfStructure::standard(alg)).all_ok()});

    const TensorElem R = r_matrix(p);
    const TensorElem R21 = R.permuted({1, 0});
    const std::pair<const char*, AlgElem> gens[] = {{"E", alg.E()}, {"F", alg.F()}, {"k", alg.g()}};
    for (const auto& [name, x] : gens) {
        const TensorElem d = h.coproduct(x);
        rep.checks.push_back({std::string("R Delta(") + name + ") = Delta_op(" + name + ") R",
                              R * d == d.permuted({1, 0}) * R});
    }
    rep.checks.push_back({"(Delta x id)(R) = R13 R23", h.coproduct_left(R) == R.with_unit(1) * R.with_unit(0)});
    rep.checks.push_back({"(id x Delta)(R) = R13 R12", h.coproduct_right(R) == R.with_unit(1) * R.with_unit(2)});
    bool invertible = true;
    try {
        r_matrix_inverse(p);
    } catch (const std::exception&) {
        invertible = false;
    }
    rep.checks.push_back({"R invertible with inverse (S x id)(R)", invertible});

    const AlgElem v = ribbon_element(p);
    bool central = true;
    for (const auto& [name, x] : gens) central = central && v * x == x * v;
    rep.checks.push_back({"v central", central});
    std::vector<AlgElem> center;
    for (const auto& c : center_basis(2)) center.push_back(to_extended(c));
    rep.checks.push_back({"v in the span of the center basis", in_span(center, v)});
    rep.checks.push_back({"Delta(v) = (R21 R)^-1 (v x v)",
                          R21 * R * h.coproduct(v) == TensorElem::pure({v, v})});
    rep.checks.push_back({"eps(v) = 1", h.counit(v).is_one()});
    rep.checks.push_back({"S(v) = v", h.antipode(v) == v});
    const Matrix on_trivial = act_extended(v, irreducible(2, 1, 1));
    rep.checks.push_back({"v = 1 on the trivial module", on_trivial(0, 0).is_one()});
    return rep;
}

Matrix k_action(const QMod& m, int branch) {
    if (m.p() != 2) throw std::domain_error("k-action is implemented for p = 2 only");
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    const int n = m.dim();
    std::vector<int> lift(n, -1);
    auto norm = [](int x) { return ((x % kOrder) + kOrder) % kOrder; };
    for (int start = 0; start < n; ++start) {
        if (lift[start] >= 0) continue;
        lift[start] = norm(m.weights()[start] + (branch > 0 ? 0 : 4));
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            auto visit = [&](int j, int shift) {
                const int want = norm(lift[i] + shift);
                if (lift[j] < 0) {
                    lift[j] = want;
                    queue.push_back(j);
                } else if (lift[j] != want) {
                    throw std::domain_error("module admits no consistent k-action");
                }
            };
            for (int j = 0; j < n; ++j) {
                if (!m.E()(j, i).is_zero()) visit(j, 2);
                if (!m.E()(i, j).is_zero()) visit(j, -2);
                if (!m.F()(j, i).is_zero()) visit(j, -2);
                if (!m.F()(i, j).is_zero()) visit(j, 2);
            }
        }
    }
    Matrix k(n, n);
    for (int i = 0; i < n; ++i) k(i, i) = z8(lift[i]);
    return k;
}

Matrix act_extended(const AlgElem& x, const QMod& m, int branch) {
    const AlgElem xe = to_extended(x);
    const auto acts = monomial_actions(m, branch);
    Matrix out(m.dim(), m.dim());
    for (const auto& [idx, c] : xe.terms()) out = out + acts[idx].scaled(c);
    return out;
}

Matrix braid_action(const QMod& m1, const QMod& m2, int branch1, int branch2) {
    const TensorElem R = r_matrix(m1.p());
    const auto a1 = monomial_actions(m1, branch1), a2 = monomial_actions(m2, branch2);
    const int d1 = m1.dim(), d2 = m2.dim();
    Matrix ract(d1 * d2, d1 * d2);
    for (const auto& [key, c] : R.terms()) {
        const auto idx = R.decode(key);
        ract = ract + kronecker(a1[idx[0]], a2[idx[1]]).scaled(c);
    }
    Matrix flip(d1 * d2, d1 * d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) flip(j * d1 + i, i * d2 + j) = CycNum(1, 1L);
    return flip * ract;
}

bool braiding_is_intertwiner(const Matrix& c, const QMod& m1, const QMod& m2) {
    const QMod t12 = tensor(m1, m2), t21 = tensor(m2, m1);
    return c * embed8(t12.E()) == embed8(t21.E()) * c && c * embed8(t12.F()) == embed8(t21.F()) * c &&
           c * embed8(t12.K()) == embed8(t21.K()) * c;
}

CycNum ribbon_scalar(const QMod& irreducible_module) {
    const Matrix a = act_extended(ribbon_element(irreducible_module.p()), irreducible_module);
    const CycNum s = a.rows() ? a(0, 0) : CycNum();
    if (a != Matrix::identity(a.rows()).scaled(s)) throw std::runtime_error("ribbon element does not act by a scalar");
    return s;
}

}  // namespace uqsl
