/**
 * @file qmodule.hpp
 * @brief Finite-dimensional modules over the restricted quantum group.
 *
 * Bases are always K-eigenbases. A weight is stored as an exponent
 * w in Z/2p meaning K acts by q^w; the eigenvalue -q^m is q^(m+p).
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "uqsl/matrix.hpp"
#include "uqsl/quiver.hpp"

namespace uqsl {

class QMod {
public:
    QMod() = default;
    QMod(int p, std::vector<int> weights, Matrix E, Matrix F, std::string label = "");

    int p() const { return p_; }
    int order() const { return 2 * p_; }
    int dim() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& weights() const { return w_; }
    const Matrix& E() const { return e_; }
    const Matrix& F() const { return f_; }
    Matrix K() const;
    Matrix K_inv() const;
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

private:
    int p_ = 2;
    std::vector<int> w_;
    Matrix e_, f_;
    std::string label_;
};

/// Weight exponent of the eigenvalue a q^m, a = +1 or -1.
int weight_exponent(int p, int a, int m);

/// X^a_s, 1 <= s <= p.
QMod irreducible(int p, int a, int s);
QMod build_W2(int p, int a, int s);
QMod build_M2(int p, int a, int s);
QMod build_O1(int p, int a, int s, const CP1& z);
QMod build_P(int p, int a, int s);
/// Verma module V^a_s (O(1, 1:0), or X^a_p when s = p).
QMod build_verma(int p, int a, int s);
/// Contragredient Verma module (O(1, 0:1), or X^a_p when s = p).
QMod build_coverma(int p, int a, int s);

/**
 * The module with top d0 copies of X^a_s and socle d1 copies of X^{-a}_{p-s}:
 * F a^(j)_{s-1} = sum_i r(i,j) x^(i)_0 and E a^(j)_0 = sum_i rbar(i,j) x^(i)_{p-s-1}.
 * Basis: the tops in order, then the socle copies.
 */
QMod build_glued(int p, int a, int s, const QuiverRep& rep);

enum class Family { X, W, M, O, P };

/// A named indecomposable; s is always the top's index, 1 <= s <= p-1 except X.
struct ModuleLabel {
    Family family = Family::X;
    int sign = 1;
    int s = 1;
    int n = 1;  ///< W, M: n >= 2; O: n >= 1
    CP1 z = CP1::affine(CycNum(1, 1L));

    bool operator==(const ModuleLabel& o) const;
    /// Compact name such as "P+_1", "W-_2(3)", "O+_1(2,1:q)".
    std::string to_string() const;
    /// The name without the z parameter (used as a JSON label).
    std::string base_name() const;
};

/// Canonical module for a label. W(n), M(n), O(n, z) come from build_glued
/// on rho_{n-1}, rhobar_{n-1}, regular(n, z).
QMod build_named(int p, const ModuleLabel& l);

struct ModuleCheck {
    bool ok = true;
    std::string violated;
};

/// Checks K E K^-1 = q^2 E, K F K^-1 = q^-2 F, E^p = F^p = 0 and the [E,F] relation.
ModuleCheck verify_module(const QMod& m);

QMod direct_sum(const QMod& a, const QMod& b);
QMod direct_sum(const std::vector<QMod>& parts);
/// Action through Delta(E) = 1(x)E + E(x)K, Delta(F) = K^-1(x)F + F(x)1.
QMod tensor(const QMod& a, const QMod& b);
/// Action x.f = f(S(x) .) in the dual basis.
QMod dual(const QMod& m);
/// The algebra acting on itself by left multiplication.
QMod regular_module(int p);

/// Weight exponent -> multiplicity.
std::map<int, int> weight_character(const QMod& m);

}  // namespace uqsl
