/**
 * @file algebra.hpp
 * @brief The restricted quantum group on its PBW basis, its Hopf structure,
 *        the Casimir element and the center.
 *
 * One class covers both the restricted algebra (Cartan generator K,
 * K^{2p} = 1) and its extension by a square root k of K (k^{4p} = 1).
 * Internally the Cartan generator is called g, with g^N = 1,
 * g E g^-1 = zeta_N^2 E, g F g^-1 = zeta_N^-2 F and K = g^d.
 * The restricted algebra has (N, d) = (2p, 1), the extended one (4p, 2).
 * Basis monomials are E^i F^j g^l, 0 <= i, j < p, 0 <= l < N.
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uqsl/cyclotomic.hpp"

namespace uqsl {

struct PBWIndex {
    int e = 0;
    int f = 0;
    int l = 0;
};

using Terms = std::map<int, CycNum>;

class AlgElem;

class PBWAlgebra {
public:
    /// The restricted quantum group at q = exp(i pi / p).
    static const PBWAlgebra& restricted(int p);
    /// The extension by k with k^2 = K.
    static const PBWAlgebra& extended(int p);

    int p() const { return p_; }
    /// Order N of the Cartan generator g; also the cyclotomic order of the field.
    int cartan_order() const { return n_; }
    /// K = g^d.
    int cartan_power() const { return d_; }
    bool is_extended() const { return d_ != 1; }
    int dim() const { return p_ * p_ * n_; }

    int index(int e, int f, int l) const { return (e * p_ + f) * n_ + l; }
    PBWIndex decode(int idx) const { return {idx / (p_ * n_), (idx / n_) % p_, idx % n_}; }

    CycNum zeta(long k) const { return CycNum::zeta(n_, k); }
    /// q = zeta_N^d.
    CycNum q() const { return zeta(d_); }
    CycNum qpow(long k) const { return zeta(k * d_); }
    /// [n] in this algebra's field.
    CycNum qint(long n) const;

    /// Adds c * (basis a)(basis b) into out.
    void mul_monomials(int a, int b, const CycNum& c, Terms& out) const;

    AlgElem one() const;
    AlgElem E() const;
    AlgElem F() const;
    AlgElem K() const;
    AlgElem K_inv() const;
    /// The Cartan generator g (K itself, or k in the extension).
    AlgElem g() const;
    AlgElem basis(int idx) const;
    AlgElem scalar(const CycNum& c) const;

private:
    PBWAlgebra(int p, int n, int d);

    int p_, n_, d_;
    // fe_[b][dd] = F^b E^dd in normal order
    std::vector<std::vector<Terms>> fe_;
};

/// Element of a PBW algebra; zero coefficients are never stored.
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(const PBWAlgebra& alg) : alg_(&alg) {}
    AlgElem(const PBWAlgebra& alg, Terms t);

    const PBWAlgebra& algebra() const { return *alg_; }
    int p() const { return alg_->p(); }
    const Terms& terms() const { return t_; }
    CycNum coeff(int idx) const;
    CycNum coeff(int e, int f, int l) const { return coeff(alg_->index(e, f, l)); }
    bool is_zero() const { return t_.empty(); }

    AlgElem operator+(const AlgElem& b) const;
    AlgElem operator-(const AlgElem& b) const;
    AlgElem operator-() const;
    AlgElem operator*(const AlgElem& b) const;
    AlgElem scaled(const CycNum& c) const;
    AlgElem pow(int e) const;
    bool operator==(const AlgElem& b) const { return t_ == b.t_; }
    bool operator!=(const AlgElem& b) const { return !(*this == b); }

    std::string to_string() const;

private:
    const PBWAlgebra* alg_ = nullptr;
    Terms t_;

    void check(const AlgElem& b) const;
    void add(int idx, const CycNum& c);
};

/**
 * Element of the n-fold tensor power, as a sparse map from packed basis
 * tuples (i_1, ..., i_n) -> coefficient.
 */
class TensorElem {
public:
    TensorElem() = default;
    TensorElem(const PBWAlgebra& alg, int arity) : alg_(&alg), arity_(arity) {}
    /// x_1 (x) ... (x) x_n.
    static TensorElem pure(const std::vector<AlgElem>& factors);

    const PBWAlgebra& algebra() const { return *alg_; }
    int arity() const { return arity_; }
    const std::unordered_map<std::uint64_t, CycNum>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    std::uint64_t encode(const std::vector<int>& idx) const;
    std::vector<int> decode(std::uint64_t key) const;
    void add(std::uint64_t key, const CycNum& c);

    TensorElem operator+(const TensorElem& b) const;
    TensorElem operator-(const TensorElem& b) const;
    TensorElem operator*(const TensorElem& b) const;
    TensorElem scaled(const CycNum& c) const;
    bool operator==(const TensorElem& b) const;
    bool operator!=(const TensorElem& b) const { return !(*this == b); }

    /// Reorders the tensor factors: result slot k holds input slot perm[k].
    TensorElem permuted(const std::vector<int>& perm) const;
    /// Inserts 1 at the given slot position (0..arity).
    TensorElem with_unit(int slot) const;
    /// Multiplies all slots together: a (x) b -> ab.
    AlgElem multiply_out() const;

private:
    const PBWAlgebra* alg_ = nullptr;
    int arity_ = 0;
    std::unordered_map<std::uint64_t, CycNum> t_;
};

/// Images of the generators under the Hopf structure maps.
struct HopfStructure {
    TensorElem delta_E, delta_F, delta_g;
    CycNum eps_E, eps_F, eps_g;
    AlgElem S_E, S_F, S_g;

    /// Delta(E) = 1(x)E + E(x)K, Delta(F) = K^-1(x)F + F(x)1, Delta(g) = g(x)g,
    /// eps(E) = eps(F) = 0, eps(g) = 1, S(E) = -E K^-1, S(F) = -K F, S(g) = g^-1.
    static HopfStructure standard(const PBWAlgebra& alg);
};

/// Hopf maps extended from generator images; cached coproducts of basis monomials.
class HopfMaps {
public:
    HopfMaps(const PBWAlgebra& alg, HopfStructure h);

    const PBWAlgebra& algebra() const { return *alg_; }
    const HopfStructure& structure() const { return h_; }
    const TensorElem& coproduct_basis(int idx) const { return delta_[idx]; }
    TensorElem coproduct(const AlgElem& a) const;
    /// (Delta (x) id) and (id (x) Delta) on a 2-tensor.
    TensorElem coproduct_left(const TensorElem& t) const;
    TensorElem coproduct_right(const TensorElem& t) const;
    CycNum counit(const AlgElem& a) const;
    AlgElem antipode(const AlgElem& a) const;
    const AlgElem& antipode_basis(int idx) const { return s_[idx]; }

private:
    const PBWAlgebra* alg_;
    HopfStructure h_;
    std::vector<TensorElem> delta_;
    std::vector<CycNum> eps_;
    std::vector<AlgElem> s_;
};

/// The standard Hopf maps of an algebra (built once, shared).
const HopfMaps& standard_hopf(const PBWAlgebra& alg);

TensorElem coproduct(const AlgElem& a);
CycNum counit(const AlgElem& a);
AlgElem antipode(const AlgElem& a);

struct AxiomResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct HopfReport {
    std::vector<AxiomResult> axioms;
    bool all_ok() const;
};

/**
 * Checks on every basis element: coassociativity, counit laws, both antipode
 * laws; and on generator-times-basis products: Delta and eps multiplicative,
 * S anti-multiplicative. Together with the generator images defining the maps,
 * these cover the algebra-map conditions on all of the algebra.
 */
HopfReport verify_hopf(const PBWAlgebra& alg, const HopfStructure& h);
HopfReport verify_hopf(int p);

struct CasimirData {
    AlgElem element;
    std::vector<CycNum> roots;     ///< beta_0 .. beta_p
    std::vector<int> multiplicities;  ///< 1, 2, ..., 2, 1
};

/// C = EF + (q^-1 K + q K^-1)/(q - q^-1)^2.
AlgElem casimir_element(const PBWAlgebra& alg);
/// The second form C = FE + (q K + q^-1 K^-1)/(q - q^-1)^2.
AlgElem casimir_element_fe(const PBWAlgebra& alg);
CasimirData casimir(int p);
/// beta_j = (q^j + q^-j)/(q - q^-1)^2.
CycNum casimir_root(int p, int j);
/// prod_k (x - roots[k])^{mult[k]} evaluated at x = a.
AlgElem evaluate_product(const AlgElem& a, const std::vector<CycNum>& roots, const std::vector<int>& mult);

/// Basis of the center, as the null space of the commutator system.
std::vector<AlgElem> center_basis(const PBWAlgebra& alg);
std::vector<AlgElem> center_basis(int p);

/// Coordinates of x in the span of the given elements, if it lies there.
bool in_span(const std::vector<AlgElem>& basis, const AlgElem& x);

}  // namespace uqsl
