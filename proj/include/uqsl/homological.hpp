/**
 * @file homological.hpp
 * @brief Projective covers, minimal projective resolutions, Ext groups and
 *        the Yoneda product on degree-one extension classes.
 *
 * A resolution stores boundaries[k] : terms[k+1] -> terms[k] and the
 * augmentation terms[0] -> resolved module. Ext^n(A, B) is computed as the
 * cohomology of Hom(P_., B) for a minimal resolution P_. of A.
 */

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "uqsl/category.hpp"

namespace uqsl {

struct ProjectiveCover {
    QMod P;                            ///< direct sum of the summands below
    std::vector<ModuleLabel> summands;  ///< P^a_s or Steinberg X^a_p
    ModMap cover;                      ///< surjection P -> m
};

/// Minimal projective cover: one indecomposable projective per top composition factor.
ProjectiveCover projective_cover(const QMod& m);

struct Resolution {
    QMod resolved;
    std::vector<QMod> terms;
    std::vector<std::vector<ModuleLabel>> summands;
    std::vector<ModMap> boundaries;  ///< boundaries[k] : terms[k+1] -> terms[k]
    ModMap augmentation;             ///< terms[0] -> resolved
    bool terminated = false;         ///< a kernel became zero, so the resolution is finite
};

/// Iterates cover-of-kernel until terms[length] exists or the kernel vanishes.
Resolution minimal_resolution(const QMod& x, int length);

/// Exact check of boundary composites, exactness and the intertwining property.
bool verify_resolution(const Resolution& r, std::string* why = nullptr);

/// A class in Ext^degree(source, target), represented by a cocycle on the
/// degree-th term of the minimal resolution of source.
struct ExtClass {
    int p = 2;
    int degree = 1;
    ModuleLabel source, target;
    ModMap cocycle;
};

/// The four degree-one classes of a block: x^a_1, x^a_2 in Ext^1(X^a_s, X^-a_{p-s})
/// and x^-a_1, x^-a_2 in Ext^1(X^-a_{p-s}, X^a_s); index 1 has middle O(1, 1:0),
/// index 2 has middle O(1, 0:1).
struct XBasis {
    ExtClass plus1, plus2, minus1, minus2;
};

/**
 * Caches minimal resolutions of the irreducibles of one p. Not thread safe by
 * itself; independent calculators may be used concurrently.
 */
class ExtCalculator {
public:
    explicit ExtCalculator(int p);

    int p() const { return p_; }
    const Resolution& resolution(int a, int s, int length);

    /// dim Ext^n(X^a_s, X^b_t) from the cohomology of Hom(P_., X^b_t).
    int ext_dim(int a, int s, int b, int t, int n);

    /// The class of 0 -> target --iota--> middle --pi--> source -> 0.
    ExtClass class_from_ses(const ModuleLabel& source, const ModuleLabel& target, const QMod& middle,
                            const ModMap& iota, const ModMap& pi);
    XBasis ext_basis_x(int a, int s);

    /// Product u v for v in Ext(A, B) and u in Ext(B, C); throws std::invalid_argument
    /// if v's target is not u's source.
    ExtClass yoneda(const ExtClass& u, const ExtClass& v);
    /// The product in the Ext algebra: yoneda when composable, the zero class otherwise.
    ExtClass product(const ExtClass& u, const ExtClass& v);

    ExtClass add(const ExtClass& u, const ExtClass& v) const;
    ExtClass scaled(const ExtClass& u, const CycNum& c) const;
    /// True if the cocycle is a coboundary.
    bool is_zero(const ExtClass& c);

private:
    int p_;
    std::map<std::tuple<int, int>, Resolution> cache_;
};

}  // namespace uqsl
