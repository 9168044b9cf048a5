/**
 * @file kronecker.hpp
 * @brief Classification of Kronecker quiver representations (matrix pencils)
 *        and the functors between them and semisimple-length-2 modules.
 */

#pragma once

#include <vector>

#include "uqsl/category.hpp"
#include "uqsl/quiver.hpp"

namespace uqsl {

struct KronBlock {
    enum class Kind { Rho, RhoBar, Regular };
    Kind kind = Kind::Rho;
    int n = 0;
    CP1 z = CP1::affine(CycNum());

    QuiverRep canonical() const;
    bool operator==(const KronBlock& o) const;
    std::string to_string() const;
};

struct QuiverDecomp {
    std::vector<KronBlock> blocks;
    /// (b0, b1) is an isomorphism from the direct sum of the canonical blocks
    /// onto the input: r b0 = b1 r_canon and rbar b0 = b1 rbar_canon.
    Matrix b0, b1;
    QuiverRep canonical() const;
};

/// Kronecker canonical form over the exact field. Throws ClassificationError
/// (message starting "eigenvalue-outside-field") if the regular part does not
/// split over the working field Q(zeta_field_order); field_order = 0 means the
/// smallest field containing the entries.
QuiverDecomp classify(const QuiverRep& rep, int field_order = 0);

/// End(rep) as a list of pairs (A0, A1) with A1 r = r A0, A1 rbar = rbar A0.
std::vector<std::pair<Matrix, Matrix>> endomorphisms(const QuiverRep& rep);
/// Oracle: absolutely indecomposable iff End/rad(End) is one-dimensional,
/// with the radical taken as the kernel of the trace form.
bool is_indecomposable_oracle(const QuiverRep& rep);
/// True if some invertible pair conjugates a onto b.
bool quiver_isomorphic(const QuiverRep& a, const QuiverRep& b);

struct FunctorImage {
    QuiverRep rep;
    std::vector<ModMap> v0;  ///< basis of Hom(M^a_s(2), m)
    std::vector<ModMap> v1;  ///< basis of Hom(X^{-a}_{p-s}, m)
};

/**
 * F(m) = (Hom(M^a_s(2), m), Hom(X^{-a}_{p-s}, m)) with r, rbar given by
 * composition with the socle inclusions of M^a_s(2) onto y (F-glued) and x
 * (E-glued). Throws std::domain_error if m is not of semisimple length <= 2
 * with top in X^a_s and socle containing every X^{-a}_{p-s} factor.
 */
FunctorImage functor_F(const QMod& m, int a, int s);
QuiverRep functor_F_rep(const QMod& m, int a, int s);
QMod functor_G(const QuiverRep& rep, int p, int a, int s);
/// The module isomorphism G(F(m)) -> m assembled from the Hom bases.
ModMap functor_counit(const FunctorImage& img, int p, int a, int s);

/// The label of the module G(block) for top sign a and index s.
ModuleLabel label_for_block(const KronBlock& b, int a, int s, int p);

}  // namespace uqsl
