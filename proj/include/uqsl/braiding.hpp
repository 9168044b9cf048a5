/**
 * @file braiding.hpp
 * @brief R-matrix and ribbon element of the extended quantum group at p = 2.
 *
 * The extended algebra adjoins k with k^2 = K, k^8 = 1, k E k^-1 = q E and
 * k F k^-1 = q^-1 F, with Delta(k) = k (x) k. Everything lives over Q(zeta_8).
 */

#pragma once

#include <string>
#include <vector>

#include "uqsl/algebra.hpp"
#include "uqsl/qmodule.hpp"

namespace uqsl {

/// R = (1/8) sum_{n,m} (z^{-nm} + 2 z^{2n-2m-nm+2} E (x) F) k^n (x) k^m, z = zeta_8.
/// Throws std::domain_error unless p = 2.
TensorElem r_matrix(int p = 2);

/// (S (x) id)(R), verified to be a two-sided inverse.
TensorElem r_matrix_inverse(int p = 2);

/// v = ((1-i)/(2 sqrt 2)) ((z - 2 z^-1 K F E)(1 + K^2) + (K + 2i F E)(1 - K^2)) in the extended algebra.
AlgElem ribbon_element(int p = 2);

/// The image of a restricted-algebra element in the extended algebra (K -> k^2).
AlgElem to_extended(const AlgElem& x);

struct BraidCheck {
    std::string name;
    bool ok = false;
};

struct BraidReport {
    std::vector<BraidCheck> checks;
    bool all_ok() const;
};

/// Intertwining with E, F, k; both hexagon identities; invertibility; centrality
/// of v, its membership in the center, the ribbon axiom and v = 1 on the trivial module.
BraidReport verify_braiding(int p = 2);

/**
 * The action of k on m: on a vector of K-weight q^w it acts by zeta_8^w or
 * zeta_8^(w+4), chosen consistently along E and F. branch = +1 takes zeta_8^w
 * at the first vector of each connected piece, branch = -1 the other root.
 * Throws std::domain_error if no consistent choice exists.
 */
Matrix k_action(const QMod& m, int branch = 1);

/// Matrix of an extended-algebra element acting on m (entries in Q(zeta_8)).
Matrix act_extended(const AlgElem& x, const QMod& m, int branch = 1);

/// The braiding c = flip o R : m1 (x) m2 -> m2 (x) m1.
Matrix braid_action(const QMod& m1, const QMod& m2, int branch1 = 1, int branch2 = 1);

/// True if c commutes with E, F, K between the two tensor products.
bool braiding_is_intertwiner(const Matrix& c, const QMod& m1, const QMod& m2);

/// The scalar by which v acts on an irreducible; throws if the action is not scalar.
CycNum ribbon_scalar(const QMod& irreducible_module);

}  // namespace uqsl
