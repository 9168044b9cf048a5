/**
 * @file category.hpp
 * @brief Hom spaces, submodules, Casimir blocks, socle and radical,
 *        isomorphism search and the full decomposition into indecomposables.
 *
 * A module map A -> B is a dim(B) x dim(A) matrix. Subspaces that are
 * K-stable are always handled through K-homogeneous bases.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqsl/qmodule.hpp"

namespace uqsl {

/// Raised when a module falls outside the classification (an internal error).
class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ModMap = Matrix;

/// Basis of Hom(a, b), as dim(b) x dim(a) matrices.
std::vector<ModMap> hom_space(const QMod& a, const QMod& b);
bool is_intertwiner(const ModMap& f, const QMod& a, const QMod& b);

/// A K-stable subspace with a homogeneous basis.
struct Subspace {
    Matrix basis;              ///< dim(m) x k
    std::vector<int> weights;  ///< weight of each basis column
    int dim() const { return basis.cols(); }
};

/// Homogeneous basis of the (K-stable) column span of v.
Subspace homogenize(const Matrix& v, const std::vector<int>& weights);
/// Smallest submodule containing the given vectors (columns).
Subspace generated_submodule(const QMod& m, const Matrix& vectors);
/// The submodule with the given homogeneous basis, as a module in its own right.
QMod restrict_module(const QMod& m, const Subspace& sub);
Subspace kernel(const ModMap& f, const QMod& source);
Subspace image(const ModMap& f, const QMod& target);

/// Matrix of the Casimir element on m.
Matrix casimir_matrix(const QMod& m);

struct Block {
    int s = 0;  ///< Casimir eigenvalue beta_s
    QMod module;
    Matrix embedding;  ///< dim(m) x dim(block)
};

/// Generalized eigenspaces of the Casimir; the blocks direct-sum to m.
std::vector<Block> block_decompose(const QMod& m);
/// Block index of an irreducible X^a_s.
int block_of_irreducible(int p, int a, int s);

Subspace socle(const QMod& m);
Subspace radical(const QMod& m);
/// m = R_0 > R_1 > ... > R_l = 0 with R_{i+1} = rad(R_i), as subspaces of m.
std::vector<Subspace> radical_series(const QMod& m);
int semisimple_length(const QMod& m);

/// An isomorphism a -> b if one exists (randomized search over Hom with a fixed seed).
std::optional<ModMap> find_isomorphism(const QMod& a, const QMod& b);
bool is_isomorphic(const QMod& a, const QMod& b);

struct DecompEntry {
    ModuleLabel label;
    int mult = 0;
};

struct DecompReport {
    std::vector<DecompEntry> entries;  ///< sorted by label name
    std::vector<ModuleLabel> summands;  ///< in certificate order
    /// Isomorphism from the direct sum of build_named(summands) onto the input.
    Matrix certificate;
};

/**
 * Decomposes m into the named indecomposables: Casimir blocks, then projective
 * summands split off by injectivity, then the semisimple-length-2 remainder
 * classified through the Kronecker functor. Throws ClassificationError if a
 * step fails.
 */
DecompReport decompose(const QMod& m);

}  // namespace uqsl
