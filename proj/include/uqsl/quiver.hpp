/**
 * @file quiver.hpp
 * @brief Kronecker quiver representations and points of the projective line.
 */

#pragma once

#include <string>

#include "uqsl/matrix.hpp"

namespace uqsl {

/// A point z1 : z2 of CP^1, stored canonically as (1, z2/z1) or (0, 1).
struct CP1 {
    CycNum z1;
    CycNum z2;

    /// Canonicalizes; throws std::invalid_argument if both are zero.
    static CP1 make(const CycNum& a, const CycNum& b);
    static CP1 affine(const CycNum& lambda) { return make(CycNum(1, 1L), lambda); }
    static CP1 infinity() { return make(CycNum(), CycNum(1, 1L)); }

    bool operator==(const CP1& o) const { return z1 == o.z1 && z2 == o.z2; }
    bool operator!=(const CP1& o) const { return !(*this == o); }
    std::string to_string() const;
};

/**
 * Two vector spaces V0 (dim d0), V1 (dim d1) and two arrows r, rbar : V0 -> V1,
 * stored as d1 x d0 matrices.
 */
struct QuiverRep {
    int d0 = 0;
    int d1 = 0;
    Matrix r;
    Matrix rbar;

    QuiverRep() : r(0, 0), rbar(0, 0) {}
    QuiverRep(int d0_, int d1_, Matrix r_, Matrix rbar_);

    /// Preprojective rho_n: dims (n+1, n), r = [I | 0], rbar = [0 | I].
    static QuiverRep rho(int n);
    /// Preinjective rhobar_n: dims (n, n+1), the transposes.
    static QuiverRep rho_bar(int n);
    /// Regular block of size n at z: r = I, rbar = J_n(lambda) for z = 1:lambda;
    /// r = J_n(0), rbar = I for z = 0:1.
    static QuiverRep regular(int n, const CP1& z);

    QuiverRep operator+(const QuiverRep& o) const;  ///< direct sum
    /// Base change: (g1 r g0^-1, g1 rbar g0^-1).
    QuiverRep transformed(const Matrix& g0, const Matrix& g1) const;
    bool operator==(const QuiverRep& o) const;
};

}  // namespace uqsl
