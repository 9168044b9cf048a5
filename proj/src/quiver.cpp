#include "uqsl/quiver.hpp"

#include <stdexcept>

namespace uqsl {

CP1 CP1::make(const CycNum& a, const CycNum& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("z1 : z2 with both coordinates zero");
    if (a.is_zero()) return CP1{CycNum(), CycNum(1, 1L)};
    return CP1{CycNum(1, 1L), b / a};
}

std::string CP1::to_string() const { return z1.to_string() + ":" + z2.to_string(); }

QuiverRep::QuiverRep(int d0_, int d1_, Matrix r_, Matrix rbar_)
    : d0(d0_), d1(d1_), r(std::move(r_)), rbar(std::move(rbar_)) {
    if (r.rows() != d1 || r.cols() != d0 || rbar.rows() != d1 || rbar.cols() != d0)
        throw std::invalid_argument("quiver representation: map shapes do not match (d0, d1)");
}

QuiverRep QuiverRep::rho(int n) {
    Matrix r(n, n + 1), rb(n, n + 1);
    for (int i = 0; i < n; ++i) {
        r(i, i) = CycNum(1, 1L);
        rb(i, i + 1) = CycNum(1, 1L);
    }
    return QuiverRep(n + 1, n, r, rb);
}

QuiverRep QuiverRep::rho_bar(int n) {
    const QuiverRep t = rho(n);
    return QuiverRep(n, n + 1, t.r.transpose(), t.rbar.transpose());
}

QuiverRep QuiverRep::regular(int n, const CP1& z) {
    if (n < 1) throw std::invalid_argument("regular block size must be positive");
    Matrix jordan(n, n);
    const bool at_infinity = z.z1.is_zero();
    const CycNum lambda = at_infinity ? CycNum() : z.z2;
    for (int i = 0; i < n; ++i) {
        jordan(i, i) = lambda;
        if (i + 1 < n) jordan(i, i + 1) = CycNum(1, 1L);
    }
    if (at_infinity) return QuiverRep(n, n, jordan, Matrix::identity(n));
    return QuiverRep(n, n, Matrix::identity(n), jordan);
}

QuiverRep QuiverRep::operator+(const QuiverRep& o) const {
    return QuiverRep(d0 + o.d0, d1 + o.d1, block_diag({r, o.r}), block_diag({rbar, o.rbar}));
}

QuiverRep QuiverRep::transformed(const Matrix& g0, const Matrix& g1) const {
    auto inv = inverse(g0);
    if (!inv) throw std::invalid_argument("base change on V0 is not invertible");
    return QuiverRep(d0, d1, g1 * r * *inv, g1 * rbar * *inv);
}

bool QuiverRep::operator==(const QuiverRep& o) const {
    return d0 == o.d0 && d1 == o.d1 && r == o.r && rbar == o.rbar;
}

}  // namespace uqsl
