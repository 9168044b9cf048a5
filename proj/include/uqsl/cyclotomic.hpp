/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_N).
 *
 * Elements are residues of Q[x] modulo the N-th cyclotomic polynomial,
 * stored as rational coefficient lists in the power basis
 * 1, zeta, ..., zeta^(phi(N)-1). Rationals are GMP rationals, always
 * canonical, so equality is coefficient equality.
 *
 * Rational elements (coefficient list of length <= 1) embed into every
 * field and are coerced silently; mixing two genuinely different orders
 * is an error.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace uqsl {

/// Raised on mismatched orders or division by zero in the field.
class FieldError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Per-order data: Phi_N and reduction rows for x^k, k in [0, 2*phi-1).
class CyclotomicField {
public:
    static const CyclotomicField& get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }
    /// Coefficients of Phi_N, low degree first; monic of length degree+1.
    const std::vector<mpz_class>& modulus() const { return modulus_; }
    /// x^k mod Phi_N for 0 <= k < order, as dense coefficient rows.
    const std::vector<mpq_class>& power(int k) const;
    /// x^k mod Phi_N for degree <= k < 2*degree - 1.
    const std::vector<mpq_class>& reduction(int k) const { return reduce_[k - degree_]; }

private:
    explicit CyclotomicField(int order);

    int order_;
    int degree_;
    std::vector<mpz_class> modulus_;
    std::vector<std::vector<mpq_class>> powers_;
    std::vector<std::vector<mpq_class>> reduce_;
};

/// Integer polynomial Phi_n, low degree first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

class CycNum {
public:
    /// Rational zero; coerces into any field.
    CycNum() = default;
    explicit CycNum(int order);
    CycNum(int order, const mpq_class& value);
    CycNum(int order, long value) : CycNum(order, mpq_class(value)) {}
    /// From power-basis coefficients (length at most phi(order)).
    CycNum(int order, std::vector<mpq_class> coeffs);

    /// zeta_order^k for any integer k.
    static CycNum zeta(int order, long k);

    int order() const { return field_ ? field_->order() : 1; }
    const CyclotomicField& field() const;

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    bool is_one() const;
    /// Coefficient on zeta^k (zero beyond the stored length).
    mpq_class coeff(int k) const;
    /// Full coefficient list of length phi(order).
    std::vector<mpq_class> coeffs() const;
    const std::vector<mpq_class>& raw() const { return c_; }

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& b);
    CycNum& operator-=(const CycNum& b);
    CycNum& operator*=(const CycNum& b);
    CycNum& operator/=(const CycNum& b);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    bool operator==(const CycNum& b) const { return c_ == b.c_; }
    bool operator!=(const CycNum& b) const { return !(*this == b); }

    CycNum inverse() const;
    CycNum pow(long e) const;
    /// Re-express in Q(zeta_target) through zeta_N -> zeta_target^(target/N).
    CycNum embed(int target_order) const;

    /// Value at the principal root exp(2 pi i / N). Display and cross-checks only.
    std::complex<double> to_complex() const;
    /// Value under zeta -> exp(2 pi i j / N).
    std::complex<double> to_complex(int j) const;

    /// Human-readable form in the generator z = zeta_N, e.g. "1/2 - z^2".
    std::string to_string() const;
    /// Reduced fraction strings, one per basis power.
    std::vector<std::string> coeff_strings() const;

private:
    const CyclotomicField* field_ = nullptr;
    std::vector<mpq_class> c_;

    void trim();
    void adopt(const CycNum& b);
};

CycNum operator*(const CycNum& a, const CycNum& b);

/// q = exp(i pi / p) as an element of Q(zeta_{2p}).
CycNum qroot(int p);
/// q^k in Q(zeta_{2p}).
CycNum qpow(int p, long k);
/// The quantum integer [n] = (q^n - q^-n)/(q - q^-1), q = exp(i pi / p).
CycNum qint(int p, long n);

}  // namespace uqsl
