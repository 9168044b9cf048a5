#include "uqsl/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace uqsl {

namespace {

using QPoly = std::vector<mpq_class>;

void trim_poly(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder and quotient of a by b over Q; b nonzero.
void poly_divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
    trim_poly(a);
    quot.clear();
    if (a.size() < b.size()) {
        rem = std::move(a);
        return;
    }
    quot.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        mpq_class f = a.back() / lead;
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim_poly(a);
    }
    trim_poly(quot);
    rem = std::move(a);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim_poly(r);
    return r;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim_poly(r);
    return r;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
    if (n < 1) throw FieldError("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<mpz_class> num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto div = cyclotomic_polynomial(d);
        // exact monic division over Z
        std::vector<mpz_class> quot(num.size() - div.size() + 1, mpz_class(0));
        for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(div.size()) - 1; --i) {
            const mpz_class f = num[i];
            const int shift = i - static_cast<int>(div.size()) + 1;
            quot[shift] = f;
            if (f == 0) continue;
            for (std::size_t k = 0; k < div.size(); ++k) num[shift + k] -= f * div[k];
        }
        num = std::move(quot);
    }
    return num;
}

int euler_phi(int n) {
    int result = n;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        while (n % f == 0) n /= f;
        result -= result / f;
    }
    if (n > 1) result -= result / n;
    return result;
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
    modulus_ = cyclotomic_polynomial(order);
    degree_ = static_cast<int>(modulus_.size()) - 1;
    const int top = std::max(order_, 2 * degree_ - 1);
    std::vector<QPoly> pw;
    pw.reserve(top);
    QPoly cur(degree_, mpq_class(0));
    cur[0] = 1;
    for (int k = 0; k < top; ++k) {
        pw.push_back(cur);
        // multiply by x and reduce
        QPoly next(degree_, mpq_class(0));
        for (int i = 0; i + 1 < degree_; ++i) next[i + 1] = cur[i];
        const mpq_class overflow = degree_ > 0 ? cur[degree_ - 1] : mpq_class(0);
        if (overflow != 0)
            for (int i = 0; i < degree_; ++i) next[i] -= overflow * modulus_[i];
        cur = std::move(next);
    }
    powers_.assign(pw.begin(), pw.begin() + order_);
    for (int k = degree_; k < 2 * degree_ - 1; ++k) reduce_.push_back(pw[k]);
}

const CyclotomicField& CyclotomicField::get(int order) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    if (order < 1) throw FieldError("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
    return *it->second;
}

const std::vector<mpq_class>& CyclotomicField::power(int k) const {
    k %= order_;
    if (k < 0) k += order_;
    return powers_[k];
}

// ---------------------------------------------------------------------------

CycNum::CycNum(int order) : field_(&CyclotomicField::get(order)) {}

CycNum::CycNum(int order, const mpq_class& value) : field_(&CyclotomicField::get(order)) {
    if (value != 0) {
        c_.push_back(value);
        c_.back().canonicalize();
    }
}

CycNum::CycNum(int order, std::vector<mpq_class> coeffs)
    : field_(&CyclotomicField::get(order)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) > field_->degree())
        throw FieldError("too many coefficients for Q(zeta_" + std::to_string(order) + ")");
    for (auto& x : c_) x.canonicalize();
    trim();
}

CycNum CycNum::zeta(int order, long k) {
    CycNum r(order);
    r.c_ = r.field_->power(static_cast<int>(((k % order) + order) % order));
    r.trim();
    return r;
}

const CyclotomicField& CycNum::field() const {
    return field_ ? *field_ : CyclotomicField::get(1);
}

bool CycNum::is_one() const { return c_.size() == 1 && c_[0] == 1; }

mpq_class CycNum::coeff(int k) const {
    return k < static_cast<int>(c_.size()) ? c_[k] : mpq_class(0);
}

std::vector<mpq_class> CycNum::coeffs() const {
    std::vector<mpq_class> r(field().degree(), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    return r;
}

void CycNum::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

// Bring the field pointer in line with b before a binary operation.
void CycNum::adopt(const CycNum& b) {
    if (field_ == b.field_ || !b.field_) return;
    if (!field_) {
        field_ = b.field_;
        return;
    }
    if (b.is_rational()) return;
    if (is_rational()) {
        field_ = b.field_;
        return;
    }
    throw FieldError("mismatched cyclotomic orders " + std::to_string(field_->order()) + " and " +
                     std::to_string(b.field_->order()));
}

CycNum CycNum::operator-() const {
    CycNum r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& b) {
    adopt(b);
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    trim();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
    adopt(b);
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
    trim();
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    CycNum r;
    r.field_ = a.field_;
    r.adopt(b);
    if (a.c_.empty() || b.c_.empty()) return r;
    if (a.c_.size() == 1) {
        r.c_ = b.c_;
        for (auto& x : r.c_) x *= a.c_[0];
        return r;
    }
    if (b.c_.size() == 1) {
        r.c_ = a.c_;
        for (auto& x : r.c_) x *= b.c_[0];
        return r;
    }
    const CyclotomicField& F = *r.field_;
    const int d = F.degree();
    std::vector<mpq_class> prod(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    mpq_class t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            prod[i + j] += t;
        }
    }
    if (static_cast<int>(prod.size()) > d) {
        for (int k = static_cast<int>(prod.size()) - 1; k >= d; --k) {
            if (prod[k] == 0) continue;
            const auto& row = F.reduction(k);
            for (int i = 0; i < d; ++i) {
                if (row[i] == 0) continue;
                mpq_mul(t.get_mpq_t(), prod[k].get_mpq_t(), row[i].get_mpq_t());
                prod[i] += t;
            }
        }
        prod.resize(d);
    }
    r.c_ = std::move(prod);
    r.trim();
    return r;
}

CycNum& CycNum::operator*=(const CycNum& b) {
    *this = *this * b;
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& b) {
    *this = *this * b.inverse();
    return *this;
}

CycNum CycNum::inverse() const {
    if (c_.empty()) throw FieldError("division by zero in Q(zeta_" + std::to_string(order()) + ")");
    CycNum r;
    r.field_ = field_;
    if (c_.size() == 1) {
        r.c_.push_back(1 / c_[0]);
        return r;
    }
    // extended Euclid: find u with u * a = 1 mod Phi
    QPoly modpoly;
    for (const auto& m : field_->modulus()) modpoly.emplace_back(m);
    QPoly r0 = modpoly, r1 = c_;
    QPoly s0, s1{mpq_class(1)};
    while (!(r1.size() == 1)) {
        QPoly quot, rem;
        poly_divmod(r0, r1, quot, rem);
        if (rem.empty()) throw FieldError("element is not invertible modulo Phi_N");
        QPoly s2 = poly_sub(s0, poly_mul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const mpq_class inv = 1 / r1[0];
    for (auto& x : s1) x *= inv;
    QPoly quot, rem;
    poly_divmod(s1, modpoly, quot, rem);
    r.c_ = std::move(rem);
    r.trim();
    return r;
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum base = *this, acc(order(), 1L);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

CycNum CycNum::embed(int target_order) const {
    if (is_rational()) {
        CycNum r(target_order);
        r.c_ = c_;
        return r;
    }
    const int n = order();
    if (target_order % n != 0)
        throw FieldError("Q(zeta_" + std::to_string(n) + ") does not embed in Q(zeta_" +
                         std::to_string(target_order) + ")");
    const int step = target_order / n;
    CycNum r(target_order);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        r += CycNum::zeta(target_order, static_cast<long>(k) * step) * CycNum(target_order, c_[k]);
    }
    return r;
}

std::complex<double> CycNum::to_complex() const { return to_complex(1); }

std::complex<double> CycNum::to_complex(int j) const {
    const int n = order();
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const double ang = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(k) * j) % n) / n;
        acc += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string CycNum::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const mpq_class& c = c_[k];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> CycNum::coeff_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coeffs()) out.push_back(c.get_str());
    return out;
}

// ---------------------------------------------------------------------------

CycNum qroot(int p) { return CycNum::zeta(2 * p, 1); }

CycNum qpow(int p, long k) { return CycNum::zeta(2 * p, k); }

CycNum qint(int p, long n) {
    if (p < 2) throw FieldError("qint requires p >= 2");
    if (n < 0) return -qint(p, -n);
    // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
    CycNum acc(2 * p);
    for (long k = 0; k < n; ++k) acc += qpow(p, n - 1 - 2 * k);
    return acc;
}

}  // namespace uqsl
