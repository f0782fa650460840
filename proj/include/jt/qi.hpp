#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <ostream>
#include <string>
#include <string_view>

#include "jt/errors.hpp"

namespace jt {

// Exact element of Q(i). Both parts are mpq_class values kept canonical by GMP.
class QiScalar {
public:
    QiScalar() = default;
    QiScalar(int v) : re_(v) {}
    QiScalar(long v) : re_(v) {}
    QiScalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static QiScalar i() { return QiScalar(0, 1); }
    static QiScalar frac(long num, long den, long inum = 0, long iden = 1);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    QiScalar conj() const { return QiScalar(re_, -im_); }
    QiScalar inverse() const;

    QiScalar& operator+=(const QiScalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    QiScalar& operator-=(const QiScalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    QiScalar& operator*=(const QiScalar& o);
    QiScalar& operator/=(const QiScalar& o) { return *this *= o.inverse(); }

    friend QiScalar operator+(QiScalar a, const QiScalar& b) { return a += b; }
    friend QiScalar operator-(QiScalar a, const QiScalar& b) { return a -= b; }
    friend QiScalar operator*(QiScalar a, const QiScalar& b) { return a *= b; }
    friend QiScalar operator/(QiScalar a, const QiScalar& b) { return a /= b; }
    friend QiScalar operator-(const QiScalar& a) { return QiScalar(-a.re_, -a.im_); }

    friend bool operator==(const QiScalar& a, const QiScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const QiScalar& a, const QiScalar& b) { return !(a == b); }

private:
    mpq_class re_;
    mpq_class im_;
};

// Integer power; negative exponents invert (zero base throws "zero divisor").
QiScalar pow(QiScalar base, long e);

// (-1)^e
inline QiScalar sign_power(long e) { return (e % 2 == 0) ? QiScalar(1) : QiScalar(-1); }

// Text form "p/q+r/s*i"; either part may be omitted, a unit imaginary coefficient prints as "i".
std::string to_string(const QiScalar& x);
QiScalar parse_qi(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const QiScalar& x) { return os << to_string(x); }

enum class UnitCmp { less, equal, greater };

// Compares |x|^2 with 1 exactly.
UnitCmp modulus_cmp_one(const QiScalar& x);

const char* to_string(UnitCmp c);

}  // namespace jt

namespace Eigen {

template <>
struct NumTraits<jt::QiScalar> : GenericNumTraits<jt::QiScalar> {
    using Real = jt::QiScalar;
    using NonInteger = jt::QiScalar;
    using Literal = jt::QiScalar;
    using Nested = jt::QiScalar;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 20,
        MulCost = 60
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
