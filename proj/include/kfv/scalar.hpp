#ifndef KFV_SCALAR_HPP
#define KFV_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kfv {

using Int = mpz_class;
using Rat = mpq_class;

struct field_error : std::runtime_error {
    explicit field_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Element of Q or of a quadratic extension Q(sqrt(disc)), stored as a + b*sqrt(disc)
// with rational a, b and a fixed square-free integer disc. A value with b == 0 is
// rational regardless of how it was produced; disc is dropped on normalization, so
// quadratic-field elements with b == 0 compare equal to plain rationals. Combining
// elements of two different extensions is an error, not a coercion.
class Scalar {
  public:
    Scalar() : a_(0), b_(0), disc_(0) {}
    Scalar(long n) : a_(n), b_(0), disc_(0) {}           // NOLINT(google-explicit-constructor)
    Scalar(const Int& n) : a_(n), b_(0), disc_(0) {}     // NOLINT(google-explicit-constructor)
    Scalar(const Rat& a) : a_(a), b_(0), disc_(0) {}     // NOLINT(google-explicit-constructor)
    Scalar(Rat a, Rat b, long disc) : a_(std::move(a)), b_(std::move(b)), disc_(disc) {
        if (disc_ == 0 && b_ != 0) throw field_error("sqrt part requires a nonzero discriminant");
        normalize();
    }

    static Scalar sqrt_of(long disc) {
        if (disc == 0 || disc == 1) throw field_error("discriminant must be a non-square");
        return Scalar(Rat(0), Rat(1), disc);
    }

    const Rat& rational_part() const { return a_; }
    const Rat& sqrt_part() const { return b_; }
    long disc() const { return disc_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    // The unique rational value; error when the element is irrational.
    const Rat& as_rational() const {
        if (!is_rational()) throw field_error("value is not rational");
        return a_;
    }

    Scalar conjugate() const { return Scalar(a_, -b_, disc_); }

    // a^2 - disc*b^2; rational, zero only for the zero element.
    Rat norm() const { return a_ * a_ - Rat(disc_) * b_ * b_; }

    friend Scalar operator-(const Scalar& x) { return Scalar(-x.a_, -x.b_, x.disc_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        long d = joint_disc(x, y);
        return Scalar(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        long d = joint_disc(x, y);
        return Scalar(x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    Scalar inverse() const {
        if (is_zero()) throw field_error("division by zero");
        if (is_rational()) return Scalar(Rat(1) / a_);
        Rat n = norm();
        if (n == 0) throw field_error("zero norm: discriminant is a square");
        return Scalar(a_ / n, -b_ / n, disc_);
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.b_ != y.b_ || x.a_ != y.a_) return false;
        return x.b_ == 0 || x.disc_ == y.disc_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Total order used for deterministic printing only (not a field order).
    friend bool operator<(const Scalar& x, const Scalar& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        if (x.b_ != y.b_) return x.b_ < y.b_;
        return x.disc_ < y.disc_;
    }

    std::string str() const {
        if (is_rational()) return a_.get_str();
        std::string s = "(";
        bool lead = true;
        if (a_ != 0) {
            s += a_.get_str();
            lead = false;
        }
        Rat b = b_;
        if (b < 0) {
            s += "-";
            b = -b;
        } else if (!lead) {
            s += "+";
        }
        if (b != 1) s += b.get_str() + "*";
        s += "sqrt(" + std::to_string(disc_) + ")";
        s += ")";
        return s;
    }

  private:
    void normalize() {
        if (b_ == 0) disc_ = 0;
    }

    static long joint_disc(const Scalar& x, const Scalar& y) {
        if (x.disc_ == 0) return y.disc_;
        if (y.disc_ == 0 || y.disc_ == x.disc_) return x.disc_;
        throw field_error("mixed quadratic fields: sqrt(" + std::to_string(x.disc_) +
                          ") vs sqrt(" + std::to_string(y.disc_) + ")");
    }

    Rat a_, b_;
    long disc_;
};

}  // namespace kfv

#endif
