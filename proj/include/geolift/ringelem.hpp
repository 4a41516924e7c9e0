#pragma once

#include <gmpxx.h>

#include <string>

namespace geolift {

// Element of Q(sqrt 2): p + q*sqrt(2) with exact rational components.
// All arithmetic and comparisons are exact; mpq_class keeps lowest terms.
class RingElem {
  public:
    RingElem() : p_(0), q_(0) {}
    RingElem(long integer) : p_(integer), q_(0) {}  // NOLINT: implicit by design
    RingElem(mpq_class p, mpq_class q) : p_(std::move(p)), q_(std::move(q)) {
        p_.canonicalize();
        q_.canonicalize();
    }
    static RingElem sqrt2(long coeff = 1) { return RingElem(0, coeff); }
    static RingElem rational(long num, long den) { return RingElem(mpq_class(num, den), 0); }

    const mpq_class& p() const { return p_; }
    const mpq_class& q() const { return q_; }
    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    RingElem conjugate() const { return RingElem(p_, -q_); }  // p - q*sqrt2

    friend RingElem operator+(const RingElem& a, const RingElem& b) {
        return RingElem(a.p_ + b.p_, a.q_ + b.q_);
    }
    friend RingElem operator-(const RingElem& a, const RingElem& b) {
        return RingElem(a.p_ - b.p_, a.q_ - b.q_);
    }
    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        return RingElem(a.p_ * b.p_ + 2 * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_);
    }
    RingElem operator-() const { return RingElem(-p_, -q_); }
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    // Exact sign of p + q*sqrt2.
    int sign() const;
    friend bool operator<(const RingElem& a, const RingElem& b) { return (a - b).sign() < 0; }
    friend bool operator>(const RingElem& a, const RingElem& b) { return (a - b).sign() > 0; }

    double to_double() const;
    // Natural log of a large positive value, accurate to ~1e-14 relative.
    double log_abs() const;

    RingElem abs() const { return sign() < 0 ? -*this : *this; }

    // "p+q*sqrt2" with exact rationals, e.g. "1+2*sqrt2", "-1/3", "sqrt2".
    std::string str() const;

  private:
    mpq_class p_, q_;
};

}  // namespace geolift
