#include "geolift/ringelem.hpp"

#include <cmath>
#include <sstream>

namespace geolift {

int RingElem::sign() const {
    const int sp = sgn(p_);
    const int sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 with 2 q^2.
    mpq_class p2 = p_ * p_;
    mpq_class q2 = 2 * q_ * q_;
    const int c = cmp(p2, q2);
    if (c == 0) return 0;  // cannot happen: sqrt2 is irrational, but keep exactness honest
    return c > 0 ? sp : sq;
}

double RingElem::to_double() const {
    return p_.get_d() + q_.get_d() * std::sqrt(2.0);
}

namespace {
// log of an mpq via mantissa/exponent split; valid for positive values.
double log_mpq(const mpq_class& v) {
    signed long int expn = 0;
    const double m_num = mpz_get_d_2exp(&expn, v.get_num_mpz_t());
    const double log_num = std::log(m_num) + static_cast<double>(expn) * M_LN2;
    const double m_den = mpz_get_d_2exp(&expn, v.get_den_mpz_t());
    const double log_den = std::log(m_den) + static_cast<double>(expn) * M_LN2;
    return log_num - log_den;
}
}  // namespace

double RingElem::log_abs() const {
    RingElem v = abs();
    if (v.is_zero()) return -HUGE_VAL;
    if (v.q_ == 0) return log_mpq(v.p_ < 0 ? mpq_class(-v.p_) : v.p_);
    // Evaluate p + q*sqrt2 in floating point with enough precision that the
    // subtraction cannot cancel below the answer's accuracy, doubling until
    // the result is comfortably above the rounding floor.
    const size_t comp_bits =
        std::max({mpz_sizeinbase(v.p_.get_num_mpz_t(), 2), mpz_sizeinbase(v.p_.get_den_mpz_t(), 2),
                  mpz_sizeinbase(v.q_.get_num_mpz_t(), 2),
                  mpz_sizeinbase(v.q_.get_den_mpz_t(), 2)});
    for (size_t prec = comp_bits + 128;; prec *= 2) {
        mpf_class s2(0, prec);
        mpf_sqrt_ui(s2.get_mpf_t(), 2);
        mpf_class val(v.p_, prec);
        val += mpf_class(v.q_, prec) * s2;
        if (sgn(val) < 0) val = -val;
        if (sgn(val) == 0) continue;
        // Trust the value once it is far from the cancellation floor.
        mpf_class floor_est(1, prec);
        mpf_div_2exp(floor_est.get_mpf_t(), floor_est.get_mpf_t(),
                     static_cast<unsigned long>(prec - comp_bits - 64));
        signed long int expn = 0;
        const double mant = mpf_get_d_2exp(&expn, val.get_mpf_t());
        const double approx = std::log(mant) + static_cast<double>(expn) * M_LN2;
        if (val > floor_est || prec > 64 * comp_bits + 4096) return approx;
    }
}

std::string RingElem::str() const {
    std::ostringstream out;
    if (q_ == 0) {
        out << p_;
        return out.str();
    }
    bool wrote = false;
    if (p_ != 0) {
        out << p_;
        wrote = true;
    }
    if (q_ > 0 && wrote) out << '+';
    if (q_ == -1)
        out << '-';
    else if (q_ != 1)
        out << q_ << '*';
    out << "sqrt2";
    return out.str();
}

}  // namespace geolift
