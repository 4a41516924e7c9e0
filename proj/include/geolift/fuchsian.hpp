#pragma once

#include <array>
#include <string>

#include "geolift/ringelem.hpp"
#include "geolift/words.hpp"

namespace geolift {

// Unit-determinant 2x2 matrix over Q(sqrt 2) (integer matrices are the
// special case q = 0 with integral p).
class ExactMatrix {
  public:
    ExactMatrix() : e_{RingElem(1), RingElem(0), RingElem(0), RingElem(1)} {}
    ExactMatrix(RingElem a, RingElem b, RingElem c, RingElem d)
        : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static ExactMatrix identity() { return ExactMatrix(); }

    const RingElem& a() const { return e_[0]; }
    const RingElem& b() const { return e_[1]; }
    const RingElem& c() const { return e_[2]; }
    const RingElem& d() const { return e_[3]; }

    RingElem det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    RingElem trace() const { return e_[0] + e_[3]; }

    // Adjugate; equals the inverse because det == 1 everywhere we build these.
    ExactMatrix inverse() const { return ExactMatrix(e_[3], -e_[1], -e_[2], e_[0]); }

    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
        return ExactMatrix(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2],
                           x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                           x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2],
                           x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
    }
    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) { return x.e_ == y.e_; }
    bool equals_up_to_sign(const ExactMatrix& o) const;

    std::string str() const;  // "[[a, b], [c, d]]" with exact entries
    std::string json() const;  // entries with separate numerator/denominator fields

  private:
    std::array<RingElem, 4> e_;
};

// The fixed discrete faithful representation of the once-punctured torus
// group <a, t>, extended to the splitting presentation <a, b, t | tat^-1=b>.
const ExactMatrix& rho_gen_a();
const ExactMatrix& rho_gen_t();
const ExactMatrix& rho_gen_b();  // == T A T^-1

// Evaluate a word over {a, b, t} (standard abt generator ids).
ExactMatrix rho_eval(const Word& w);

// SL2(Z) images of the modular generators x, y and of the once-punctured
// modular torus generators t = yx, a = y^-1 x^-1 (b = t a t^-1).
const ExactMatrix& sl2z_x();
const ExactMatrix& sl2z_y();
ExactMatrix sl2z_eval_xy(const Word& w);       // word over {x, y} ids
ExactMatrix rho_mod_eval(const Word& w);       // word over {a, b, t} ids

// 2*arccosh(|tr|/2); exact parabolic/elliptic detection on the trace.
double translation_length(const ExactMatrix& m);
double translation_length_from_trace(const RingElem& tr);

struct AxisData {
    double fixed_point_attracting = 0;
    double fixed_point_repelling = 0;
    bool attracting_at_infinity = false;
    bool repelling_at_infinity = false;
};

// Boundary fixed points of a hyperbolic matrix acting on the upper half
// plane, attracting/repelling identified by the derivative at the fixed point.
AxisData axis_endpoints(const ExactMatrix& m);

// Lobachevsky function  L(theta) = -int_0^theta ln|2 sin u| du,
// by adaptive Simpson integration with a series patch near 0.
double lobachevsky(double theta);
// Same value via the Fourier series (1/2) sum sin(2 n theta)/n^2.
double lobachevsky_series(double theta, double tol = 1e-12);
// Volume of the regular ideal tetrahedron, 3 L(pi/3).
double v3();

}  // namespace geolift
