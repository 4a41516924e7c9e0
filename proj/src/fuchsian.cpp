#include "geolift/fuchsian.hpp"

#include <cmath>
#include <sstream>

#include "geolift/error.hpp"

namespace geolift {

bool ExactMatrix::equals_up_to_sign(const ExactMatrix& o) const {
    if (*this == o) return true;
    return e_[0] == -o.e_[0] && e_[1] == -o.e_[1] && e_[2] == -o.e_[2] && e_[3] == -o.e_[3];
}

std::string ExactMatrix::str() const {
    std::ostringstream out;
    out << "[[" << e_[0].str() << ", " << e_[1].str() << "], [" << e_[2].str() << ", "
        << e_[3].str() << "]]";
    return out.str();
}

std::string ExactMatrix::json() const {
    auto entry = [](const RingElem& r) {
        std::ostringstream o;
        o << "{\"p_num\": \"" << r.p().get_num() << "\", \"p_den\": \"" << r.p().get_den()
          << "\", \"q_num\": \"" << r.q().get_num() << "\", \"q_den\": \"" << r.q().get_den()
          << "\"}";
        return o.str();
    };
    std::ostringstream out;
    out << "{\"a\": " << entry(e_[0]) << ", \"b\": " << entry(e_[1]) << ", \"c\": " << entry(e_[2])
        << ", \"d\": " << entry(e_[3]) << "}";
    return out.str();
}

const ExactMatrix& rho_gen_a() {
    static const ExactMatrix m(RingElem::sqrt2(), RingElem(1) + RingElem::sqrt2(),
                               RingElem(-1) + RingElem::sqrt2(), RingElem::sqrt2());
    return m;
}
const ExactMatrix& rho_gen_t() {
    static const ExactMatrix m(RingElem(-1) + RingElem::sqrt2(), RingElem(0), RingElem(0),
                               RingElem(1) + RingElem::sqrt2());
    return m;
}
const ExactMatrix& rho_gen_b() {
    static const ExactMatrix m = rho_gen_t() * rho_gen_a() * rho_gen_t().inverse();
    return m;
}

namespace {
ExactMatrix eval_with(const Word& w, const ExactMatrix& A, const ExactMatrix& B,
                      const ExactMatrix& T) {
    const auto& rel = HnnRelation::standard();
    ExactMatrix M;
    for (const Letter& l : w.letters()) {
        const ExactMatrix* g = nullptr;
        if (l.gen == rel.a)
            g = &A;
        else if (l.gen == rel.b)
            g = &B;
        else if (l.gen == rel.t)
            g = &T;
        else
            throw Error("rho_eval: generator id " + std::to_string(l.gen) +
                        " is not one of a, b, t");
        M = M * (l.sign > 0 ? *g : g->inverse());
    }
    return M;
}
}  // namespace

ExactMatrix rho_eval(const Word& w) {
    return eval_with(w, rho_gen_a(), rho_gen_b(), rho_gen_t());
}

const ExactMatrix& sl2z_x() {
    static const ExactMatrix m(RingElem(1), RingElem(1), RingElem(0), RingElem(1));
    return m;
}
const ExactMatrix& sl2z_y() {
    static const ExactMatrix m(RingElem(1), RingElem(0), RingElem(1), RingElem(1));
    return m;
}

ExactMatrix sl2z_eval_xy(const Word& w) {
    ExactMatrix M;
    for (const Letter& l : w.letters()) {
        const ExactMatrix& g = l.gen == 0 ? sl2z_x() : sl2z_y();
        M = M * (l.sign > 0 ? g : g.inverse());
    }
    return M;
}

ExactMatrix rho_mod_eval(const Word& w) {
    static const ExactMatrix T = sl2z_y() * sl2z_x();
    static const ExactMatrix A = sl2z_y().inverse() * sl2z_x().inverse();
    static const ExactMatrix B = T * A * T.inverse();
    return eval_with(w, A, B, T);
}

double translation_length_from_trace(const RingElem& tr) {
    RingElem at = tr.abs();
    const int cmp2 = (at - RingElem(2)).sign();
    if (cmp2 == 0) throw ParabolicError();
    if (cmp2 < 0) throw EllipticError();
    // 2 arccosh(|tr|/2) = 2 ln((|tr| + sqrt(tr^2-4))/2); for large traces work
    // on the log scale to avoid overflow.
    const double x = at.to_double() / 2.0;
    if (std::isfinite(x) && x < 1e15) return 2.0 * std::acosh(x);
    const double log_half_tr = at.log_abs() - M_LN2;
    return 2.0 * (log_half_tr + M_LN2);  // arccosh(x) ~ ln(2x) for huge x
}

double translation_length(const ExactMatrix& m) {
    return translation_length_from_trace(m.trace());
}

AxisData axis_endpoints(const ExactMatrix& m) {
    const RingElem tr = m.trace();
    const int cmp2 = (tr.abs() - RingElem(2)).sign();
    if (cmp2 == 0) throw ParabolicError();
    if (cmp2 < 0) throw EllipticError();

    AxisData ax;
    const double a = m.a().to_double();
    const double b = m.b().to_double();
    const double c = m.c().to_double();
    const double d = m.d().to_double();
    const double t = a + d;
    const double disc = std::sqrt(t * t - 4.0);

    auto deriv_abs = [&](double x, bool at_inf) {
        // |f'(x)| = 1/(c x + d)^2; at infinity the roles flip: |f'| = a^{-2}... use
        // the multiplier |lambda|^2 instead, via cx+d evaluated projectively.
        if (at_inf) {
            // derivative of 1/f(1/u) at u=0 is (d - ...)/a^2; magnitude = 1/a^2
            return 1.0 / (a * a);
        }
        const double cxd = c * x + d;
        return 1.0 / (cxd * cxd);
    };

    if (m.c().is_zero()) {
        // Fixed points: infinity and b/(d-a).
        const bool fixed0 = m.b().is_zero();
        const double other = fixed0 ? 0.0 : b / (d - a);
        const double di = deriv_abs(0.0, true);
        if (di < 1.0) {
            ax.fixed_point_attracting = 0.0;
            ax.attracting_at_infinity = true;
            ax.fixed_point_repelling = other;
        } else {
            ax.fixed_point_attracting = other;
            ax.fixed_point_repelling = 0.0;
            ax.repelling_at_infinity = true;
        }
        return ax;
    }

    const double r1 = (a - d + disc) / (2.0 * c);
    const double r2 = (a - d - disc) / (2.0 * c);
    if (deriv_abs(r1, false) < 1.0) {
        ax.fixed_point_attracting = r1;
        ax.fixed_point_repelling = r2;
    } else {
        ax.fixed_point_attracting = r2;
        ax.fixed_point_repelling = r1;
    }
    return ax;
}

// ---------------------------------------------------------------------------
// Lobachevsky function and v3
// ---------------------------------------------------------------------------

namespace {

double integrand(double u) { return -std::log(std::fabs(2.0 * std::sin(u))); }

double simpson(double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double adaptive(double lo, double hi, double flo, double fmid, double fhi, double whole,
                double tol, int depth) {
    const double m = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + m), rm = 0.5 * (m + hi);
    const double flm = integrand(lm), frm = integrand(rm);
    const double left = simpson(lo, m, flo, flm, fmid);
    const double right = simpson(m, hi, fmid, frm, fhi);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(lo, m, flo, flm, fmid, left, tol / 2.0, depth - 1) +
           adaptive(m, hi, fmid, frm, fhi, right, tol / 2.0, depth - 1);
}

}  // namespace

double lobachevsky(double theta) {
    // Reduce by oddness and pi-periodicity.
    double sign = 1.0;
    if (theta < 0) {
        theta = -theta;
        sign = -1.0;
    }
    theta = std::fmod(theta, M_PI);
    if (theta > M_PI / 2 + 1e-18) {
        // L(pi - u) = -L(u)
        return sign * -lobachevsky(M_PI - theta);
    }
    if (theta < 1e-300) return 0.0;

    // Series patch on [0, delta]: -int_0^d ln(2 sin u) du
    //   = d - d ln(2d) + d^3/18 + d^5/300 + O(d^7).
    const double delta = std::min(1e-3, theta);
    double head = delta - delta * std::log(2.0 * delta) + std::pow(delta, 3) / 18.0 +
                  std::pow(delta, 5) / 300.0;
    if (theta <= delta) {
        head = theta - theta * std::log(2.0 * theta) + std::pow(theta, 3) / 18.0 +
               std::pow(theta, 5) / 300.0;
        return sign * head;
    }
    const double flo = integrand(delta), fhi = integrand(theta),
                 fmid = integrand(0.5 * (delta + theta));
    const double whole = simpson(delta, theta, flo, fmid, fhi);
    const double tail = adaptive(delta, theta, flo, fmid, fhi, whole, 1e-13, 48);
    return sign * (head + tail);
}

double lobachevsky_series(double theta, double tol) {
    // L(theta) = (1/2) sum_{n>=1} sin(2 n theta)/n^2. Abel summation gives the
    // tail bound |sum_{n>N}| <= (1/(N+1)^2) / |sin(theta)|, since the partial
    // sums of sin(2 n theta) are bounded by 1/|sin theta|.
    const double s_theta = std::fabs(std::sin(theta));
    if (s_theta < 1e-9) return 0.0;  // theta ~ multiple of pi: every term vanishes
    double s = 0.0;
    for (long n = 1;; ++n) {
        s += std::sin(2.0 * static_cast<double>(n) * theta) / (static_cast<double>(n) * n);
        const double np1 = static_cast<double>(n + 1);
        if (1.0 / (np1 * np1) / s_theta < tol) break;
        if (n > 200000000L) break;
    }
    return 0.5 * s;
}

double v3() {
    return 3.0 * lobachevsky(M_PI / 3.0);
}

}  // namespace geolift
