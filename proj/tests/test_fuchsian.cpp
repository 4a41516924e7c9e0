#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "geolift/fuchsian.hpp"

using namespace geolift;

namespace {
const Alphabet& ABT = Alphabet::abt();
Word W(const std::string& s) { return parse_word(s, ABT); }

void all_reduced_upto(int maxlen, const std::function<void(const Word&)>& fn) {
    std::vector<Letter> acc;
    std::function<void()> rec = [&] {
        if (!acc.empty()) fn(Word(acc));
        if (static_cast<int>(acc.size()) == maxlen) return;
        for (int g = 0; g < 3; ++g) {
            for (int s : {1, -1}) {
                Letter l(g, s);
                if (!acc.empty() && acc.back().cancels(l)) continue;
                acc.push_back(l);
                rec();
                acc.pop_back();
            }
        }
    };
    rec();
}
}  // namespace

TEST_CASE("displayed generator matrices") {
    const RingElem s2 = RingElem::sqrt2();
    CHECK(rho_gen_a() == ExactMatrix(s2, RingElem(1) + s2, RingElem(-1) + s2, s2));
    CHECK(rho_gen_t() ==
          ExactMatrix(RingElem(-1) + s2, RingElem(0), RingElem(0), RingElem(1) + s2));
    // rho(b) = T A T^-1 evaluates to the displayed matrix
    CHECK(rho_gen_b() == ExactMatrix(s2, RingElem(-1) + s2, RingElem(1) + s2, s2));
    CHECK(rho_gen_a().det() == RingElem(1));
    CHECK(rho_gen_t().det() == RingElem(1));
    CHECK(rho_gen_b().det() == RingElem(1));
}

TEST_CASE("boundary class is exactly parabolic: tr rho(a b') = -2") {
    const RingElem tr = rho_eval(W("a b'")).trace();
    CHECK(tr == RingElem(-2));
}

TEST_CASE("det of rho is exactly one on all short words") {
    all_reduced_upto(7, [](const Word& w) { CHECK(rho_eval(w).det() == RingElem(1)); });
}

TEST_CASE("trace is invariant under rotation and inversion") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> gen(0, 2), sg(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> ls;
        const int len = 1 + trial % 12;
        for (int i = 0; i < len; ++i) ls.emplace_back(gen(rng), sg(rng) ? 1 : -1);
        const Word w = reduce(Word(ls));
        if (w.empty()) continue;
        const RingElem t = rho_eval(w).trace().abs();
        CHECK(rho_eval(w.inverse()).trace().abs() == t);
        std::vector<Letter> rot(w.letters().begin() + 1, w.letters().end());
        rot.push_back(w.letters().front());
        CHECK(rho_eval(reduce(Word(rot))).trace().abs() == t);
    }
}

TEST_CASE("translation length values") {
    // element a: trace 2 sqrt2
    const double la = translation_length(rho_gen_a());
    CHECK(la == doctest::Approx(2.0 * std::acosh(std::sqrt(2.0))).epsilon(1e-12));
    CHECK(la == doctest::Approx(1.762747174).epsilon(1e-9));
    // modular element xy has trace 3
    CHECK(translation_length_from_trace(RingElem(3)) ==
          doctest::Approx(2.0 * std::acosh(1.5)).epsilon(1e-13));
    CHECK(translation_length_from_trace(RingElem(3)) ==
          doctest::Approx(1.924847300).epsilon(1e-9));
    CHECK_THROWS_AS(translation_length_from_trace(RingElem(2)), ParabolicError);
    CHECK_THROWS_AS(translation_length_from_trace(RingElem(-2)), ParabolicError);
    CHECK_THROWS_AS(translation_length_from_trace(RingElem(1)), EllipticError);
}

TEST_CASE("translation length is exactly conjugation invariant at the trace level") {
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> gen(0, 2), sg(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Letter> ls, gs;
        for (int i = 0; i < 1 + trial % 8; ++i) ls.emplace_back(gen(rng), sg(rng) ? 1 : -1);
        for (int i = 0; i < 1 + trial % 5; ++i) gs.emplace_back(gen(rng), sg(rng) ? 1 : -1);
        const ExactMatrix m = rho_eval(reduce(Word(ls)));
        const ExactMatrix g = rho_eval(reduce(Word(gs)));
        const ExactMatrix conj = g * m * g.inverse();
        CHECK(conj.trace() == m.trace());
    }
}

TEST_CASE("large translation lengths stay accurate on the log scale") {
    const Word w = W("a t");
    const ExactMatrix m = rho_eval(w);
    const double unit = translation_length(m);
    ExactMatrix p = m;
    for (int k = 1; k <= 40; ++k) {
        const double len = translation_length(p);
        CHECK(len == doctest::Approx(static_cast<double>(k) * unit).epsilon(1e-9));
        p = p * m;
    }
}

TEST_CASE("ring arithmetic: conjugate product identity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    for (int trial = 0; trial < 300; ++trial) {
        const RingElem r(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
        const RingElem prod = r * r.conjugate();
        CHECK(prod.q() == 0);
        CHECK(prod.p() == r.p() * r.p() - 2 * r.q() * r.q());
    }
}

TEST_CASE("exact sign of mixed-sign ring elements") {
    // 3 - 2 sqrt2 > 0 (since 9 > 8), 2 - 2 sqrt2 < 0
    CHECK(RingElem(mpq_class(3), mpq_class(-2)).sign() == 1);
    CHECK(RingElem(mpq_class(2), mpq_class(-2)).sign() == -1);
    CHECK(RingElem(mpq_class(-3), mpq_class(2)).sign() == -1);
    CHECK(RingElem(mpq_class(-2), mpq_class(2)).sign() == 1);
    CHECK(RingElem().sign() == 0);
}

TEST_CASE("axis endpoints") {
    // diagonal T fixes 0 and infinity
    const AxisData t_ax = axis_endpoints(rho_gen_t());
    CHECK((t_ax.attracting_at_infinity || t_ax.repelling_at_infinity));
    if (t_ax.attracting_at_infinity)
        CHECK(t_ax.fixed_point_repelling == doctest::Approx(0.0));
    else
        CHECK(t_ax.fixed_point_attracting == doctest::Approx(0.0));

    // A: Vieta, product of roots = -b/c
    const AxisData a_ax = axis_endpoints(rho_gen_a());
    const double prod = a_ax.fixed_point_attracting * a_ax.fixed_point_repelling;
    const double expect = -rho_gen_a().b().to_double() / rho_gen_a().c().to_double();
    CHECK(prod == doctest::Approx(expect).epsilon(1e-12));

    // xy in SL2(Z): golden-ratio-type surds; residual of c s^2 + (d-a) s - b
    const ExactMatrix xy = sl2z_x() * sl2z_y();
    const AxisData s = axis_endpoints(xy);
    for (double fp : {s.fixed_point_attracting, s.fixed_point_repelling}) {
        const double res = xy.c().to_double() * fp * fp +
                           (xy.d().to_double() - xy.a().to_double()) * fp - xy.b().to_double();
        CHECK(std::fabs(res) < 1e-12);
    }

    // m and m^-1 share the axis with roles swapped
    const ExactMatrix m = rho_eval(W("a t"));
    const AxisData f = axis_endpoints(m);
    const AxisData g = axis_endpoints(m.inverse());
    CHECK(f.fixed_point_attracting == doctest::Approx(g.fixed_point_repelling).epsilon(1e-12));
    CHECK(f.fixed_point_repelling == doctest::Approx(g.fixed_point_attracting).epsilon(1e-12));

    CHECK_THROWS_AS(axis_endpoints(ExactMatrix()), EllipticError);
}

TEST_CASE("Lobachevsky function and v3") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::fabs(lobachevsky(M_PI / 2)) < 1e-12);  // L(pi/2) = 0 exactly

    const double v = v3();
    CHECK(v == doctest::Approx(1.0149416064).epsilon(1e-9));
    CHECK(std::fabs(v - 1.014941606) < 1e-8);

    // cross-check the integral against the series at pi/3
    const double series = 3.0 * lobachevsky_series(M_PI / 3, 1e-12);
    CHECK(std::fabs(v - series) < 1e-9);

    // Catalan's constant enters through L(pi/4) = G/2
    const double catalan = 0.9159655941772190;
    CHECK(2.0 * lobachevsky(M_PI / 4) == doctest::Approx(catalan).epsilon(1e-9));
    CHECK(2.0 * lobachevsky_series(M_PI / 4, 1e-12) == doctest::Approx(catalan).epsilon(1e-9));

    // oddness and pi-periodicity
    CHECK(lobachevsky(-M_PI / 3) == doctest::Approx(-lobachevsky(M_PI / 3)).epsilon(1e-12));
    CHECK(lobachevsky(M_PI / 3 + M_PI) == doctest::Approx(lobachevsky(M_PI / 3)).epsilon(1e-10));
}

TEST_CASE("matrix printing") {
    CHECK(rho_gen_t().str() == "[[-1+sqrt2, 0], [0, 1+sqrt2]]");
    CHECK(sl2z_x().str() == "[[1, 1], [0, 1]]");
    const std::string j = rho_gen_a().json();
    CHECK(j.find("\"p_num\"") != std::string::npos);
    CHECK(j.find("\"q_den\"") != std::string::npos);
}
