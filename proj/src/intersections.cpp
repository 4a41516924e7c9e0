#include "geolift/intersections.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "geolift/error.hpp"

namespace geolift {

namespace {
const int GEN_A = HnnRelation::standard().a;
const int GEN_B = HnnRelation::standard().b;
const int GEN_T = HnnRelation::standard().t;
}  // namespace

SurfaceKind deduce_surface(const CyclicWord& w) {
    bool has_t = false;
    for (const Letter& l : w.letters())
        if (l.gen == GEN_T) has_t = true;
    return has_t ? SurfaceKind::PuncturedTorus : SurfaceKind::PairOfPants;
}

Word substitute_b(const Word& w) {
    std::vector<Letter> out;
    out.reserve(3 * w.size());
    for (const Letter& l : w.letters()) {
        if (l.gen == GEN_B) {
            out.emplace_back(GEN_T, 1);
            out.emplace_back(GEN_A, l.sign);
            out.emplace_back(GEN_T, -1);
        } else {
            out.push_back(l);
        }
    }
    return reduce(Word(std::move(out)));
}

Rep Rep::punctured_torus() {
    Rep r;
    r.kind = SurfaceKind::PuncturedTorus;
    r.gen_first = rho_gen_a();
    r.gen_second = rho_gen_t();
    return r;
}

Rep Rep::pair_of_pants() {
    Rep r;
    r.kind = SurfaceKind::PairOfPants;
    r.gen_first = rho_gen_a();
    r.gen_second = rho_gen_b();
    return r;
}

Rep Rep::for_word(const CyclicWord& w) {
    return deduce_surface(w) == SurfaceKind::PairOfPants ? pair_of_pants() : punctured_torus();
}

Rep Rep::conjugated(const ExactMatrix& g) const {
    Rep r = *this;
    const ExactMatrix gi = g.inverse();
    r.gen_first = g * gen_first * gi;
    r.gen_second = g * gen_second * gi;
    return r;
}

ExactMatrix Rep::eval(const Word& w) const {
    const int second = kind == SurfaceKind::PuncturedTorus ? GEN_T : GEN_B;
    ExactMatrix M;
    for (const Letter& l : w.letters()) {
        const ExactMatrix* g = nullptr;
        if (l.gen == GEN_A)
            g = &gen_first;
        else if (l.gen == second)
            g = &gen_second;
        else
            throw Error("word uses a generator outside the representation's surface");
        M = M * (l.sign > 0 ? *g : g->inverse());
    }
    return M;
}

// ---------------------------------------------------------------------------
// Shared word helpers
// ---------------------------------------------------------------------------

namespace {

// Bring a word over {a,b,t} to the alphabet of `kind`; cyclically reduce.
CyclicWord normalize_for(const CyclicWord& w, SurfaceKind kind) {
    if (kind == SurfaceKind::PuncturedTorus) return cyclic_reduce(substitute_b(w.to_word()));
    for (const Letter& l : w.letters())
        if (l.gen == GEN_T) throw Error("pair-of-pants word may not contain t");
    return w;
}

Word word_pow(const CyclicWord& w, long k) {
    return w.to_word().pow(static_cast<int>(k));
}

// Least (length, shortlex) element of { u^p g^s v^q } over the window that
// provably contains the minimum; s ranges over {+1,-1} when flip is set.
Word double_coset_key(const Word& g, const CyclicWord& u, const CyclicWord& v, bool flip) {
    const long lu = std::max<size_t>(1, u.size());
    const long lv = std::max<size_t>(1, v.size());
    const long P = static_cast<long>(g.size()) / lu + 3;
    const long Q = static_cast<long>(g.size()) / lv + 3;
    std::optional<Word> best;
    std::vector<Word> gs{g};
    if (flip) gs.push_back(g.inverse());
    for (const Word& gg : gs) {
        for (long p = -P; p <= P; ++p) {
            const Word left = word_pow(u, p) * gg;
            for (long q = -Q; q <= Q; ++q) {
                Word cand = left * word_pow(v, q);
                if (!best || cand < *best) best = std::move(cand);
            }
        }
    }
    return *best;
}

// ---------------------------------------------------------------------------
// Primary algorithm: axis enumeration with exact crossing predicate.
//
// Axes of hyperbolic f, g with distinct axes cross iff tr[f,g] < 2; the sign
// of tr[f,g] - 2 is computed exactly in Q(sqrt2) wherever the fast double
// evaluation is within its error margin of the threshold.
// ---------------------------------------------------------------------------

struct DMat {
    double a = 1, b = 0, c = 0, d = 1;
    DMat mul(const DMat& o) const {
        return DMat{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    DMat inv() const { return DMat{d, -b, -c, a}; }
};

DMat to_double(const ExactMatrix& m) {
    return DMat{m.a().to_double(), m.b().to_double(), m.c().to_double(), m.d().to_double()};
}

double commutator_trace(const DMat& w, const DMat& u) {
    const DMat c = w.mul(u).mul(w.inv()).mul(u.inv());
    return c.a + c.d;
}

RingElem commutator_trace_exact(const ExactMatrix& w, const ExactMatrix& u) {
    return (w * u * w.inverse() * u.inverse()).trace();
}

struct Enumeration {
    const Rep& rep;
    ExactMatrix base_exact;        // image of the base word
    DMat base_dbl;
    std::array<DMat, 4> letter_dbl;
    std::array<ExactMatrix, 4> letter_exact;
    std::array<Letter, 4> letters;

    // crossing conjugators found, with discovery length
    std::vector<std::pair<Word, int>> crossings;
    long budget = 80'000'000;  // node budget across the whole search

    explicit Enumeration(const Rep& r, const ExactMatrix& base) : rep(r), base_exact(base) {
        base_dbl = to_double(base);
        const int second = rep.kind == SurfaceKind::PuncturedTorus ? GEN_T : GEN_B;
        letters = {Letter(GEN_A, 1), Letter(GEN_A, -1), Letter(second, 1), Letter(second, -1)};
        letter_exact = {rep.gen_first, rep.gen_first.inverse(), rep.gen_second,
                        rep.gen_second.inverse()};
        for (int i = 0; i < 4; ++i) letter_dbl[static_cast<size_t>(i)] = to_double(letter_exact[static_cast<size_t>(i)]);
    }

    bool crosses_exact(const Word& g) const {
        const ExactMatrix mg = rep.eval(g);
        const ExactMatrix mu = mg * base_exact * mg.inverse();
        const RingElem t = commutator_trace_exact(base_exact, mu);
        return (t - RingElem(2)).sign() < 0;
    }

    void dfs(std::vector<Letter>& g, const DMat& mg, int max_depth) {
        if (--budget < 0) throw UnstableError(0, "axis enumeration exceeded its node budget");
        if (!g.empty()) {
            const DMat mu = mg.mul(base_dbl).mul(mg.inv());
            const double t = commutator_trace(base_dbl, mu);
            const double margin = 1e-6 * (1.0 + std::fabs(t));
            if (t < 2.0 - margin) {
                crossings.emplace_back(Word(g), static_cast<int>(g.size()));
            } else if (std::fabs(t - 2.0) <= margin) {
                if (crosses_exact(Word(g)))
                    crossings.emplace_back(Word(g), static_cast<int>(g.size()));
            }
        }
        if (static_cast<int>(g.size()) >= max_depth) return;
        for (size_t i = 0; i < 4; ++i) {
            if (!g.empty() && g.back().cancels(letters[i])) continue;
            g.push_back(letters[i]);
            dfs(g, mg.mul(letter_dbl[i]), max_depth);
            g.pop_back();
        }
    }
};

// Map crossing conjugators to class keys, tracking per-class first-discovery
// length; verifies borderline candidates exactly.
std::map<Word, int> classify(Enumeration& en, const CyclicWord& u, const CyclicWord& v,
                             bool flip) {
    std::map<Word, int> classes;
    for (auto& [g, len] : en.crossings) {
        Word key = double_coset_key(g, u, v, flip);
        auto it = classes.find(key);
        if (it == classes.end()) {
            // Confirm exactly before admitting a brand-new class.
            if (!en.crosses_exact(g)) continue;
            classes.emplace(std::move(key), len);
        } else if (len < it->second) {
            it->second = len;
        }
    }
    return classes;
}

struct StableCount {
    long count = 0;
    bool stable = false;
    int cutoff = 0;
    long raw = 0;
};

StableCount run_enumeration(const Rep& rep, const CyclicWord& base, const CyclicWord& u,
                            const CyclicWord& v, bool flip, int cutoff) {
    const ExactMatrix m_base = rep.eval(base.to_word());
    const int n = static_cast<int>(base.size());
    const bool adaptive = cutoff < 0;
    int L = adaptive ? n + 4 : cutoff;
    const int Lmax = adaptive ? 2 * n + 6 : cutoff;
    while (true) {
        Enumeration en(rep, m_base);
        std::vector<Letter> g;
        g.reserve(static_cast<size_t>(L));
        en.dfs(g, DMat{}, L);
        auto classes = classify(en, u, v, flip);
        int last_new = 0;
        for (const auto& [key, len] : classes) last_new = std::max(last_new, len);
        StableCount out;
        out.count = static_cast<long>(classes.size());
        out.stable = last_new <= L - 2;
        out.cutoff = L;
        out.raw = static_cast<long>(en.crossings.size());
        if (out.stable || L >= Lmax || !adaptive) return out;
        L = std::min(Lmax, L + 2);
    }
}

}  // namespace

IntersectionResult self_intersection(const CyclicWord& w_in, const Rep& rep, int cutoff) {
    CyclicWord w = normalize_for(w_in, rep.kind);
    int power = 1;
    CyclicWord u = primitive_root(w, &power);
    const ExactMatrix mu = rep.eval(u.to_word());
    const int tr_cmp = (mu.trace().abs() - RingElem(2)).sign();
    if (tr_cmp < 0) throw EllipticError("word is elliptic under the representation");
    if (tr_cmp == 0) {
        // primitive parabolic classes are embedded cusp loops; powers add the
        // usual k-1 parallel-strand crossings
        IntersectionResult res;
        res.count = power - 1;
        res.stable = true;
        return res;
    }

    StableCount sc = run_enumeration(rep, u, u, u, /*flip=*/true, cutoff);
    if (!sc.stable)
        throw UnstableError(sc.count, "self-intersection count not stable at cutoff " +
                                          std::to_string(sc.cutoff));
    IntersectionResult res;
    res.count = static_cast<long>(power) * power * sc.count + (power - 1);
    res.stable = true;
    res.cutoff_used = sc.cutoff;
    res.raw_crossing_reps = sc.raw;
    return res;
}

IntersectionResult geometric_intersection(const CyclicWord& u_in, const CyclicWord& v_in,
                                          const Rep& rep, int cutoff) {
    CyclicWord u = normalize_for(u_in, rep.kind);
    CyclicWord v = normalize_for(v_in, rep.kind);
    if (u == v || u == v.inverse())
        throw ConjugateInputsError("inputs are conjugate; use self_intersection");

    // Enumerate conjugates of v against the axis of u: count <u> g <v> classes.
    const ExactMatrix m_u = rep.eval(u.to_word());
    const ExactMatrix m_v = rep.eval(v.to_word());
    if ((m_u.trace().abs() - RingElem(2)).sign() <= 0 ||
        (m_v.trace().abs() - RingElem(2)).sign() <= 0)
        throw ParabolicError("geometric intersection needs hyperbolic classes");
    const int n = static_cast<int>(u.size() + v.size());
    const bool adaptive = cutoff < 0;
    int L = adaptive ? n + 4 : cutoff;
    const int Lmax = adaptive ? 2 * n + 6 : cutoff;
    while (true) {
        Enumeration en(rep, m_v);
        // crossing test pairs axis(u) with g axis(v) g^-1: reuse machinery by
        // overriding the base on the left of the commutator.
        en.base_exact = m_v;
        en.base_dbl = to_double(m_v);
        // here the predicate must compare against axis(u), so run a dedicated DFS
        struct GeomDfs {
            Enumeration& en;
            DMat mu_dbl;
            ExactMatrix mu_exact;
            int max_depth;
            void run(std::vector<Letter>& g, const DMat& mg) {
                if (--en.budget < 0)
                    throw UnstableError(0, "axis enumeration exceeded its node budget");
                const DMat mv = mg.mul(en.base_dbl).mul(mg.inv());
                const double t = commutator_trace(mu_dbl, mv);
                const double margin = 1e-6 * (1.0 + std::fabs(t));
                bool record = false;
                if (t < 2.0 - margin)
                    record = true;
                else if (std::fabs(t - 2.0) <= margin) {
                    const ExactMatrix m_g = en.rep.eval(Word(g));
                    const RingElem tex = commutator_trace_exact(
                        mu_exact, m_g * en.base_exact * m_g.inverse());
                    record = (tex - RingElem(2)).sign() < 0;
                }
                if (record) en.crossings.emplace_back(Word(g), static_cast<int>(g.size()));
                if (static_cast<int>(g.size()) >= max_depth) return;
                for (size_t i = 0; i < 4; ++i) {
                    if (!g.empty() && g.back().cancels(en.letters[i])) continue;
                    g.push_back(en.letters[i]);
                    run(g, mg.mul(en.letter_dbl[i]));
                    g.pop_back();
                }
            }
        };
        GeomDfs dfs{en, to_double(m_u), m_u, L};
        std::vector<Letter> g;
        dfs.run(g, DMat{});

        std::map<Word, int> classes;
        for (auto& [gw, len] : en.crossings) {
            Word key = double_coset_key(gw, u, v, /*flip=*/false);
            auto it = classes.find(key);
            if (it == classes.end()) {
                const ExactMatrix m_g = rep.eval(gw);
                const RingElem tex =
                    commutator_trace_exact(m_u, m_g * m_v * m_g.inverse());
                if ((tex - RingElem(2)).sign() >= 0) continue;
                classes.emplace(std::move(key), len);
            } else if (len < it->second) {
                it->second = len;
            }
        }
        int last_new = 0;
        for (const auto& [key, len] : classes) last_new = std::max(last_new, len);
        const bool stable = last_new <= L - 2;
        if (stable || L >= Lmax || !adaptive) {
            if (!stable)
                throw UnstableError(static_cast<long>(classes.size()),
                                    "geometric intersection count not stable at cutoff " +
                                        std::to_string(L));
            IntersectionResult res;
            res.count = static_cast<long>(classes.size());
            res.stable = true;
            res.cutoff_used = L;
            res.raw_crossing_reps = static_cast<long>(en.crossings.size());
            return res;
        }
        L = std::min(Lmax, L + 2);
    }
}

LiftedAxisSet lifted_axis_set(const CyclicWord& w_in, const Rep& rep, int cutoff) {
    CyclicWord w = normalize_for(w_in, rep.kind);
    const ExactMatrix m_base = rep.eval(w.to_word());
    Enumeration en(rep, m_base);
    std::vector<Letter> g;
    en.dfs(g, DMat{}, cutoff);
    LiftedAxisSet out;
    out.base = w;
    std::set<Word> seen;
    for (auto& [gw, len] : en.crossings) {
        Word key = double_coset_key(gw, w, w, true);
        if (!seen.insert(key).second) continue;
        const ExactMatrix m = rep.eval(gw) * m_base * rep.eval(gw).inverse();
        out.crossing_lifts.push_back(LiftedAxis{gw, axis_endpoints(m)});
    }
    return out;
}

long theorem2_selfint_prediction(long n, long i_eta_eta, long i_gamma0_eta) {
    return n * n * i_eta_eta + n * (i_gamma0_eta - 1);
}

// ---------------------------------------------------------------------------
// Combinatorial algorithm: linked cyclic position pairs.
//
// The planar tree of the free group has one cyclic edge order at every
// vertex; boundary points are infinite reduced words, and three of them are
// circularly ordered by the edge order at the vertex where they part ways.
// A crossing of the geodesic corresponds to a pair of cyclic positions
// (i, j) together with a small relative winding m; the lift pair conjugator
// is prefix_i^-1 w^m prefix_j, and axes cross iff their endpoint pairs
// interleave on the boundary circle.
// ---------------------------------------------------------------------------

namespace {

// Cyclic edge orders realizing the two subsurfaces.
std::array<Letter, 4> ribbon_for(SurfaceKind kind) {
    if (kind == SurfaceKind::PuncturedTorus)
        return {Letter(GEN_A, 1), Letter(GEN_T, 1), Letter(GEN_A, -1), Letter(GEN_T, -1)};
    return {Letter(GEN_A, 1), Letter(GEN_A, -1), Letter(GEN_B, -1), Letter(GEN_B, 1)};
}

struct BoundaryWord {
    std::vector<Letter> prefix;
    std::vector<Letter> period;  // nonempty, cyclically reduced stream

    Letter at(size_t i) const {
        if (i < prefix.size()) return prefix[i];
        return period[(i - prefix.size()) % period.size()];
    }
};

// Reduced infinite word g . p^inf for a cyclically reduced linear period p:
// reduce g p^r for r large enough that the tail is untouched, then read off
// prefix and repeating block. The rotation of the period matters: it pins
// which boundary point of the axis is meant.
BoundaryWord boundary_point(const Word& g, const Word& period) {
    const long r = static_cast<long>(g.size() / std::max<size_t>(1, period.size())) + 2;
    Word z = g * period.pow(static_cast<int>(r));
    const size_t n = period.size();
    // z ends with at least one untouched copy of (a rotation of) w
    BoundaryWord b;
    b.prefix.assign(z.letters().begin(), z.letters().end() - static_cast<long>(n));
    b.period.assign(z.letters().end() - static_cast<long>(n), z.letters().end());
    return b;
}

size_t lcp(const BoundaryWord& x, const BoundaryWord& y, size_t cap) {
    for (size_t i = 0; i < cap; ++i)
        if (!(x.at(i) == y.at(i))) return i;
    return cap;
}

int ribbon_pos(const std::array<Letter, 4>& ribbon, const Letter& l) {
    for (int i = 0; i < 4; ++i)
        if (ribbon[static_cast<size_t>(i)] == l) return i;
    throw Error("letter not in ribbon order");
}

struct CircularOrder {
    std::array<Letter, 4> ribbon;
    size_t cap;

    int orient3(const Letter& d1, const Letter& d2, const Letter& d3) const {
        const int p = ribbon_pos(ribbon, d1);
        const int q = ribbon_pos(ribbon, d2);
        const int r = ribbon_pos(ribbon, d3);
        return ((q - p + 4) % 4) < ((r - p + 4) % 4) ? 1 : -1;
    }

    // Circular orientation of three pairwise distinct boundary points.
    int ord(const BoundaryWord& x1, const BoundaryWord& x2, const BoundaryWord& x3) const {
        const size_t l12 = lcp(x1, x2, cap);
        const size_t l13 = lcp(x1, x3, cap);
        const size_t l23 = lcp(x2, x3, cap);
        if (l12 >= cap || l13 >= cap || l23 >= cap)
            throw Error("boundary points indistinguishable within comparison cap");
        const size_t m = std::min({l12, l13, l23});
        if (l12 == m && l13 == m && l23 == m)
            return orient3(x1.at(m), x2.at(m), x3.at(m));
        if (l12 > m) {
            const Letter back = x1.at(l12 - 1).inverse();
            return orient3(x1.at(l12), x2.at(l12), back);
        }
        if (l13 > m) {
            const Letter back = x1.at(l13 - 1).inverse();
            return orient3(x1.at(l13), back, x3.at(l13));
        }
        const Letter back = x2.at(l23 - 1).inverse();
        return orient3(back, x2.at(l23), x3.at(l23));
    }

    bool equal(const BoundaryWord& x, const BoundaryWord& y) const {
        return lcp(x, y, cap) >= cap;
    }

    // Do the endpoint pairs {P1,M1} and {P2,M2} interleave?
    bool linked(const BoundaryWord& p1, const BoundaryWord& m1, const BoundaryWord& p2,
                const BoundaryWord& m2) const {
        if (equal(p1, p2) || equal(p1, m2) || equal(m1, p2) || equal(m1, m2)) return false;
        return ord(p1, p2, m1) != ord(p1, m2, m1);
    }
};

long combinatorial_count(const CyclicWord& u, SurfaceKind kind,
                         const std::optional<CyclicWord>& other) {
    const auto ribbon = ribbon_for(kind);
    const CyclicWord& v = other ? *other : u;
    const size_t cap = 4 * (u.size() + v.size()) * std::max(u.size(), v.size()) + 64;
    CircularOrder order{ribbon, cap};

    const Word u_fwd = u.to_word();
    const Word u_bwd = u_fwd.inverse();
    const Word v_fwd = v.to_word();
    const Word v_bwd = v_fwd.inverse();
    const BoundaryWord u_plus = boundary_point(Word(), u_fwd);
    const BoundaryWord u_minus = boundary_point(Word(), u_bwd);

    // Prefixes of the base rotation of each word.
    auto prefixes = [](const CyclicWord& w) {
        std::vector<Word> out;
        std::vector<Letter> acc;
        out.emplace_back();
        for (const Letter& l : w.letters()) {
            acc.push_back(l);
            out.emplace_back(acc);
        }
        out.pop_back();  // full word == w^1 . empty prefix
        return out;
    };
    const std::vector<Word> pu = prefixes(u);
    const std::vector<Word> pv = prefixes(v);

    const long winding = 4;
    const bool self = !other;
    std::set<Word> classes;
    for (size_t i = 0; i < pu.size(); ++i) {
        for (size_t j = 0; j < pv.size(); ++j) {
            for (long m = -winding; m <= winding; ++m) {
                if (self && i == j) continue;
                const Word g = pu[i].inverse() * word_pow(u, m) * pv[j];
                const BoundaryWord g_plus = boundary_point(g, v_fwd);
                const BoundaryWord g_minus = boundary_point(g, v_bwd);
                if (!order.linked(u_plus, u_minus, g_plus, g_minus)) continue;
                classes.insert(double_coset_key(g, u, v, self));
            }
        }
    }
    return static_cast<long>(classes.size());
}

}  // namespace

long self_intersection_combinatorial(const CyclicWord& w_in, std::optional<SurfaceKind> kind_in) {
    const SurfaceKind kind = kind_in.value_or(deduce_surface(w_in));
    CyclicWord w = normalize_for(w_in, kind);
    int power = 1;
    CyclicWord u = primitive_root(w, &power);
    const Rep guard_rep =
        kind == SurfaceKind::PuncturedTorus ? Rep::punctured_torus() : Rep::pair_of_pants();
    const int tr_cmp = (guard_rep.eval(u.to_word()).trace().abs() - RingElem(2)).sign();
    if (tr_cmp < 0) throw EllipticError("word is elliptic under the representation");
    if (tr_cmp == 0) return power - 1;  // cusp loop and its parallel copies
    const long base = combinatorial_count(u, kind, std::nullopt);
    return static_cast<long>(power) * power * base + (power - 1);
}

long geometric_intersection_combinatorial(const CyclicWord& u_in, const CyclicWord& v_in,
                                          std::optional<SurfaceKind> kind_in) {
    SurfaceKind kind;
    if (kind_in)
        kind = *kind_in;
    else {
        const SurfaceKind ku = deduce_surface(u_in);
        const SurfaceKind kv = deduce_surface(v_in);
        kind = (ku == SurfaceKind::PuncturedTorus || kv == SurfaceKind::PuncturedTorus)
                   ? SurfaceKind::PuncturedTorus
                   : SurfaceKind::PairOfPants;
    }
    CyclicWord u = normalize_for(u_in, kind);
    CyclicWord v = normalize_for(v_in, kind);
    if (u == v || u == v.inverse())
        throw ConjugateInputsError("inputs are conjugate; use self_intersection");
    return combinatorial_count(u, kind, v);
}

}  // namespace geolift
