#pragma once

#include <optional>
#include <vector>

#include "geolift/fuchsian.hpp"
#include "geolift/words.hpp"

namespace geolift {

// Which splitting of the surface carries the word. Words over {a, t} (or
// mixed with b) live on the once-punctured torus; words over {a, b} alone are
// carried by the pair-of-pants subsurface, where counting is intrinsic.
enum class SurfaceKind { PuncturedTorus, PairOfPants };

SurfaceKind deduce_surface(const CyclicWord& w);

// Substitute b -> t a t^-1 so a word lives on the {a, t} alphabet.
Word substitute_b(const Word& w);

// A hyperbolic structure: matrices for the two free generators of the
// relevant subsurface group. Defaults to the library's fixed representation;
// conjugated copies exercise representation independence.
struct Rep {
    SurfaceKind kind = SurfaceKind::PuncturedTorus;
    ExactMatrix gen_first;   // a
    ExactMatrix gen_second;  // t (torus) or b (pants)

    static Rep punctured_torus();
    static Rep pair_of_pants();
    static Rep for_word(const CyclicWord& w);
    Rep conjugated(const ExactMatrix& g) const;

    ExactMatrix eval(const Word& w) const;
};

struct IntersectionResult {
    long count = 0;
    bool stable = false;
    int cutoff_used = 0;
    long raw_crossing_reps = 0;  // lifts seen before class identification
};

// One lift of the base geodesic that crosses it, for inspection.
struct LiftedAxis {
    Word conjugator;
    AxisData axis;
};
struct LiftedAxisSet {
    CyclicWord base;
    std::vector<LiftedAxis> crossing_lifts;
};

// Self-intersection number via axis enumeration: breadth-first growth of
// conjugator words, exact crossing predicate (commutator trace), lifts
// identified up to the <w> actions and the pair flip. Reports stable only
// when the last two cutoff levels produced no new class. cutoff < 0 picks
// the cutoff adaptively; otherwise the exact cutoff is used and instability
// throws UnstableError.
IntersectionResult self_intersection(const CyclicWord& w, const Rep& rep, int cutoff = -1);

// Same quantity by the independent combinatorial route: linked cyclic
// position pairs (i, j) with a bounded relative winding, linking decided in
// the boundary circular order of the planar tree.
long self_intersection_combinatorial(const CyclicWord& w,
                                     std::optional<SurfaceKind> kind = std::nullopt);

// Geometric intersection number of two non-conjugate classes.
IntersectionResult geometric_intersection(const CyclicWord& u, const CyclicWord& v, const Rep& rep,
                                          int cutoff = -1);
long geometric_intersection_combinatorial(const CyclicWord& u, const CyclicWord& v,
                                          std::optional<SurfaceKind> kind = std::nullopt);

// Crossing lifts of w within the cutoff, with double-precision axis data.
LiftedAxisSet lifted_axis_set(const CyclicWord& w, const Rep& rep, int cutoff);

// n^2 i(eta,eta) + n (i(gamma0,eta) - 1), exactly as displayed.
long theorem2_selfint_prediction(long n, long i_eta_eta, long i_gamma0_eta);

}  // namespace geolift
