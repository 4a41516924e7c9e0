#pragma once

#include <map>
#include <string>
#include <vector>

#include "geolift/words.hpp"

namespace geolift {

// Per-pair-of-pants multiset of arc classes, keyed by the canonical reduced
// word of g_i (endpoints fixed: no free conjugation in the key).
class ArcClassCensus {
  public:
    explicit ArcClassCensus(int num_pants) : pants_(static_cast<size_t>(num_pants)) {}

    int num_pants() const { return static_cast<int>(pants_.size()); }
    void add_arc(int pant, const Word& key);
    long distinct_in(int pant) const;
    long total_distinct() const;
    long total_arcs() const;
    const std::map<Word, long>& pant(int i) const { return pants_.at(static_cast<size_t>(i)); }

  private:
    std::vector<std::map<Word, long>> pants_;
};

// Which pair of pants receives each amalgam factor; HNN sequences land in a
// single pant. Defaults cover the two surfaces in use.
struct PantAssignment {
    int num_pants = 1;
    int factor1_pant = 0;
    int factor2_pant = 1;
    static PantAssignment single();   // once-punctured torus: one pant
    static PantAssignment two_pants();  // Sigma_{1,2}: factor i -> pant i-1
};

// Count arc classes of a reduced sequence. HNN sequences must be all-positive
// (NotArcFormError otherwise); boundary residues that prevent strict arc
// shape are folded into the slot keys via the slide normal form, so strict
// arc-form inputs count their g_i literally.
ArcClassCensus census(const ReducedSequence& s, const PantAssignment& pa);
ArcClassCensus census(const ReducedSequence& s);

// (v3/2) * sum over pants of distinct class counts.
double theorem1_bound(const ArcClassCensus& c);

// Divide a bound by a covering degree.
double cover_adjust(double bound, long degree);

// All reduced words over {a, b} starting with b^+-1, ending with a^+-1, with
// 4 <= length <= n, in (length, shortlex) order. Exhaustive and duplicate
// free; the count per exact length L is 3^(L-1) + (-1)^L.
std::vector<Word> enumerate_gi_words(int n);
long enumerate_gi_count(int n);            // closed form of the honest count
long paper_gi_count_annotation(int n);     // the stated figure 12 (3^n - 1)

// C * n * ln(n); returns 0 at n = 1 and for C = 0 (degenerate constant).
double bps_upper_shape(long n, double C);

// Solve n = (ln(ln3 * L) - ln(ln(ln3 * L)) - ln3)/ln3 for L > e/ln3 by
// monotone bisection to 1e-9 relative accuracy.
double solve_Ln(long n);

struct PibChainReport {
    int n = 0;
    long word_letters = 0;
    long distinct_classes = 0;
    double measured_length = 0;      // via rho
    double lower_bound = 0;          // (v3/2) * distinct
    double rhs = 0;                  // v3 * len / ln(len)
    double Ln = 0;
    bool length_vs_word_ok = false;  // measured <= 1.15 * |word|
    bool length_vs_Ln_ok = false;    // measured <= 14 * Ln
    bool final_ok = false;           // lower_bound >= v3 * len / ln(len)
    long paper_count = 0;            // 12 (3^n - 1), annotation only
    double paper_count_ratio = 0;    // measured / paper
};

// Desk-scale run of the length chain: build the family word, measure its
// geodesic length under rho, count classes, and evaluate the inequality
// links. Failures are report fields, not exceptions.
PibChainReport pib_chain_check(int n);

// (v3 / (2 sqrt 2)) * exp(sqrt(length)/2).
double pib2_bound(double length);
// Companion length cap 4 * ln(sqrt2 * n)^2.
double pib2_length_cap(long n);

struct LinBound {
    double lower = 0;       // (v3/2) * n
    double length_cap = 0;  // 5 * n * ell_max
};
// Requires n >= 2; asserts the word-length estimate 4 + n + 2 ln n <= 5 n.
LinBound lin_bound(long n, double ell_max);

}  // namespace geolift
