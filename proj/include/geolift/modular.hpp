#pragma once

#include <array>
#include <string>
#include <vector>

#include "geolift/fuchsian.hpp"
#include "geolift/words.hpp"

namespace geolift {

// A positive cyclic word over {x, y} containing both symbols; the coding of
// a hyperbolic conjugacy class on the modular surface. Canonical rotation is
// inherited from CyclicWord (least rotation, which begins at an x-run).
class XYWord {
  public:
    explicit XYWord(const Word& w);  // validates: positive, both symbols, nonempty

    const CyclicWord& cyclic() const { return cyclic_; }
    size_t size() const { return cyclic_.size(); }
    std::string str() const;

    friend bool operator==(const XYWord& l, const XYWord& r) { return l.cyclic_ == r.cyclic_; }

  private:
    CyclicWord cyclic_;
};

XYWord parse_xy(const std::string& text);

// Run-length blocks (a1, a2, ..., a_{2m}): alternating x-run and y-run
// lengths starting at the canonical x-run. Even length, all entries >= 1.
std::vector<long> cf_blocks(const XYWord& w);

// Number of cyclic subwords "xy"; equals cf_blocks(w).size() / 2.
long n_gamma(const XYWord& w);

// Product of x = [[1,1],[0,1]] and y = [[1,0],[1,1]] along the word.
ExactMatrix xy_to_matrix(const XYWord& w);

// Index of the once-punctured modular torus subgroup: kernel of
// x -> 1, y -> -1 into Z/6.
inline constexpr int MODULAR_TORUS_INDEX = 6;
long coset_phase(const Word& xy_word);  // (#x - #y) mod 6 of a word over {x, y}

// Rewrite a word of the index-6 subgroup into the once-punctured modular
// torus generators t = yx, a = y^-1 x^-1, by Schreier rewriting over the
// transversal {x^i}. The output is a word over {a, t} equal to the input
// element; |trace| is preserved exactly. Throws NotInSubgroupError.
Word rewrite_word_to_torus(const Word& xy_word);
Word rewrite_to_torus(const XYWord& w);

// Theorem-level lower bound for the modular family: v3 (k+1) / 12.
double mod_lower_bound(long k);

// The Schreier generator table (x^6 and the six y-crossings), as words over
// {a, t}; exposed for verification in tests.
struct SchreierTable {
    Word u;                    // x^6
    std::array<Word, 6> v;     // v_i = x^i y x^{-((i-1) mod 6)}
};
const SchreierTable& modular_schreier_table();

}  // namespace geolift
