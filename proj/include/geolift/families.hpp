#pragma once

#include <vector>

#include "geolift/modular.hpp"
#include "geolift/words.hpp"

namespace geolift {

// eta^n * gamma0, cyclically reduced. Throws DegenerateError when the product
// collapses to the identity or to a proper power.
CyclicWord theorem2_family(const CyclicWord& gamma0, const CyclicWord& eta, long n);

// x^2 y alpha^k; alpha must be positive, contain both symbols, and end with y
// (BadSuffixError otherwise). alpha is a linear word: its last letter counts.
XYWord mod1_family(const Word& alpha, long k);

// The modular family: x^6 y x^13 y x^19 y ... x^{6k+1} (x y^2 x^2 y), with
// first exponent 6 and arithmetic progression 6j+1 for j = 2..k; the last
// exponent block merges with the leading x of the suffix. k = 1 degenerates
// to x^7 y^2 x^2 y.
XYWord mod_family(long k);
// Exponent list used by mod_family, exposed so callers can override patterns.
std::vector<long> mod_family_exponents(long k);
XYWord mod_family_from_exponents(const std::vector<long>& exponents);

// Product g_1 t g_2 t ... t over enumerate_gi_words(n) in canonical order.
Word pib_family(int n);

// (t1^n a1 t1 a1 t1^-1, b2, a1, b2, ..., a1, b2), 2*ceil(ln n) terms.
ReducedSequence lin_family(long n);

// Binary lift codes for the n+1 sub-arcs of the lin family.
struct LiftCode {
    std::vector<int> bits;
    long subarc_index = 0;
    int pairing(int k) const { return bits.at(static_cast<size_t>(k)); }
};

enum class LiftCodeBase { NaturalLog, Log2 };

struct LiftCodeCensus {
    std::vector<LiftCode> codes;
    long distinct = 0;
    int bit_width = 0;
    double bound_census = 0;  // (v3/2) * distinct
    double bound_paper = 0;   // (v3/2) * n
};

// Assign each of the n+1 sub-arcs a code in {0,1}^ceil(ln n) (paper reading)
// or {0,1}^ceil(log2(n+1)) (working configuration). Throws
// CapacityExceededError when 2^width < n+1.
LiftCodeCensus lift_code_census(long n, LiftCodeBase base = LiftCodeBase::NaturalLog);

// Two-term amalgam sequence (w1, w2); the word-level shadow of the star
// composition of filling geodesics in the two pieces.
ReducedSequence star_compose(const Word& w1, const Word& w2);

}  // namespace geolift
