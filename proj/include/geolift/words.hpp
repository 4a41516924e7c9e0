#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geolift/error.hpp"

namespace geolift {

// One generator occurrence: generator id plus exponent sign.
struct Letter {
    int16_t gen = 0;
    int16_t sign = 1;  // +1 or -1

    Letter() = default;
    Letter(int g, int s) : gen(static_cast<int16_t>(g)), sign(static_cast<int16_t>(s)) {}

    Letter inverse() const { return Letter(gen, -sign); }
    bool cancels(const Letter& o) const { return gen == o.gen && sign == -o.sign; }

    // Rank puts g before g^-1 and orders generators by id: a < a' < b < b' < ...
    int rank() const { return 2 * gen + (sign < 0 ? 1 : 0); }

    friend bool operator==(const Letter& l, const Letter& r) {
        return l.gen == r.gen && l.sign == r.sign;
    }
    friend bool operator<(const Letter& l, const Letter& r) { return l.rank() < r.rank(); }
};

// Named generator set used for parsing and printing.
class Alphabet {
  public:
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int id) const { return names_.at(static_cast<size_t>(id)); }
    std::optional<int> id(const std::string& name) const;

    // {a, b, t} with the stable letter t; used by the HNN machinery.
    static const Alphabet& abt();
    // {x, y} for the modular coding.
    static const Alphabet& xy();
    // {a1, t1, a2, b2} for the two-factor amalgam.
    static const Alphabet& sigma12();

  private:
    std::vector<std::string> names_;
};

// A word in a free group, stored as a letter sequence. Most entry points
// keep words freely reduced; reduce() makes that explicit.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    const Letter& front() const { return letters_.front(); }
    const Letter& back() const { return letters_.back(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const;  // concatenate, then freely reduce
    Word pow(int k) const;

    bool is_reduced() const;
    // True if every letter uses the single generator `gen` (a^k shape). Empty counts.
    bool is_power_of(int gen) const;

    friend bool operator==(const Word& l, const Word& r) { return l.letters_ == r.letters_; }
    friend bool operator!=(const Word& l, const Word& r) { return !(l == r); }
    // Shortlex by letter rank; used for canonical forms.
    friend bool operator<(const Word& l, const Word& r);

  private:
    std::vector<Letter> letters_;
};

// Freely reduce a letter sequence (single linear pass with a stack).
Word reduce(const Word& w);

// A cyclically reduced conjugacy-class representative, stored in canonical
// rotation (lexicographically least under the letter rank order).
class CyclicWord {
  public:
    CyclicWord() = default;

    const std::vector<Letter>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word to_word() const { return Word(letters_); }
    CyclicWord inverse() const;
    // Rotation by r: letters r, r+1, ... (renormalized to canonical form on construction,
    // so this returns the same CyclicWord; provided for building linear representatives).
    Word rotation(size_t r) const;

    friend bool operator==(const CyclicWord& l, const CyclicWord& r) {
        return l.letters_ == r.letters_;
    }
    friend bool operator!=(const CyclicWord& l, const CyclicWord& r) { return !(l == r); }
    friend bool operator<(const CyclicWord& l, const CyclicWord& r);

    // Internal: adopt letters that are already cyclically reduced.
    static CyclicWord from_cyclically_reduced(std::vector<Letter> letters);

  private:
    std::vector<Letter> letters_;
};

// Conjugation-strip to a cyclically reduced canonical form.
// Throws EmptyWordError when w reduces to the identity.
CyclicWord cyclic_reduce(const Word& w);

// Least rotation of a letter sequence under shortlex; helper shared with tests.
std::vector<Letter> least_rotation(const std::vector<Letter>& letters);

// Smallest u with w = u^k cyclically; k = w.size()/u.size().
CyclicWord primitive_root(const CyclicWord& w, int* power_out = nullptr);

// ---------------------------------------------------------------------------
// beta-cyclically reduced sequences
// ---------------------------------------------------------------------------

enum class SeqFlavor { amalgam, hnn };

// HNN: the sequence (g0, t^e0, g1, t^e1, ...) stored as terms {g, eps},
// whose product is g0 t^e0 g1 t^e1 ... (indices cyclic).
struct HnnTerm {
    Word g;
    int eps = +1;
    friend bool operator==(const HnnTerm& l, const HnnTerm& r) {
        return l.eps == r.eps && l.g == r.g;
    }
};

// Amalgam: terms g_i with a factor tag, adjacent tags must differ cyclically.
struct AmalgamTerm {
    Word g;
    int factor = 1;  // 1 or 2
    friend bool operator==(const AmalgamTerm& l, const AmalgamTerm& r) {
        return l.factor == r.factor && l.g == r.g;
    }
};

// Which generators belong to which amalgam factor (by generator id).
struct FactorSplit {
    std::vector<int> factor1_gens;
    std::vector<int> factor2_gens;
    int factor_of(int gen) const;
    static const FactorSplit& sigma12();  // {a1,t1} | {a2,b2}
};

// Generator ids for the HNN presentation <a, b, t | t a t^-1 = b>.
struct HnnRelation {
    int a = 0;
    int b = 1;
    int t = 2;
    static const HnnRelation& standard();
};

class ReducedSequence {
  public:
    static ReducedSequence hnn(std::vector<HnnTerm> terms,
                               HnnRelation rel = HnnRelation::standard());
    static ReducedSequence amalgam(std::vector<AmalgamTerm> terms,
                                   FactorSplit split = FactorSplit::sigma12());

    SeqFlavor flavor() const { return flavor_; }
    const std::vector<HnnTerm>& hnn_terms() const { return hnn_; }
    const std::vector<AmalgamTerm>& amalgam_terms() const { return amalgam_; }
    const HnnRelation& relation() const { return rel_; }
    size_t term_count() const {
        return flavor_ == SeqFlavor::hnn ? hnn_.size() : amalgam_.size();
    }

    // The underlying group element (product of the terms), as a linear word.
    Word product() const;

    // Definition conditions, each checkable on its own.
    bool condition1_factors() const;       // terms lie in the right factor / base
    bool condition2_no_pinch() const;      // adjacency: alternation resp. no Britton pinch
    bool condition3_nonempty() const;      // n = 1 single term not the identity; n >= 1
    bool condition4_cyclic() const;        // every cyclic permutation satisfies (1)-(3)
    bool is_reduced_sequence() const;

    // Canonical rotation (least under an encoding order); makes equality usable.
    ReducedSequence canonical() const;

    friend bool operator==(const ReducedSequence& l, const ReducedSequence& r);

  private:
    SeqFlavor flavor_ = SeqFlavor::hnn;
    std::vector<HnnTerm> hnn_;
    std::vector<AmalgamTerm> amalgam_;
    HnnRelation rel_;
    FactorSplit split_;
};

// Rewrite a cyclic word over {a,b,t} into a beta-cyclically reduced HNN
// sequence via cyclic Britton pinch elimination (t a^k t^-1 -> b^k and
// t^-1 b^k t -> a^k). Throws NotInHnnFormError if no stable letter remains.
ReducedSequence hnn_normalize(const CyclicWord& w,
                              HnnRelation rel = HnnRelation::standard());

// Regroup/rotate an all-positive HNN sequence so every g_i starts with b^+-1
// and ends with a^+-1. Uses the relation slides t a^k = b^k t, under which
// arc shape is reachable iff every boundary exponent vanishes and every slot
// has a nonempty b...a core. Throws NotArcFormError if impossible.
ReducedSequence split_to_arc_form(const ReducedSequence& s);

// Best slide normal form of an all-positive HNN sequence. Always succeeds:
// boundary residues that block strict arc shape are attached to the following
// slot as a leading a-run and reported. strict == true means split_to_arc_form
// would succeed and agree.
struct ArcNormalForm {
    ReducedSequence sequence;
    bool strict = false;
    std::vector<long> residues;  // one boundary exponent per slot
};
ArcNormalForm arc_normal_form(const ReducedSequence& s);

enum class FillingStatus { Filling, Unknown };

// Sufficient filling criterion: some g_i contains a mixed subword a^+-1 b^+-1
// or b^+-1 a^+-1. One-directional, hence never answers "NotFilling".
FillingStatus fitor_filling(const ReducedSequence& s);

// ---------------------------------------------------------------------------
// Text syntax: whitespace-separated tokens, apostrophe for inverse,
// ^k for exponents, e.g. "a b' t^3".
// ---------------------------------------------------------------------------

Word parse_word(const std::string& text, const Alphabet& alph);
std::string print_word(const Word& w, const Alphabet& alph);
std::string print_cyclic(const CyclicWord& w, const Alphabet& alph);
std::string print_sequence(const ReducedSequence& s, const Alphabet& alph);

}  // namespace geolift
