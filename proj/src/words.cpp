#include "geolift/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace geolift {

// ---------------------------------------------------------------------------
// Alphabet
// ---------------------------------------------------------------------------

std::optional<int> Alphabet::id(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<size_t>(i)] == name) return i;
    return std::nullopt;
}

const Alphabet& Alphabet::abt() {
    static const Alphabet a({"a", "b", "t"});
    return a;
}
const Alphabet& Alphabet::xy() {
    static const Alphabet a({"x", "y"});
    return a;
}
const Alphabet& Alphabet::sigma12() {
    static const Alphabet a({"a1", "t1", "a2", "b2"});
    return a;
}

// ---------------------------------------------------------------------------
// Word
// ---------------------------------------------------------------------------

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return Word(std::move(out));
}

Word reduce(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters()) {
        if (!out.empty() && out.back().cancels(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return reduce(Word(std::move(cat)));
}

Word Word::pow(int k) const {
    Word base = k >= 0 ? *this : inverse();
    int n = k >= 0 ? k : -k;
    Word acc;
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

bool Word::is_reduced() const {
    for (size_t i = 1; i < letters_.size(); ++i)
        if (letters_[i - 1].cancels(letters_[i])) return false;
    return true;
}

bool Word::is_power_of(int gen) const {
    for (const Letter& l : letters_)
        if (l.gen != gen) return false;
    return true;
}

bool operator<(const Word& l, const Word& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    const auto& a = l.letters();
    const auto& b = r.letters();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].rank() != b[i].rank()) return a[i].rank() < b[i].rank();
    }
    return false;
}

// ---------------------------------------------------------------------------
// CyclicWord
// ---------------------------------------------------------------------------

std::vector<Letter> least_rotation(const std::vector<Letter>& letters) {
    const size_t n = letters.size();
    if (n == 0) return letters;
    size_t best = 0;
    for (size_t r = 1; r < n; ++r) {
        for (size_t i = 0; i < n; ++i) {
            int lhs = letters[(r + i) % n].rank();
            int rhs = letters[(best + i) % n].rank();
            if (lhs != rhs) {
                if (lhs < rhs) best = r;
                break;
            }
        }
    }
    std::vector<Letter> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(letters[(best + i) % n]);
    return out;
}

CyclicWord CyclicWord::from_cyclically_reduced(std::vector<Letter> letters) {
    CyclicWord w;
    w.letters_ = least_rotation(letters);
    return w;
}

CyclicWord cyclic_reduce(const Word& w) {
    Word r = reduce(w);
    std::vector<Letter> ls = r.letters();
    size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
        ++lo;
        --hi;
    }
    std::vector<Letter> core(ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi));
    if (core.empty()) throw EmptyWordError();
    return CyclicWord::from_cyclically_reduced(std::move(core));
}

CyclicWord CyclicWord::inverse() const {
    return cyclic_reduce(to_word().inverse());
}

Word CyclicWord::rotation(size_t r) const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (size_t i = 0; i < letters_.size(); ++i) out.push_back(letters_[(r + i) % letters_.size()]);
    return Word(std::move(out));
}

bool operator<(const CyclicWord& l, const CyclicWord& r) {
    return Word(l.letters()) < Word(r.letters());
}

CyclicWord primitive_root(const CyclicWord& w, int* power_out) {
    const auto& ls = w.letters();
    const size_t n = ls.size();
    for (size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (size_t i = p; i < n && ok; ++i) ok = ls[i] == ls[i % p];
        if (ok) {
            if (power_out) *power_out = static_cast<int>(n / p);
            std::vector<Letter> root(ls.begin(), ls.begin() + static_cast<long>(p));
            return CyclicWord::from_cyclically_reduced(std::move(root));
        }
    }
    if (power_out) *power_out = 1;
    return w;
}

// ---------------------------------------------------------------------------
// FactorSplit / relations
// ---------------------------------------------------------------------------

int FactorSplit::factor_of(int gen) const {
    for (int g : factor1_gens)
        if (g == gen) return 1;
    for (int g : factor2_gens)
        if (g == gen) return 2;
    return 0;
}

const FactorSplit& FactorSplit::sigma12() {
    static const FactorSplit s{{0, 1}, {2, 3}};  // {a1,t1} | {a2,b2}
    return s;
}

const HnnRelation& HnnRelation::standard() {
    static const HnnRelation r{};
    return r;
}

// ---------------------------------------------------------------------------
// ReducedSequence
// ---------------------------------------------------------------------------

ReducedSequence ReducedSequence::hnn(std::vector<HnnTerm> terms, HnnRelation rel) {
    ReducedSequence s;
    s.flavor_ = SeqFlavor::hnn;
    s.hnn_ = std::move(terms);
    s.rel_ = rel;
    return s;
}

ReducedSequence ReducedSequence::amalgam(std::vector<AmalgamTerm> terms, FactorSplit split) {
    ReducedSequence s;
    s.flavor_ = SeqFlavor::amalgam;
    s.amalgam_ = std::move(terms);
    s.split_ = std::move(split);
    return s;
}

Word ReducedSequence::product() const {
    Word p;
    if (flavor_ == SeqFlavor::hnn) {
        for (const auto& term : hnn_) {
            p = p * term.g;
            p = p * Word({Letter(rel_.t, term.eps)});
        }
    } else {
        for (const auto& term : amalgam_) p = p * term.g;
    }
    return p;
}

bool ReducedSequence::condition1_factors() const {
    if (flavor_ == SeqFlavor::hnn) {
        for (const auto& term : hnn_) {
            if (term.eps != 1 && term.eps != -1) return false;
            for (const Letter& l : term.g.letters())
                if (l.gen != rel_.a && l.gen != rel_.b) return false;
        }
        return true;
    }
    for (const auto& term : amalgam_) {
        if (term.factor != 1 && term.factor != 2) return false;
        for (const Letter& l : term.g.letters())
            if (split_.factor_of(l.gen) != term.factor) return false;
    }
    return true;
}

bool ReducedSequence::condition2_no_pinch() const {
    const size_t n = term_count();
    if (n == 0) return false;
    if (flavor_ == SeqFlavor::amalgam) {
        if (n == 1) return true;
        for (size_t i = 0; i + 1 < n; ++i)
            if (amalgam_[i].factor == amalgam_[i + 1].factor) return false;
        return true;
    }
    // hnn: no subword (t^e, g, t^-e) with g in <a> (e=+1) or <b> (e=-1),
    // checked cyclically per condition (4); the linear part here excludes the
    // wrap-around pair which condition4_cyclic covers.
    for (size_t i = 0; i + 1 < n; ++i) {
        const auto& cur = hnn_[i];
        const auto& nxt = hnn_[i + 1];
        if (nxt.eps == -cur.eps) {
            int sub = cur.eps > 0 ? rel_.a : rel_.b;
            if (nxt.g.is_power_of(sub)) return false;
        }
    }
    return true;
}

bool ReducedSequence::condition3_nonempty() const {
    const size_t n = term_count();
    if (n == 0) return false;  // the degenerate n=0 case is rejected outright
    if (n == 1) {
        if (flavor_ == SeqFlavor::amalgam) return !amalgam_[0].g.empty();
        return true;  // one stable letter is never trivial
    }
    return true;
}

bool ReducedSequence::condition4_cyclic() const {
    const size_t n = term_count();
    if (n == 0) return false;
    if (flavor_ == SeqFlavor::amalgam) {
        if (n == 1) return true;
        if (n % 2 != 0) return false;  // odd count cannot alternate cyclically
        return amalgam_[n - 1].factor != amalgam_[0].factor;
    }
    const auto& last = hnn_[n - 1];
    const auto& first = hnn_[0];
    if (n >= 1 && first.eps == -last.eps) {
        int sub = last.eps > 0 ? rel_.a : rel_.b;
        if (first.g.is_power_of(sub) && n > 1) return false;
        if (n == 1) return true;  // single term: t^e g t^-e needs two t's
    }
    return true;
}

bool ReducedSequence::is_reduced_sequence() const {
    return condition1_factors() && condition2_no_pinch() && condition3_nonempty() &&
           condition4_cyclic();
}

namespace {

// Encoding used to pick a canonical rotation of a sequence.
template <typename Term>
std::vector<int> encode_term(const Term& term);

template <>
std::vector<int> encode_term(const HnnTerm& term) {
    std::vector<int> out{term.eps < 0 ? 1 : 0, static_cast<int>(term.g.size())};
    for (const Letter& l : term.g.letters()) out.push_back(l.rank());
    return out;
}

template <>
std::vector<int> encode_term(const AmalgamTerm& term) {
    std::vector<int> out{term.factor, static_cast<int>(term.g.size())};
    for (const Letter& l : term.g.letters()) out.push_back(l.rank());
    return out;
}

template <typename Term>
std::vector<Term> canonical_rotation(const std::vector<Term>& terms) {
    const size_t n = terms.size();
    if (n <= 1) return terms;
    std::vector<std::vector<int>> enc;
    enc.reserve(n);
    for (const auto& t : terms) enc.push_back(encode_term(t));
    size_t best = 0;
    for (size_t r = 1; r < n; ++r) {
        for (size_t i = 0; i < n; ++i) {
            const auto& lhs = enc[(r + i) % n];
            const auto& rhs = enc[(best + i) % n];
            if (lhs != rhs) {
                if (lhs < rhs) best = r;
                break;
            }
        }
    }
    std::vector<Term> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(terms[(best + i) % n]);
    return out;
}

}  // namespace

ReducedSequence ReducedSequence::canonical() const {
    if (flavor_ == SeqFlavor::hnn) return hnn(canonical_rotation(hnn_), rel_);
    return amalgam(canonical_rotation(amalgam_), split_);
}

bool operator==(const ReducedSequence& l, const ReducedSequence& r) {
    if (l.flavor_ != r.flavor_) return false;
    if (l.flavor_ == SeqFlavor::hnn) return l.hnn_ == r.hnn_;
    return l.amalgam_ == r.amalgam_;
}

// ---------------------------------------------------------------------------
// hnn_normalize
// ---------------------------------------------------------------------------

ReducedSequence hnn_normalize(const CyclicWord& w, HnnRelation rel) {
    const auto& ls = w.letters();
    size_t first_t = ls.size();
    for (size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].gen == rel.t) {
            first_t = i;
            break;
        }
    }
    if (first_t == ls.size())
        throw NotInHnnFormError("word has no stable letter");
    for (const Letter& l : ls)
        if (l.gen != rel.a && l.gen != rel.b && l.gen != rel.t)
            throw NotInHnnFormError("word uses generators outside {a, b, t}");

    // Start right after a stable letter so slots line up with term boundaries.
    std::vector<HnnTerm> terms;
    {
        std::vector<Letter> cur;
        const size_t n = ls.size();
        for (size_t k = 1; k <= n; ++k) {
            const Letter& l = ls[(first_t + k) % n];
            if (l.gen == rel.t) {
                terms.push_back(HnnTerm{Word(std::move(cur)), l.sign});
                cur.clear();
            } else {
                cur.push_back(l);
            }
        }
    }

    // Cyclic Britton pinch elimination: t a^k t^-1 -> b^k, t^-1 b^k t -> a^k.
    // Each pinch removes two stable letters, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        const size_t n = terms.size();
        if (n < 2) break;
        for (size_t i = 0; i < n; ++i) {
            const size_t j = (i + 1) % n;
            if (terms[j].eps != -terms[i].eps) continue;
            const int sub = terms[i].eps > 0 ? rel.a : rel.b;
            if (!terms[j].g.is_power_of(sub)) continue;
            if (n == 2)
                throw NotInHnnFormError(
                    "element is conjugate into the base group (no stable letter survives)");
            const int img = terms[i].eps > 0 ? rel.b : rel.a;
            std::vector<Letter> mapped;
            mapped.reserve(terms[j].g.size());
            for (const Letter& l : terms[j].g.letters()) mapped.emplace_back(img, l.sign);
            const size_t k2 = (j + 1) % n;
            Word merged = terms[i].g * Word(std::move(mapped)) * terms[k2].g;
            HnnTerm replacement{merged, terms[k2].eps};
            std::vector<HnnTerm> next;
            next.reserve(n - 2);
            for (size_t idx = 0; idx < n; ++idx) {
                if (idx == i)
                    next.push_back(replacement);
                else if (idx == j || idx == k2)
                    continue;
                else
                    next.push_back(terms[idx]);
            }
            terms = std::move(next);
            changed = true;
            break;
        }
    }

    ReducedSequence seq = ReducedSequence::hnn(std::move(terms), rel).canonical();
    if (!seq.is_reduced_sequence())
        throw NotInHnnFormError("normalization did not reach a reduced sequence");
    return seq;
}

// ---------------------------------------------------------------------------
// split_to_arc_form
//
// Slide moves across a stable letter: t a^k = b^k t (and inverses). For an
// all-positive sequence, decompose each slot as a^A . m . b^B with maximal
// boundary runs; slides redistribute the boundary exponent c_i = B_{i-1} + A_i
// freely and never touch the middles. Arc shape (every slot starting with
// b^+-1 and ending with a^+-1) is reachable iff every c_i vanishes and every
// middle is nonempty.
// ---------------------------------------------------------------------------

namespace {

struct SlotDecomp {
    long lead_a = 0;   // signed exponent of the maximal leading a-run
    Word middle;       // starts with b^+-1 and ends with a^+-1 when nonempty
    long trail_b = 0;  // signed exponent of the maximal trailing b-run
};

SlotDecomp decompose_slot(const Word& g, const HnnRelation& rel) {
    const auto& ls = g.letters();
    SlotDecomp d;
    size_t i = 0;
    while (i < ls.size() && ls[i].gen == rel.a) {
        d.lead_a += ls[i].sign;
        ++i;
    }
    size_t j = ls.size();
    while (j > i && ls[j - 1].gen == rel.b) {
        d.trail_b += ls[j - 1].sign;
        --j;
    }
    d.middle = Word(std::vector<Letter>(ls.begin() + static_cast<long>(i),
                                        ls.begin() + static_cast<long>(j)));
    return d;
}

Word run(int gen, long exponent) {
    std::vector<Letter> ls;
    for (long i = 0; i < std::labs(exponent); ++i) ls.emplace_back(gen, exponent > 0 ? 1 : -1);
    return Word(std::move(ls));
}

}  // namespace

ReducedSequence split_to_arc_form(const ReducedSequence& s) {
    if (s.flavor() != SeqFlavor::hnn)
        throw NotArcFormError("arc form applies to HNN sequences");
    const auto& rel = s.relation();
    const auto& terms = s.hnn_terms();
    const size_t n = terms.size();
    if (n == 0) throw NotArcFormError("empty sequence");
    for (const auto& t : terms)
        if (t.eps != +1) throw NotArcFormError("sequence has negative stable letters");

    std::vector<SlotDecomp> dec;
    dec.reserve(n);
    for (const auto& t : terms) dec.push_back(decompose_slot(t.g, rel));

    for (size_t i = 0; i < n; ++i) {
        const long c = dec[(i + n - 1) % n].trail_b + dec[i].lead_a;
        if (c != 0)
            throw NotArcFormError("boundary letters cannot be absorbed (residue " +
                                  std::to_string(c) + ")");
        if (dec[i].middle.empty())
            throw NotArcFormError("a slot has no b...a core");
    }

    std::vector<HnnTerm> out;
    out.reserve(n);
    for (const auto& d : dec) out.push_back(HnnTerm{d.middle, +1});
    ReducedSequence arc = ReducedSequence::hnn(std::move(out), rel).canonical();
    if (!arc.is_reduced_sequence())
        throw NotArcFormError("normal form violates the sequence conditions");
    return arc;
}

ArcNormalForm arc_normal_form(const ReducedSequence& s) {
    if (s.flavor() != SeqFlavor::hnn)
        throw NotArcFormError("arc normalization applies to HNN sequences");
    const auto& rel = s.relation();
    const auto& terms = s.hnn_terms();
    const size_t n = terms.size();
    if (n == 0) throw NotArcFormError("empty sequence");
    for (const auto& t : terms)
        if (t.eps != +1) throw NotArcFormError("sequence has negative stable letters");

    std::vector<SlotDecomp> dec;
    dec.reserve(n);
    for (const auto& t : terms) dec.push_back(decompose_slot(t.g, rel));

    ArcNormalForm nf;
    nf.strict = true;
    std::vector<HnnTerm> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const long c = dec[(i + n - 1) % n].trail_b + dec[i].lead_a;
        nf.residues.push_back(c);
        if (c != 0 || dec[i].middle.empty()) nf.strict = false;
        // Residues attach to the following slot as a leading a-run.
        out.push_back(HnnTerm{reduce(run(rel.a, c) * dec[i].middle), +1});
    }
    nf.sequence = ReducedSequence::hnn(std::move(out), rel).canonical();
    return nf;
}

// ---------------------------------------------------------------------------
// fitor_filling
// ---------------------------------------------------------------------------

FillingStatus fitor_filling(const ReducedSequence& s) {
    const auto& rel = s.relation();
    auto mixed = [&](const Word& g) {
        const auto& ls = g.letters();
        for (size_t i = 0; i + 1 < ls.size(); ++i) {
            const bool ab = ls[i].gen == rel.a && ls[i + 1].gen == rel.b;
            const bool ba = ls[i].gen == rel.b && ls[i + 1].gen == rel.a;
            if (ab || ba) return true;
        }
        return false;
    };
    if (s.flavor() == SeqFlavor::hnn) {
        for (const auto& t : s.hnn_terms())
            if (mixed(t.g)) return FillingStatus::Filling;
    } else {
        for (const auto& t : s.amalgam_terms())
            if (mixed(t.g)) return FillingStatus::Filling;
    }
    return FillingStatus::Unknown;
}

// ---------------------------------------------------------------------------
// Parsing / printing
// ---------------------------------------------------------------------------

Word parse_word(const std::string& text, const Alphabet& alph) {
    std::vector<Letter> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;  // identity
        std::string name = tok;
        long expo = 1;
        if (auto caret = name.find('^'); caret != std::string::npos) {
            const std::string e = name.substr(caret + 1);
            name = name.substr(0, caret);
            try {
                size_t pos = 0;
                expo = std::stol(e, &pos);
                if (pos != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in token '" + tok + "'");
            }
        }
        int sign = 1;
        if (!name.empty() && name.back() == '\'') {
            sign = -1;
            name.pop_back();
        }
        auto gid = alph.id(name);
        if (!gid) throw ParseError("unknown generator '" + name + "' in token '" + tok + "'");
        if (expo < 0) {
            sign = -sign;
            expo = -expo;
        }
        for (long i = 0; i < expo; ++i) out.emplace_back(*gid, sign);
    }
    return Word(std::move(out));
}

std::string print_word(const Word& w, const Alphabet& alph) {
    if (w.empty()) return "1";
    std::ostringstream out;
    const auto& ls = w.letters();
    size_t i = 0;
    bool first = true;
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        if (!first) out << ' ';
        first = false;
        out << alph.name(ls[i].gen);
        if (ls[i].sign < 0) out << '\'';
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::string print_cyclic(const CyclicWord& w, const Alphabet& alph) {
    return print_word(w.to_word(), alph);
}

std::string print_sequence(const ReducedSequence& s, const Alphabet& alph) {
    std::ostringstream out;
    out << '(';
    if (s.flavor() == SeqFlavor::hnn) {
        bool first = true;
        for (const auto& t : s.hnn_terms()) {
            if (!first) out << ", ";
            first = false;
            out << print_word(t.g, alph) << ", t" << (t.eps < 0 ? "'" : "");
        }
    } else {
        bool first = true;
        for (const auto& t : s.amalgam_terms()) {
            if (!first) out << ", ";
            first = false;
            out << print_word(t.g, alph) << " [" << t.factor << ']';
        }
    }
    out << ')';
    return out.str();
}

}  // namespace geolift
