#include "geolift/modular.hpp"

#include <array>
#include <deque>

#include "geolift/error.hpp"

namespace geolift {

namespace {
constexpr int GEN_X = 0;
constexpr int GEN_Y = 1;
const int GEN_A = HnnRelation::standard().a;
const int GEN_T = HnnRelation::standard().t;
}  // namespace

XYWord::XYWord(const Word& w) {
    if (w.empty()) throw ParseError("empty word");
    bool seen_x = false, seen_y = false;
    for (const Letter& l : w.letters()) {
        if (l.sign < 0) throw NotPositiveError("inverse letters are not allowed in an xy-code");
        if (l.gen == GEN_X)
            seen_x = true;
        else if (l.gen == GEN_Y)
            seen_y = true;
        else
            throw ParseError("xy-code may only use x and y");
    }
    if (!seen_x || !seen_y)
        throw MissingSymbolError(std::string("xy-code must contain both symbols; missing ") +
                                 (seen_x ? "y" : "x"));
    cyclic_ = CyclicWord::from_cyclically_reduced(w.letters());
}

std::string XYWord::str() const {
    return print_cyclic(cyclic_, Alphabet::xy());
}

XYWord parse_xy(const std::string& text) {
    return XYWord(parse_word(text, Alphabet::xy()));
}

std::vector<long> cf_blocks(const XYWord& w) {
    const auto& ls = w.cyclic().letters();
    // canonical rotation starts with x, so runs alternate x, y, x, y, ...
    std::vector<long> blocks;
    size_t i = 0;
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j].gen == ls[i].gen) ++j;
        blocks.push_back(static_cast<long>(j - i));
        i = j;
    }
    return blocks;
}

long n_gamma(const XYWord& w) {
    const auto& ls = w.cyclic().letters();
    long count = 0;
    for (size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].gen == GEN_X && ls[(i + 1) % ls.size()].gen == GEN_Y) ++count;
    }
    return count;
}

ExactMatrix xy_to_matrix(const XYWord& w) {
    return sl2z_eval_xy(w.cyclic().to_word());
}

long coset_phase(const Word& xy_word) {
    long phase = 0;
    for (const Letter& l : xy_word.letters()) {
        if (l.gen == GEN_X)
            phase += l.sign;
        else if (l.gen == GEN_Y)
            phase -= l.sign;
        else
            throw ParseError("word is not over {x, y}");
    }
    phase %= MODULAR_TORUS_INDEX;
    return phase < 0 ? phase + MODULAR_TORUS_INDEX : phase;
}

// ---------------------------------------------------------------------------
// Schreier rewriting for the index-6 subgroup (transversal {x^i}).
// ---------------------------------------------------------------------------

namespace {

// Smallest {a,t}-word whose rho_mod image is +-target, found by breadth-first
// search. Targets are short, so this stays tiny.
Word find_torus_word(const ExactMatrix& target) {
    struct Node {
        Word w;
        ExactMatrix m;
    };
    const std::array<Letter, 4> gens{Letter(GEN_A, 1), Letter(GEN_A, -1), Letter(GEN_T, 1),
                                     Letter(GEN_T, -1)};
    std::deque<Node> queue;
    queue.push_back(Node{Word(), ExactMatrix::identity()});
    const ExactMatrix neg_target(-target.a(), -target.b(), -target.c(), -target.d());
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        if (!n.w.empty() && (n.m == target || n.m == neg_target)) return n.w;
        if (n.w.size() >= 10) continue;
        for (const Letter& l : gens) {
            if (!n.w.empty() && n.w.back().cancels(l)) continue;
            std::vector<Letter> ls = n.w.letters();
            ls.push_back(l);
            queue.push_back(Node{Word(std::move(ls)), n.m * rho_mod_eval(Word({l}))});
        }
    }
    throw Error("no torus word found for Schreier generator");
}

SchreierTable build_table() {
    SchreierTable table;
    // u = x^6
    {
        Word x6(std::vector<Letter>(6, Letter(GEN_X, 1)));
        table.u = find_torus_word(sl2z_eval_xy(x6));
    }
    for (int i = 0; i < 6; ++i) {
        std::vector<Letter> ls(static_cast<size_t>(i), Letter(GEN_X, 1));
        ls.emplace_back(GEN_Y, 1);
        const int back = (i - 1 + 6) % 6;
        for (int j = 0; j < back; ++j) ls.emplace_back(GEN_X, -1);
        table.v[static_cast<size_t>(i)] = find_torus_word(sl2z_eval_xy(reduce(Word(std::move(ls)))));
    }
    return table;
}

}  // namespace

const SchreierTable& modular_schreier_table() {
    static const SchreierTable table = build_table();
    return table;
}

Word rewrite_word_to_torus(const Word& xy_word) {
    if (coset_phase(xy_word) != 0)
        throw NotInSubgroupError("word acts nontrivially on the six cosets");
    const SchreierTable& table = modular_schreier_table();
    Word out;
    long s = 0;
    for (const Letter& l : xy_word.letters()) {
        if (l.gen == GEN_X) {
            if (l.sign > 0) {
                if (s == 5) out = out * table.u;
                s = (s + 1) % 6;
            } else {
                s = (s + 5) % 6;
                if (s == 5) out = out * table.u.inverse();
            }
        } else {
            if (l.sign > 0) {
                out = out * table.v[static_cast<size_t>(s)];
                s = (s + 5) % 6;
            } else {
                s = (s + 1) % 6;
                out = out * table.v[static_cast<size_t>(s)].inverse();
            }
        }
    }
    return out;
}

Word rewrite_to_torus(const XYWord& w) {
    return rewrite_word_to_torus(w.cyclic().to_word());
}

double mod_lower_bound(long k) {
    if (k < 1) throw Error("mod_lower_bound requires k >= 1");
    return v3() * static_cast<double>(k + 1) / 12.0;
}

}  // namespace geolift
