#include "geolift/arcs_bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "geolift/error.hpp"
#include "geolift/families.hpp"
#include "geolift/fuchsian.hpp"

namespace geolift {

void ArcClassCensus::add_arc(int pant, const Word& key) {
    pants_.at(static_cast<size_t>(pant))[key] += 1;
}

long ArcClassCensus::distinct_in(int pant) const {
    return static_cast<long>(pants_.at(static_cast<size_t>(pant)).size());
}

long ArcClassCensus::total_distinct() const {
    long s = 0;
    for (const auto& p : pants_) s += static_cast<long>(p.size());
    return s;
}

long ArcClassCensus::total_arcs() const {
    long s = 0;
    for (const auto& p : pants_)
        for (const auto& [key, mult] : p) s += mult;
    return s;
}

PantAssignment PantAssignment::single() {
    return PantAssignment{1, 0, 0};
}
PantAssignment PantAssignment::two_pants() {
    return PantAssignment{2, 0, 1};
}

ArcClassCensus census(const ReducedSequence& s, const PantAssignment& pa) {
    ArcClassCensus c(pa.num_pants);
    if (s.flavor() == SeqFlavor::hnn) {
        const ArcNormalForm nf = arc_normal_form(s);
        for (const auto& term : nf.sequence.hnn_terms()) c.add_arc(0, term.g);
        return c;
    }
    for (const auto& term : s.amalgam_terms()) {
        const int pant = term.factor == 1 ? pa.factor1_pant : pa.factor2_pant;
        c.add_arc(pant, term.g);
    }
    return c;
}

ArcClassCensus census(const ReducedSequence& s) {
    return census(s, s.flavor() == SeqFlavor::hnn ? PantAssignment::single()
                                                  : PantAssignment::two_pants());
}

double theorem1_bound(const ArcClassCensus& c) {
    return 0.5 * v3() * static_cast<double>(c.total_distinct());
}

double cover_adjust(double bound, long degree) {
    if (degree < 1) throw Error("cover degree must be >= 1");
    return bound / static_cast<double>(degree);
}

// ---------------------------------------------------------------------------
// g_i enumeration
// ---------------------------------------------------------------------------

namespace {
const int GEN_A = HnnRelation::standard().a;
const int GEN_B = HnnRelation::standard().b;

void extend(std::vector<Letter>& acc, int n, std::vector<Word>& out) {
    const int len = static_cast<int>(acc.size());
    if (len >= 4 && acc.back().gen == GEN_A) out.emplace_back(acc);
    if (len == n) return;
    static const std::array<Letter, 4> gens{Letter(GEN_A, 1), Letter(GEN_A, -1), Letter(GEN_B, 1),
                                            Letter(GEN_B, -1)};
    for (const Letter& l : gens) {
        if (!acc.empty() && acc.back().cancels(l)) continue;
        acc.push_back(l);
        extend(acc, n, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Word> enumerate_gi_words(int n) {
    std::vector<Word> out;
    if (n < 4) return out;
    for (int s : {1, -1}) {
        std::vector<Letter> acc{Letter(GEN_B, s)};
        extend(acc, n, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long enumerate_gi_count(int n) {
    // sum over L = 4..n of (3^(L-1) + (-1)^L)
    long total = 0;
    long p = 27;  // 3^3
    for (int len = 4; len <= n; ++len) {
        total += p + (len % 2 == 0 ? 1 : -1);
        p *= 3;
    }
    return total;
}

long paper_gi_count_annotation(int n) {
    long p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return 12 * (p - 1);
}

double bps_upper_shape(long n, double C) {
    if (n < 1) throw Error("bps_upper_shape requires n >= 1");
    if (n == 1) return 0.0;
    return C * static_cast<double>(n) * std::log(static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// L_n and the pi-b chain
// ---------------------------------------------------------------------------

double solve_Ln(long n) {
    if (n < 1) throw Error("solve_Ln requires n >= 1");
    const double ln3 = std::log(3.0);
    auto f = [&](double L) {
        const double u = ln3 * L;
        return (std::log(u) - std::log(std::log(u)) - ln3) / ln3 - static_cast<double>(n);
    };
    double lo = M_E / ln3 * (1.0 + 1e-12);
    double hi = 10.0;
    while (f(hi) < 0) {
        hi *= 10.0;
        if (hi > 1e300) throw NoRootError("bracketing failed for solve_Ln");
    }
    // f(lo) < 0 for every n >= 1 since f(lo) ~ (1 - ln3)/ln3 - n < 0.
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) / hi < 1e-12) break;
    }
    return 0.5 * (lo + hi);
}

PibChainReport pib_chain_check(int n) {
    PibChainReport r;
    r.n = n;
    const Word w = pib_family(n);
    r.word_letters = static_cast<long>(w.size());

    const ReducedSequence seq = hnn_normalize(cyclic_reduce(w));
    const ArcClassCensus c = census(seq, PantAssignment::single());
    r.distinct_classes = c.total_distinct();
    r.lower_bound = theorem1_bound(c);

    r.measured_length = translation_length(rho_eval(w));
    r.rhs = v3() * r.measured_length / std::log(r.measured_length);
    r.Ln = solve_Ln(n);

    r.length_vs_word_ok = r.measured_length <= 1.15 * static_cast<double>(r.word_letters);
    r.length_vs_Ln_ok = r.measured_length <= 14.0 * r.Ln;
    r.final_ok = r.lower_bound >= r.rhs;

    r.paper_count = paper_gi_count_annotation(n);
    r.paper_count_ratio =
        static_cast<double>(r.distinct_classes) / static_cast<double>(r.paper_count);
    return r;
}

double pib2_bound(double length) {
    if (length < 0) throw Error("pib2_bound requires a nonnegative length");
    return v3() / (2.0 * std::sqrt(2.0)) * std::exp(std::sqrt(length) / 2.0);
}

double pib2_length_cap(long n) {
    if (n < 1) throw Error("pib2_length_cap requires n >= 1");
    const double l = std::log(std::sqrt(2.0) * static_cast<double>(n));
    return 4.0 * l * l;
}

LinBound lin_bound(long n, double ell_max) {
    if (n < 2) throw Error("lin_bound requires n >= 2");
    if (ell_max <= 0) throw Error("lin_bound requires a positive ell_max");
    const double nn = static_cast<double>(n);
    // the word-length estimate used by the statement
    if (!(4.0 + nn + 2.0 * std::log(nn) <= 5.0 * nn))
        throw Error("word-length estimate 4 + n + 2 ln n <= 5 n failed");
    return LinBound{0.5 * v3() * nn, 5.0 * nn * ell_max};
}

}  // namespace geolift
