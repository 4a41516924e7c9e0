#include "geolift/families.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "geolift/arcs_bounds.hpp"
#include "geolift/error.hpp"
#include "geolift/fuchsian.hpp"

namespace geolift {

namespace {
constexpr int GEN_X = 0;
constexpr int GEN_Y = 1;
const int GEN_T = HnnRelation::standard().t;
// sigma12 generator ids
constexpr int GEN_A1 = 0;
constexpr int GEN_T1 = 1;
constexpr int GEN_A2 = 2;
constexpr int GEN_B2 = 3;
}  // namespace

CyclicWord theorem2_family(const CyclicWord& gamma0, const CyclicWord& eta, long n) {
    if (n < 0) throw Error("theorem2_family requires n >= 0");
    Word prod = eta.to_word().pow(static_cast<int>(n)) * gamma0.to_word();
    CyclicWord out;
    try {
        out = cyclic_reduce(prod);
    } catch (const EmptyWordError&) {
        throw DegenerateError("eta^n gamma0 reduces to the identity");
    }
    if (n >= 1) {
        int power = 1;
        primitive_root(out, &power);
        if (power > 1)
            throw DegenerateError("eta^n gamma0 collapsed to a proper power");
    }
    return out;
}

XYWord mod1_family(const Word& alpha, long k) {
    if (k < 0) throw Error("mod1_family requires k >= 0");
    XYWord check(alpha);  // positivity and both-symbols validation
    if (alpha.back().gen != GEN_Y) throw BadSuffixError("alpha must end with y");
    std::vector<Letter> ls{Letter(GEN_X, 1), Letter(GEN_X, 1), Letter(GEN_Y, 1)};
    for (long i = 0; i < k; ++i)
        ls.insert(ls.end(), alpha.letters().begin(), alpha.letters().end());
    return XYWord(Word(std::move(ls)));
}

std::vector<long> mod_family_exponents(long k) {
    if (k < 1) throw Error("mod_family requires k >= 1");
    std::vector<long> e{6};
    for (long j = 2; j <= k; ++j) e.push_back(6 * j + 1);
    return e;
}

XYWord mod_family_from_exponents(const std::vector<long>& exponents) {
    std::vector<Letter> ls;
    for (size_t j = 0; j < exponents.size(); ++j) {
        for (long i = 0; i < exponents[j]; ++i) ls.emplace_back(GEN_X, 1);
        if (j + 1 < exponents.size()) ls.emplace_back(GEN_Y, 1);
    }
    // suffix x y^2 x^2 y; its leading x merges with the final exponent block
    ls.emplace_back(GEN_X, 1);
    ls.emplace_back(GEN_Y, 1);
    ls.emplace_back(GEN_Y, 1);
    ls.emplace_back(GEN_X, 1);
    ls.emplace_back(GEN_X, 1);
    ls.emplace_back(GEN_Y, 1);
    return XYWord(Word(std::move(ls)));
}

XYWord mod_family(long k) {
    return mod_family_from_exponents(mod_family_exponents(k));
}

Word pib_family(int n) {
    if (n < 4) throw Error("pib_family requires n >= 4");
    std::vector<Letter> ls;
    for (const Word& g : enumerate_gi_words(n)) {
        ls.insert(ls.end(), g.letters().begin(), g.letters().end());
        ls.emplace_back(GEN_T, 1);
    }
    Word w(std::move(ls));
    // g_i ends with a^-+1 and g_{i+1} starts with b^-+1, so no reduction occurs
    return w;
}

ReducedSequence lin_family(long n) {
    if (n < 2) throw Error("lin_family requires n >= 2");
    const long m = static_cast<long>(std::ceil(std::log(static_cast<double>(n))));
    std::vector<AmalgamTerm> terms;
    // first term: t1^n a1 t1 a1 t1^-1
    std::vector<Letter> first;
    for (long i = 0; i < n; ++i) first.emplace_back(GEN_T1, 1);
    first.emplace_back(GEN_A1, 1);
    first.emplace_back(GEN_T1, 1);
    first.emplace_back(GEN_A1, 1);
    first.emplace_back(GEN_T1, -1);
    terms.push_back(AmalgamTerm{Word(std::move(first)), 1});
    terms.push_back(AmalgamTerm{Word({Letter(GEN_B2, 1)}), 2});
    for (long i = 1; i < m; ++i) {
        terms.push_back(AmalgamTerm{Word({Letter(GEN_A1, 1)}), 1});
        terms.push_back(AmalgamTerm{Word({Letter(GEN_B2, 1)}), 2});
    }
    ReducedSequence seq = ReducedSequence::amalgam(std::move(terms));
    if (!seq.is_reduced_sequence()) throw Error("lin_family produced an invalid sequence");
    return seq;
}

LiftCodeCensus lift_code_census(long n, LiftCodeBase base) {
    if (n < 2) throw Error("lift_code_census requires n >= 2");
    const long subarcs = n + 1;
    int width = 0;
    if (base == LiftCodeBase::NaturalLog) {
        width = static_cast<int>(std::ceil(std::log(static_cast<double>(n))));
    } else {
        while ((1L << width) < subarcs) ++width;
    }
    const long capacity = width >= 63 ? std::numeric_limits<long>::max() : (1L << width);
    if (capacity < subarcs)
        throw CapacityExceededError(capacity, subarcs,
                                    "code space 2^" + std::to_string(width) + " = " +
                                        std::to_string(capacity) + " cannot hold " +
                                        std::to_string(subarcs) + " sub-arcs");
    LiftCodeCensus out;
    out.bit_width = width;
    for (long j = 0; j < subarcs; ++j) {
        LiftCode code;
        code.subarc_index = j;
        for (int k = 0; k < width; ++k) code.bits.push_back(static_cast<int>((j >> k) & 1));
        out.codes.push_back(std::move(code));
    }
    std::set<std::vector<int>> distinct;
    for (const auto& c : out.codes) distinct.insert(c.bits);
    out.distinct = static_cast<long>(distinct.size());
    out.bound_census = 0.5 * v3() * static_cast<double>(out.distinct);
    out.bound_paper = 0.5 * v3() * static_cast<double>(n);
    return out;
}

ReducedSequence star_compose(const Word& w1, const Word& w2) {
    const Word r1 = reduce(w1), r2 = reduce(w2);
    if (r1.empty() || r2.empty()) throw TrivialFactorError("star factors must be nontrivial");
    ReducedSequence seq = ReducedSequence::amalgam(
        {AmalgamTerm{r1, 1}, AmalgamTerm{r2, 2}});
    if (!seq.is_reduced_sequence())
        throw TrivialFactorError("factors do not form a reduced two-term sequence");
    return seq;
}

}  // namespace geolift
