#include "csem/fixtures.hpp"

#include <array>

namespace csem::fixtures {

using lexicon::AdjectiveWeights;
using lexicon::Lexicon;
using lexicon::VerbMatrix;
using space::NounVector;

namespace {

constexpr std::array<const char*, 8> kLabels = {
    "arg-fluffy", "arg-ferocious", "obj-buys",       "arg-shrewd",
    "arg-valuable", "arg-round",   "arg-contagious", "mod-of-heart",
};

space::BasisPtr make_basis(const char* name, std::size_t dim) {
    std::vector<space::PropertyLabel> labels;
    for (std::size_t i = 0; i < dim; ++i)
        labels.push_back(space::PropertyLabel::parse(kLabels[i]));
    return space::PropertyBasis::make(name, std::move(labels));
}

template <std::size_t N>
NounVector noun(const space::BasisPtr& basis, const std::array<double, N>& column) {
    NounVector v(basis);
    for (std::uint32_t i = 0; i < N; ++i) v.set(i, column[i]);
    return v;
}

template <std::size_t N>
VerbMatrix verb(const space::BasisPtr& basis,
                const std::array<std::array<double, N>, N>& rows) {
    VerbMatrix m(basis);
    for (std::uint32_t i = 0; i < N; ++i)
        for (std::uint32_t k = 0; k < N; ++k) m.set(i, k, rows[i][k]);
    return m;
}

template <std::size_t N>
AdjectiveWeights adjective(const space::BasisPtr& basis,
                           const std::array<double, N>& diag) {
    AdjectiveWeights a(basis);
    for (std::uint32_t i = 0; i < N; ++i) a.set(i, diag[i]);
    return a;
}

Lexicon build_core() {
    auto basis = make_basis("example-core", 5);
    Lexicon lex(basis);
    lex.add("bankers", lexicon::noun_type(), noun<5>(basis, {0, 4, 0, 6, 0}));
    lex.add("cats", lexicon::noun_type(), noun<5>(basis, {7, 1, 4, 3, 1}));
    lex.add("dogs", lexicon::noun_type(), noun<5>(basis, {3, 6, 2, 1, 2}));
    lex.add("stock", lexicon::noun_type(), noun<5>(basis, {0, 0, 7, 0, 8}));
    lex.add("kittens", lexicon::noun_type(), noun<5>(basis, {2, 0, 0, 1, 0}));
    lex.add("chase", lexicon::transitive_verb_type(),
            verb<5>(basis, {{{1, 0, 0, 0, 0},
                             {7, 1, 2, 3, 1},
                             {0, 0, 0, 0, 0},
                             {2, 0, 1, 0, 1},
                             {1, 0, 0, 0, 0}}}));
    lex.add("pursue", lexicon::transitive_verb_type(),
            verb<5>(basis, {{{0, 0, 0, 0, 0},
                             {4, 2, 2, 2, 4},
                             {0, 0, 0, 0, 0},
                             {3, 0, 2, 0, 1},
                             {0, 0, 0, 0, 0}}}));
    lex.add("sell", lexicon::transitive_verb_type(),
            verb<5>(basis, {{{0, 0, 0, 0, 0},
                             {0, 0, 3, 0, 4},
                             {0, 0, 0, 0, 0},
                             {0, 0, 5, 0, 8},
                             {0, 0, 1, 0, 1}}}));
    lex.add("fluffy", lexicon::adjective_type(), adjective<5>(basis, {9, 3, 4, 2, 2}));
    lex.add("shrewd", lexicon::adjective_type(), adjective<5>(basis, {0, 3, 1, 9, 1}));
    lex.add("valuable", lexicon::adjective_type(),
            adjective<5>(basis, {3, 0, 8, 1, 8}));
    return lex;
}

Lexicon build_sense() {
    auto basis = make_basis("example-sense", 8);
    Lexicon lex(basis);
    lex.add("bankers", lexicon::noun_type(), noun<8>(basis, {0, 4, 0, 6, 0, 0, 0, 0}));
    lex.add("cats", lexicon::noun_type(), noun<8>(basis, {7, 1, 4, 3, 1, 0, 0, 0}));
    lex.add("dogs", lexicon::noun_type(), noun<8>(basis, {3, 6, 2, 1, 2, 0, 0, 0}));
    lex.add("stock", lexicon::noun_type(), noun<8>(basis, {0, 0, 7, 0, 8, 0, 0, 0}));
    lex.add("kittens", lexicon::noun_type(), noun<8>(basis, {2, 0, 0, 1, 0, 0, 0, 0}));
    lex.add("ball", lexicon::noun_type(), noun<8>(basis, {1, 0, 5, 0, 1, 8, 0, 0}));
    lex.add("disease", lexicon::noun_type(), noun<8>(basis, {0, 0, 0, 0, 0, 0, 7, 6}));
    lex.add("catch", lexicon::transitive_verb_type(),
            verb<8>(basis, {{{3, 2, 3, 3, 3, 8, 6, 2},
                             {3, 2, 3, 0, 1, 4, 7, 4},
                             {2, 4, 7, 1, 1, 6, 2, 2},
                             {3, 1, 2, 0, 0, 3, 6, 2},
                             {1, 1, 1, 0, 0, 2, 0, 1},
                             {0, 0, 0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0, 0, 0}}}));
    // Determiners act as the identity on the noun space.
    lex.add("a", lexicon::adjective_type(), AdjectiveWeights::identity(basis));
    return lex;
}

} // namespace

const Lexicon& core_lexicon() {
    static const Lexicon lex = build_core();
    return lex;
}

const Lexicon& sense_lexicon() {
    static const Lexicon lex = build_sense();
    return lex;
}

space::NounVector stipulated_fluffy_dog() {
    return noun<5>(core_lexicon().basis(), {27, 18, 8, 10, 4});
}

} // namespace csem::fixtures
