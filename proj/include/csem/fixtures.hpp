#pragma once

#include "csem/lexicon.hpp"
#include "csem/space.hpp"

namespace csem::fixtures {

// Hand-stipulated example lexicon over the five-property basis: five nouns,
// three transitive verbs and three adjectives. Backs the regression table
// and the test suites.
const lexicon::Lexicon& core_lexicon();

// Extended eight-property variant for sense disambiguation: the core nouns
// zero-padded, 'ball' and 'disease', the verb 'catch', and the determiner
// 'a' as an identity diagonal.
const lexicon::Lexicon& sense_lexicon();

// The stipulated "fluffy dog" vector kept alongside the estimated one; its
// arg-shrewd component differs from what the adjective diagonal and noun
// table produce, and downstream reference values are pinned to each path
// separately.
space::NounVector stipulated_fluffy_dog();

} // namespace csem::fixtures
