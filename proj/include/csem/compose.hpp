#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csem/lexicon.hpp"
#include "csem/pregroup.hpp"
#include "csem/space.hpp"

namespace csem::compose {

// Sparse sentence meaning over N, N (x) N or N (x) N (x) N. Cell keys are
// fixed-width index tuples; components beyond the arity are zero.
class SentenceVector {
public:
    SentenceVector(space::BasisPtr basis, int arity);

    const space::BasisPtr& basis() const { return basis_; }
    int arity() const { return arity_; }
    double at(std::array<std::uint32_t, 3> key) const;
    void set(std::array<std::uint32_t, 3> key, double w);
    void add(std::array<std::uint32_t, 3> key, double delta);
    const std::map<std::array<std::uint32_t, 3>, double>& cells() const {
        return cells_;
    }
    bool is_zero() const { return cells_.empty(); }

    static SentenceVector from_noun(const space::NounVector& v);

    bool operator==(const SentenceVector& other) const;

private:
    space::BasisPtr basis_;
    int arity_;
    std::map<std::array<std::uint32_t, 3>, double> cells_;
};

double inner_product(const SentenceVector& a, const SentenceVector& b);
double squared_norm(const SentenceVector& a);
double cosine(const SentenceVector& a, const SentenceVector& b,
              bool* degenerate = nullptr);

// Raises arity by replicating cells along the missing object axes (the
// all-ones expansion).
SentenceVector embed_to_arity(const SentenceVector& v, int arity);

// cell(i,k) = C_ik * subj_i * obj_k
SentenceVector compose_transitive(const space::NounVector& subj,
                                  const lexicon::VerbMatrix& verb,
                                  const space::NounVector& obj);

// Transitive composition against the empty object: cell(i,k) = C_ik * subj_i.
SentenceVector compose_intransitive(const space::NounVector& subj,
                                    const lexicon::VerbMatrix& verb);

// cell(i,k,m) = C_ikm * subj_i * obj1_k * obj2_m; obj1 is the direct object
// axis, obj2 the second-object axis.
SentenceVector compose_ditransitive(const space::NounVector& subj,
                                    const lexicon::DitransitiveTensor& verb,
                                    const space::NounVector& obj1,
                                    const space::NounVector& obj2);

// component i = C_i * noun_i
space::NounVector apply_adjective(const lexicon::AdjectiveWeights& adj,
                                  const space::NounVector& noun);

// component w = sum_l C_lw * noun_l
space::NounVector apply_preposition(const space::NounVector& noun,
                                    const lexicon::PrepositionMatrix& prep);

// output_w = sum_l C_lw * v_l over flattened sentence-space indices; a
// purely diagonal weight table masks the sentence cell-wise.
SentenceVector apply_adverb(const SentenceVector& sentence,
                            const lexicon::AdverbWeights& adv);

struct TypedToken {
    std::string surface;
    pregroup::PregroupType type;
    lexicon::WordTensor tensor;
};

// Parses "word:type" tokens ('_' separates simple terms inside the type,
// e.g. "chase:n.r_s_n.l") and resolves each word against the lexicon.
// A token typed n.r s may resolve a stored verb matrix; it then composes
// intransitively with the empty object.
std::vector<TypedToken> parse_tokens(std::string_view text,
                                     const lexicon::Lexicon& lex);

using ComposeResult = std::variant<space::NounVector, SentenceVector>;

// Reduces the token types to the target and evaluates the witness:
// adjectives and prepositions fold into noun phrases, the clause verb
// contracts with its arguments, adverbs post-compose on the sentence.
// Reduction failure and witness shapes outside the supported fragment
// raise errors naming the offending types.
ComposeResult compose(std::span<const TypedToken> tokens,
                      const pregroup::PregroupType& target);

struct Similarity {
    double raw = 0.0;
    double cosine = 0.0;
    bool degenerate = false;
};

// Inner product and cosine after embedding the lower-arity operand into the
// higher arity.
Similarity sentence_similarity(const SentenceVector& a, const SentenceVector& b);

} // namespace csem::compose
