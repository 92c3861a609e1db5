#include "csem/compose.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>

#include "csem/error.hpp"

namespace csem::compose {

namespace {

std::string basis_id(const space::PropertyBasis& b) {
    return "'" + b.name() + "' (dim " + std::to_string(b.size()) + ")";
}

void check_same_basis(const char* op, const space::BasisPtr& a,
                      const space::BasisPtr& b) {
    if (a.get() != b.get())
        throw Error(std::string(op) + ": basis mismatch: " + basis_id(*a) + " vs " +
                    basis_id(*b));
}

} // namespace

SentenceVector::SentenceVector(space::BasisPtr basis, int arity)
    : basis_(std::move(basis)), arity_(arity) {
    if (!basis_) throw Error("SentenceVector: null basis");
    if (arity_ < 1 || arity_ > 3)
        throw Error("SentenceVector: arity must be 1, 2 or 3");
}

double SentenceVector::at(std::array<std::uint32_t, 3> key) const {
    auto it = cells_.find(key);
    return it == cells_.end() ? 0.0 : it->second;
}

void SentenceVector::set(std::array<std::uint32_t, 3> key, double w) {
    for (int a = 0; a < 3; ++a) {
        if (a < arity_) {
            if (key[a] >= basis_->size())
                throw Error("SentenceVector: index out of range for basis " +
                            basis_id(*basis_));
        } else if (key[a] != 0) {
            throw Error("SentenceVector: key wider than arity " +
                        std::to_string(arity_));
        }
    }
    if (!std::isfinite(w)) throw Error("SentenceVector: non-finite weight");
    if (w == 0.0)
        cells_.erase(key);
    else
        cells_[key] = w;
}

void SentenceVector::add(std::array<std::uint32_t, 3> key, double delta) {
    set(key, at(key) + delta);
}

SentenceVector SentenceVector::from_noun(const space::NounVector& v) {
    SentenceVector out(v.basis(), 1);
    for (const auto& [i, w] : v.cells()) out.set({i, 0, 0}, w);
    return out;
}

bool SentenceVector::operator==(const SentenceVector& other) const {
    return basis_.get() == other.basis_.get() && arity_ == other.arity_ &&
           cells_ == other.cells_;
}

double inner_product(const SentenceVector& a, const SentenceVector& b) {
    check_same_basis("inner_product", a.basis(), b.basis());
    if (a.arity() != b.arity())
        throw Error("inner_product: arity mismatch " + std::to_string(a.arity()) +
                    " vs " + std::to_string(b.arity()));
    const auto& small = a.cells().size() <= b.cells().size() ? a : b;
    const auto& large = a.cells().size() <= b.cells().size() ? b : a;
    double sum = 0.0;
    for (const auto& [key, w] : small.cells()) sum += w * large.at(key);
    return sum;
}

double squared_norm(const SentenceVector& a) { return inner_product(a, a); }

double cosine(const SentenceVector& a, const SentenceVector& b, bool* degenerate) {
    if (degenerate) *degenerate = false;
    const double na = std::sqrt(squared_norm(a));
    const double nb = std::sqrt(squared_norm(b));
    if (na == 0.0 || nb == 0.0) {
        check_same_basis("cosine", a.basis(), b.basis());
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    return std::clamp(inner_product(a, b) / (na * nb), -1.0, 1.0);
}

SentenceVector embed_to_arity(const SentenceVector& v, int arity) {
    if (arity < v.arity())
        throw Error("embed_to_arity: cannot project arity " +
                    std::to_string(v.arity()) + " down to " + std::to_string(arity));
    if (arity == v.arity()) return v;
    const auto dim = static_cast<std::uint32_t>(v.basis()->size());
    SentenceVector out(v.basis(), arity);
    for (const auto& [key, w] : v.cells()) {
        if (v.arity() + 1 == arity) {
            for (std::uint32_t a = 0; a < dim; ++a) {
                auto k2 = key;
                k2[v.arity()] = a;
                out.set(k2, w);
            }
        } else { // 1 -> 3
            for (std::uint32_t a = 0; a < dim; ++a)
                for (std::uint32_t b = 0; b < dim; ++b)
                    out.set({key[0], a, b}, w);
        }
    }
    return out;
}

SentenceVector compose_transitive(const space::NounVector& subj,
                                  const lexicon::VerbMatrix& verb,
                                  const space::NounVector& obj) {
    check_same_basis("compose_transitive", subj.basis(), verb.basis());
    check_same_basis("compose_transitive", verb.basis(), obj.basis());
    SentenceVector out(verb.basis(), 2);
    for (const auto& [key, c] : verb.cells()) {
        const double w = c * subj.at(key[0]) * obj.at(key[1]);
        if (w != 0.0) out.set({key[0], key[1], 0}, w);
    }
    return out;
}

SentenceVector compose_intransitive(const space::NounVector& subj,
                                    const lexicon::VerbMatrix& verb) {
    check_same_basis("compose_intransitive", subj.basis(), verb.basis());
    SentenceVector out(verb.basis(), 2);
    for (const auto& [key, c] : verb.cells()) {
        const double w = c * subj.at(key[0]);
        if (w != 0.0) out.set({key[0], key[1], 0}, w);
    }
    return out;
}

SentenceVector compose_ditransitive(const space::NounVector& subj,
                                    const lexicon::DitransitiveTensor& verb,
                                    const space::NounVector& obj1,
                                    const space::NounVector& obj2) {
    check_same_basis("compose_ditransitive", subj.basis(), verb.basis());
    check_same_basis("compose_ditransitive", verb.basis(), obj1.basis());
    check_same_basis("compose_ditransitive", verb.basis(), obj2.basis());
    SentenceVector out(verb.basis(), 3);
    for (const auto& [key, c] : verb.cells()) {
        const double w = c * subj.at(key[0]) * obj1.at(key[1]) * obj2.at(key[2]);
        if (w != 0.0) out.set(key, w);
    }
    return out;
}

space::NounVector apply_adjective(const lexicon::AdjectiveWeights& adj,
                                  const space::NounVector& noun) {
    check_same_basis("apply_adjective", adj.basis(), noun.basis());
    space::NounVector out(noun.basis());
    for (const auto& [i, c] : adj.diag()) {
        const double w = c * noun.at(i);
        if (w != 0.0) out.set(i, w);
    }
    return out;
}

space::NounVector apply_preposition(const space::NounVector& noun,
                                    const lexicon::PrepositionMatrix& prep) {
    check_same_basis("apply_preposition", noun.basis(), prep.basis());
    space::NounVector out(noun.basis());
    for (const auto& [key, c] : prep.cells()) {
        const double w = c * noun.at(key[0]);
        if (w != 0.0) out.add(key[1], w);
    }
    return out;
}

SentenceVector apply_adverb(const SentenceVector& sentence,
                            const lexicon::AdverbWeights& adv) {
    check_same_basis("apply_adverb", sentence.basis(), adv.basis());
    if (sentence.arity() != 2)
        throw Error("apply_adverb: expected an arity-2 sentence vector");
    const std::size_t dim = sentence.basis()->size();
    std::map<std::uint32_t, double> flat;
    for (const auto& [key, w] : sentence.cells())
        flat[static_cast<std::uint32_t>(
            space::flatten(space::PairIndex{key[0], key[1]}, dim))] = w;
    SentenceVector out(sentence.basis(), 2);
    for (const auto& [key, c] : adv.cells()) {
        auto it = flat.find(key[0]);
        if (it == flat.end()) continue;
        const double w = c * it->second;
        if (w == 0.0) continue;
        const auto idx = space::unflatten_pair(key[1], dim);
        out.add({idx.i, idx.k, 0}, w);
    }
    return out;
}

Similarity sentence_similarity(const SentenceVector& a, const SentenceVector& b) {
    const int arity = std::max(a.arity(), b.arity());
    const SentenceVector ea = embed_to_arity(a, arity);
    const SentenceVector eb = embed_to_arity(b, arity);
    Similarity sim;
    sim.raw = inner_product(ea, eb);
    sim.cosine = cosine(ea, eb, &sim.degenerate);
    return sim;
}

// --- Token resolution and witness-driven dispatch ---------------------------

std::vector<TypedToken> parse_tokens(std::string_view text,
                                     const lexicon::Lexicon& lex) {
    std::vector<TypedToken> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        const std::string_view word = text.substr(pos, end - pos);
        pos = end;

        const auto colon = word.find(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 == word.size())
            throw Error("token '" + std::string(word) + "': expected \"word:type\"");
        const std::string surface(word.substr(0, colon));
        std::string type_text(word.substr(colon + 1));
        std::replace(type_text.begin(), type_text.end(), '_', ' ');
        auto type = pregroup::parse_type(type_text);

        const lexicon::Entry* entry = lex.find(surface);
        if (!entry) throw Error("unknown word '" + surface + "'");
        if (entry->type != type) {
            const bool intransitive_use =
                type == lexicon::intransitive_verb_type() &&
                std::holds_alternative<lexicon::VerbMatrix>(entry->tensor);
            if (!intransitive_use)
                throw Error("token '" + surface + "': declared type '" +
                            pregroup::format_type(type) +
                            "' does not match lexicon type '" +
                            pregroup::format_type(entry->type) + "'");
        }
        out.push_back({surface, std::move(type), entry->tensor});
    }
    return out;
}

namespace {

enum class TokenClass { noun, adjective, preposition, verb_intr, verb_trans, verb_ditr, adverb };

struct ClassRule {
    const pregroup::PregroupType& type;
    TokenClass cls;
    std::size_t tensor_index;
};

TokenClass classify(const TypedToken& tok) {
    const ClassRule rules[] = {
        {lexicon::noun_type(), TokenClass::noun, 0},
        {lexicon::adjective_type(), TokenClass::adjective, 1},
        {lexicon::preposition_type(), TokenClass::preposition, 3},
        {lexicon::intransitive_verb_type(), TokenClass::verb_intr, 2},
        {lexicon::transitive_verb_type(), TokenClass::verb_trans, 2},
        {lexicon::ditransitive_verb_type(), TokenClass::verb_ditr, 5},
    };
    for (const auto& rule : rules) {
        if (tok.type != rule.type) continue;
        if (tok.tensor.index() != rule.tensor_index)
            throw Error("token '" + tok.surface + "': type '" +
                        pregroup::format_type(tok.type) + "' cannot house a " +
                        std::string(lexicon::tensor_kind_name(tok.tensor)));
        return rule.cls;
    }
    if (tok.type == lexicon::adverb_type()) {
        if (tok.tensor.index() != 4)
            throw Error("token '" + tok.surface + "': type '" +
                        pregroup::format_type(tok.type) + "' cannot house a " +
                        std::string(lexicon::tensor_kind_name(tok.tensor)));
        return TokenClass::adverb;
    }
    throw Error("unsupported construction: token '" + tok.surface + "' has type '" +
                pregroup::format_type(tok.type) + "'");
}

// Evaluates the composition by walking the reduction witness from the
// surviving term: each matched pair connects a function slot (an adjoint
// term) to the output position of its argument.
class WitnessEvaluator {
public:
    WitnessEvaluator(std::span<const TypedToken> tokens,
                     const pregroup::ReductionWitness& witness) : tokens_(tokens) {
        for (std::size_t t = 0; t < tokens.size(); ++t) {
            classes_.push_back(classify(tokens[t]));
            for (std::size_t j = 0; j < tokens[t].type.terms.size(); ++j) {
                owner_.push_back(t);
                slot_.push_back(j);
            }
        }
        partner_.assign(owner_.size(), npos);
        for (const auto& [i, j] : witness.matched_pairs) {
            partner_[i] = j;
            partner_[j] = i;
        }
        arcs_total_ = witness.matched_pairs.size();
    }

    space::NounVector eval_noun(std::size_t term) {
        const TypedToken& tok = tokens_[owner_[term]];
        switch (classes_[owner_[term]]) {
            case TokenClass::noun:
                return std::get<space::NounVector>(tok.tensor);
            case TokenClass::adjective: {
                if (slot_[term] != 0) break;
                const std::size_t arg = follow(term + 1, tok);
                return apply_adjective(std::get<lexicon::AdjectiveWeights>(tok.tensor),
                                       eval_noun(arg));
            }
            case TokenClass::preposition: {
                if (slot_[term] != 1) break;
                const std::size_t arg = follow(term - 1, tok);
                return apply_preposition(eval_noun(arg),
                                         std::get<lexicon::PrepositionMatrix>(tok.tensor));
            }
            default:
                break;
        }
        throw Error("unsupported construction: '" + tok.surface + "' (" +
                    pregroup::format_type(tok.type) +
                    ") is not noun-valued where a noun argument is required");
    }

    SentenceVector eval_sentence(std::size_t term) {
        const TypedToken& tok = tokens_[owner_[term]];
        switch (classes_[owner_[term]]) {
            case TokenClass::verb_intr: {
                if (slot_[term] != 1) break;
                return compose_intransitive(eval_noun(follow(term - 1, tok)),
                                            std::get<lexicon::VerbMatrix>(tok.tensor));
            }
            case TokenClass::verb_trans: {
                if (slot_[term] != 1) break;
                const auto subj = eval_noun(follow(term - 1, tok));
                const auto obj = eval_noun(follow(term + 1, tok));
                return compose_transitive(subj, std::get<lexicon::VerbMatrix>(tok.tensor),
                                          obj);
            }
            case TokenClass::verb_ditr: {
                if (slot_[term] != 1) break;
                const auto subj = eval_noun(follow(term - 1, tok));
                const auto direct = eval_noun(follow(term + 1, tok));
                const auto second = eval_noun(follow(term + 2, tok));
                return compose_ditransitive(
                    subj, std::get<lexicon::DitransitiveTensor>(tok.tensor), direct,
                    second);
            }
            case TokenClass::adverb: {
                if (slot_[term] != 1) break;
                const auto inner = eval_sentence(follow(term - 1, tok));
                return apply_adverb(inner, std::get<lexicon::AdverbWeights>(tok.tensor));
            }
            default:
                break;
        }
        throw Error("unsupported construction: '" + tok.surface + "' (" +
                    pregroup::format_type(tok.type) +
                    ") is not sentence-valued where a clause is required");
    }

    // Every contraction must have been consumed by the traversal; anything
    // left over is a shape the fragment does not cover.
    void check_fully_consumed() const {
        if (arcs_followed_ != arcs_total_)
            throw Error("unsupported construction: the reduction uses " +
                        std::to_string(arcs_total_) + " contractions but only " +
                        std::to_string(arcs_followed_) +
                        " correspond to supported argument slots");
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t follow(std::size_t slot_term, const TypedToken& tok) {
        if (slot_term >= partner_.size() || partner_[slot_term] == npos)
            throw Error("unsupported construction: argument slot of '" + tok.surface +
                        "' is not saturated");
        ++arcs_followed_;
        return partner_[slot_term];
    }

    std::span<const TypedToken> tokens_;
    std::vector<TokenClass> classes_;
    std::vector<std::size_t> owner_, slot_;
    std::vector<std::size_t> partner_;
    std::size_t arcs_total_ = 0;
    std::size_t arcs_followed_ = 0;
};

} // namespace

ComposeResult compose(std::span<const TypedToken> tokens,
                      const pregroup::PregroupType& target) {
    const bool to_sentence = target == pregroup::parse_type("s");
    const bool to_noun = target == pregroup::parse_type("n");
    if (!to_sentence && !to_noun)
        throw Error("compose: unsupported target type '" +
                    pregroup::format_type(target) + "' (expected 's' or 'n')");

    std::vector<pregroup::PregroupType> types;
    types.reserve(tokens.size());
    std::string type_sequence;
    for (const auto& tok : tokens) {
        types.push_back(tok.type);
        if (!type_sequence.empty()) type_sequence += " . ";
        type_sequence += pregroup::format_type(tok.type);
    }
    auto witness = pregroup::reduce_to(types, target);
    if (!witness)
        throw Error("no reduction: type sequence [" + type_sequence +
                    "] does not reduce to '" + pregroup::format_type(target) + "'");

    WitnessEvaluator eval(tokens, *witness);
    ComposeResult result = [&]() -> ComposeResult {
        const std::size_t survivor = witness->surviving.at(0);
        if (to_sentence) return eval.eval_sentence(survivor);
        return eval.eval_noun(survivor);
    }();
    eval.check_fully_consumed();
    return result;
}

} // namespace csem::compose
