#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <variant>

#include "csem/corpus.hpp"
#include "csem/diag.hpp"
#include "csem/pregroup.hpp"
#include "csem/space.hpp"

namespace csem::lexicon {

// Transitive-verb weights C_ik over subject-property x object-property.
// The three-index form is fully determined by the pair basis of the
// sentence space, so only the surviving two indices are stored.
class VerbMatrix {
public:
    explicit VerbMatrix(space::BasisPtr basis);

    const space::BasisPtr& basis() const { return basis_; }
    double at(std::uint32_t i, std::uint32_t k) const;
    void set(std::uint32_t i, std::uint32_t k, double w);
    void add(std::uint32_t i, std::uint32_t k, double delta);
    const std::map<std::array<std::uint32_t, 2>, double>& cells() const {
        return cells_;
    }

private:
    space::BasisPtr basis_;
    std::map<std::array<std::uint32_t, 2>, double> cells_;
};

// Adjective weights; only the diagonal survives, so a single index is kept.
class AdjectiveWeights {
public:
    explicit AdjectiveWeights(space::BasisPtr basis);

    const space::BasisPtr& basis() const { return basis_; }
    double at(std::uint32_t i) const;
    void set(std::uint32_t i, double w);
    void add(std::uint32_t i, double delta);
    const std::map<std::uint32_t, double>& diag() const { return diag_; }

    static AdjectiveWeights identity(space::BasisPtr basis);

private:
    space::BasisPtr basis_;
    std::map<std::uint32_t, double> diag_;
};

class PrepositionMatrix {
public:
    explicit PrepositionMatrix(space::BasisPtr basis);

    const space::BasisPtr& basis() const { return basis_; }
    double at(std::uint32_t l, std::uint32_t w) const;
    void set(std::uint32_t l, std::uint32_t w, double weight);
    void add(std::uint32_t l, std::uint32_t w, double delta);
    const std::map<std::array<std::uint32_t, 2>, double>& cells() const {
        return cells_;
    }

    static PrepositionMatrix identity(space::BasisPtr basis);

private:
    space::BasisPtr basis_;
    std::map<std::array<std::uint32_t, 2>, double> cells_;
};

// Adverb weights over S x S where S = N (x) N. Cells are keyed by
// flattened pair indices (l, w); estimation writes the diagonal l == w
// (the only cells the counting scheme can set), manual entry may fill
// arbitrary cells.
class AdverbWeights {
public:
    explicit AdverbWeights(space::BasisPtr basis);

    const space::BasisPtr& basis() const { return basis_; }
    double at(std::uint32_t l, std::uint32_t w) const;
    void set(std::uint32_t l, std::uint32_t w, double weight);
    void add(std::uint32_t l, std::uint32_t w, double delta);
    // Diagonal accessors in (subject-property, object-property) form.
    double diag_at(std::uint32_t i, std::uint32_t k) const;
    void add_diag(std::uint32_t i, std::uint32_t k, double delta);
    const std::map<std::array<std::uint32_t, 2>, double>& cells() const {
        return cells_;
    }

private:
    std::uint32_t pair_dim() const;
    space::BasisPtr basis_;
    std::map<std::array<std::uint32_t, 2>, double> cells_;
};

class DitransitiveTensor {
public:
    explicit DitransitiveTensor(space::BasisPtr basis);

    const space::BasisPtr& basis() const { return basis_; }
    double at(std::uint32_t i, std::uint32_t k, std::uint32_t m) const;
    void set(std::uint32_t i, std::uint32_t k, std::uint32_t m, double w);
    void add(std::uint32_t i, std::uint32_t k, std::uint32_t m, double delta);
    const std::map<std::array<std::uint32_t, 3>, double>& cells() const {
        return cells_;
    }

private:
    space::BasisPtr basis_;
    std::map<std::array<std::uint32_t, 3>, double> cells_;
};

using WordTensor = std::variant<space::NounVector, AdjectiveWeights, VerbMatrix,
                                PrepositionMatrix, AdverbWeights, DitransitiveTensor>;

std::string_view tensor_kind_name(const WordTensor& t);

// Canonical pregroup types for each tensor kind.
const pregroup::PregroupType& noun_type();
const pregroup::PregroupType& adjective_type();
const pregroup::PregroupType& transitive_verb_type();
const pregroup::PregroupType& intransitive_verb_type(); // usage type, not stored
const pregroup::PregroupType& preposition_type();
const pregroup::PregroupType& adverb_type();
const pregroup::PregroupType& ditransitive_verb_type();

struct Entry {
    pregroup::PregroupType type;
    WordTensor tensor;
};

// Typed meaning store: lexical item -> (pregroup type, tensor). Entry shape
// is checked against the type on insertion.
class Lexicon {
public:
    explicit Lexicon(space::BasisPtr basis);

    const space::BasisPtr& basis() const { return basis_; }
    void add(const std::string& item, pregroup::PregroupType type, WordTensor tensor);
    void replace(const std::string& item, pregroup::PregroupType type,
                 WordTensor tensor);
    const Entry* find(const std::string& item) const;
    const std::map<std::string, Entry>& entries() const { return entries_; }

    // Value equality: basis labels and names, entry types, and exact cells.
    bool operator==(const Lexicon& other) const;

private:
    space::BasisPtr basis_;
    std::map<std::string, Entry> entries_;
};

// --- Estimation -----------------------------------------------------------
//
// All estimators implement the same counting scheme: per instance of the
// target item, accumulate products of component reads of the participating
// arguments' noun vectors. A missing argument contributes factor 1 on its
// axis. Instances of other items are ignored. Unknown argument nouns skip
// the instance with a diagnostic (lenient) or throw (strict).

VerbMatrix estimate_verb_matrix(const std::string& verb,
                                std::span<const corpus::VerbInstance> instances,
                                const corpus::NounMap& nouns, space::BasisPtr basis,
                                Strictness mode = Strictness::lenient,
                                Diagnostics* diags = nullptr);

AdjectiveWeights estimate_adjective(const std::string& adjective,
                                    std::span<const corpus::AdjInstance> instances,
                                    const corpus::NounMap& nouns,
                                    space::BasisPtr basis,
                                    Strictness mode = Strictness::lenient,
                                    Diagnostics* diags = nullptr);

// The preposition weight scheme is a pluggable policy; the default keeps
// the modified noun's property profile on both axes.
using PrepPolicy = std::function<void(PrepositionMatrix&, const space::NounVector&)>;
PrepPolicy profile_product_policy();

PrepositionMatrix estimate_preposition(const std::string& item,
                                       std::span<const corpus::PrepInstance> instances,
                                       const corpus::NounMap& nouns,
                                       space::BasisPtr basis,
                                       const PrepPolicy& policy = profile_product_policy(),
                                       Strictness mode = Strictness::lenient,
                                       Diagnostics* diags = nullptr);

AdverbWeights estimate_adverb(const std::string& adverb,
                              std::span<const corpus::AdverbInstance> instances,
                              const corpus::NounMap& nouns, space::BasisPtr basis,
                              Strictness mode = Strictness::lenient,
                              Diagnostics* diags = nullptr);

DitransitiveTensor estimate_ditransitive(const std::string& verb,
                                         std::span<const corpus::VerbInstance> instances,
                                         const corpus::NounMap& nouns,
                                         space::BasisPtr basis,
                                         Strictness mode = Strictness::lenient,
                                         Diagnostics* diags = nullptr);

// Runs every estimator over a GR corpus: noun entries from the noun map,
// verb matrices (or 3-tensors when obj2 occurs), adjective diagonals,
// preposition matrices and adverb weights.
Lexicon train_lexicon(const std::vector<corpus::SentenceGrs>& sentences,
                      const corpus::NounMap& nouns, space::BasisPtr basis,
                      Strictness mode = Strictness::lenient,
                      Diagnostics* diags = nullptr);

// --- Manual tables and persistence ----------------------------------------

// Human-editable table format:
//   basis <dim>          followed by <dim> label lines
//   noun <item> VEC <dim>
//   verb <item> ROWS <dim>x<dim>
//   adj <item> DIAG <dim>
//   prep <item> ROWS <dim>x<dim>
//   adv <item> SDIAG <dim>x<dim>      diagonal-embedded (i, k) weights
//   adv <item> SCELLS <count>         general S x S cells "l w weight"
//   dverb <item> CUBE <dim>x<dim>x<dim>
// with whitespace-separated numbers following each declaration.
Lexicon manual_lexicon(std::istream& in);

// Versioned binary store with a text header; weights round-trip bit-exactly.
void save_lexicon(std::ostream& out, const Lexicon& lex);
Lexicon load_lexicon(std::istream& in);

} // namespace csem::lexicon
