#include "csem/lexicon.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "csem/error.hpp"

namespace csem::lexicon {

namespace {

void check_finite(double w) {
    if (!std::isfinite(w)) throw Error("tensor weight must be finite");
}

void check_pos(std::uint32_t i, std::size_t limit, const char* what) {
    if (i >= limit)
        throw Error(std::string(what) + " index " + std::to_string(i) +
                    " out of range (limit " + std::to_string(limit) + ")");
}

template <typename Key>
void sparse_set(std::map<Key, double>& cells, Key key, double w) {
    check_finite(w);
    if (w == 0.0)
        cells.erase(key);
    else
        cells[key] = w;
}

} // namespace

VerbMatrix::VerbMatrix(space::BasisPtr basis) : basis_(std::move(basis)) {}

double VerbMatrix::at(std::uint32_t i, std::uint32_t k) const {
    auto it = cells_.find({i, k});
    return it == cells_.end() ? 0.0 : it->second;
}

void VerbMatrix::set(std::uint32_t i, std::uint32_t k, double w) {
    check_pos(i, basis_->size(), "row");
    check_pos(k, basis_->size(), "column");
    sparse_set(cells_, {i, k}, w);
}

void VerbMatrix::add(std::uint32_t i, std::uint32_t k, double delta) {
    set(i, k, at(i, k) + delta);
}

AdjectiveWeights::AdjectiveWeights(space::BasisPtr basis) : basis_(std::move(basis)) {}

double AdjectiveWeights::at(std::uint32_t i) const {
    auto it = diag_.find(i);
    return it == diag_.end() ? 0.0 : it->second;
}

void AdjectiveWeights::set(std::uint32_t i, double w) {
    check_pos(i, basis_->size(), "diagonal");
    check_finite(w);
    if (w == 0.0)
        diag_.erase(i);
    else
        diag_[i] = w;
}

void AdjectiveWeights::add(std::uint32_t i, double delta) { set(i, at(i) + delta); }

AdjectiveWeights AdjectiveWeights::identity(space::BasisPtr basis) {
    AdjectiveWeights a(std::move(basis));
    for (std::uint32_t i = 0; i < a.basis()->size(); ++i) a.set(i, 1.0);
    return a;
}

PrepositionMatrix::PrepositionMatrix(space::BasisPtr basis)
    : basis_(std::move(basis)) {}

double PrepositionMatrix::at(std::uint32_t l, std::uint32_t w) const {
    auto it = cells_.find({l, w});
    return it == cells_.end() ? 0.0 : it->second;
}

void PrepositionMatrix::set(std::uint32_t l, std::uint32_t w, double weight) {
    check_pos(l, basis_->size(), "row");
    check_pos(w, basis_->size(), "column");
    sparse_set(cells_, {l, w}, weight);
}

void PrepositionMatrix::add(std::uint32_t l, std::uint32_t w, double delta) {
    set(l, w, at(l, w) + delta);
}

PrepositionMatrix PrepositionMatrix::identity(space::BasisPtr basis) {
    PrepositionMatrix m(std::move(basis));
    for (std::uint32_t i = 0; i < m.basis()->size(); ++i) m.set(i, i, 1.0);
    return m;
}

AdverbWeights::AdverbWeights(space::BasisPtr basis) : basis_(std::move(basis)) {}

std::uint32_t AdverbWeights::pair_dim() const {
    return static_cast<std::uint32_t>(basis_->size() * basis_->size());
}

double AdverbWeights::at(std::uint32_t l, std::uint32_t w) const {
    auto it = cells_.find({l, w});
    return it == cells_.end() ? 0.0 : it->second;
}

void AdverbWeights::set(std::uint32_t l, std::uint32_t w, double weight) {
    check_pos(l, pair_dim(), "sentence-space row");
    check_pos(w, pair_dim(), "sentence-space column");
    sparse_set(cells_, {l, w}, weight);
}

void AdverbWeights::add(std::uint32_t l, std::uint32_t w, double delta) {
    set(l, w, at(l, w) + delta);
}

double AdverbWeights::diag_at(std::uint32_t i, std::uint32_t k) const {
    const auto l = static_cast<std::uint32_t>(
        space::flatten(space::PairIndex{i, k}, basis_->size()));
    return at(l, l);
}

void AdverbWeights::add_diag(std::uint32_t i, std::uint32_t k, double delta) {
    const auto l = static_cast<std::uint32_t>(
        space::flatten(space::PairIndex{i, k}, basis_->size()));
    add(l, l, delta);
}

DitransitiveTensor::DitransitiveTensor(space::BasisPtr basis)
    : basis_(std::move(basis)) {}

double DitransitiveTensor::at(std::uint32_t i, std::uint32_t k, std::uint32_t m) const {
    auto it = cells_.find({i, k, m});
    return it == cells_.end() ? 0.0 : it->second;
}

void DitransitiveTensor::set(std::uint32_t i, std::uint32_t k, std::uint32_t m,
                             double w) {
    check_pos(i, basis_->size(), "axis-1");
    check_pos(k, basis_->size(), "axis-2");
    check_pos(m, basis_->size(), "axis-3");
    sparse_set(cells_, {i, k, m}, w);
}

void DitransitiveTensor::add(std::uint32_t i, std::uint32_t k, std::uint32_t m,
                             double delta) {
    set(i, k, m, at(i, k, m) + delta);
}

std::string_view tensor_kind_name(const WordTensor& t) {
    switch (t.index()) {
        case 0: return "noun vector";
        case 1: return "adjective diagonal";
        case 2: return "verb matrix";
        case 3: return "preposition matrix";
        case 4: return "adverb weights";
        case 5: return "ditransitive tensor";
    }
    return "?";
}

namespace {
const pregroup::PregroupType& cached_type(const char* text) {
    static std::map<std::string, pregroup::PregroupType> cache;
    auto it = cache.find(text);
    if (it == cache.end()) it = cache.emplace(text, pregroup::parse_type(text)).first;
    return it->second;
}
} // namespace

const pregroup::PregroupType& noun_type() { return cached_type("n"); }
const pregroup::PregroupType& adjective_type() { return cached_type("n n.l"); }
const pregroup::PregroupType& transitive_verb_type() { return cached_type("n.r s n.l"); }
const pregroup::PregroupType& intransitive_verb_type() { return cached_type("n.r s"); }
const pregroup::PregroupType& preposition_type() { return cached_type("n.r n"); }
const pregroup::PregroupType& adverb_type() { return cached_type("s.r s"); }
const pregroup::PregroupType& ditransitive_verb_type() {
    return cached_type("n.r s n.l n.l");
}

namespace {

std::size_t expected_tensor_index(const pregroup::PregroupType& type) {
    if (type == noun_type()) return 0;
    if (type == adjective_type()) return 1;
    if (type == transitive_verb_type()) return 2;
    if (type == preposition_type()) return 3;
    if (type == adverb_type()) return 4;
    if (type == ditransitive_verb_type()) return 5;
    throw Error("lexicon: unsupported entry type '" + pregroup::format_type(type) +
                "'");
}

const space::BasisPtr& tensor_basis(const WordTensor& t) {
    return std::visit([](const auto& x) -> const space::BasisPtr& { return x.basis(); },
                      t);
}

} // namespace

Lexicon::Lexicon(space::BasisPtr basis) : basis_(std::move(basis)) {
    if (!basis_) throw Error("Lexicon: null basis");
}

void Lexicon::add(const std::string& item, pregroup::PregroupType type,
                  WordTensor tensor) {
    if (entries_.count(item))
        throw Error("lexicon: duplicate entry '" + item + "'");
    replace(item, std::move(type), std::move(tensor));
}

void Lexicon::replace(const std::string& item, pregroup::PregroupType type,
                      WordTensor tensor) {
    if (expected_tensor_index(type) != tensor.index())
        throw Error("lexicon entry '" + item + "': type '" +
                    pregroup::format_type(type) + "' does not house a " +
                    std::string(tensor_kind_name(tensor)));
    if (tensor_basis(tensor).get() != basis_.get())
        throw Error("lexicon entry '" + item + "': tensor built on a different basis");
    entries_.insert_or_assign(item, Entry{std::move(type), std::move(tensor)});
}

const Entry* Lexicon::find(const std::string& item) const {
    auto it = entries_.find(item);
    return it == entries_.end() ? nullptr : &it->second;
}

namespace {

bool same_cells(const WordTensor& a, const WordTensor& b) {
    if (a.index() != b.index()) return false;
    switch (a.index()) {
        case 0:
            return std::get<0>(a).cells() == std::get<0>(b).cells();
        case 1:
            return std::get<1>(a).diag() == std::get<1>(b).diag();
        case 2:
            return std::get<2>(a).cells() == std::get<2>(b).cells();
        case 3:
            return std::get<3>(a).cells() == std::get<3>(b).cells();
        case 4:
            return std::get<4>(a).cells() == std::get<4>(b).cells();
        case 5:
            return std::get<5>(a).cells() == std::get<5>(b).cells();
    }
    return false;
}

} // namespace

bool Lexicon::operator==(const Lexicon& other) const {
    if (basis_->name() != other.basis_->name() ||
        basis_->labels() != other.basis_->labels())
        return false;
    if (entries_.size() != other.entries_.size()) return false;
    auto it = other.entries_.begin();
    for (const auto& [item, entry] : entries_) {
        if (item != it->first || entry.type != it->second.type ||
            !same_cells(entry.tensor, it->second.tensor))
            return false;
        ++it;
    }
    return true;
}

// --- Estimation -----------------------------------------------------------

namespace {

void report(Strictness mode, Diagnostics* diags, const std::string& message) {
    if (mode == Strictness::strict) throw Error(message);
    if (diags) diags->push_back({0, message});
}

// Resolves an optional argument to a noun vector; nullptr stands for the
// empty argument. Unknown words flag the instance for skipping.
const space::NounVector* resolve_noun(const std::optional<std::string>& word,
                                      const corpus::NounMap& nouns,
                                      const std::string& item, const char* role,
                                      Strictness mode, Diagnostics* diags,
                                      bool& skip) {
    if (!word) return nullptr;
    auto it = nouns.find(*word);
    if (it == nouns.end()) {
        report(mode, diags,
               "estimating '" + item + "': unknown " + role + " noun '" + *word +
                   "'; instance skipped");
        skip = true;
        return nullptr;
    }
    return &it->second;
}

// Visits (position, weight) for a resolved argument: the sparse components
// of a known noun, or weight 1 everywhere for the empty argument.
template <typename Fn>
void for_each_component(const space::NounVector* v, const space::PropertyBasis& basis,
                        Fn&& fn) {
    if (v) {
        for (const auto& [i, w] : v->cells()) fn(i, w);
    } else {
        for (std::uint32_t i = 0; i < basis.size(); ++i) fn(i, 1.0);
    }
}

} // namespace

VerbMatrix estimate_verb_matrix(const std::string& verb,
                                std::span<const corpus::VerbInstance> instances,
                                const corpus::NounMap& nouns, space::BasisPtr basis,
                                Strictness mode, Diagnostics* diags) {
    VerbMatrix out(basis);
    for (const auto& inst : instances) {
        if (inst.verb != verb) continue;
        bool skip = false;
        const auto* subj = resolve_noun(inst.subject, nouns, verb, "subject", mode,
                                        diags, skip);
        const auto* obj =
            resolve_noun(inst.object, nouns, verb, "object", mode, diags, skip);
        if (skip) continue;
        for_each_component(subj, *basis, [&](std::uint32_t i, double si) {
            for_each_component(obj, *basis, [&](std::uint32_t k, double ok) {
                out.add(i, k, si * ok);
            });
        });
    }
    return out;
}

AdjectiveWeights estimate_adjective(const std::string& adjective,
                                    std::span<const corpus::AdjInstance> instances,
                                    const corpus::NounMap& nouns,
                                    space::BasisPtr basis, Strictness mode,
                                    Diagnostics* diags) {
    AdjectiveWeights out(basis);
    for (const auto& inst : instances) {
        if (inst.adjective != adjective) continue;
        bool skip = false;
        const auto* arg = resolve_noun(inst.argument, nouns, adjective, "argument",
                                       mode, diags, skip);
        if (skip) continue;
        for_each_component(arg, *basis,
                           [&](std::uint32_t i, double w) { out.add(i, w); });
    }
    return out;
}

PrepPolicy profile_product_policy() {
    return [](PrepositionMatrix& m, const space::NounVector& modified) {
        for (const auto& [l, wl] : modified.cells())
            for (const auto& [w, ww] : modified.cells()) m.add(l, w, wl * ww);
    };
}

PrepositionMatrix estimate_preposition(const std::string& item,
                                       std::span<const corpus::PrepInstance> instances,
                                       const corpus::NounMap& nouns,
                                       space::BasisPtr basis, const PrepPolicy& policy,
                                       Strictness mode, Diagnostics* diags) {
    PrepositionMatrix out(basis);
    for (const auto& inst : instances) {
        if (inst.item != item) continue;
        bool skip = false;
        const auto* modified =
            resolve_noun(inst.modified, nouns, item, "modified", mode, diags, skip);
        if (skip) continue;
        if (modified)
            policy(out, *modified);
        else
            policy(out, space::epsilon_vector(basis));
    }
    return out;
}

AdverbWeights estimate_adverb(const std::string& adverb,
                              std::span<const corpus::AdverbInstance> instances,
                              const corpus::NounMap& nouns, space::BasisPtr basis,
                              Strictness mode, Diagnostics* diags) {
    AdverbWeights out(basis);
    for (const auto& inst : instances) {
        if (inst.adverb != adverb) continue;
        bool skip = false;
        const auto* subj =
            resolve_noun(inst.subject, nouns, adverb, "subject", mode, diags, skip);
        const auto* obj =
            resolve_noun(inst.object, nouns, adverb, "object", mode, diags, skip);
        if (skip) continue;
        for_each_component(subj, *basis, [&](std::uint32_t i, double si) {
            for_each_component(obj, *basis, [&](std::uint32_t k, double ok) {
                out.add_diag(i, k, si * ok);
            });
        });
    }
    return out;
}

DitransitiveTensor estimate_ditransitive(const std::string& verb,
                                         std::span<const corpus::VerbInstance> instances,
                                         const corpus::NounMap& nouns,
                                         space::BasisPtr basis, Strictness mode,
                                         Diagnostics* diags) {
    DitransitiveTensor out(basis);
    for (const auto& inst : instances) {
        if (inst.verb != verb) continue;
        bool skip = false;
        const auto* subj =
            resolve_noun(inst.subject, nouns, verb, "subject", mode, diags, skip);
        const auto* obj =
            resolve_noun(inst.object, nouns, verb, "object", mode, diags, skip);
        const auto* obj2 =
            resolve_noun(inst.object2, nouns, verb, "second object", mode, diags, skip);
        if (skip) continue;
        for_each_component(subj, *basis, [&](std::uint32_t i, double si) {
            for_each_component(obj, *basis, [&](std::uint32_t k, double ok) {
                for_each_component(obj2, *basis, [&](std::uint32_t m, double o2m) {
                    out.add(i, k, m, si * ok * o2m);
                });
            });
        });
    }
    return out;
}

Lexicon train_lexicon(const std::vector<corpus::SentenceGrs>& sentences,
                      const corpus::NounMap& nouns, space::BasisPtr basis,
                      Strictness mode, Diagnostics* diags) {
    std::map<std::string, std::vector<corpus::VerbInstance>> verb_groups;
    std::map<std::string, std::vector<corpus::AdjInstance>> adj_groups;
    std::map<std::string, std::vector<corpus::PrepInstance>> prep_groups;
    std::map<std::string, std::vector<corpus::AdverbInstance>> adverb_groups;
    for (const auto& sentence : sentences) {
        for (auto& v : corpus::extract_verb_instances(sentence, mode, diags))
            verb_groups[v.verb].push_back(std::move(v));
        for (auto& a : corpus::extract_adj_instances(sentence))
            adj_groups[a.adjective].push_back(std::move(a));
        for (auto& p : corpus::extract_prep_instances(sentence))
            prep_groups[p.item].push_back(std::move(p));
        for (auto& a : corpus::extract_adverb_instances(sentence, mode, diags))
            adverb_groups[a.adverb].push_back(std::move(a));
    }

    Lexicon lex(basis);
    for (const auto& [word, vec] : nouns) lex.add(word, noun_type(), vec);

    // Estimated tensors take precedence over plain noun entries; a clash
    // between two estimated kinds keeps the earlier one.
    auto place = [&](const std::string& item, const pregroup::PregroupType& type,
                     WordTensor tensor) {
        const Entry* existing = lex.find(item);
        if (!existing) {
            lex.add(item, type, std::move(tensor));
            return;
        }
        if (existing->type == noun_type()) {
            report(mode, diags,
                   "item '" + item + "' is both a noun and a " +
                       std::string(tensor_kind_name(tensor)) +
                       " head; the estimated entry wins");
            lex.replace(item, type, std::move(tensor));
            return;
        }
        report(mode, diags,
               "item '" + item + "' estimated under two grammatical types; keeping '" +
                   pregroup::format_type(existing->type) + "'");
    };

    for (const auto& [verb, instances] : verb_groups) {
        const bool ditransitive =
            std::any_of(instances.begin(), instances.end(),
                        [](const corpus::VerbInstance& v) { return v.object2.has_value(); });
        if (ditransitive)
            place(verb, ditransitive_verb_type(),
                  estimate_ditransitive(verb, instances, nouns, basis, mode, diags));
        else
            place(verb, transitive_verb_type(),
                  estimate_verb_matrix(verb, instances, nouns, basis, mode, diags));
    }
    for (const auto& [adj, instances] : adj_groups)
        place(adj, adjective_type(),
              estimate_adjective(adj, instances, nouns, basis, mode, diags));
    for (const auto& [item, instances] : prep_groups)
        place(item, preposition_type(),
              estimate_preposition(item, instances, nouns, basis,
                                   profile_product_policy(), mode, diags));
    for (const auto& [adv, instances] : adverb_groups)
        place(adv, adverb_type(),
              estimate_adverb(adv, instances, nouns, basis, mode, diags));
    return lex;
}

// --- Manual tables ----------------------------------------------------------

namespace {

// Whitespace-token reader that drops '#' comments to end of line.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::optional<std::string> next() {
        char c;
        while (in_.get(c)) {
            if (c == '#') {
                while (in_.get(c) && c != '\n') {
                }
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            std::string tok(1, c);
            while (in_.get(c)) {
                if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
                    if (c == '#') in_.unget();
                    break;
                }
                tok += c;
            }
            return tok;
        }
        return std::nullopt;
    }

    std::string expect(const char* what) {
        auto tok = next();
        if (!tok) throw Error(std::string("manual table: expected ") + what +
                              ", found end of input");
        return *tok;
    }

    std::size_t expect_count(const char* what) {
        const std::string tok = expect(what);
        try {
            std::size_t used = 0;
            auto v = std::stoul(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw Error(std::string("manual table: bad ") + what + " '" + tok + "'");
        }
    }

    double expect_number(const std::string& item) {
        const std::string tok = expect("number");
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw Error("manual table entry '" + item + "': bad number '" + tok + "'");
        }
    }

private:
    std::istream& in_;
};

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto x = text.find('x', start);
        const std::string part =
            text.substr(start, x == std::string::npos ? std::string::npos : x - start);
        try {
            std::size_t used = 0;
            dims.push_back(std::stoul(part, &used));
            if (used != part.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw Error("manual table: bad dimension spec '" + text + "'");
        }
        if (x == std::string::npos) break;
        start = x + 1;
    }
    return dims;
}

void expect_dims(const std::string& item, const std::vector<std::size_t>& dims,
                 std::size_t rank, std::size_t dim) {
    if (dims.size() != rank)
        throw Error("manual table entry '" + item + "': expected a rank-" +
                    std::to_string(rank) + " dimension spec");
    for (auto d : dims)
        if (d != dim)
            throw Error("manual table entry '" + item + "': dimension " +
                        std::to_string(d) + " does not match basis dimension " +
                        std::to_string(dim));
}

} // namespace

Lexicon manual_lexicon(std::istream& in) {
    TokenReader tokens(in);
    if (tokens.expect("'basis'") != "basis")
        throw Error("manual table: file must start with a basis block");
    const std::size_t dim = tokens.expect_count("basis dimension");
    std::vector<space::PropertyLabel> labels;
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
        labels.push_back(space::PropertyLabel::parse(tokens.expect("basis label")));
    auto basis = space::PropertyBasis::make("manual", std::move(labels));

    Lexicon lex(basis);
    while (auto kind = tokens.next()) {
        const std::string item = tokens.expect("item name");
        const std::string shape = tokens.expect("shape keyword");
        if (*kind == "noun" && shape == "VEC") {
            expect_dims(item, {tokens.expect_count("dimension")}, 1, dim);
            space::NounVector v(basis);
            for (std::uint32_t i = 0; i < dim; ++i)
                v.set(i, tokens.expect_number(item));
            lex.add(item, noun_type(), std::move(v));
        } else if ((*kind == "verb" || *kind == "prep") && shape == "ROWS") {
            expect_dims(item, parse_dims(tokens.expect("dimensions")), 2, dim);
            if (*kind == "verb") {
                VerbMatrix m(basis);
                for (std::uint32_t i = 0; i < dim; ++i)
                    for (std::uint32_t k = 0; k < dim; ++k)
                        m.set(i, k, tokens.expect_number(item));
                lex.add(item, transitive_verb_type(), std::move(m));
            } else {
                PrepositionMatrix m(basis);
                for (std::uint32_t l = 0; l < dim; ++l)
                    for (std::uint32_t w = 0; w < dim; ++w)
                        m.set(l, w, tokens.expect_number(item));
                lex.add(item, preposition_type(), std::move(m));
            }
        } else if (*kind == "adj" && shape == "DIAG") {
            expect_dims(item, {tokens.expect_count("dimension")}, 1, dim);
            AdjectiveWeights a(basis);
            for (std::uint32_t i = 0; i < dim; ++i)
                a.set(i, tokens.expect_number(item));
            lex.add(item, adjective_type(), std::move(a));
        } else if (*kind == "adv" && shape == "SDIAG") {
            expect_dims(item, parse_dims(tokens.expect("dimensions")), 2, dim);
            AdverbWeights a(basis);
            for (std::uint32_t i = 0; i < dim; ++i)
                for (std::uint32_t k = 0; k < dim; ++k)
                    a.add_diag(i, k, tokens.expect_number(item));
            lex.add(item, adverb_type(), std::move(a));
        } else if (*kind == "adv" && shape == "SCELLS") {
            const std::size_t count = tokens.expect_count("cell count");
            AdverbWeights a(basis);
            for (std::size_t c = 0; c < count; ++c) {
                const auto l = static_cast<std::uint32_t>(tokens.expect_count("cell row"));
                const auto w =
                    static_cast<std::uint32_t>(tokens.expect_count("cell column"));
                a.add(l, w, tokens.expect_number(item));
            }
            lex.add(item, adverb_type(), std::move(a));
        } else if (*kind == "dverb" && shape == "CUBE") {
            expect_dims(item, parse_dims(tokens.expect("dimensions")), 3, dim);
            DitransitiveTensor t(basis);
            for (std::uint32_t i = 0; i < dim; ++i)
                for (std::uint32_t k = 0; k < dim; ++k)
                    for (std::uint32_t m = 0; m < dim; ++m)
                        t.set(i, k, m, tokens.expect_number(item));
            lex.add(item, ditransitive_verb_type(), std::move(t));
        } else {
            throw Error("manual table entry '" + item + "': unknown declaration '" +
                        *kind + " ... " + shape + "'");
        }
    }
    return lex;
}

// --- Persistence ------------------------------------------------------------

namespace {

constexpr std::string_view kMagic = "CSEMLEX";
constexpr std::string_view kVersion = "v1";

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

void put_str(std::ostream& out, std::string_view s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t get_u32(std::istream& in) {
    char b[4];
    if (!in.read(b, 4)) throw Error("lexicon store: truncated");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& in) {
    char b[8];
    if (!in.read(b, 8)) throw Error("lexicon store: truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

std::string get_str(std::istream& in) {
    const std::uint32_t len = get_u32(in);
    std::string s(len, '\0');
    if (len && !in.read(s.data(), len)) throw Error("lexicon store: truncated");
    return s;
}

std::uint8_t tensor_kind_tag(const WordTensor& t) {
    return static_cast<std::uint8_t>(t.index());
}

} // namespace

void save_lexicon(std::ostream& out, const Lexicon& lex) {
    char hash[24];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(lex.basis()->content_hash()));
    out << kMagic << ' ' << kVersion << ' ' << hash << '\n';
    put_str(out, lex.basis()->name());
    put_u32(out, static_cast<std::uint32_t>(lex.basis()->size()));
    for (const auto& label : lex.basis()->labels()) put_str(out, label.text());
    put_u32(out, static_cast<std::uint32_t>(lex.entries().size()));
    for (const auto& [item, entry] : lex.entries()) {
        put_str(out, item);
        put_str(out, pregroup::format_type(entry.type));
        out.put(static_cast<char>(tensor_kind_tag(entry.tensor)));
        std::visit(
            [&out](const auto& tensor) {
                using T = std::decay_t<decltype(tensor)>;
                if constexpr (std::is_same_v<T, space::NounVector>) {
                    put_u64(out, tensor.cells().size());
                    for (const auto& [i, w] : tensor.cells()) {
                        put_u32(out, i);
                        put_f64(out, w);
                    }
                } else if constexpr (std::is_same_v<T, AdjectiveWeights>) {
                    put_u64(out, tensor.diag().size());
                    for (const auto& [i, w] : tensor.diag()) {
                        put_u32(out, i);
                        put_f64(out, w);
                    }
                } else if constexpr (std::is_same_v<T, DitransitiveTensor>) {
                    put_u64(out, tensor.cells().size());
                    for (const auto& [key, w] : tensor.cells()) {
                        put_u32(out, key[0]);
                        put_u32(out, key[1]);
                        put_u32(out, key[2]);
                        put_f64(out, w);
                    }
                } else {
                    put_u64(out, tensor.cells().size());
                    for (const auto& [key, w] : tensor.cells()) {
                        put_u32(out, key[0]);
                        put_u32(out, key[1]);
                        put_f64(out, w);
                    }
                }
            },
            entry.tensor);
    }
}

Lexicon load_lexicon(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw Error("lexicon store: empty input");
    std::istringstream hs(header);
    std::string magic, version, hash_hex;
    hs >> magic >> version >> hash_hex;
    if (magic != kMagic) throw Error("lexicon store: bad magic '" + magic + "'");
    if (version != kVersion)
        throw Error("lexicon store: unsupported version '" + version + "'");

    const std::string basis_name = get_str(in);
    const std::uint32_t dim = get_u32(in);
    std::vector<space::PropertyLabel> labels;
    labels.reserve(dim);
    for (std::uint32_t i = 0; i < dim; ++i)
        labels.push_back(space::PropertyLabel::parse(get_str(in)));
    auto basis = space::PropertyBasis::make(basis_name, std::move(labels));

    char expected_hash[24];
    std::snprintf(expected_hash, sizeof(expected_hash), "%016llx",
                  static_cast<unsigned long long>(basis->content_hash()));
    if (hash_hex != expected_hash)
        throw Error("lexicon store: basis hash mismatch (corrupt payload)");

    Lexicon lex(basis);
    const std::uint32_t entry_count = get_u32(in);
    for (std::uint32_t e = 0; e < entry_count; ++e) {
        const std::string item = get_str(in);
        const auto type = pregroup::parse_type(get_str(in));
        const int kind = in.get();
        if (kind < 0) throw Error("lexicon store: truncated");
        const std::uint64_t cells = get_u64(in);
        WordTensor tensor = [&]() -> WordTensor {
            switch (kind) {
                case 0: {
                    space::NounVector v(basis);
                    for (std::uint64_t c = 0; c < cells; ++c) {
                        const auto i = get_u32(in);
                        v.set(i, get_f64(in));
                    }
                    return v;
                }
                case 1: {
                    AdjectiveWeights a(basis);
                    for (std::uint64_t c = 0; c < cells; ++c) {
                        const auto i = get_u32(in);
                        a.set(i, get_f64(in));
                    }
                    return a;
                }
                case 2: {
                    VerbMatrix m(basis);
                    for (std::uint64_t c = 0; c < cells; ++c) {
                        const auto i = get_u32(in);
                        const auto k = get_u32(in);
                        m.set(i, k, get_f64(in));
                    }
                    return m;
                }
                case 3: {
                    PrepositionMatrix m(basis);
                    for (std::uint64_t c = 0; c < cells; ++c) {
                        const auto l = get_u32(in);
                        const auto w = get_u32(in);
                        m.set(l, w, get_f64(in));
                    }
                    return m;
                }
                case 4: {
                    AdverbWeights a(basis);
                    for (std::uint64_t c = 0; c < cells; ++c) {
                        const auto l = get_u32(in);
                        const auto w = get_u32(in);
                        a.set(l, w, get_f64(in));
                    }
                    return a;
                }
                case 5: {
                    DitransitiveTensor t(basis);
                    for (std::uint64_t c = 0; c < cells; ++c) {
                        const auto i = get_u32(in);
                        const auto k = get_u32(in);
                        const auto m = get_u32(in);
                        t.set(i, k, m, get_f64(in));
                    }
                    return t;
                }
                default:
                    throw Error("lexicon store: unknown tensor kind " +
                                std::to_string(kind));
            }
        }();
        try {
            lex.add(item, type, std::move(tensor));
        } catch (const Error& err) {
            throw Error("lexicon store: " + std::string(err.what()));
        }
    }
    if (in.get() != std::istream::traits_type::eof())
        throw Error("lexicon store: trailing data after last entry");
    return lex;
}

} // namespace csem::lexicon
