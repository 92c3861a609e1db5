#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csem/diag.hpp"
#include "csem/space.hpp"

namespace csem::corpus {

// Closed set of grammatical relations accepted by the GR file format.
enum class Relation { subj, obj, obj2, arg, pmod, advmod };

std::optional<Relation> parse_relation(std::string_view text);
std::string_view relation_name(Relation r);

// Relation -> property-role prefix used for noun-vector counting.
// obj2 and advmod feed tensor estimation only and map to no role.
std::optional<std::string_view> property_role(Relation r);

struct GrRecord {
    long sentence_id = 0;
    Relation relation = Relation::subj;
    std::string head;
    std::string dependent;

    bool operator==(const GrRecord&) const = default;
};

struct SentenceGrs {
    long id = 0;
    std::vector<GrRecord> records;
};

struct GrFile {
    std::vector<SentenceGrs> sentences; // ordered by sentence id
    Diagnostics diagnostics;            // lenient-mode line problems
};

// GR file format: UTF-8, tab-separated "id TAB relation TAB head TAB
// dependent", "#" comment lines. Strict mode throws on the first malformed
// line; lenient mode skips it and records a diagnostic.
GrFile read_gr_file(std::istream& in, Strictness mode);

// One verb occurrence with its arguments; a missing argument stands for
// the empty string (the all-ones superposition at estimation time).
struct VerbInstance {
    std::string verb;
    std::optional<std::string> subject;
    std::optional<std::string> object;
    std::optional<std::string> object2;

    bool operator==(const VerbInstance&) const = default;
};

struct AdjInstance {
    std::string adjective;
    std::optional<std::string> argument;
};

struct PrepInstance {
    std::string item;
    std::optional<std::string> modified;
};

// Adverb occurrence, resolved to the modified verb's arguments.
struct AdverbInstance {
    std::string adverb;
    std::optional<std::string> subject;
    std::optional<std::string> object;
};

// Pairs each subj record with the obj/obj2 records sharing its head; an obj
// with no subj yields an instance with an empty subject. Exactly one
// instance per verb head with at least one subj/obj record.
std::vector<VerbInstance> extract_verb_instances(const SentenceGrs& sentence,
                                                 Strictness mode,
                                                 Diagnostics* diags = nullptr);

std::vector<AdjInstance> extract_adj_instances(const SentenceGrs& sentence);
std::vector<PrepInstance> extract_prep_instances(const SentenceGrs& sentence);
std::vector<AdverbInstance> extract_adverb_instances(const SentenceGrs& sentence,
                                                     Strictness mode,
                                                     Diagnostics* diags = nullptr);

using NounMap = std::map<std::string, space::NounVector>;

struct NounVectorBuild {
    NounMap vectors;
    std::map<std::string, std::size_t> skipped; // out-of-basis label -> count
};

// Counts, for every record whose relation maps to a property role, the
// dependent's occurrences under the label "role-head". Labels outside the
// basis are tallied in the skip report.
NounVectorBuild build_noun_vectors(const std::vector<SentenceGrs>& sentences,
                                   space::BasisPtr basis);

// Multi-word noun file: "word TAB label TAB weight" lines.
void write_noun_map(std::ostream& out, const NounMap& nouns);
NounMap read_noun_map(std::istream& in, space::BasisPtr basis);

void write_skip_report(std::ostream& out,
                       const std::map<std::string, std::size_t>& skipped);

} // namespace csem::corpus
