#include "csem/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "csem/error.hpp"
#include "csem/numfmt.hpp"

namespace csem::corpus {

std::optional<Relation> parse_relation(std::string_view text) {
    if (text == "subj") return Relation::subj;
    if (text == "obj") return Relation::obj;
    if (text == "obj2") return Relation::obj2;
    if (text == "arg") return Relation::arg;
    if (text == "pmod") return Relation::pmod;
    if (text == "advmod") return Relation::advmod;
    return std::nullopt;
}

std::string_view relation_name(Relation r) {
    switch (r) {
        case Relation::subj: return "subj";
        case Relation::obj: return "obj";
        case Relation::obj2: return "obj2";
        case Relation::arg: return "arg";
        case Relation::pmod: return "pmod";
        case Relation::advmod: return "advmod";
    }
    return "?";
}

std::optional<std::string_view> property_role(Relation r) {
    switch (r) {
        case Relation::subj: return "subj";
        case Relation::obj: return "obj";
        case Relation::arg: return "arg";
        case Relation::pmod: return "mod-of";
        case Relation::obj2:
        case Relation::advmod: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

void report(Strictness mode, Diagnostics* diags, std::size_t line,
            const std::string& message) {
    if (mode == Strictness::strict)
        throw Error("line " + std::to_string(line) + ": " + message);
    if (diags) diags->push_back({line, message});
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

} // namespace

GrFile read_gr_file(std::istream& in, Strictness mode) {
    GrFile out;
    std::map<long, std::vector<GrRecord>> by_sentence;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (fields.size() != 4) {
            report(mode, &out.diagnostics, lineno,
                   "expected 4 tab-separated fields, got " +
                       std::to_string(fields.size()));
            continue;
        }
        long id = 0;
        try {
            std::size_t used = 0;
            id = std::stol(fields[0], &used);
            if (used != fields[0].size() || id < 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
            report(mode, &out.diagnostics, lineno,
                   "bad sentence id '" + fields[0] + "'");
            continue;
        }
        auto rel = parse_relation(fields[1]);
        if (!rel) {
            report(mode, &out.diagnostics, lineno,
                   "unknown relation '" + fields[1] + "'");
            continue;
        }
        if (fields[2].empty() || fields[3].empty()) {
            report(mode, &out.diagnostics, lineno, "empty head or dependent");
            continue;
        }
        by_sentence[id].push_back({id, *rel, fields[2], fields[3]});
    }
    out.sentences.reserve(by_sentence.size());
    for (auto& [id, records] : by_sentence)
        out.sentences.push_back({id, std::move(records)});
    return out;
}

namespace {

struct VerbGroup {
    std::vector<std::string> subjects, objects, objects2;
};

// Unique heads in first-occurrence order plus their grouped dependents.
template <typename Pred>
std::vector<std::pair<std::string, VerbGroup>> group_verb_records(
    const SentenceGrs& sentence, Pred relation_of_interest) {
    std::vector<std::pair<std::string, VerbGroup>> groups;
    auto find = [&groups](const std::string& head) -> VerbGroup& {
        for (auto& [h, g] : groups)
            if (h == head) return g;
        groups.emplace_back(head, VerbGroup{});
        return groups.back().second;
    };
    for (const auto& rec : sentence.records) {
        if (!relation_of_interest(rec.relation)) continue;
        auto& g = find(rec.head);
        switch (rec.relation) {
            case Relation::subj: g.subjects.push_back(rec.dependent); break;
            case Relation::obj: g.objects.push_back(rec.dependent); break;
            case Relation::obj2: g.objects2.push_back(rec.dependent); break;
            default: break;
        }
    }
    return groups;
}

std::optional<std::string> pick_first(const std::vector<std::string>& xs,
                                      const char* what, const std::string& head,
                                      long sentence_id, Strictness mode,
                                      Diagnostics* diags) {
    if (xs.empty()) return std::nullopt;
    if (xs.size() > 1)
        report(mode, diags, 0,
               "sentence " + std::to_string(sentence_id) + ": verb '" + head +
                   "' has " + std::to_string(xs.size()) + " " + what +
                   " records; taking the first");
    return xs.front();
}

} // namespace

std::vector<VerbInstance> extract_verb_instances(const SentenceGrs& sentence,
                                                 Strictness mode,
                                                 Diagnostics* diags) {
    auto groups = group_verb_records(sentence, [](Relation r) {
        return r == Relation::subj || r == Relation::obj || r == Relation::obj2;
    });
    std::vector<VerbInstance> out;
    for (const auto& [head, g] : groups) {
        if (g.subjects.empty() && g.objects.empty()) {
            if (!g.objects2.empty())
                report(mode, diags, 0,
                       "sentence " + std::to_string(sentence.id) + ": verb '" +
                           head + "' has obj2 but no subj/obj record");
            continue;
        }
        VerbInstance inst;
        inst.verb = head;
        inst.subject = pick_first(g.subjects, "subj", head, sentence.id, mode, diags);
        inst.object = pick_first(g.objects, "obj", head, sentence.id, mode, diags);
        inst.object2 = pick_first(g.objects2, "obj2", head, sentence.id, mode, diags);
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<AdjInstance> extract_adj_instances(const SentenceGrs& sentence) {
    std::vector<AdjInstance> out;
    for (const auto& rec : sentence.records)
        if (rec.relation == Relation::arg) out.push_back({rec.head, rec.dependent});
    return out;
}

std::vector<PrepInstance> extract_prep_instances(const SentenceGrs& sentence) {
    std::vector<PrepInstance> out;
    for (const auto& rec : sentence.records)
        if (rec.relation == Relation::pmod) out.push_back({rec.head, rec.dependent});
    return out;
}

std::vector<AdverbInstance> extract_adverb_instances(const SentenceGrs& sentence,
                                                     Strictness mode,
                                                     Diagnostics* diags) {
    auto verb_instances = extract_verb_instances(sentence, Strictness::lenient);
    std::vector<AdverbInstance> out;
    for (const auto& rec : sentence.records) {
        if (rec.relation != Relation::advmod) continue;
        auto it = std::find_if(verb_instances.begin(), verb_instances.end(),
                               [&](const VerbInstance& v) { return v.verb == rec.head; });
        if (it == verb_instances.end()) {
            report(mode, diags, 0,
                   "sentence " + std::to_string(sentence.id) + ": advmod on '" +
                       rec.head + "' with no verb instance; skipped");
            continue;
        }
        out.push_back({rec.dependent, it->subject, it->object});
    }
    return out;
}

NounVectorBuild build_noun_vectors(const std::vector<SentenceGrs>& sentences,
                                   space::BasisPtr basis) {
    NounVectorBuild out;
    for (const auto& sentence : sentences) {
        for (const auto& rec : sentence.records) {
            auto role = property_role(rec.relation);
            if (!role) continue;
            const std::string label = std::string(*role) + "-" + rec.head;
            auto pos = basis->find(label);
            if (!pos) {
                ++out.skipped[label];
                continue;
            }
            auto it = out.vectors.find(rec.dependent);
            if (it == out.vectors.end())
                it = out.vectors.emplace(rec.dependent, space::NounVector(basis)).first;
            it->second.add(*pos, 1.0);
        }
    }
    return out;
}

void write_noun_map(std::ostream& out, const NounMap& nouns) {
    for (const auto& [word, vec] : nouns)
        for (const auto& [i, w] : vec.cells())
            out << word << '\t' << vec.basis()->label(i).text() << '\t'
                << format_number(w) << '\n';
}

NounMap read_noun_map(std::istream& in, space::BasisPtr basis) {
    NounMap out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (fields.size() != 3)
            throw Error("noun file line " + std::to_string(lineno) +
                        ": expected \"word TAB label TAB weight\"");
        auto pos = basis->find(fields[1]);
        if (!pos)
            throw Error("noun file line " + std::to_string(lineno) + ": label '" +
                        fields[1] + "' not in basis '" + basis->name() + "'");
        double w = 0.0;
        try {
            w = std::stod(fields[2]);
        } catch (const std::exception&) {
            throw Error("noun file line " + std::to_string(lineno) + ": bad weight");
        }
        auto it = out.find(fields[0]);
        if (it == out.end())
            it = out.emplace(fields[0], space::NounVector(basis)).first;
        it->second.set(*pos, w);
    }
    return out;
}

void write_skip_report(std::ostream& out,
                       const std::map<std::string, std::size_t>& skipped) {
    for (const auto& [label, count] : skipped)
        out << label << '\t' << count << '\n';
}

} // namespace csem::corpus
