// csem: build property-basis noun vectors from grammatical-relation files,
// estimate word tensors, compose typed sentences and score similarity.

#include <fstream>
#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "csem/compose.hpp"
#include "csem/corpus.hpp"
#include "csem/error.hpp"
#include "csem/fixtures.hpp"
#include "csem/lexicon.hpp"
#include "csem/numfmt.hpp"
#include "csem/report.hpp"
#include "csem/space.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompareFail = 1;
constexpr int kExitUsage = 2;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw csem::Error("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw csem::Error("cannot open '" + path + "' for writing");
    return out;
}

csem::space::BasisPtr load_basis(const std::string& path) {
    auto in = open_input(path);
    return csem::space::read_basis(in, path);
}

void print_diagnostics(const csem::Diagnostics& diags) {
    for (const auto& d : diags) {
        std::cerr << "warning: ";
        if (d.line) std::cerr << "line " << d.line << ": ";
        std::cerr << d.message << '\n';
    }
}

csem::report::Format parse_format(const std::string& name) {
    if (name == "table") return csem::report::Format::table;
    if (name == "tsv") return csem::report::Format::tsv;
    if (name == "json-lines") return csem::report::Format::json_lines;
    throw csem::Error("unknown format '" + name + "'");
}

struct SimilarityOutput {
    csem::compose::Similarity sim;
    std::string sentence_a, sentence_b;
};

void print_similarity(const SimilarityOutput& s, csem::report::Format format) {
    switch (format) {
        case csem::report::Format::table:
            std::cout << "raw\t" << csem::format_number(s.sim.raw) << '\n'
                      << "cosine\t" << csem::format_fixed3(s.sim.cosine) << '\n';
            if (s.sim.degenerate)
                std::cout << "degenerate\ttrue\n";
            break;
        case csem::report::Format::tsv:
            std::cout << "raw\tcosine\tdegenerate\n"
                      << csem::format_number(s.sim.raw) << '\t'
                      << csem::format_fixed3(s.sim.cosine) << '\t'
                      << (s.sim.degenerate ? "true" : "false") << '\n';
            break;
        case csem::report::Format::json_lines: {
            nlohmann::json j{{"sentence_a", s.sentence_a},
                             {"sentence_b", s.sentence_b},
                             {"raw", s.sim.raw},
                             {"cosine", s.sim.cosine},
                             {"degenerate", s.sim.degenerate}};
            std::cout << j.dump() << '\n';
            break;
        }
    }
}

csem::lexicon::Lexicon resolve_lexicon(const std::string& lexicon_path,
                                       const std::string& fixture) {
    if (!fixture.empty()) {
        if (fixture == "core") return csem::fixtures::core_lexicon();
        if (fixture == "sense") return csem::fixtures::sense_lexicon();
        throw csem::Error("unknown fixture '" + fixture + "' (use core or sense)");
    }
    if (lexicon_path.empty())
        throw csem::Error("either --lexicon or --fixture is required");
    auto in = open_input(lexicon_path);
    return csem::lexicon::load_lexicon(in);
}

csem::compose::ComposeResult compose_input(const csem::lexicon::Lexicon& lex,
                                           const std::string& tokens,
                                           const std::string& target) {
    auto typed = csem::compose::parse_tokens(tokens, lex);
    return csem::compose::compose(typed, csem::pregroup::parse_type(target));
}

csem::compose::SentenceVector as_sentence(csem::compose::ComposeResult result) {
    if (std::holds_alternative<csem::space::NounVector>(result))
        return csem::compose::SentenceVector::from_noun(
            std::get<csem::space::NounVector>(result));
    return std::get<csem::compose::SentenceVector>(std::move(result));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compositional distributional semantics engine"};
    app.require_subcommand(1);
    app.fallthrough(); // let --strict/--format trail the subcommand

    bool strict = false;
    app.add_flag("--strict,!--lenient", strict,
                 "fail on malformed input instead of warning");
    std::string format_name = "table";
    app.add_option("--format", format_name, "output format: table, tsv, json-lines");

    // build-nouns
    auto* build = app.add_subcommand(
        "build-nouns", "count property co-occurrences into noun vectors");
    std::string build_gr, build_basis, build_out, build_skip;
    build->add_option("gr-file", build_gr, "grammatical-relation file")->required();
    build->add_option("--basis", build_basis, "property basis file")->required();
    build->add_option("--out", build_out, "output noun-vector file")->required();
    build->add_option("--skip-report", build_skip,
                      "write out-of-basis label counts here instead of stderr");

    // train
    auto* train = app.add_subcommand("train", "estimate word tensors from a corpus");
    std::string train_gr, train_basis, train_nouns, train_out;
    train->add_option("gr-file", train_gr, "grammatical-relation file")->required();
    train->add_option("--basis", train_basis, "property basis file")->required();
    train->add_option("--nouns", train_nouns, "noun-vector file from build-nouns")
        ->required();
    train->add_option("--out", train_out, "output lexicon store")->required();

    // compose
    auto* comp = app.add_subcommand("compose", "compose a typed token sequence");
    std::string comp_lexicon, comp_fixture, comp_tokens, comp_target = "s";
    comp->add_option("tokens", comp_tokens, "typed tokens, e.g. \"dogs:n chase:n.r_s_n.l cats:n\"")
        ->required();
    comp->add_option("--lexicon", comp_lexicon, "lexicon store file");
    comp->add_option("--fixture", comp_fixture, "built-in lexicon: core or sense");
    comp->add_option("--target", comp_target, "target type (default s)");

    // similarity
    auto* sim = app.add_subcommand("similarity", "score a sentence pair");
    std::string sim_lexicon, sim_fixture, sim_a, sim_b, sim_target = "s";
    sim->add_option("sentence-a", sim_a, "typed tokens")->required();
    sim->add_option("sentence-b", sim_b, "typed tokens")->required();
    sim->add_option("--lexicon", sim_lexicon, "lexicon store file");
    sim->add_option("--fixture", sim_fixture, "built-in lexicon: core or sense");
    sim->add_option("--target", sim_target, "target type: s or n");

    // reproduce-paper
    auto* repro = app.add_subcommand(
        "reproduce-paper", "check the engine against the built-in reference table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto mode = strict ? csem::Strictness::strict : csem::Strictness::lenient;

    try {
        const auto format = parse_format(format_name);

        if (*build) {
            auto basis = load_basis(build_basis);
            auto gr_in = open_input(build_gr);
            auto gr = csem::corpus::read_gr_file(gr_in, mode);
            print_diagnostics(gr.diagnostics);
            auto result = csem::corpus::build_noun_vectors(gr.sentences, basis);
            auto out = open_output(build_out);
            csem::corpus::write_noun_map(out, result.vectors);
            if (result.vectors.empty())
                std::cerr << "warning: no noun vectors built from '" << build_gr
                          << "'\n";
            if (!build_skip.empty()) {
                auto skip_out = open_output(build_skip);
                csem::corpus::write_skip_report(skip_out, result.skipped);
            } else {
                csem::corpus::write_skip_report(std::cerr, result.skipped);
            }
            return kExitOk;
        }

        if (*train) {
            auto basis = load_basis(train_basis);
            auto nouns_in = open_input(train_nouns);
            auto nouns = csem::corpus::read_noun_map(nouns_in, basis);
            auto gr_in = open_input(train_gr);
            auto gr = csem::corpus::read_gr_file(gr_in, mode);
            print_diagnostics(gr.diagnostics);
            csem::Diagnostics diags;
            auto lex = csem::lexicon::train_lexicon(gr.sentences, nouns, basis, mode,
                                                    &diags);
            print_diagnostics(diags);
            const bool has_tensor_entry = std::any_of(
                lex.entries().begin(), lex.entries().end(),
                [](const auto& e) { return e.second.type != csem::lexicon::noun_type(); });
            if (!has_tensor_entry)
                std::cerr << "warning: no verbs, adjectives, prepositions or adverbs "
                             "found; lexicon holds nouns only\n";
            auto out = open_output(train_out);
            csem::lexicon::save_lexicon(out, lex);
            return kExitOk;
        }

        if (*comp) {
            auto lex = resolve_lexicon(comp_lexicon, comp_fixture);
            auto result = compose_input(lex, comp_tokens, comp_target);
            auto sv = as_sentence(std::move(result));
            for (const auto& [key, w] : sv.cells()) {
                std::string cell;
                for (int a = 0; a < sv.arity(); ++a)
                    cell += (a ? "," : "") + sv.basis()->label(key[a]).text();
                if (format == csem::report::Format::json_lines) {
                    nlohmann::json j{{"cell", cell}, {"weight", w}};
                    std::cout << j.dump() << '\n';
                } else {
                    std::cout << cell << '\t' << csem::format_number(w) << '\n';
                }
            }
            return kExitOk;
        }

        if (*sim) {
            auto lex = resolve_lexicon(sim_lexicon, sim_fixture);
            auto a = as_sentence(compose_input(lex, sim_a, sim_target));
            auto b = as_sentence(compose_input(lex, sim_b, sim_target));
            print_similarity({csem::compose::sentence_similarity(a, b), sim_a, sim_b},
                             format);
            return kExitOk;
        }

        if (*repro) {
            auto report = csem::report::run_reference_regression();
            csem::report::render(std::cout, report, format);
            return report.all_pass ? kExitOk : kExitCompareFail;
        }
    } catch (const csem::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
