#include "csem/report.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "csem/compose.hpp"
#include "csem/fixtures.hpp"
#include "csem/numfmt.hpp"

namespace csem::report {

namespace {

constexpr double kCosineTolerance = 1e-3;

compose::SentenceVector sentence(const lexicon::Lexicon& lex, const std::string& tokens) {
    auto typed = compose::parse_tokens(tokens, lex);
    return std::get<compose::SentenceVector>(
        compose::compose(typed, pregroup::parse_type("s")));
}

space::NounVector noun_phrase(const lexicon::Lexicon& lex, const std::string& tokens) {
    auto typed = compose::parse_tokens(tokens, lex);
    return std::get<space::NounVector>(
        compose::compose(typed, pregroup::parse_type("n")));
}

} // namespace

RegressionReport run_reference_regression() {
    RegressionReport report;
    auto add = [&report](const char* quantity, const std::string& pair,
                         const char* path, double expected, double actual,
                         double tolerance) {
        const bool pass = tolerance == 0.0 ? actual == expected
                                           : std::fabs(actual - expected) <= tolerance;
        report.rows.push_back({quantity, pair, path, expected, actual, tolerance, pass});
    };
    auto add_similarity = [&add](const std::string& pair, const char* path,
                                 double raw_expected, double cos_expected,
                                 const compose::Similarity& sim) {
        add("raw", pair, path, raw_expected, sim.raw, 0.0);
        add("cosine", pair, path, cos_expected, sim.cosine, kCosineTolerance);
    };

    const auto& core = fixtures::core_lexicon();
    const auto dcc = sentence(core, "dogs:n chase:n.r_s_n.l cats:n");
    const auto dpk = sentence(core, "dogs:n pursue:n.r_s_n.l kittens:n");
    const auto ccd = sentence(core, "cats:n chase:n.r_s_n.l dogs:n");
    const auto bss = sentence(core, "bankers:n sell:n.r_s_n.l stock:n");
    const auto dch = sentence(core, "dogs:n chase:n.r_s");

    add_similarity("dogs chase cats | dogs pursue kittens", "", 14844, 0.979,
                   compose::sentence_similarity(dcc, dpk));
    add_similarity("dogs chase cats | cats chase dogs", "", 7341, 0.656,
                   compose::sentence_similarity(dcc, ccd));
    add_similarity("dogs chase cats | bankers sell stock", "", 6024, 0.042,
                   compose::sentence_similarity(dcc, bss));
    add_similarity("dogs chase cats | dogs chase", "", 14092, 0.961,
                   compose::sentence_similarity(dcc, dch));

    // Adjective-noun values run twice: once with the stipulated "fluffy dog"
    // intermediate and once with the estimated one.
    const auto fd_est = noun_phrase(core, "fluffy:n_n.l dogs:n");
    const auto fd_stip = fixtures::stipulated_fluffy_dog();
    const auto sb = noun_phrase(core, "shrewd:n_n.l bankers:n");
    const auto fc = noun_phrase(core, "fluffy:n_n.l cats:n");
    const auto vs = noun_phrase(core, "valuable:n_n.l stock:n");

    add("cosine", "fluffy dog | shrewd banker", "stipulated", 0.389,
        space::cosine(fd_stip, sb), kCosineTolerance);
    add("cosine", "fluffy dog | shrewd banker", "estimated", 0.174,
        space::cosine(fd_est, sb), kCosineTolerance);
    add("cosine", "fluffy cat | valuable stock", "stipulated", 0.184,
        space::cosine(fc, vs), kCosineTolerance);
    add("cosine", "fluffy cat | valuable stock", "estimated", 0.184,
        space::cosine(fc, vs), kCosineTolerance);

    const auto& chase = std::get<lexicon::VerbMatrix>(core.find("chase")->tensor);
    const auto big_stip = compose::compose_transitive(fd_stip, chase, fc);
    const auto big_est = sentence(
        core, "fluffy:n_n.l dogs:n chase:n.r_s_n.l fluffy:n_n.l cats:n");
    const auto sbsvs = sentence(
        core, "shrewd:n_n.l bankers:n sell:n.r_s_n.l valuable:n_n.l stock:n");

    add_similarity("fluffy dogs chase fluffy cats | shrewd bankers sell valuable stock",
                   "stipulated", 4243968, 0.016,
                   compose::sentence_similarity(big_stip, sbsvs));
    add_similarity("fluffy dogs chase fluffy cats | shrewd bankers sell valuable stock",
                   "estimated", 1866240, 0.0072148594,
                   compose::sentence_similarity(big_est, sbsvs));
    add_similarity("fluffy dogs chase fluffy cats | dogs chase cats", "stipulated",
                   2437005, 0.971, compose::sentence_similarity(big_stip, dcc));
    add_similarity("fluffy dogs chase fluffy cats | dogs chase cats", "estimated",
                   2422365, 0.9764700782, compose::sentence_similarity(big_est, dcc));

    const auto& sense = fixtures::sense_lexicon();
    const auto dcb = sentence(sense, "dogs:n catch:n.r_s_n.l a:n_n.l ball:n");
    const auto dcd = sentence(sense, "dogs:n catch:n.r_s_n.l a:n_n.l disease:n");
    add_similarity("dogs catch a ball | dogs catch a disease", "", 0, 0,
                   compose::sentence_similarity(dcb, dcd));
    // The zero above must come from orthogonal supports, not empty vectors.
    add("raw", "dogs catch a ball (squared norm)", "", 100324,
        compose::squared_norm(dcb), 0.0);
    add("raw", "dogs catch a disease (squared norm)", "", 127756,
        compose::squared_norm(dcd), 0.0);

    report.all_pass = true;
    for (const auto& row : report.rows) report.all_pass = report.all_pass && row.pass;
    return report;
}

namespace {

std::string show(const Row& row, double value) {
    if (row.quantity == "cosine") return format_fixed3(value);
    return format_number(value);
}

} // namespace

void render(std::ostream& out, const RegressionReport& report, Format format) {
    switch (format) {
        case Format::table: {
            std::size_t pair_width = 4;
            for (const auto& row : report.rows)
                pair_width = std::max(pair_width, row.pair.size());
            for (const auto& row : report.rows) {
                out << (row.pass ? "PASS" : "FAIL") << "  " << row.pair;
                out << std::string(pair_width - row.pair.size() + 2, ' ');
                out << row.quantity;
                if (!row.path.empty()) out << " (" << row.path << ")";
                out << "  expected " << show(row, row.expected);
                if (row.tolerance != 0.0) out << " +-" << format_number(row.tolerance);
                out << "  actual " << show(row, row.actual) << '\n';
            }
            out << (report.all_pass ? "ALL PASS" : "FAILURES PRESENT") << " ("
                << report.rows.size() << " checks)\n";
            break;
        }
        case Format::tsv: {
            out << "status\tquantity\tpair\tpath\texpected\tactual\ttolerance\n";
            for (const auto& row : report.rows)
                out << (row.pass ? "PASS" : "FAIL") << '\t' << row.quantity << '\t'
                    << row.pair << '\t' << row.path << '\t'
                    << format_number(row.expected) << '\t' << format_number(row.actual)
                    << '\t' << format_number(row.tolerance) << '\n';
            break;
        }
        case Format::json_lines: {
            for (const auto& row : report.rows) {
                nlohmann::json j{{"status", row.pass ? "PASS" : "FAIL"},
                                 {"quantity", row.quantity},
                                 {"pair", row.pair},
                                 {"path", row.path},
                                 {"expected", row.expected},
                                 {"actual", row.actual},
                                 {"tolerance", row.tolerance}};
                out << j.dump() << '\n';
            }
            break;
        }
    }
}

} // namespace csem::report
