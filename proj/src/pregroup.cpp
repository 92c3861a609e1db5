#include "csem/pregroup.hpp"

#include <algorithm>
#include <cctype>

#include "csem/error.hpp"

namespace csem::pregroup {

AtomRegistry::AtomRegistry(std::initializer_list<std::string> atoms)
    : atoms_(atoms) {}

void AtomRegistry::add(std::string atom) { atoms_.insert(std::move(atom)); }

bool AtomRegistry::contains(std::string_view atom) const {
    return atoms_.find(atom) != atoms_.end();
}

const AtomRegistry& AtomRegistry::defaults() {
    static const AtomRegistry reg{"n", "s"};
    return reg;
}

PregroupType juxtapose(const PregroupType& a, const PregroupType& b) {
    PregroupType out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

PregroupType adjoint(const PregroupType& t, AdjointSide side) {
    const int shift = side == AdjointSide::left ? -1 : +1;
    PregroupType out;
    out.terms.reserve(t.terms.size());
    for (auto it = t.terms.rbegin(); it != t.terms.rend(); ++it)
        out.terms.push_back({it->base, it->adjoint_order + shift});
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
    throw Error("type expression: " + what + " at position " +
                std::to_string(pos + 1));
}

bool atom_start(char c) { return c >= 'a' && c <= 'z'; }
bool atom_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

} // namespace

PregroupType parse_type(std::string_view text, const AtomRegistry& atoms) {
    PregroupType out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (!atom_start(text[i]))
            parse_fail(i, std::string("unexpected character '") + text[i] + "'");
        const std::size_t start = i;
        while (i < n && atom_char(text[i])) ++i;
        std::string base(text.substr(start, i - start));
        if (!atoms.contains(base))
            parse_fail(start, "unregistered atom '" + base + "'");
        int order = 0;
        while (i < n && text[i] == '.') {
            if (i + 1 >= n)
                parse_fail(i, "dangling '.'");
            const char marker = text[i + 1];
            if (marker == 'l')
                --order;
            else if (marker == 'r')
                ++order;
            else
                parse_fail(i + 1, std::string("expected 'l' or 'r' after '.', got '") +
                                      marker + "'");
            i += 2;
            if (i < n && atom_char(text[i]))
                parse_fail(i, "adjoint marker must end the term");
        }
        out.terms.push_back({std::move(base), order});
    }
    return out;
}

std::string format_type(const PregroupType& t) {
    std::string out;
    for (const auto& term : t.terms) {
        if (!out.empty()) out += ' ';
        out += term.base;
        for (int z = term.adjoint_order; z < 0; ++z) out += ".l";
        for (int z = 0; z < term.adjoint_order; ++z) out += ".r";
    }
    return out;
}

namespace {

// Planar matching over the concatenated term sequence. A pair (i, j) may
// contract when base[i] == base[j] and order[j] == order[i] + 1; the span
// strictly between them must itself cancel completely. Both tables are
// O(n^3) dynamic programs over spans.
struct ReductionSearch {
    const std::vector<SimpleType>& seq;
    const std::vector<SimpleType>& tgt;
    std::size_t n, t;
    // nullable[a][b]: seq[a..b) cancels to the unit.
    std::vector<std::vector<char>> nullable;
    // feasible[i][k]: seq[i..n) reduces to tgt[k..t).
    std::vector<std::vector<char>> feasible;

    ReductionSearch(const std::vector<SimpleType>& s, const std::vector<SimpleType>& g)
        : seq(s), tgt(g), n(s.size()), t(g.size()) {
        nullable.assign(n + 1, std::vector<char>(n + 1, 0));
        for (std::size_t a = 0; a <= n; ++a) nullable[a][a] = 1;
        for (std::size_t len = 2; len <= n; len += 2) {
            for (std::size_t a = 0; a + len <= n; ++a) {
                const std::size_t b = a + len;
                for (std::size_t m = a + 1; m < b; m += 2) {
                    if (contractible(a, m) && nullable[a + 1][m] && nullable[m + 1][b]) {
                        nullable[a][b] = 1;
                        break;
                    }
                }
            }
        }
        feasible.assign(n + 1, std::vector<char>(t + 1, 0));
        feasible[n][t] = 1;
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t k = t + 1; k-- > 0;) {
                if (k < t && seq[i] == tgt[k] && feasible[i + 1][k + 1]) {
                    feasible[i][k] = 1;
                    continue;
                }
                for (std::size_t j = i + 1; j < n; j += 2) {
                    if (contractible(i, j) && nullable[i + 1][j] && feasible[j + 1][k]) {
                        feasible[i][k] = 1;
                        break;
                    }
                }
            }
        }
    }

    bool contractible(std::size_t i, std::size_t j) const {
        return seq[i].base == seq[j].base &&
               seq[j].adjoint_order == seq[i].adjoint_order + 1;
    }

    // Emits the lexicographically smallest full cancellation of [a, b).
    void emit_cancel(std::size_t a, std::size_t b, ReductionWitness& w) const {
        if (a == b) return;
        for (std::size_t m = a + 1; m < b; m += 2) {
            if (contractible(a, m) && nullable[a + 1][m] && nullable[m + 1][b]) {
                w.matched_pairs.emplace_back(a, m);
                emit_cancel(a + 1, m, w);
                emit_cancel(m + 1, b, w);
                return;
            }
        }
    }

    // Greedy left-to-right reconstruction. Pairing the current index always
    // sorts before leaving it as a survivor, and a smaller right endpoint
    // sorts before a larger one, so taking the first feasible option at each
    // step yields the lexicographic minimum.
    ReductionWitness build() const {
        ReductionWitness w;
        std::size_t i = 0, k = 0;
        while (i < n) {
            bool paired = false;
            for (std::size_t j = i + 1; j < n; j += 2) {
                if (contractible(i, j) && nullable[i + 1][j] && feasible[j + 1][k]) {
                    w.matched_pairs.emplace_back(i, j);
                    emit_cancel(i + 1, j, w);
                    i = j + 1;
                    paired = true;
                    break;
                }
            }
            if (paired) continue;
            w.surviving.push_back(i);
            ++i;
            ++k;
        }
        std::sort(w.matched_pairs.begin(), w.matched_pairs.end());
        return w;
    }
};

} // namespace

std::optional<ReductionWitness> reduce_to(std::span<const PregroupType> words,
                                          const PregroupType& target) {
    std::vector<SimpleType> seq;
    for (const auto& w : words)
        seq.insert(seq.end(), w.terms.begin(), w.terms.end());
    ReductionSearch search(seq, target.terms);
    if (!search.feasible[0][0]) return std::nullopt;
    return search.build();
}

} // namespace csem::pregroup
