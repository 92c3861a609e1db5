#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csem::pregroup {

// The set of base atoms simple types may use. Defaults to {n, s}.
class AtomRegistry {
public:
    AtomRegistry() = default;
    AtomRegistry(std::initializer_list<std::string> atoms);

    void add(std::string atom);
    bool contains(std::string_view atom) const;

    static const AtomRegistry& defaults();

private:
    std::set<std::string, std::less<>> atoms_;
};

// A base atom decorated with an adjoint order: ... -1 = left adjoint b.l,
// 0 = b, +1 = right adjoint b.r, ... Iterated adjoints are representable.
struct SimpleType {
    std::string base;
    int adjoint_order = 0;

    auto operator<=>(const SimpleType&) const = default;
};

// Ordered sequence of simple types. The empty sequence is the unit of
// juxtaposition.
struct PregroupType {
    std::vector<SimpleType> terms;

    bool is_unit() const { return terms.empty(); }

    bool operator==(const PregroupType&) const = default;
};

PregroupType juxtapose(const PregroupType& a, const PregroupType& b);

enum class AdjointSide { left, right };

// Reverses the term sequence and shifts every adjoint order by -1 (left)
// or +1 (right). The two sides are mutually inverse.
PregroupType adjoint(const PregroupType& t, AdjointSide side);

// Grammar: atoms are lowercase identifiers; ".l" / ".r" suffixes denote
// left/right adjoints and may be iterated ("n.l.l"); whitespace separates
// simple terms; the empty string is the unit.
PregroupType parse_type(std::string_view text,
                        const AtomRegistry& atoms = AtomRegistry::defaults());
std::string format_type(const PregroupType& t);

// Proof that a juxtaposition of word types contracts to a target type.
// matched_pairs is planar (non-crossing), each pair (i, j) satisfies
// base[i] == base[j] and order[j] == order[i] + 1 with everything strictly
// between i and j matched inside the pair, and the surviving indices spell
// the target in order.
struct ReductionWitness {
    std::vector<std::pair<std::size_t, std::size_t>> matched_pairs;
    std::vector<std::size_t> surviving;
};

// Decides whether the concatenation of the word types reduces to the target
// using contractions only. When several witnesses exist, returns the one
// whose matched pairs are lexicographically smallest by (left, right).
std::optional<ReductionWitness> reduce_to(std::span<const PregroupType> words,
                                          const PregroupType& target);

} // namespace csem::pregroup
