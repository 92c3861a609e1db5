#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace csem::space {

// A basis dimension label: a grammatical-relation tag attached to a lexical
// head, e.g. "arg-fluffy", "obj-buys", "mod-of-heart".
struct PropertyLabel {
    std::string role;
    std::string head;

    std::string text() const { return role + "-" + head; }
    static PropertyLabel parse(std::string_view text);

    auto operator<=>(const PropertyLabel&) const = default;
};

class PropertyBasis;
using BasisPtr = std::shared_ptr<const PropertyBasis>;

// Ordered registry of distinct property labels. Immutable once built;
// vectors pin their basis by identity.
class PropertyBasis {
public:
    static BasisPtr make(std::string name, std::vector<PropertyLabel> labels);

    std::size_t size() const { return labels_.size(); }
    const PropertyLabel& label(std::size_t i) const { return labels_[i]; }
    const std::vector<PropertyLabel>& labels() const { return labels_; }
    std::optional<std::uint32_t> find(std::string_view text) const;
    const std::string& name() const { return name_; }

    // FNV-1a over the label texts; used to cross-check serialized stores.
    std::uint64_t content_hash() const;

private:
    PropertyBasis() = default;
    std::string name_;
    std::vector<PropertyLabel> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

// Sparse vector over a PropertyBasis. Zero weights are never stored and all
// stored weights are finite.
class NounVector {
public:
    explicit NounVector(BasisPtr basis);

    const BasisPtr& basis() const { return basis_; }
    double at(std::uint32_t i) const;
    void set(std::uint32_t i, double w);
    void add(std::uint32_t i, double delta);
    const std::map<std::uint32_t, double>& cells() const { return cells_; }
    bool is_zero() const { return cells_.empty(); }

    bool operator==(const NounVector& other) const;

private:
    BasisPtr basis_;
    std::map<std::uint32_t, double> cells_;
};

double inner_product(const NounVector& a, const NounVector& b);
double norm(const NounVector& a);
// Zero-norm inputs yield 0 and set *degenerate instead of erroring.
double cosine(const NounVector& a, const NounVector& b, bool* degenerate = nullptr);

// The all-ones superposition of basis vectors; stands in for a missing
// verb argument.
NounVector epsilon_vector(BasisPtr basis);

NounVector add(const NounVector& a, const NounVector& b);
NounVector scale(const NounVector& a, double factor);

// Row-major index arithmetic for N (x) N and N (x) N (x) N.
struct PairIndex {
    std::uint32_t i = 0, k = 0;
    auto operator<=>(const PairIndex&) const = default;
};
struct TripleIndex {
    std::uint32_t i = 0, k = 0, m = 0;
    auto operator<=>(const TripleIndex&) const = default;
};

struct PairSpace {
    std::size_t dim = 0;
    std::size_t size() const { return dim * dim; }
};
struct TripleSpace {
    std::size_t dim = 0;
    std::size_t size() const { return dim * dim * dim; }
};

PairSpace pair_space(const PropertyBasis& b);
TripleSpace triple_space(const PropertyBasis& b);

std::size_t flatten(PairIndex p, std::size_t dim);
std::size_t flatten(TripleIndex t, std::size_t dim);
PairIndex unflatten_pair(std::size_t linear, std::size_t dim);
TripleIndex unflatten_triple(std::size_t linear, std::size_t dim);

// Basis file: one property label per line, order-significant, UTF-8.
BasisPtr read_basis(std::istream& in, std::string name);
void write_basis(std::ostream& out, const PropertyBasis& b);

// Single-vector file: "label TAB weight" lines against a known basis.
NounVector read_vector(std::istream& in, BasisPtr basis);
void write_vector(std::ostream& out, const NounVector& v);

} // namespace csem::space
