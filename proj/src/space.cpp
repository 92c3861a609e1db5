#include "csem/space.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>

#include "csem/error.hpp"
#include "csem/numfmt.hpp"

namespace csem::space {

namespace {

// Role tags that themselves contain a dash must be tried before the plain
// first-dash split.
constexpr std::array<std::string_view, 1> kCompoundRoles = {"mod-of"};

std::string basis_id(const PropertyBasis& b) {
    return "'" + b.name() + "' (dim " + std::to_string(b.size()) + ")";
}

void check_same_basis(const char* op, const BasisPtr& a, const BasisPtr& b) {
    if (a.get() != b.get())
        throw Error(std::string(op) + ": basis mismatch: " + basis_id(*a) +
                    " vs " + basis_id(*b));
}

} // namespace

PropertyLabel PropertyLabel::parse(std::string_view text) {
    for (auto role : kCompoundRoles) {
        if (text.size() > role.size() + 1 && text.substr(0, role.size()) == role &&
            text[role.size()] == '-') {
            return {std::string(role), std::string(text.substr(role.size() + 1))};
        }
    }
    const auto dash = text.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == text.size())
        throw Error("malformed property label '" + std::string(text) +
                    "': expected \"role-head\"");
    return {std::string(text.substr(0, dash)), std::string(text.substr(dash + 1))};
}

BasisPtr PropertyBasis::make(std::string name, std::vector<PropertyLabel> labels) {
    auto basis = std::shared_ptr<PropertyBasis>(new PropertyBasis());
    basis->name_ = std::move(name);
    basis->labels_ = std::move(labels);
    for (std::size_t i = 0; i < basis->labels_.size(); ++i) {
        auto [it, inserted] =
            basis->index_.emplace(basis->labels_[i].text(), static_cast<std::uint32_t>(i));
        if (!inserted)
            throw Error("basis '" + basis->name_ + "': duplicate label '" +
                        it->first + "'");
    }
    return basis;
}

std::optional<std::uint32_t> PropertyBasis::find(std::string_view text) const {
    auto it = index_.find(std::string(text));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t PropertyBasis::content_hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    };
    for (const auto& label : labels_) {
        for (char c : label.text()) mix(c);
        mix('\n');
    }
    return h;
}

NounVector::NounVector(BasisPtr basis) : basis_(std::move(basis)) {
    if (!basis_) throw Error("NounVector: null basis");
}

double NounVector::at(std::uint32_t i) const {
    auto it = cells_.find(i);
    return it == cells_.end() ? 0.0 : it->second;
}

void NounVector::set(std::uint32_t i, double w) {
    if (i >= basis_->size())
        throw Error("NounVector: index " + std::to_string(i) +
                    " out of range for basis " + basis_id(*basis_));
    if (!std::isfinite(w)) throw Error("NounVector: non-finite weight");
    if (w == 0.0)
        cells_.erase(i);
    else
        cells_[i] = w;
}

void NounVector::add(std::uint32_t i, double delta) { set(i, at(i) + delta); }

bool NounVector::operator==(const NounVector& other) const {
    return basis_.get() == other.basis_.get() && cells_ == other.cells_;
}

double inner_product(const NounVector& a, const NounVector& b) {
    check_same_basis("inner_product", a.basis(), b.basis());
    const auto& small = a.cells().size() <= b.cells().size() ? a : b;
    const auto& large = a.cells().size() <= b.cells().size() ? b : a;
    double sum = 0.0;
    for (const auto& [i, w] : small.cells()) sum += w * large.at(i);
    return sum;
}

double norm(const NounVector& a) { return std::sqrt(inner_product(a, a)); }

double cosine(const NounVector& a, const NounVector& b, bool* degenerate) {
    if (degenerate) *degenerate = false;
    const double na = norm(a);
    const double nb = norm(b);
    if (na == 0.0 || nb == 0.0) {
        check_same_basis("cosine", a.basis(), b.basis());
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    return std::clamp(inner_product(a, b) / (na * nb), -1.0, 1.0);
}

NounVector epsilon_vector(BasisPtr basis) {
    NounVector v(std::move(basis));
    for (std::uint32_t i = 0; i < v.basis()->size(); ++i) v.set(i, 1.0);
    return v;
}

NounVector add(const NounVector& a, const NounVector& b) {
    check_same_basis("add", a.basis(), b.basis());
    NounVector out = a;
    for (const auto& [i, w] : b.cells()) out.add(i, w);
    return out;
}

NounVector scale(const NounVector& a, double factor) {
    NounVector out(a.basis());
    for (const auto& [i, w] : a.cells()) out.set(i, w * factor);
    return out;
}

PairSpace pair_space(const PropertyBasis& b) { return {b.size()}; }
TripleSpace triple_space(const PropertyBasis& b) { return {b.size()}; }

namespace {
void check_component(std::uint32_t c, std::size_t dim) {
    if (c >= dim)
        throw Error("index component " + std::to_string(c) +
                    " out of range for dimension " + std::to_string(dim));
}
} // namespace

std::size_t flatten(PairIndex p, std::size_t dim) {
    check_component(p.i, dim);
    check_component(p.k, dim);
    return static_cast<std::size_t>(p.i) * dim + p.k;
}

std::size_t flatten(TripleIndex t, std::size_t dim) {
    check_component(t.i, dim);
    check_component(t.k, dim);
    check_component(t.m, dim);
    return (static_cast<std::size_t>(t.i) * dim + t.k) * dim + t.m;
}

PairIndex unflatten_pair(std::size_t linear, std::size_t dim) {
    if (dim == 0 || linear >= dim * dim)
        throw Error("pair index " + std::to_string(linear) +
                    " out of range for dimension " + std::to_string(dim));
    return {static_cast<std::uint32_t>(linear / dim),
            static_cast<std::uint32_t>(linear % dim)};
}

TripleIndex unflatten_triple(std::size_t linear, std::size_t dim) {
    if (dim == 0 || linear >= dim * dim * dim)
        throw Error("triple index " + std::to_string(linear) +
                    " out of range for dimension " + std::to_string(dim));
    return {static_cast<std::uint32_t>(linear / (dim * dim)),
            static_cast<std::uint32_t>((linear / dim) % dim),
            static_cast<std::uint32_t>(linear % dim)};
}

BasisPtr read_basis(std::istream& in, std::string name) {
    std::vector<PropertyLabel> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            labels.push_back(PropertyLabel::parse(line));
        } catch (const Error& e) {
            throw Error(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return PropertyBasis::make(std::move(name), std::move(labels));
}

void write_basis(std::ostream& out, const PropertyBasis& b) {
    for (const auto& label : b.labels()) out << label.text() << '\n';
}

NounVector read_vector(std::istream& in, BasisPtr basis) {
    NounVector v(std::move(basis));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error("vector file line " + std::to_string(lineno) +
                        ": expected \"label TAB weight\"");
        const std::string label = line.substr(0, tab);
        auto pos = v.basis()->find(label);
        if (!pos)
            throw Error("vector file line " + std::to_string(lineno) +
                        ": label '" + label + "' not in basis " +
                        basis_id(*v.basis()));
        double w = 0.0;
        try {
            w = std::stod(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw Error("vector file line " + std::to_string(lineno) +
                        ": bad weight");
        }
        v.set(*pos, w);
    }
    return v;
}

void write_vector(std::ostream& out, const NounVector& v) {
    for (const auto& [i, w] : v.cells())
        out << v.basis()->label(i).text() << '\t' << format_number(w) << '\n';
}

} // namespace csem::space
