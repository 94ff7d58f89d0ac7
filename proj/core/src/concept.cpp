#include "eldef/concept.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace eldef {

struct Concept::Node {
    ConceptKind kind;
    std::string symbol;
    std::vector<Concept> children;  // filler for Exists, operands for Conj
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::shared_ptr<const Concept::Node> finish(std::shared_ptr<Concept::Node> n) {
    std::size_t h = std::hash<int>{}(static_cast<int>(n->kind));
    h = mix(h, std::hash<std::string>{}(n->symbol));
    for (const auto& c : n->children) {
        n->size += c.size();
        h = mix(h, c.hash());
    }
    if (n->kind == ConceptKind::Exists) {
        n->depth = 1 + n->children.front().depth();
    } else {
        for (const auto& c : n->children) n->depth = std::max(n->depth, c.depth());
    }
    n->hash = h;
    return n;
}

const std::shared_ptr<const Concept::Node>& top_node() {
    static const auto node = finish(std::make_shared<Concept::Node>(Concept::Node{ConceptKind::Top, {}, {}}));
    return node;
}

const std::shared_ptr<const Concept::Node>& bottom_node() {
    static const auto node = finish(std::make_shared<Concept::Node>(Concept::Node{ConceptKind::Bottom, {}, {}}));
    return node;
}

}  // namespace

Concept::Concept() : node_(top_node()) {}

Concept Concept::top() { return Concept(top_node()); }
Concept Concept::bottom() { return Concept(bottom_node()); }

Concept Concept::name(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = ConceptKind::Name;
    n->symbol = std::move(name);
    return Concept(finish(std::move(n)));
}

Concept Concept::exists(std::string role, Concept filler) {
    auto n = std::make_shared<Node>();
    n->kind = ConceptKind::Exists;
    n->symbol = std::move(role);
    n->children.push_back(std::move(filler));
    return Concept(finish(std::move(n)));
}

Concept Concept::conj(std::vector<Concept> operands) {
    if (operands.size() < 2) throw std::invalid_argument("conjunction needs at least two operands");
    auto n = std::make_shared<Node>();
    n->kind = ConceptKind::Conj;
    n->children = std::move(operands);
    return Concept(finish(std::move(n)));
}

ConceptKind Concept::kind() const noexcept { return node_->kind; }
const std::string& Concept::symbol() const noexcept { return node_->symbol; }

const Concept& Concept::filler() const {
    assert(kind() == ConceptKind::Exists);
    return node_->children.front();
}

std::span<const Concept> Concept::operands() const noexcept {
    if (kind() != ConceptKind::Conj) return {};
    return node_->children;
}

std::size_t Concept::size() const noexcept { return node_->size; }
std::size_t Concept::depth() const noexcept { return node_->depth; }
std::size_t Concept::hash() const noexcept { return node_->hash; }

std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (auto c = a.symbol().compare(b.symbol()); c != 0) return c <=> 0;
    const auto& ac = a.node_->children;
    const auto& bc = b.node_->children;
    return std::lexicographical_compare_three_way(ac.begin(), ac.end(), bc.begin(), bc.end());
}

bool operator==(const Concept& a, const Concept& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.size() != b.size()) return false;
    return (a <=> b) == 0;
}

namespace {

void flatten_into(const Concept& c, std::vector<Concept>& out) {
    if (c.kind() == ConceptKind::Conj) {
        for (const auto& op : c.operands()) flatten_into(op, out);
    } else if (!c.is_top()) {
        out.push_back(c);
    }
}

Concept build_conj(std::vector<Concept> parts) {
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (parts.empty()) return Concept::top();
    if (parts.size() == 1) return parts.front();
    return Concept::conj(std::move(parts));
}

}  // namespace

Concept canonicalize(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Top:
        case ConceptKind::Bottom:
        case ConceptKind::Name:
            return c;
        case ConceptKind::Exists: {
            Concept f = canonicalize(c.filler());
            if (f == c.filler()) return c;
            return Concept::exists(c.symbol(), std::move(f));
        }
        case ConceptKind::Conj: {
            std::vector<Concept> parts;
            for (const auto& op : c.operands()) flatten_into(canonicalize(op), parts);
            return build_conj(std::move(parts));
        }
    }
    return c;
}

Concept make_conj(const Concept& a, const Concept& b) {
    std::vector<Concept> parts;
    flatten_into(a, parts);
    flatten_into(b, parts);
    return build_conj(std::move(parts));
}

Concept make_conj(std::span<const Concept> parts) {
    std::vector<Concept> flat;
    for (const auto& p : parts) flatten_into(p, flat);
    return build_conj(std::move(flat));
}

bool is_canonical(const Concept& c) { return canonicalize(c) == c; }

void collect_subconcepts(const Concept& c, std::vector<Concept>& out) {
    out.push_back(c);
    if (c.kind() == ConceptKind::Exists) {
        collect_subconcepts(c.filler(), out);
    } else if (c.kind() == ConceptKind::Conj) {
        for (const auto& op : c.operands()) collect_subconcepts(op, out);
    }
}

std::string to_dl_string(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Top: return "⊤";
        case ConceptKind::Bottom: return "⊥";
        case ConceptKind::Name: return c.symbol();
        case ConceptKind::Exists: {
            const auto& f = c.filler();
            std::string inner = to_dl_string(f);
            if (f.kind() == ConceptKind::Conj) inner = "(" + inner + ")";
            return "∃" + c.symbol() + "." + inner;
        }
        case ConceptKind::Conj: {
            std::string s;
            for (const auto& op : c.operands()) {
                if (!s.empty()) s += " ⊓ ";
                s += to_dl_string(op);
            }
            return s;
        }
    }
    return {};
}

}  // namespace eldef
