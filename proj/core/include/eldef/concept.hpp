// EL concept terms.
//
// A Concept is an immutable, reference-counted tree. Copies are cheap and
// share structure. Concepts built through the factory functions are not
// necessarily canonical; canonicalize() yields the unique representative
// (flattened, sorted, duplicate-free conjunctions without ⊤ units).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eldef {

enum class ConceptKind : std::uint8_t { Top, Bottom, Name, Exists, Conj };

class Concept {
public:
    // Defaults to ⊤.
    Concept();

    static Concept top();
    static Concept bottom();
    static Concept name(std::string name);
    static Concept exists(std::string role, Concept filler);
    // Raw n-ary conjunction; requires at least two operands.
    static Concept conj(std::vector<Concept> operands);

    ConceptKind kind() const noexcept;
    bool is_top() const noexcept { return kind() == ConceptKind::Top; }
    bool is_bottom() const noexcept { return kind() == ConceptKind::Bottom; }

    // Concept name (Name) or role name (Exists).
    const std::string& symbol() const noexcept;
    const Concept& filler() const;                 // Exists only
    std::span<const Concept> operands() const noexcept;  // Conj only

    // Constructor-node count (every ⊤, ⊥, name, ∃ and ⊓ node counts once).
    std::size_t size() const noexcept;
    // Maximal nesting of ∃.
    std::size_t depth() const noexcept;
    std::size_t hash() const noexcept;

    // Total order: constructor tag, then symbol, then operands recursively.
    friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept;
    friend bool operator==(const Concept& a, const Concept& b) noexcept;

    struct Node;

private:
    explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Concept canonicalize(const Concept& c);

// Canonical conjunction of two canonical concepts.
Concept make_conj(const Concept& a, const Concept& b);
// Canonical conjunction of any number of canonical concepts (⊤ if empty).
Concept make_conj(std::span<const Concept> parts);

bool is_canonical(const Concept& c);

// All direct and indirect subconcepts of c, including c.
void collect_subconcepts(const Concept& c, std::vector<Concept>& out);

// Human-readable DL notation (⊓, ∃, ⊤, ⊥); diagnostics only.
std::string to_dl_string(const Concept& c);

struct ConceptHash {
    std::size_t operator()(const Concept& c) const noexcept { return c.hash(); }
};

}  // namespace eldef
