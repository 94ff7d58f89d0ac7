#include "eldef/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace eldef {

namespace {

std::string format_location(SourceLocation loc, const std::string& message) {
    return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message;
}

constexpr std::string_view kThing = "owl:Thing";
constexpr std::string_view kNothing = "owl:Nothing";

bool is_word_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' || c == kReservedChar;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Ontology ontology() {
        expect_keyword("Ontology");
        expect('(');
        Ontology o;
        while (!peek_is(')')) {
            skip_ws();
            if (at_end()) fail(ParseError::Code::Syntax, "unexpected end of input, expected ')'");
            o.add(axiom());
        }
        expect(')');
        expect_end();
        return o;
    }

    Axiom axiom_only() {
        Axiom a = axiom();
        expect_end();
        return a;
    }

    Concept concept_only() {
        Concept c = concept_expr();
        expect_end();
        return c;
    }

private:
    struct Word {
        std::string text;
        SourceLocation loc;
    };

    Axiom axiom() {
        Word w = word("axiom");
        if (w.text != "SubClassOf" && w.text != "EquivalentClasses") {
            fail_at(w.loc, ParseError::Code::UnknownConstructor, "unknown axiom kind '" + w.text + "'");
        }
        expect('(');
        Concept lhs = concept_expr();
        Concept rhs = concept_expr();
        expect(')');
        return w.text == "SubClassOf" ? Axiom::sub(std::move(lhs), std::move(rhs))
                                      : Axiom::equiv(std::move(lhs), std::move(rhs));
    }

    Concept concept_expr() {
        Word w = word("concept");
        if (!peek_is('(')) {
            if (w.text == kThing) return Concept::top();
            if (w.text == kNothing) return Concept::bottom();
            return Concept::name(checked_name(w));
        }
        if (w.text == "ObjectIntersectionOf") {
            expect('(');
            std::vector<Concept> ops;
            while (!peek_is(')')) {
                skip_ws();
                if (at_end()) fail(ParseError::Code::Syntax, "unexpected end of input, expected ')'");
                ops.push_back(concept_expr());
            }
            if (ops.size() < 2) fail(ParseError::Code::Syntax, "ObjectIntersectionOf needs at least two operands");
            expect(')');
            return Concept::conj(std::move(ops));
        }
        if (w.text == "ObjectSomeValuesFrom") {
            expect('(');
            Word role = word("role name");
            std::string r = checked_name(role);
            Concept filler = concept_expr();
            expect(')');
            return Concept::exists(std::move(r), std::move(filler));
        }
        fail_at(w.loc, ParseError::Code::UnknownConstructor, "unknown class constructor '" + w.text + "'");
    }

    std::string checked_name(const Word& w) {
        if (w.text.find(kReservedChar) != std::string::npos) {
            fail_at(w.loc, ParseError::Code::ReservedCharacter,
                    "name '" + w.text + "' contains reserved character '@'");
        }
        if (w.text.find(':') != std::string::npos) {
            fail_at(w.loc, ParseError::Code::Syntax, "prefixed name '" + w.text + "' is not supported");
        }
        return w.text;
    }

    void expect_keyword(std::string_view kw) {
        Word w = word(std::string(kw));
        if (w.text != kw) fail_at(w.loc, ParseError::Code::Syntax, "expected '" + std::string(kw) + "'");
    }

    Word word(const std::string& what) {
        skip_ws();
        SourceLocation loc = loc_;
        std::string out;
        while (!at_end() && is_word_char(text_[pos_])) out += advance();
        if (out.empty()) {
            if (at_end()) fail(ParseError::Code::Syntax, "unexpected end of input, expected " + what);
            fail(ParseError::Code::Syntax, "unexpected character '" + std::string(1, text_[pos_]) + "', expected " + what);
        }
        return {std::move(out), loc};
    }

    void expect(char c) {
        skip_ws();
        if (at_end()) fail(ParseError::Code::Syntax, std::string("unexpected end of input, expected '") + c + "'");
        if (text_[pos_] != c) {
            fail(ParseError::Code::Syntax,
                 std::string("expected '") + c + "', found '" + text_[pos_] + "'");
        }
        advance();
    }

    void expect_end() {
        skip_ws();
        if (!at_end()) fail(ParseError::Code::Syntax, "trailing input");
    }

    bool peek_is(char c) {
        skip_ws();
        return !at_end() && text_[pos_] == c;
    }

    void skip_ws() {
        while (!at_end()) {
            char c = text_[pos_];
            if (c == '#') {
                while (!at_end() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++loc_.line;
            loc_.column = 1;
        } else {
            ++loc_.column;
        }
        return c;
    }

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(ParseError::Code code, const std::string& msg) { fail_at(loc_, code, msg); }
    [[noreturn]] void fail_at(SourceLocation loc, ParseError::Code code, const std::string& msg) {
        throw ParseError(code, loc, msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    SourceLocation loc_;
};

void write_concept(const Concept& c, std::string& out) {
    switch (c.kind()) {
        case ConceptKind::Top: out += kThing; break;
        case ConceptKind::Bottom: out += kNothing; break;
        case ConceptKind::Name: out += c.symbol(); break;
        case ConceptKind::Exists:
            out += "ObjectSomeValuesFrom(";
            out += c.symbol();
            out += ' ';
            write_concept(c.filler(), out);
            out += ')';
            break;
        case ConceptKind::Conj: {
            out += "ObjectIntersectionOf(";
            bool first = true;
            for (const auto& op : c.operands()) {
                if (!first) out += ' ';
                first = false;
                write_concept(op, out);
            }
            out += ')';
            break;
        }
    }
}

}  // namespace

ParseError::ParseError(Code code, SourceLocation loc, const std::string& message)
    : std::runtime_error(format_location(loc, message)), code_(code), loc_(loc), detail_(message) {}

Ontology parse_ontology(std::string_view text) { return Parser(text).ontology(); }
Concept parse_concept(std::string_view text) { return Parser(text).concept_only(); }
Axiom parse_axiom(std::string_view text) { return Parser(text).axiom_only(); }

std::string serialize(const Concept& c) {
    std::string out;
    write_concept(canonicalize(c), out);
    return out;
}

std::string serialize(const Axiom& a) {
    std::string out = a.kind == AxiomKind::SubClassOf ? "SubClassOf(" : "EquivalentClasses(";
    write_concept(canonicalize(a.lhs), out);
    out += ' ';
    write_concept(canonicalize(a.rhs), out);
    out += ')';
    return out;
}

std::string serialize(const Ontology& o) {
    std::string out = "Ontology(\n";
    for (const auto& a : o.axioms()) {
        out += "  ";
        out += serialize(a);
        out += '\n';
    }
    out += ")\n";
    return out;
}

}  // namespace eldef
