#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eldef/definability.hpp"
#include "eldef/reasoner.hpp"
#include "eldef/syntax.hpp"

namespace eldef::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string ontology_path;
    std::string concept_text;
    std::string query_text;
    std::vector<std::string> signature;
    std::vector<std::string> exclude;
    bool all_roles = false;
    std::size_t max_definitions = 0;     // 0: not given
    std::size_t max_concept_size = 0;    // 0: not given
    std::string format = "text";
    bool explain = false;
    bool semantic_dedup = false;
    std::size_t index = 0;
    std::size_t n = 0;
    std::string system = "B";
};

Ontology load_ontology(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read ontology file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_ontology(buf.str());
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

template <class T, class F>
T parse_arg(const std::string& what, const std::string& text, F parse) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw UsageError(what + ": " + e.what());
    }
}

RuleSystem system_of(const std::string& s) { return s == "A" ? RuleSystem::A : RuleSystem::B; }

Symbol resolve(const std::string& item, const Signature& known, std::ostream& err) {
    auto named = [&](const std::string& prefix, SymbolKind kind) -> std::optional<Symbol> {
        if (item.rfind(prefix, 0) != 0) return std::nullopt;
        return Symbol{kind, item.substr(prefix.size())};
    };
    std::optional<Symbol> s = named("role:", SymbolKind::RoleName);
    if (!s) s = named("class:", SymbolKind::ConceptName);
    if (s) {
        if (!is_valid_symbol_name(s->name)) throw UsageError("invalid symbol name '" + s->name + "'");
        return *s;
    }
    if (!is_valid_symbol_name(item)) throw UsageError("invalid symbol name '" + item + "'");
    if (known.contains_concept(item)) return Symbol::concept_name(item);
    if (known.contains_role(item)) return Symbol::role(item);
    err << "warning: '" << item << "' does not occur in the input; treating it as a class name\n";
    return Symbol::concept_name(item);
}

Signature effective_signature(const Config& cfg, const Ontology& o, const Concept& c, std::ostream& err) {
    Signature known = signature_of(o);
    known.insert(signature_of(c));
    Signature sigma;
    auto add_resolved = [&](const std::string& item, Signature& into, bool removing) {
        // A bare name used both as class and role names both.
        if (item.find(':') == std::string::npos && known.contains_concept(item) && known.contains_role(item)) {
            into.insert(Symbol::concept_name(item));
            into.insert(Symbol::role(item));
            return;
        }
        Symbol s = resolve(item, known, err);
        if (removing) {
            into.erase(s);
        } else {
            into.insert(s);
        }
    };
    if (!cfg.exclude.empty()) {
        sigma = signature_of(o);
        Signature removed;
        for (const auto& item : cfg.exclude) add_resolved(item, removed, false);
        sigma = sigma.minus(removed);
    } else {
        for (const auto& item : cfg.signature) add_resolved(item, sigma, false);
    }
    if (cfg.all_roles) {
        for (const auto& s : signature_of(o)) {
            if (s.kind == SymbolKind::RoleName) sigma.insert(s);
        }
    }
    return sigma;
}

DefineOptions define_options(const Config& cfg) {
    DefineOptions opt;
    if (const char* env = std::getenv("ELDEF_MAX_DEFINITIONS")) {
        try {
            opt.max_definitions = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("ELDEF_MAX_DEFINITIONS must be a non-negative integer");
        }
    }
    if (cfg.max_definitions) opt.max_definitions = cfg.max_definitions;
    if (cfg.max_concept_size) opt.labels.max_concept_size = cfg.max_concept_size;
    opt.semantic_dedup = cfg.semantic_dedup;
    return opt;
}

// First proof of lhs ⊑ rhs, or of lhs ⊑ ⊥ when only that is derived.
std::string explain_inclusion(const Ontology& o, const Concept& lhs, const Concept& rhs, RuleSystem system) {
    InferenceLog log = saturate(o, {lhs, rhs}, system);
    auto goal = log.inclusion(lhs, rhs);
    if (!goal || !log.derived(*goal)) goal = log.inclusion(lhs, Concept::bottom());
    std::string out;
    if (goal) {
        ProofLimits one;
        one.max_proofs = 1;
        for_each_proof(log, *goal, one, [&](const Proof& p) {
            out = render_proof(p);
            return false;
        });
    }
    return out;
}

Json stats_json(const DefinitionResult& r) {
    Json s;
    s["conclusions"] = r.stats.conclusions;
    s["inferences"] = r.stats.inferences;
    s["labelled_nodes"] = r.stats.labels.nodes;
    s["labelled_inferences"] = r.stats.labels.inferences;
    s["max_label_size"] = r.stats.labels.max_label_size;
    s["candidates"] = r.stats.candidates;
    return s;
}

struct DefineRun {
    Ontology ontology;
    Concept target;
    Signature sigma;
    DefinitionResult result;
};

DefineRun run_define(const Config& cfg, std::ostream& err) {
    DefineRun run;
    run.ontology = load_ontology(cfg.ontology_path);
    run.target = parse_arg<Concept>("--concept", cfg.concept_text, [](const std::string& t) { return parse_concept(t); });
    run.sigma = effective_signature(cfg, run.ontology, run.target, err);
    run.result = define(run.ontology, run.target, run.sigma, define_options(cfg));
    return run;
}

int cmd_define(const Config& cfg, std::ostream& out, std::ostream& err) {
    DefineRun run = run_define(cfg, err);
    const auto& r = run.result;
    const RuleSystem sys = system_of(cfg.system);
    if (cfg.format == "json") {
        Json j;
        j["format"] = 1;
        j["definable"] = r.definable;
        j["definitions"] = Json::array();
        for (const auto& d : r.definitions) j["definitions"].push_back(serialize(d));
        j["truncated"] = r.truncated;
        j["stats"] = stats_json(r);
        if (cfg.explain) {
            j["explanations"] = Json::array();
            for (const auto& d : r.definitions) {
                Json e;
                e["definition"] = serialize(d);
                e["concept_to_definition"] = explain_inclusion(run.ontology, run.target, d, sys);
                e["definition_to_concept"] = explain_inclusion(run.ontology, d, run.target, sys);
                j["explanations"].push_back(std::move(e));
            }
        }
        out << j.dump(2) << '\n';
    } else {
        if (!r.definable) out << "no definition of " << serialize(run.target) << " exists in the given signature\n";
        for (const auto& d : r.definitions) {
            out << serialize(d) << '\n';
            if (cfg.explain) {
                out << explain_inclusion(run.ontology, run.target, d, sys);
                out << explain_inclusion(run.ontology, d, run.target, sys);
            }
        }
    }
    if (r.truncated) err << "warning: caps reached, the list of definitions may be incomplete\n";
    return r.definable ? kOk : kNegative;
}

int cmd_explain(const Config& cfg, std::ostream& out, std::ostream& err) {
    DefineRun run = run_define(cfg, err);
    const auto& defs = run.result.definitions;
    if (cfg.index >= defs.size()) {
        throw UsageError("definition index " + std::to_string(cfg.index) + " out of range (" +
                         std::to_string(defs.size()) + " definitions)");
    }
    const Concept& d = defs[cfg.index];
    const RuleSystem sys = system_of(cfg.system);
    out << "definition " << cfg.index << ": " << serialize(d) << '\n';
    out << "\n" << serialize(Axiom::sub(run.target, d)) << '\n';
    out << explain_inclusion(run.ontology, run.target, d, sys);
    out << "\n" << serialize(Axiom::sub(d, run.target)) << '\n';
    out << explain_inclusion(run.ontology, d, run.target, sys);
    return kOk;
}

int cmd_entails(const Config& cfg, std::ostream& out) {
    Ontology o = load_ontology(cfg.ontology_path);
    Axiom q = canonicalize(parse_arg<Axiom>("--query", cfg.query_text, [](const std::string& t) { return parse_axiom(t); }));
    const RuleSystem sys = system_of(cfg.system);
    const bool yes = entails(o, q, sys);
    if (cfg.format == "json") {
        Json j;
        j["format"] = 1;
        j["query"] = serialize(q);
        j["entailed"] = yes;
        if (cfg.explain && yes) {
            j["proofs"] = Json::array();
            j["proofs"].push_back(explain_inclusion(o, q.lhs, q.rhs, sys));
            if (q.kind == AxiomKind::EquivalentClasses) j["proofs"].push_back(explain_inclusion(o, q.rhs, q.lhs, sys));
        }
        out << j.dump(2) << '\n';
    } else {
        out << (yes ? "entailed" : "not entailed") << ": " << serialize(q) << '\n';
        if (cfg.explain && yes) {
            out << explain_inclusion(o, q.lhs, q.rhs, sys);
            if (q.kind == AxiomKind::EquivalentClasses) out << explain_inclusion(o, q.rhs, q.lhs, sys);
        }
    }
    return yes ? kOk : kNegative;
}

int cmd_generate(const Config& cfg, std::ostream& out) {
    if (cfg.n < 1) throw UsageError("-n must be at least 1");
    out << serialize(generate_family(cfg.n).ontology);
    return kOk;
}

int cmd_classify(const Config& cfg, std::ostream& out) {
    Ontology o = load_ontology(cfg.ontology_path);
    std::vector<Concept> names;
    for (const auto& s : signature_of(o)) {
        if (s.kind == SymbolKind::ConceptName) names.push_back(Concept::name(s.name));
    }
    InferenceLog log = saturate(o, names, system_of(cfg.system));
    for (const auto& a : names) {
        if (log.entails(a, Concept::bottom())) {
            out << serialize(Axiom::sub(a, Concept::bottom())) << '\n';
            continue;
        }
        for (const auto& b : names) {
            if (a != b && log.entails(a, b)) out << serialize(Axiom::sub(a, b)) << '\n';
        }
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Concept definitions in a target signature for EL ontologies", "eldef"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_system = [&](CLI::App* sub) {
        sub->add_option("--system", cfg.system, "Rule system: A (basic) or B (tracing)")->check(CLI::IsMember({"A", "B"}));
    };
    auto add_definition_inputs = [&](CLI::App* sub) {
        sub->add_option("--ontology", cfg.ontology_path, "Ontology file")->required();
        sub->add_option("--concept", cfg.concept_text, "Concept to define")->required();
        auto* inc = sub->add_option("--signature", cfg.signature, "Target symbols (role:/class: prefixes allowed)")
                        ->delimiter(',');
        auto* exc = sub->add_option("--exclude", cfg.exclude, "Symbols the definitions must not use")->delimiter(',');
        inc->excludes(exc);
        sub->add_flag("--all-roles", cfg.all_roles, "Add every role of the ontology to the signature");
        sub->add_option("--max-definitions", cfg.max_definitions, "Keep at most this many definitions")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-concept-size", cfg.max_concept_size, "Drop label members larger than this")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--semantic-dedup", cfg.semantic_dedup, "Merge definitions equivalent wrt the ontology");
        add_system(sub);
    };

    auto* define_cmd = app.add_subcommand("define", "Compute definitions of a concept");
    add_definition_inputs(define_cmd);
    define_cmd->add_flag("--explain", cfg.explain, "Print proofs for every definition");
    add_format(define_cmd);

    auto* explain_cmd = app.add_subcommand("explain", "Prove one definition equivalent to the concept");
    add_definition_inputs(explain_cmd);
    explain_cmd->add_option("--index", cfg.index, "0-based definition index")->required();

    auto* entails_cmd = app.add_subcommand("entails", "Decide an entailment");
    entails_cmd->add_option("--ontology", cfg.ontology_path, "Ontology file")->required();
    entails_cmd->add_option("--query", cfg.query_text, "SubClassOf(..) or EquivalentClasses(..)")->required();
    entails_cmd->add_flag("--explain", cfg.explain, "Print a proof");
    add_format(entails_cmd);
    add_system(entails_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "Print the doubly exponential family ontology");
    generate_cmd->add_option("-n", cfg.n, "Family size")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Print all entailed inclusions between class names");
    classify_cmd->add_option("--ontology", cfg.ontology_path, "Ontology file")->required();
    add_system(classify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*define_cmd) return cmd_define(cfg, out, err);
        if (*explain_cmd) return cmd_explain(cfg, out, err);
        if (*entails_cmd) return cmd_entails(cfg, out);
        if (*generate_cmd) return cmd_generate(cfg, out);
        if (*classify_cmd) return cmd_classify(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kTruncated;
    } catch (const SoundnessError& e) {
        err << "internal error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace eldef::cli
