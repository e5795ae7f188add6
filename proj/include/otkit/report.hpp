#ifndef OTKIT_REPORT_HPP
#define OTKIT_REPORT_HPP

#include <optional>
#include <string>

#include "otkit/formality.hpp"
#include "otkit/io.hpp"

namespace otk {

// Relation rendered by ascending hyperplane index, e.g. "x1 + x5 - x8".
std::string relation_text(const Relation& r);

struct CommandOptions {
    std::string relations;  // circuits | circuits3 | basis | file:<path>
    std::optional<std::size_t> max_length;
    std::size_t k = 2;
    std::optional<std::size_t> degree_bound;
    std::string order = "grevlex";  // grevlex | lex | perm:<sigma>
    std::optional<std::size_t> budget;
};

struct CommandResult {
    Json document;
    int exit_code = 0;
};

RelationSet select_relations(const Arrangement& a, const std::string& selector);
TermOrder parse_order(const std::string& selector, std::size_t n);

CommandResult run_analyze(const ArrangementInput& input, const CommandOptions& opt);
CommandResult run_circuits(const ArrangementInput& input, const CommandOptions& opt);
CommandResult run_formality(const ArrangementInput& input, const CommandOptions& opt);
CommandResult run_codim(const ArrangementInput& input, const CommandOptions& opt);
CommandResult run_primes(const ArrangementInput& input, const CommandOptions& opt);
CommandResult run_verify(const ArrangementInput& input, const CommandOptions& opt);
CommandResult run_gen(const std::string& builder,
                      const std::optional<std::string>& graph_name);

// Flat fixed-width rendering of the structured document.
std::string render_text(const Json& doc);

}  // namespace otk

#endif
