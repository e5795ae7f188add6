#ifndef OTKIT_IO_HPP
#define OTKIT_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "otkit/arrangement.hpp"

namespace otk {

using Json = nlohmann::ordered_json;

// A loaded arrangement together with the description echoed into reports.
struct ArrangementInput {
    Arrangement arrangement;
    Json descriptor;
};

// Builders reachable by name: wheel, glued:<k>, yuzvinsky, triangle,
// generic4.
ArrangementInput builtin_arrangement(const std::string& name);

// K<m>, P<m>, C<m>, wheel, glued:<k>.
Graph graph_by_name(const std::string& name);

ArrangementInput load_arrangement(const Json& doc);
ArrangementInput load_arrangement_file(const std::string& path);

// Dense relation rows as rational strings: {"relations": [["1","0",...]]}.
std::vector<Relation> load_relations_file(const std::string& path);

Json arrangement_to_forms_json(const Arrangement& a);

}  // namespace otk

#endif
