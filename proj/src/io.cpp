#include "otkit/io.hpp"

#include <fstream>

#include "otkit/errors.hpp"

namespace otk {

namespace {

Json json_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return doc;
}

std::vector<QVector> parse_forms(const Json& forms, std::size_t dim) {
    std::vector<QVector> columns;
    for (const auto& form : forms) {
        if (!form.is_array() || form.size() != dim)
            throw ParseError("every form needs exactly " + std::to_string(dim) +
                             " coordinates");
        QVector column;
        for (const auto& entry : form)
            column.push_back(parse_rational(entry.get<std::string>()));
        columns.push_back(std::move(column));
    }
    return columns;
}

Graph parse_graph(const Json& doc) {
    const int m = doc.at("m").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("edges must be pairs of 1-based vertices");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::make(m, std::move(edges));
}

}  // namespace

ArrangementInput builtin_arrangement(const std::string& name) {
    Json descriptor{{"kind", "builtin"}, {"name", name}};
    if (name == "wheel")
        return {graphic_arrangement(wheel_graph()), descriptor};
    if (name.rfind("glued:", 0) == 0) {
        const int k = std::stoi(name.substr(6));
        return {graphic_arrangement(glued_wheel(k)), descriptor};
    }
    if (name == "yuzvinsky") return {yuzvinsky_variant(), descriptor};
    if (name == "triangle") return {triangle_arrangement(), descriptor};
    if (name == "generic4") return {generic4_arrangement(), descriptor};
    throw ParseError("unknown builtin arrangement \"" + name + "\"");
}

Graph graph_by_name(const std::string& name) {
    if (name == "wheel") return wheel_graph();
    if (name.rfind("glued:", 0) == 0) return glued_wheel(std::stoi(name.substr(6)));
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'P' || name[0] == 'C')) {
        const int m = std::stoi(name.substr(1));
        if (name[0] == 'K') return complete_graph(m);
        if (name[0] == 'P') return path_graph(m);
        return cycle_graph(m);
    }
    throw ParseError("unknown graph \"" + name + "\" (expected K<m>, P<m>, C<m>, wheel, glued:<k>)");
}

ArrangementInput load_arrangement(const Json& doc) {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "forms") {
        const std::size_t dim = doc.at("dim").get<std::size_t>();
        auto columns = parse_forms(doc.at("forms"), dim);
        Json descriptor{{"kind", "forms"},
                        {"dim", dim},
                        {"n", columns.size()}};
        return {Arrangement::from_columns(dim, columns), descriptor};
    }
    if (kind == "graph") {
        const std::string variant = doc.at("variant").get<std::string>();
        const Graph g = parse_graph(doc);
        Json descriptor{{"kind", "graph"},
                        {"variant", variant},
                        {"m", g.vertex_count},
                        {"edges", g.edges.size()}};
        if (variant == "graphic") return {graphic_arrangement(g), descriptor};
        if (variant == "vertex-edge")
            return {vertex_edge_arrangement(g), descriptor};
        throw ParseError("unknown graph variant \"" + variant + "\"");
    }
    if (kind == "builtin")
        return builtin_arrangement(doc.at("name").get<std::string>());
    throw ParseError("unknown arrangement kind \"" + kind + "\"");
}

ArrangementInput load_arrangement_file(const std::string& path) {
    return load_arrangement(json_from_file(path));
}

std::vector<Relation> load_relations_file(const std::string& path) {
    const Json doc = json_from_file(path);
    std::vector<Relation> out;
    for (const auto& row : doc.at("relations")) {
        QVector dense;
        for (const auto& entry : row)
            dense.push_back(parse_rational(entry.get<std::string>()));
        out.push_back(Relation::from_dense(dense));
    }
    return out;
}

Json arrangement_to_forms_json(const Arrangement& a) {
    Json forms = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) {
        Json column = Json::array();
        for (const Rational& x : a.column(j)) column.push_back(to_string(x));
        forms.push_back(std::move(column));
    }
    return Json{{"kind", "forms"}, {"dim", a.dim()}, {"forms", std::move(forms)}};
}

}  // namespace otk
