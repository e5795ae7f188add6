#include "otkit/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "otkit/errors.hpp"

namespace otk {

namespace {

Json with_provenance(std::size_t value, const std::string& provenance) {
    return Json{{"value", value}, {"provenance", provenance}};
}

Json indices_1based(const IndexSet& s) {
    Json out = Json::array();
    for (std::size_t i : s) out.push_back(i + 1);
    return out;
}

Json support_1based(const Relation& r) {
    Json out = Json::array();
    for (std::size_t i : r.support()) out.push_back(i + 1);
    return out;
}

std::map<std::size_t, std::size_t> length_census(const std::vector<Relation>& rels) {
    std::map<std::size_t, std::size_t> census;
    for (const Relation& r : rels) ++census[r.length()];
    return census;
}

Json census_json(const std::map<std::size_t, std::size_t>& census) {
    Json out = Json::object();
    for (const auto& [len, count] : census) out[std::to_string(len)] = count;
    return out;
}

Json formality_json(const FormalityReport& report) {
    Json k_gen = Json::object();
    for (const auto& [k, flag] : report.k_generated) k_gen[std::to_string(k)] = flag;
    Json out{{"codim_ideal", with_provenance(report.codim_ideal, "formula")},
             {"codim_quadratic", with_provenance(report.codim_quadratic, "search")},
             {"quadratic_witness", indices_1based(report.quadratic_witness)},
             {"two_formal", report.two_formal},
             {"k_generated", std::move(k_gen)}};
    out["ratio_note"] =
        report.ratio_note ? Json(to_string(*report.ratio_note)) : Json(nullptr);
    return out;
}

Json prime_json(const PrimeCandidate& p) {
    Json circuits_text = Json::array();
    for (const Relation& r : p.r0_circuits) circuits_text.push_back(relation_text(r));
    return Json{{"gamma", indices_1based(p.gamma)},
                {"codim", with_provenance(p.codim, "search")},
                {"r0_members", p.r0.size()},
                {"r0_circuits", std::move(circuits_text)}};
}

Json header(const std::string& command, const ArrangementInput& input) {
    return Json{{"tool", "otkit"},
                {"command", command},
                {"input", input.descriptor},
                {"n", input.arrangement.size()},
                {"dim", input.arrangement.dim()},
                {"rank", with_provenance(input.arrangement.rank(), "formula")}};
}

}  // namespace

std::string relation_text(const Relation& r) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : r.terms()) {
        Rational coeff = c;
        if (first) {
            if (sgn(coeff) < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (sgn(coeff) < 0 ? " - " : " + ");
            coeff = abs(coeff);
        }
        first = false;
        if (coeff != 1) out << to_string(coeff) << "*";
        out << "x" << idx + 1;
    }
    return out.str();
}

RelationSet select_relations(const Arrangement& a, const std::string& selector) {
    if (selector == "circuits") return circuit_relations(a);
    if (selector == "circuits3") return circuit_relations(a, 3);
    if (selector == "basis") {
        const SubspaceBasis basis = relation_space(a);
        std::vector<Relation> members;
        for (std::size_t i = 0; i < basis.dim(); ++i)
            members.push_back(Relation::from_dense(basis.vector(i)));
        return RelationSet::validated(a, std::move(members));
    }
    if (selector.rfind("file:", 0) == 0)
        return RelationSet::validated(a, load_relations_file(selector.substr(5)));
    throw ParseError("unknown relation selector \"" + selector +
                     "\" (expected circuits, circuits3, basis, file:<path>)");
}

TermOrder parse_order(const std::string& selector, std::size_t n) {
    if (selector == "grevlex") return TermOrder::grevlex();
    if (selector == "lex") return TermOrder::lex();
    if (selector.rfind("perm:", 0) == 0) {
        std::vector<std::size_t> perm;
        std::stringstream ss(selector.substr(5));
        std::string part;
        while (std::getline(ss, part, ','))
            perm.push_back(static_cast<std::size_t>(std::stoul(part)) - 1);
        std::vector<std::size_t> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i || perm.size() != n)
                throw ParseError("perm:<sigma> must list 1.." + std::to_string(n) +
                                 " exactly once");
        return TermOrder::with_permutation(TermOrder::Kind::grevlex, perm);
    }
    throw ParseError("unknown order \"" + selector + "\"");
}

CommandResult run_analyze(const ArrangementInput& input, const CommandOptions& opt) {
    const Arrangement& a = input.arrangement;
    Json doc = header("analyze", input);
    doc["relation_space_dim"] =
        with_provenance(a.size() - a.rank(), "formula");

    const std::vector<Relation> all = circuits(a, opt.max_length);
    doc["circuits"] = Json{{"count", with_provenance(all.size(), "search")},
                           {"by_length", census_json(length_census(all))}};

    doc["formality"] = formality_json(formality_report(a));

    const std::string selector =
        opt.relations.empty() ? std::string("circuits3") : opt.relations;
    const RelationSet chosen = select_relations(a, selector);
    int exit_code = 0;
    try {
        Json primes = Json::array();
        for (const PrimeCandidate& p : minimal_primes(chosen, opt.budget))
            primes.push_back(prime_json(p));
        doc["minimal_primes"] = Json{{"relations", selector},
                                     {"count", primes.size()},
                                     {"items", std::move(primes)}};
    } catch (const BudgetExceededError& e) {
        // keep the bounds already computed; the prime enumeration alone is
        // inconclusive
        doc["minimal_primes"] =
            Json{{"relations", selector}, {"error", e.what()}};
        exit_code = 2;
    }
    return CommandResult{std::move(doc), exit_code};
}

CommandResult run_circuits(const ArrangementInput& input, const CommandOptions& opt) {
    const Arrangement& a = input.arrangement;
    Json doc = header("circuits", input);
    const std::vector<Relation> found = circuits(a, opt.max_length);
    doc["max_length"] =
        opt.max_length ? Json(*opt.max_length) : Json(nullptr);
    doc["count"] = with_provenance(found.size(), "search");
    doc["by_length"] = census_json(length_census(found));
    Json items = Json::array();
    for (const Relation& r : found) {
        items.push_back(Json{{"support", support_1based(r)},
                             {"relation", relation_text(r)},
                             {"iota", iota_of_relation(r).to_string()}});
    }
    doc["items"] = std::move(items);
    return CommandResult{std::move(doc), 0};
}

CommandResult run_formality(const ArrangementInput& input, const CommandOptions& opt) {
    Json doc = header("formality", input);
    doc["relation_space_dim"] = with_provenance(
        input.arrangement.size() - input.arrangement.rank(), "formula");
    doc["formality"] = formality_json(formality_report(input.arrangement));
    if (opt.k >= 2) {
        doc["k_requested"] = Json{
            {"k", opt.k},
            {"generated", is_k_generated(input.arrangement, opt.k)}};
    }
    return CommandResult{std::move(doc), 0};
}

CommandResult run_codim(const ArrangementInput& input, const CommandOptions& opt) {
    const Arrangement& a = input.arrangement;
    Json doc = header("codim", input);
    const std::string selector =
        opt.relations.empty() ? std::string("circuits3") : opt.relations;
    const RelationSet chosen = select_relations(a, selector);
    const CodimResult result = codim_J(chosen);
    doc["relations"] = selector;
    doc["members"] = chosen.size();
    doc["span_dim"] = with_provenance(chosen.span_dim(), "formula");
    doc["codim"] = with_provenance(result.codim, "search");
    doc["witness"] = indices_1based(result.witness);
    return CommandResult{std::move(doc), 0};
}

CommandResult run_primes(const ArrangementInput& input, const CommandOptions& opt) {
    const Arrangement& a = input.arrangement;
    Json doc = header("primes", input);
    const std::string selector =
        opt.relations.empty() ? std::string("circuits3") : opt.relations;
    const RelationSet chosen = select_relations(a, selector);
    Json items = Json::array();
    for (const PrimeCandidate& p : minimal_primes(chosen, opt.budget))
        items.push_back(prime_json(p));
    doc["relations"] = selector;
    doc["members"] = chosen.size();
    doc["count"] = items.size();
    doc["items"] = std::move(items);
    return CommandResult{std::move(doc), 0};
}

CommandResult run_verify(const ArrangementInput& input, const CommandOptions& opt) {
    const Arrangement& a = input.arrangement;
    Json doc = header("verify", input);
    const std::string selector =
        opt.relations.empty() ? std::string("circuits") : opt.relations;
    const RelationSet chosen = select_relations(a, selector);
    const std::size_t bound =
        opt.degree_bound ? *opt.degree_bound : saturation_degree_needed(chosen);
    const TermOrder ord = parse_order(opt.order, a.size());
    const SaturationRecord record =
        verify_spanning_saturation(a, chosen, bound, ord);

    doc["relations"] = selector;
    doc["degree_bound"] = bound;
    doc["order"] = ord.describe();
    Json certificates = Json::array();
    for (const SaturationEntry& entry : record.circuit_certificates) {
        certificates.push_back(
            Json{{"circuit", relation_text(entry.circuit)},
                 {"max_cofactor_degree", entry.certificate.max_cofactor_degree()},
                 {"provenance", "certificate"}});
    }
    Json reductions = Json::array();
    for (const ReductionEntry& entry : record.member_reductions) {
        reductions.push_back(Json{{"member", relation_text(entry.member)},
                                  {"reduced_to_zero", entry.reduced_to_zero}});
    }
    doc["saturation_certificates"] =
        Json{{"count", certificates.size()}, {"items", std::move(certificates)}};
    doc["member_reductions"] =
        Json{{"count", reductions.size()}, {"items", std::move(reductions)}};
    const bool passed = record.passed();
    doc["passed"] = passed;
    return CommandResult{std::move(doc), passed ? 0 : 2};
}

CommandResult run_gen(const std::string& builder,
                      const std::optional<std::string>& graph_name) {
    if (builder == "graphic" || builder == "vertex-edge") {
        if (!graph_name)
            throw ParseError("gen " + builder + " needs a graph name");
        const Graph g = graph_by_name(*graph_name);
        const Arrangement a = builder == "graphic" ? graphic_arrangement(g)
                                                   : vertex_edge_arrangement(g);
        return CommandResult{arrangement_to_forms_json(a), 0};
    }
    return CommandResult{
        arrangement_to_forms_json(builtin_arrangement(builder).arrangement), 0};
}

namespace {

void render_lines(const Json& node, const std::string& path,
                  std::ostringstream& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            render_lines(value, path.empty() ? key : path + "." + key, out);
        return;
    }
    if (node.is_array()) {
        const bool scalar_items =
            std::all_of(node.begin(), node.end(),
                        [](const Json& v) { return !v.is_structured(); });
        if (scalar_items) {
            std::string joined;
            for (const auto& v : node) {
                if (!joined.empty()) joined += ", ";
                joined += v.is_string() ? v.get<std::string>() : v.dump();
            }
            out << path << std::string(path.size() < 44 ? 44 - path.size() : 1, ' ')
                << "[" << joined << "]\n";
            return;
        }
        for (std::size_t i = 0; i < node.size(); ++i)
            render_lines(node[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    const std::string value =
        node.is_string() ? node.get<std::string>() : node.dump();
    out << path << std::string(path.size() < 44 ? 44 - path.size() : 1, ' ')
        << value << "\n";
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream out;
    render_lines(doc, "", out);
    return out.str();
}

}  // namespace otk
