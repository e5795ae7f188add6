#ifndef OTKIT_TESTS_FIXTURES_HPP
#define OTKIT_TESTS_FIXTURES_HPP

#include <vector>

#include "otkit/arrangement.hpp"
#include "otkit/covers.hpp"

namespace fixtures {

inline otk::Arrangement tri() { return otk::triangle_arrangement(); }
inline otk::Arrangement gen4() { return otk::generic4_arrangement(); }
inline otk::Arrangement wg() {
    return otk::graphic_arrangement(otk::wheel_graph());
}
inline otk::Arrangement yz() { return otk::yuzvinsky_variant(); }

// The four triangle relations of the wheel graph.
inline otk::RelationSet wg_triangles() {
    const otk::Arrangement a = wg();
    return otk::RelationSet::validated(a, otk::circuits(a, 3));
}

// 1-based index literals, as the hyperplanes are numbered in reports.
inline otk::IndexSet idx(std::initializer_list<std::size_t> one_based) {
    otk::IndexSet s;
    for (std::size_t i : one_based) s.push_back(i - 1);
    return s;
}

inline std::vector<std::size_t> support1(const otk::Relation& r) {
    std::vector<std::size_t> s;
    for (std::size_t i : r.support()) s.push_back(i + 1);
    return s;
}

}  // namespace fixtures

#endif
