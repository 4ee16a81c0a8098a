#pragma once

#include <limroot/root_system.hpp>

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace limroot {

// Satake diagram: Dynkin diagram of the complexification with black vertices
// (simple roots restricting to zero on a) and arrows (white pairs with equal
// nonzero restriction). Complex groups get the doubled diagram.
struct SatakeVertex {
    int id;
    bool black;
};

struct SatakeEdge {
    int a, b;
    int bond = 1;        // 1, 2, 3
    int shortward = -1;  // for bond >= 2: id of the endpoint on the short-root side
};

struct SatakeDiagram {
    std::vector<SatakeVertex> vertices;  // sorted by id
    std::vector<SatakeEdge> edges;
    std::vector<std::pair<int, int>> arrows;  // unordered white pairs, stored (min,max)

    bool has_vertex(int id) const;
    bool is_black(int id) const;
    std::size_t white_count() const;
};

void validate_diagram(const SatakeDiagram& d);

SatakeDiagram satake_of(const RealFormDescriptor& desc);

// White restriction classes (vertex or arrow pair) in diagram order; the
// k-th class corresponds to the k-th simple restricted root.
struct RestrictClass {
    std::vector<int> vertex_ids;
    std::size_t simple_index;  // 1-based
};
std::vector<RestrictClass> restrict_simple(const SatakeDiagram& d);

// Removes S, then every arrow-partner of a member of S; keeps black vertices.
SatakeDiagram delete_white(const SatakeDiagram& d, const std::set<int>& S);

// All deletion results over subsets of restriction classes, deduplicated up
// to color/arrow-preserving diagram isomorphism, sorted by canonical key.
std::vector<SatakeDiagram> parabolic_components(const SatakeDiagram& d);

std::string canonical_key(const SatakeDiagram& d);
bool diagram_isomorphic(const SatakeDiagram& a, const SatakeDiagram& b);

// Drops connected components consisting entirely of black vertices.
SatakeDiagram strip_black_components(const SatakeDiagram& d);

std::string to_dot(const SatakeDiagram& d);

}  // namespace limroot
