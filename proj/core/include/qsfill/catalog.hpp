#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsfill/hj.hpp"
#include "qsfill/lattice.hpp"

namespace qsfill {

enum class Family { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

// Parsed from "A:n,q", "D:n,q", "T:m", "O:m", "I:m".
struct SingularityId {
    Family family = Family::Cyclic;
    std::int64_t n = 0, q = 0;  // cyclic, dihedral
    std::int64_t m = 0;         // tetrahedral, octahedral, icosahedral

    static SingularityId cyclic(std::int64_t n, std::int64_t q);
    static SingularityId dihedral(std::int64_t n, std::int64_t q);
    static SingularityId tetrahedral(std::int64_t m);
    static SingularityId octahedral(std::int64_t m);
    static SingularityId icosahedral(std::int64_t m);
    // Platonic id from b and residue, m = M(b-2)+r.
    static SingularityId platonic(Family f, std::int64_t b, std::int64_t r);
    static SingularityId parse(std::string_view text);

    bool is_platonic() const;
    std::int64_t modulus() const;  // 6, 12, 30
    std::int64_t residue() const;
    std::int64_t b() const;        // central weight of the resolution is -b
    std::string str() const;
    // "6(3-2)+1" style label used by descriptors; str() for cyclic/dihedral
    std::string label() const;

    bool operator==(const SingularityId&) const = default;
    auto operator<=>(const SingularityId&) const = default;
};

struct Vertex {
    std::string name;
    std::int64_t weight = 0;
    CurveKind kind = CurveKind::EmbeddedSphere;
    bool operator==(const Vertex&) const = default;
};

struct Edge {
    std::string u, v;
    int multiplicity = 1;
    bool operator==(const Edge&) const = default;
};

// Annotation on a shared point: "cusp", "tangency" or "triple".
struct Marker {
    std::string kind;
    std::vector<std::string> curves;
    bool operator==(const Marker&) const = default;
};

struct WeightedGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Marker> markers;

    const Vertex* find(std::string_view name) const;
    Vertex* find(std::string_view name);
    std::int64_t weight(std::string_view name) const;
    std::vector<std::string> neighbors(std::string_view name) const;
    bool adjacent(std::string_view a, std::string_view b) const;
    bool is_tree() const;

    void add_vertex(std::string name, std::int64_t weight);
    void add_edge(std::string u, std::string v, int mult = 1);
    // Blow up the transversal intersection of u and v: a new -1 vertex sits
    // between them and both weights drop by one.
    void blow_up_edge(std::string_view u, std::string_view v, std::string new_name);

    bool operator==(const WeightedGraph&) const = default;
};

enum class SingularityType { Type32, Type31, Both };

std::string to_string(SingularityType t);

WeightedGraph resolution_graph(const SingularityId& s);
WeightedGraph compactifying_divisor(const SingularityId& s);
SingularityType classify_type(const SingularityId& s);
WeightedGraph normalize_central(const SingularityId& s);

// Weights (as positive numbers) of one arm of a star-shaped resolution,
// read from the central curve outward.  arm is 1, 2 or 3.
HJExpansion resolution_arm(const SingularityId& s, int arm);
// The same arm in the compactifying divisor (dual chain).
HJExpansion divisor_arm(const SingularityId& s, int arm);
// -weight of the first curve of the third branch after normalization.
std::int64_t third_branch_a(const SingularityId& s);

// Residues of m admitted for a platonic family, ascending.
std::vector<std::int64_t> platonic_residues(Family f);

}  // namespace qsfill
