#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsfill/catalog.hpp"
#include "qsfill/lattice.hpp"

namespace qsfill {

enum class Role { L, A, B, D, C, E, Other };

std::string to_string(Role r);
Role role_from_string(std::string_view s);

struct Curve {
    std::string name;
    CurveClass cls;
    Role role = Role::Other;
    bool operator==(const Curve&) const = default;
};

// A curve passing through a marked point with the given multiplicity; 2
// means the (2,3)-cusp sits there.
struct Branch {
    std::string curve;
    int mult = 1;
    bool operator==(const Branch&) const = default;
};

// Local intersection number of two branches at a point when it exceeds
// the product of multiplicities (tangency, or a smooth branch tangent to
// the cusp).
struct Contact {
    std::string a, b;
    std::int64_t value = 0;
    bool operator==(const Contact&) const = default;
};

struct IncidencePoint {
    int id = 0;
    std::vector<Branch> branches;
    std::vector<Contact> contacts;

    bool cusp() const;
    const Branch* branch(std::string_view curve) const;
    bool contains(std::string_view curve) const { return branch(curve) != nullptr; }
    std::int64_t local(std::string_view a, std::string_view b) const;
    bool operator==(const IncidencePoint&) const = default;
};

struct RewriteStep {
    enum class Kind { BlowUpAtPoint, BlowUpFreshOnCurve, BlowDown };
    Kind kind = Kind::BlowUpAtPoint;
    int point = 0;       // BlowUpAtPoint
    std::string curve;   // BlowUpFreshOnCurve, BlowDown
    bool operator==(const RewriteStep&) const = default;

    static RewriteStep at_point(int id) { return {Kind::BlowUpAtPoint, id, {}}; }
    static RewriteStep fresh_on(std::string c) { return {Kind::BlowUpFreshOnCurve, 0, std::move(c)}; }
    static RewriteStep down(std::string c) { return {Kind::BlowDown, 0, std::move(c)}; }
    std::string str() const;
};

class Configuration {
public:
    AmbientLattice lattice;
    std::vector<Curve> curves;
    std::vector<IncidencePoint> points;
    int next_point = 1;
    int next_serial = 1;

    const Curve* curve(std::string_view name) const;
    Curve* curve(std::string_view name);
    const Curve& at(std::string_view name) const;
    const IncidencePoint* point(int id) const;

    std::int64_t pair(std::string_view a, std::string_view b) const;
    std::int64_t self(std::string_view a) const { return pair(a, a); }
    // Smallest id of a point carrying both curves.
    std::optional<int> point_between(std::string_view a, std::string_view b) const;
    std::vector<int> points_on(std::string_view name) const;
    std::vector<std::string> curves_with_role(Role r) const;

    void add_curve(std::string name, Coeffs coeffs, CurveKind kind, Role role);
    int add_point(std::vector<Branch> branches, std::vector<Contact> contacts = {});
    void rename(std::string_view from, std::string to);
    void set_role(std::string_view name, Role r);

    // In-place rewrites; the blow-ups return the name of the new curve.
    std::string blow_up_at(int point_id);
    std::string blow_up_fresh(std::string_view curve_name);
    void blow_down(std::string_view curve_name);
    std::string apply(const RewriteStep& step);

    // First violated invariant, if any.
    std::optional<std::string> coherence_error() const;
    std::optional<std::string> adjunction_error() const;

    WeightedGraph graph() const;
};

Configuration blow_up(const Configuration& c, const RewriteStep& step);
Configuration blow_down(const Configuration& c, std::string_view curve);

// Same lattice, curves and incidences up to renumbering of points.
bool equivalent(const Configuration& a, const Configuration& b);

// Plumbing realization of a weighted graph: one basis vector per vertex,
// one marked point per edge.
Configuration realize(const WeightedGraph& g);

// The fixed rewrite sequence turning the normalized compactifying divisor
// into the cusp-curve configuration, for dihedral and platonic ids.
struct TransformPlan {
    std::string cusp_curve;            // becomes D
    std::vector<RewriteStep> steps;
    int a_step = -1;                   // index of the blow-up that creates A
    std::string b_curve;               // becomes B, type (3,1) only
    std::vector<std::string> string;   // becomes C_1..C_k
};

TransformPlan transform_plan(const SingularityId& s);

// Runs transform_plan on realize(normalize_central(s)); roles and names
// D, A, B, C1..Ck are assigned on the result.
Configuration cusp_transform(const SingularityId& s);
// Every intermediate configuration, starting with the normalized divisor.
std::vector<Configuration> cusp_transform_trace(const SingularityId& s);

}  // namespace qsfill
