#include "qsfill/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "qsfill/checked.hpp"
#include "qsfill/errors.hpp"

namespace qsfill {

namespace {

// Star-shaped resolutions: arms alpha_i/beta_i with alpha = (2, 3, alpha3).
// The residue of m is M(1 - 1/2 - beta2/3 - beta3/alpha3) + M, i.e. m is
// M times the orbifold Euler number of the resolution.
struct PlatonicRow {
    Family family;
    std::int64_t residue;
    std::int64_t beta2;
    std::int64_t beta3;
};

constexpr PlatonicRow kPlatonic[] = {
    {Family::Tetrahedral, 1, 2, 2},  {Family::Tetrahedral, 3, 2, 1},  {Family::Tetrahedral, 5, 1, 1},
    {Family::Octahedral, 1, 2, 3},   {Family::Octahedral, 5, 1, 3},   {Family::Octahedral, 7, 2, 1},
    {Family::Octahedral, 11, 1, 1},  {Family::Icosahedral, 1, 2, 4},  {Family::Icosahedral, 7, 2, 3},
    {Family::Icosahedral, 11, 1, 4}, {Family::Icosahedral, 13, 2, 2}, {Family::Icosahedral, 17, 1, 3},
    {Family::Icosahedral, 19, 2, 1}, {Family::Icosahedral, 23, 1, 2}, {Family::Icosahedral, 29, 1, 1},
};

std::int64_t alpha3(Family f) {
    switch (f) {
        case Family::Tetrahedral: return 3;
        case Family::Octahedral: return 4;
        case Family::Icosahedral: return 5;
        default: throw DomainError("not a platonic family");
    }
}

const PlatonicRow& platonic_row(const SingularityId& s) {
    for (const auto& row : kPlatonic)
        if (row.family == s.family && row.residue == s.residue()) return row;
    throw DomainError("no catalog entry for " + s.str());
}

std::int64_t parse_int(std::string_view t) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty())
        throw DomainError("bad integer '" + std::string(t) + "'");
    return v;
}

std::string arm_name(int arm, std::size_t j) {
    return "arm" + std::to_string(arm) + "[" + std::to_string(j) + "]";
}

void add_arm(WeightedGraph& g, int arm, const HJExpansion& e) {
    std::string prev = "central";
    for (std::size_t j = 0; j < e.terms.size(); ++j) {
        std::string name = arm_name(arm, j + 1);
        g.add_vertex(name, -e.terms[j]);
        g.add_edge(prev, name);
        prev = name;
    }
}

// n/q = [b, b_1..b_r] split into b and the tail.
std::pair<std::int64_t, HJExpansion> dihedral_split(const SingularityId& s) {
    HJExpansion e = hj_expand(s.n, s.q);
    HJExpansion tail{std::vector<std::int64_t>(e.terms.begin() + 1, e.terms.end())};
    return {e.terms.front(), tail};
}

}  // namespace

SingularityId SingularityId::cyclic(std::int64_t n, std::int64_t q) {
    if (!(0 < q && q < n) || std::gcd(n, q) != 1)
        throw DomainError("cyclic id needs 0 < q < n and gcd(n,q) = 1");
    SingularityId s;
    s.family = Family::Cyclic;
    s.n = n;
    s.q = q;
    return s;
}

SingularityId SingularityId::dihedral(std::int64_t n, std::int64_t q) {
    if (!(1 < q && q < n) || std::gcd(n, q) != 1)
        throw DomainError("dihedral id needs 1 < q < n and gcd(n,q) = 1");
    SingularityId s;
    s.family = Family::Dihedral;
    s.n = n;
    s.q = q;
    return s;
}

static SingularityId make_platonic(Family f, std::int64_t m) {
    SingularityId s;
    s.family = f;
    s.m = m;
    if (m < 1) throw DomainError("platonic id needs m >= 1");
    bool ok = false;
    for (const auto& row : kPlatonic)
        if (row.family == f && row.residue == m % s.modulus()) ok = true;
    if (!ok) throw DomainError(s.str() + ": m is not in an admissible residue class");
    return s;
}

SingularityId SingularityId::tetrahedral(std::int64_t m) { return make_platonic(Family::Tetrahedral, m); }
SingularityId SingularityId::octahedral(std::int64_t m) { return make_platonic(Family::Octahedral, m); }
SingularityId SingularityId::icosahedral(std::int64_t m) { return make_platonic(Family::Icosahedral, m); }

SingularityId SingularityId::platonic(Family f, std::int64_t b, std::int64_t r) {
    if (b < 2) throw DomainError("platonic id needs b >= 2");
    SingularityId probe;
    probe.family = f;
    return make_platonic(f, probe.modulus() * (b - 2) + r);
}

SingularityId SingularityId::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw DomainError("singularity id must look like A:n,q D:n,q T:m O:m I:m");
    std::string_view fam = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    if (fam == "A" || fam == "D") {
        auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw DomainError("expected n,q after " + std::string(fam) + ":");
        std::int64_t n = parse_int(rest.substr(0, comma));
        std::int64_t q = parse_int(rest.substr(comma + 1));
        return fam == "A" ? cyclic(n, q) : dihedral(n, q);
    }
    std::int64_t m = 0;
    if (auto open = rest.find('('); open != std::string_view::npos) {
        // label form M(b-2)+r
        auto close = rest.find(")+");
        if (close == std::string_view::npos || rest.substr(close - 2, 2) != "-2")
            throw DomainError("expected M(b-2)+r after " + std::string(fam) + ":");
        std::int64_t mod = parse_int(rest.substr(0, open));
        std::int64_t b = parse_int(rest.substr(open + 1, close - 2 - open - 1));
        std::int64_t r = parse_int(rest.substr(close + 2));
        std::int64_t want = fam == "T" ? 6 : fam == "O" ? 12 : fam == "I" ? 30 : 0;
        if (mod != want) throw DomainError("modulus " + std::to_string(mod) + " does not match family " + std::string(fam));
        if (b < 2 || r <= 0 || r >= mod) throw DomainError("label out of range");
        m = checked::add(checked::mul(mod, b - 2), r);
    } else {
        m = parse_int(rest);
    }
    if (fam == "T") return tetrahedral(m);
    if (fam == "O") return octahedral(m);
    if (fam == "I") return icosahedral(m);
    throw DomainError("unknown family '" + std::string(fam) + "'");
}

bool SingularityId::is_platonic() const {
    return family == Family::Tetrahedral || family == Family::Octahedral || family == Family::Icosahedral;
}

std::int64_t SingularityId::modulus() const {
    switch (family) {
        case Family::Tetrahedral: return 6;
        case Family::Octahedral: return 12;
        case Family::Icosahedral: return 30;
        default: throw DomainError("modulus: not a platonic id");
    }
}

std::int64_t SingularityId::residue() const { return m % modulus(); }

std::int64_t SingularityId::b() const {
    if (is_platonic()) return (m - residue()) / modulus() + 2;
    if (family == Family::Dihedral) return hj_expand(n, q).terms.front();
    throw DomainError("b: undefined for cyclic ids");
}

std::string SingularityId::str() const {
    switch (family) {
        case Family::Cyclic: return "A:" + std::to_string(n) + "," + std::to_string(q);
        case Family::Dihedral: return "D:" + std::to_string(n) + "," + std::to_string(q);
        case Family::Tetrahedral: return "T:" + std::to_string(m);
        case Family::Octahedral: return "O:" + std::to_string(m);
        case Family::Icosahedral: return "I:" + std::to_string(m);
    }
    return "?";
}

std::string SingularityId::label() const {
    if (!is_platonic()) return str();
    return std::to_string(modulus()) + "(" + std::to_string(b()) + "-2)+" + std::to_string(residue());
}

std::string to_string(SingularityType t) {
    switch (t) {
        case SingularityType::Type32: return "(3,2)";
        case SingularityType::Type31: return "(3,1)";
        case SingularityType::Both: return "both";
    }
    return "?";
}

const Vertex* WeightedGraph::find(std::string_view name) const {
    for (const auto& v : vertices)
        if (v.name == name) return &v;
    return nullptr;
}

Vertex* WeightedGraph::find(std::string_view name) {
    for (auto& v : vertices)
        if (v.name == name) return &v;
    return nullptr;
}

std::int64_t WeightedGraph::weight(std::string_view name) const {
    const Vertex* v = find(name);
    if (!v) throw DomainError("no vertex " + std::string(name));
    return v->weight;
}

std::vector<std::string> WeightedGraph::neighbors(std::string_view name) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
        if (e.u == name) out.push_back(e.v);
        else if (e.v == name) out.push_back(e.u);
    }
    return out;
}

bool WeightedGraph::adjacent(std::string_view a, std::string_view b) const {
    for (const auto& e : edges)
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    return false;
}

bool WeightedGraph::is_tree() const {
    if (vertices.empty()) return false;
    if (edges.size() + 1 != vertices.size()) return false;
    for (const auto& e : edges)
        if (e.multiplicity != 1) return false;
    std::set<std::string> seen{vertices.front().name};
    std::vector<std::string> stack{vertices.front().name};
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        for (auto& nb : neighbors(cur))
            if (seen.insert(nb).second) stack.push_back(nb);
    }
    return seen.size() == vertices.size();
}

void WeightedGraph::add_vertex(std::string name, std::int64_t weight) {
    if (find(name)) throw DomainError("duplicate vertex " + name);
    vertices.push_back({std::move(name), weight, CurveKind::EmbeddedSphere});
}

void WeightedGraph::add_edge(std::string u, std::string v, int mult) {
    if (!find(u) || !find(v)) throw DomainError("edge between unknown vertices");
    edges.push_back({std::move(u), std::move(v), mult});
}

void WeightedGraph::blow_up_edge(std::string_view u, std::string_view v, std::string new_name) {
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
        return (e.u == u && e.v == v) || (e.u == v && e.v == u);
    });
    if (it == edges.end() || it->multiplicity != 1)
        throw DomainError("blow_up_edge: no transversal intersection of " + std::string(u) + " and " + std::string(v));
    edges.erase(it);
    find(u)->weight -= 1;
    find(v)->weight -= 1;
    add_vertex(new_name, -1);
    add_edge(std::string(u), new_name);
    add_edge(new_name, std::string(v));
}

std::vector<std::int64_t> platonic_residues(Family f) {
    std::vector<std::int64_t> out;
    for (const auto& row : kPlatonic)
        if (row.family == f) out.push_back(row.residue);
    return out;
}

HJExpansion resolution_arm(const SingularityId& s, int arm) {
    if (s.family == Family::Dihedral) {
        if (arm == 1 || arm == 2) return HJExpansion{{2}};
        if (arm == 3) return dihedral_split(s).second;
        throw DomainError("arm index must be 1, 2 or 3");
    }
    const auto& row = platonic_row(s);
    switch (arm) {
        case 1: return hj_expand(2, 1);
        case 2: return hj_expand(3, row.beta2);
        case 3: return hj_expand(alpha3(s.family), row.beta3);
        default: throw DomainError("arm index must be 1, 2 or 3");
    }
}

HJExpansion divisor_arm(const SingularityId& s, int arm) {
    return hj_dual(resolution_arm(s, arm));
}

WeightedGraph resolution_graph(const SingularityId& s) {
    WeightedGraph g;
    if (s.family == Family::Cyclic) {
        auto e = hj_expand(s.n, s.q);
        for (std::size_t i = 0; i < e.terms.size(); ++i) {
            g.add_vertex("C" + std::to_string(i + 1), -e.terms[i]);
            if (i) g.add_edge("C" + std::to_string(i), "C" + std::to_string(i + 1));
        }
        return g;
    }
    g.add_vertex("central", -s.b());
    for (int arm = 1; arm <= 3; ++arm) add_arm(g, arm, resolution_arm(s, arm));
    return g;
}

WeightedGraph compactifying_divisor(const SingularityId& s) {
    WeightedGraph g;
    if (s.family == Family::Cyclic) {
        // L is a +1 line; blowing it down must leave the chain whose
        // boundary is the link with reversed orientation, so C_1 carries
        // 1 - c_1 rather than -c_1.
        auto c = hj_dual(s.n, s.q);
        g.add_vertex("L", 1);
        std::string prev = "L";
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            std::string name = "C" + std::to_string(i + 1);
            g.add_vertex(name, i == 0 ? 1 - c.terms[i] : -c.terms[i]);
            g.add_edge(prev, name);
            prev = name;
        }
        return g;
    }
    // star with three arms: orientation reversal sends -b to b-3 and each
    // arm to its dual chain
    g.add_vertex("central", s.b() - 3);
    for (int arm = 1; arm <= 3; ++arm) add_arm(g, arm, divisor_arm(s, arm));
    return g;
}

SingularityType classify_type(const SingularityId& s) {
    if (!s.is_platonic()) throw DomainError("classify_type: only tetrahedral, octahedral and icosahedral ids");
    bool two_twos = false, one_three = false;
    for (int arm = 1; arm <= 3; ++arm) {
        auto e = resolution_arm(s, arm);
        if (e.terms == std::vector<std::int64_t>{2, 2}) two_twos = true;
        if (e.terms == std::vector<std::int64_t>{3}) one_three = true;
    }
    if (two_twos && one_three) return SingularityType::Both;
    if (two_twos) return SingularityType::Type32;
    if (one_three) return SingularityType::Type31;
    throw DomainError("classify_type: " + s.str() + " has neither branch shape");
}

WeightedGraph normalize_central(const SingularityId& s) {
    if (!s.is_platonic() && s.family != Family::Dihedral)
        throw DomainError("normalize_central: cyclic ids have no central curve");
    WeightedGraph g = compactifying_divisor(s);
    // the third branch is arm3 throughout; for T 6(b-2)+1 and 6(b-2)+5 the
    // second and third arms coincide, so arm3 is just one of the two
    std::string corner = "arm3[1]";
    for (std::int64_t i = 1; i <= s.b() - 2; ++i) {
        std::string name = "N" + std::to_string(i);
        g.blow_up_edge("central", corner, name);
        corner = name;
    }
    return g;
}

std::int64_t third_branch_a(const SingularityId& s) {
    WeightedGraph g = normalize_central(s);
    std::string first = s.b() >= 3 ? "N" + std::to_string(s.b() - 2) : "arm3[1]";
    return -g.weight(first);
}

}  // namespace qsfill
