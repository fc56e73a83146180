#include "qsfill/config.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "qsfill/errors.hpp"

namespace qsfill {

std::string to_string(Role r) {
    switch (r) {
        case Role::L: return "L";
        case Role::A: return "A";
        case Role::B: return "B";
        case Role::D: return "D";
        case Role::C: return "C";
        case Role::E: return "E";
        case Role::Other: return "other";
    }
    return "?";
}

Role role_from_string(std::string_view s) {
    for (Role r : {Role::L, Role::A, Role::B, Role::D, Role::C, Role::E, Role::Other})
        if (to_string(r) == s) return r;
    throw DomainError("unknown role '" + std::string(s) + "'");
}

std::string RewriteStep::str() const {
    switch (kind) {
        case Kind::BlowUpAtPoint: return "blow-up at point " + std::to_string(point);
        case Kind::BlowUpFreshOnCurve: return "blow-up at a fresh point of " + curve;
        case Kind::BlowDown: return "blow-down " + curve;
    }
    return "?";
}

bool IncidencePoint::cusp() const {
    return std::any_of(branches.begin(), branches.end(), [](const Branch& b) { return b.mult == 2; });
}

const Branch* IncidencePoint::branch(std::string_view curve) const {
    for (const auto& b : branches)
        if (b.curve == curve) return &b;
    return nullptr;
}

std::int64_t IncidencePoint::local(std::string_view a, std::string_view b) const {
    const Branch* ba = branch(a);
    const Branch* bb = branch(b);
    if (!ba || !bb) return 0;
    for (const auto& c : contacts)
        if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) return c.value;
    return static_cast<std::int64_t>(ba->mult) * bb->mult;
}

const Curve* Configuration::curve(std::string_view name) const {
    for (const auto& c : curves)
        if (c.name == name) return &c;
    return nullptr;
}

Curve* Configuration::curve(std::string_view name) {
    for (auto& c : curves)
        if (c.name == name) return &c;
    return nullptr;
}

const Curve& Configuration::at(std::string_view name) const {
    const Curve* c = curve(name);
    if (!c) throw DomainError("unknown curve " + std::string(name));
    return *c;
}

const IncidencePoint* Configuration::point(int id) const {
    for (const auto& p : points)
        if (p.id == id) return &p;
    return nullptr;
}

std::int64_t Configuration::pair(std::string_view a, std::string_view b) const {
    return lattice.pair(at(a).cls.coeffs, at(b).cls.coeffs);
}

std::optional<int> Configuration::point_between(std::string_view a, std::string_view b) const {
    std::optional<int> best;
    for (const auto& p : points)
        if (p.contains(a) && p.contains(b) && (!best || p.id < *best)) best = p.id;
    return best;
}

std::vector<int> Configuration::points_on(std::string_view name) const {
    std::vector<int> out;
    for (const auto& p : points)
        if (p.contains(name)) out.push_back(p.id);
    return out;
}

std::vector<std::string> Configuration::curves_with_role(Role r) const {
    std::vector<std::string> out;
    for (const auto& c : curves)
        if (c.role == r) out.push_back(c.name);
    return out;
}

void Configuration::add_curve(std::string name, Coeffs coeffs, CurveKind kind, Role role) {
    if (curve(name)) throw DomainError("duplicate curve " + name);
    if (coeffs.size() != static_cast<std::size_t>(lattice.rank()))
        throw DomainError("class of " + name + " does not match the lattice");
    curves.push_back({std::move(name), {std::move(coeffs), kind}, role});
}

int Configuration::add_point(std::vector<Branch> branches, std::vector<Contact> contacts) {
    for (const auto& b : branches)
        if (!curve(b.curve)) throw DomainError("point on unknown curve " + b.curve);
    int id = next_point++;
    points.push_back({id, std::move(branches), std::move(contacts)});
    return id;
}

void Configuration::rename(std::string_view from, std::string to) {
    if (from == to) return;
    if (curve(to)) throw DomainError("rename: " + to + " already exists");
    Curve* c = curve(from);
    if (!c) throw DomainError("rename: unknown curve " + std::string(from));
    std::string old(from);
    c->name = to;
    for (auto& p : points) {
        for (auto& b : p.branches)
            if (b.curve == old) b.curve = to;
        for (auto& ct : p.contacts) {
            if (ct.a == old) ct.a = to;
            if (ct.b == old) ct.b = to;
        }
    }
}

void Configuration::set_role(std::string_view name, Role r) {
    Curve* c = curve(name);
    if (!c) throw DomainError("set_role: unknown curve " + std::string(name));
    c->role = r;
}

namespace {

std::string new_curve_name(Configuration& c) {
    std::string name;
    do {
        name = "E" + std::to_string(c.next_serial++);
    } while (c.curve(name));
    return name;
}

int new_exceptional(Configuration& c) {
    c.lattice.add_exceptional();
    for (auto& cv : c.curves) cv.cls.coeffs.push_back(0);
    return c.lattice.rank() - 1;
}

}  // namespace

std::string Configuration::blow_up_at(int point_id) {
    auto pit = std::find_if(points.begin(), points.end(), [&](const IncidencePoint& p) { return p.id == point_id; });
    if (pit == points.end()) throw DomainError("blow_up: unknown point " + std::to_string(point_id));
    if (pit->branches.empty()) throw DomainError("blow_up: point lies on no curve");
    IncidencePoint p = *pit;
    points.erase(pit);

    int idx = new_exceptional(*this);
    std::string e = new_curve_name(*this);
    for (const auto& br : p.branches) {
        Curve* cv = curve(br.curve);
        cv->cls.coeffs[static_cast<std::size_t>(idx)] = -br.mult;
        if (br.mult == 2) cv->cls.kind = CurveKind::EmbeddedSphere;
    }
    Coeffs ec = lattice.zero();
    ec[static_cast<std::size_t>(idx)] = 1;
    curves.push_back({e, {std::move(ec), CurveKind::EmbeddedSphere}, Role::E});

    // branches with a common tangent direction go to the same point of E
    std::size_t n = p.branches.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& bi = p.branches[i];
            const auto& bj = p.branches[j];
            if (p.local(bi.curve, bj.curve) > static_cast<std::int64_t>(bi.mult) * bj.mult)
                parent[find(i)] = find(j);
        }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    for (const auto& [root, members] : groups) {
        std::vector<Branch> brs{{e, 1}};
        std::vector<Contact> cts;
        for (std::size_t i : members) {
            const auto& bi = p.branches[i];
            brs.push_back({bi.curve, 1});
            if (bi.mult > 1) cts.push_back({bi.curve, e, bi.mult});
        }
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                const auto& bx = p.branches[members[x]];
                const auto& by = p.branches[members[y]];
                std::int64_t v = p.local(bx.curve, by.curve) - static_cast<std::int64_t>(bx.mult) * by.mult;
                if (v > 1) cts.push_back({bx.curve, by.curve, v});
            }
        add_point(std::move(brs), std::move(cts));
    }
    return e;
}

std::string Configuration::blow_up_fresh(std::string_view curve_name) {
    if (!curve(curve_name)) throw DomainError("blow_up: unknown curve " + std::string(curve_name));
    int idx = new_exceptional(*this);
    std::string e = new_curve_name(*this);
    curve(curve_name)->cls.coeffs[static_cast<std::size_t>(idx)] = -1;
    Coeffs ec = lattice.zero();
    ec[static_cast<std::size_t>(idx)] = 1;
    curves.push_back({e, {std::move(ec), CurveKind::EmbeddedSphere}, Role::E});
    add_point({{std::string(curve_name), 1}, {e, 1}});
    return e;
}

void Configuration::blow_down(std::string_view curve_name) {
    const Curve* ec = curve(curve_name);
    if (!ec) throw DomainError("blow_down: unknown curve " + std::string(curve_name));
    if (ec->cls.kind != CurveKind::EmbeddedSphere || self(curve_name) != -1)
        throw DomainError("blow_down: " + std::string(curve_name) + " is not an embedded -1-sphere");
    const std::string e(curve_name);
    const Coeffs ev = ec->cls.coeffs;

    std::vector<const IncidencePoint*> on_e;
    for (const auto& p : points)
        if (p.contains(e)) on_e.push_back(&p);

    // how each other curve meets E
    struct Meet {
        std::string curve;
        std::int64_t total = 0;
        int count = 0;
        int mult = 1;
    };
    std::vector<Meet> meets;
    for (const auto& cv : curves) {
        if (cv.name == e) continue;
        Meet m{cv.name};
        for (const auto* p : on_e) {
            const Branch* br = p->branch(cv.name);
            if (!br) continue;
            if (br->mult != 1)
                throw DomainError("blow_down: " + cv.name + " is singular at a point of " + e);
            m.total += p->local(cv.name, e);
            ++m.count;
        }
        if (m.count == 0) continue;
        if (m.count > 1)
            throw DomainError("blow_down: " + cv.name + " meets " + e + " twice and would become nodal");
        if (m.total == 2) {
            bool has_cusp = cv.cls.kind == CurveKind::CuspidalRational;
            if (cv.role != Role::D || has_cusp)
                throw DomainError("blow_down: " + cv.name + " would acquire a cusp");
            m.mult = 2;
        } else if (m.total > 2) {
            throw DomainError("blow_down: " + cv.name + " would acquire a worse singularity");
        }
        meets.push_back(m);
    }

    std::vector<Branch> brs;
    std::vector<Contact> cts;
    for (const auto& m : meets) brs.push_back({m.curve, m.mult});
    for (std::size_t i = 0; i < meets.size(); ++i)
        for (std::size_t j = i + 1; j < meets.size(); ++j) {
            std::int64_t v = meets[i].total * meets[j].total;
            for (const auto* p : on_e) v += p->local(meets[i].curve, meets[j].curve);
            if (v > static_cast<std::int64_t>(meets[i].mult) * meets[j].mult)
                cts.push_back({meets[i].curve, meets[j].curve, v});
        }

    // lattice: project every class onto the orthogonal complement of E
    for (auto& cv : curves) {
        if (cv.name == e) continue;
        std::int64_t k = lattice.pair(cv.cls.coeffs, ev);
        if (k != 0)
            for (std::size_t i = 0; i < ev.size(); ++i) cv.cls.coeffs[i] += k * ev[i];
    }
    for (const auto& m : meets)
        if (m.mult == 2) curve(m.curve)->cls.kind = CurveKind::CuspidalRational;

    int unit = -1;
    int nonzero = 0;
    for (std::size_t i = 0; i < ev.size(); ++i)
        if (ev[i] != 0) {
            ++nonzero;
            if (ev[i] == 1) unit = static_cast<int>(i);
        }
    bool basis = nonzero == 1 && unit >= lattice.base_rank();

    curves.erase(std::remove_if(curves.begin(), curves.end(), [&](const Curve& c) { return c.name == e; }), curves.end());
    points.erase(std::remove_if(points.begin(), points.end(), [&](const IncidencePoint& p) { return p.contains(e); }),
                 points.end());
    if (brs.size() >= 2 || (brs.size() == 1 && brs[0].mult == 2)) add_point(std::move(brs), std::move(cts));

    if (basis) {
        lattice.drop_exceptional(unit);
        for (auto& cv : curves) cv.cls.coeffs.erase(cv.cls.coeffs.begin() + unit);
    } else {
        lattice.shift_c1(ev);
    }
}

std::string Configuration::apply(const RewriteStep& step) {
    switch (step.kind) {
        case RewriteStep::Kind::BlowUpAtPoint: return blow_up_at(step.point);
        case RewriteStep::Kind::BlowUpFreshOnCurve: return blow_up_fresh(step.curve);
        case RewriteStep::Kind::BlowDown: blow_down(step.curve); return {};
    }
    return {};
}

std::optional<std::string> Configuration::coherence_error() const {
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].cls.coeffs.size() != static_cast<std::size_t>(lattice.rank()))
            return "class of " + curves[i].name + " has the wrong rank";
        int cusps = 0;
        for (const auto& p : points) {
            const Branch* br = p.branch(curves[i].name);
            if (br && br->mult == 2) ++cusps;
            if (br && (br->mult < 1 || br->mult > 2)) return "bad multiplicity on " + curves[i].name;
        }
        bool cuspidal = curves[i].cls.kind == CurveKind::CuspidalRational;
        if (cusps > 1 || cuspidal != (cusps == 1)) return "cusp bookkeeping of " + curves[i].name + " is inconsistent";
        if (cusps == 1 && curves[i].role != Role::D) return "cusp on " + curves[i].name + ", which is not D";
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            std::int64_t sum = 0;
            for (const auto& p : points) sum += p.local(curves[i].name, curves[j].name);
            std::int64_t h = lattice.pair(curves[i].cls.coeffs, curves[j].cls.coeffs);
            if (sum != h)
                return curves[i].name + "." + curves[j].name + " is " + std::to_string(h) + " in homology but " +
                       std::to_string(sum) + " at the marked points";
        }
    }
    for (const auto& p : points)
        for (const auto& b : p.branches)
            if (!curve(b.curve)) return "point " + std::to_string(p.id) + " refers to unknown " + b.curve;
    return std::nullopt;
}

std::optional<std::string> Configuration::adjunction_error() const {
    for (const auto& cv : curves)
        if (!adjunction_check(lattice, cv.cls))
            return "adjunction fails for " + cv.name + " (c1.C = " + std::to_string(c1_pairing(lattice, cv.cls)) +
                   ", C.C = " + std::to_string(self_intersection(lattice, cv.cls)) + ")";
    return std::nullopt;
}

WeightedGraph Configuration::graph() const {
    WeightedGraph g;
    for (const auto& cv : curves) g.vertices.push_back({cv.name, self(cv.name), cv.cls.kind});
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            std::int64_t v = 0;
            for (const auto& p : points) v += p.local(curves[i].name, curves[j].name);
            if (v > 0) g.edges.push_back({curves[i].name, curves[j].name, static_cast<int>(v)});
        }
    for (const auto& p : points) {
        std::vector<std::string> names;
        for (const auto& b : p.branches) names.push_back(b.curve);
        if (p.cusp()) g.markers.push_back({"cusp", names});
        else if (!p.contacts.empty()) g.markers.push_back({"tangency", names});
        else if (names.size() >= 3) g.markers.push_back({"triple", names});
    }
    return g;
}

Configuration blow_up(const Configuration& c, const RewriteStep& step) {
    if (step.kind == RewriteStep::Kind::BlowDown) throw DomainError("blow_up: step is a blow-down");
    Configuration out = c;
    out.apply(step);
    return out;
}

Configuration blow_down(const Configuration& c, std::string_view curve) {
    Configuration out = c;
    out.blow_down(curve);
    return out;
}

namespace {

using PointKey = std::pair<std::vector<std::pair<std::string, int>>, std::vector<std::tuple<std::string, std::string, std::int64_t>>>;

PointKey point_key(const IncidencePoint& p) {
    PointKey k;
    for (const auto& b : p.branches) k.first.emplace_back(b.curve, b.mult);
    std::sort(k.first.begin(), k.first.end());
    for (const auto& c : p.contacts) {
        auto a = c.a, b = c.b;
        if (b < a) std::swap(a, b);
        k.second.emplace_back(a, b, c.value);
    }
    std::sort(k.second.begin(), k.second.end());
    return k;
}

}  // namespace

bool equivalent(const Configuration& a, const Configuration& b) {
    if (!(a.lattice == b.lattice)) return false;
    if (a.curves.size() != b.curves.size()) return false;
    for (const auto& ca : a.curves) {
        const Curve* cb = b.curve(ca.name);
        if (!cb || !(ca == *cb)) return false;
    }
    std::vector<PointKey> ka, kb;
    for (const auto& p : a.points) ka.push_back(point_key(p));
    for (const auto& p : b.points) kb.push_back(point_key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

Configuration realize(const WeightedGraph& g) {
    std::size_t n = g.vertices.size();
    std::vector<Coeffs> gram(n, Coeffs(n, 0));
    Coeffs c1(n, 0);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[g.vertices[i].name] = i;
    for (std::size_t i = 0; i < n; ++i) {
        gram[i][i] = g.vertices[i].weight;
        c1[i] = g.vertices[i].weight + (g.vertices[i].kind == CurveKind::EmbeddedSphere ? 2 : 0);
    }
    for (const auto& e : g.edges) {
        gram[index.at(e.u)][index.at(e.v)] += e.multiplicity;
        gram[index.at(e.v)][index.at(e.u)] += e.multiplicity;
    }
    Configuration c;
    c.lattice = AmbientLattice::plumbing(std::move(gram), std::move(c1));
    for (std::size_t i = 0; i < n; ++i)
        c.add_curve(g.vertices[i].name, c.lattice.unit(static_cast<int>(i)), g.vertices[i].kind, Role::Other);
    for (const auto& e : g.edges) {
        std::vector<Contact> cts;
        if (e.multiplicity > 1) cts.push_back({e.u, e.v, e.multiplicity});
        c.add_point({{e.u, 1}, {e.v, 1}}, std::move(cts));
    }
    return c;
}

TransformPlan transform_plan(const SingularityId& s) {
    if (s.family == Family::Cyclic) throw DomainError("cusp_transform: cyclic ids need no transformation");
    TransformPlan plan;
    std::int64_t b = s.b();
    // third branch after normalization, read from the central curve outward
    std::vector<std::string> branch;
    for (std::int64_t i = b - 2; i >= 1; --i) branch.push_back("N" + std::to_string(i));
    std::size_t len = divisor_arm(s, 3).terms.size();
    for (std::size_t j = 1; j <= len; ++j) branch.push_back("arm3[" + std::to_string(j) + "]");
    plan.cusp_curve = branch.front();
    plan.string.assign(branch.begin() + 1, branch.end());

    bool with_fibre = s.family == Family::Dihedral || classify_type(s) == SingularityType::Type31;
    plan.steps.push_back(RewriteStep::down("central"));
    plan.steps.push_back(RewriteStep::down("arm1[1]"));
    if (with_fibre) {
        plan.a_step = static_cast<int>(plan.steps.size());
        plan.steps.push_back(RewriteStep::fresh_on("arm2[1]"));
    }
    plan.steps.push_back(RewriteStep::down("arm2[1]"));
    if (s.family != Family::Dihedral && classify_type(s) == SingularityType::Type31) plan.b_curve = "arm2[2]";
    return plan;
}

namespace {

std::vector<Configuration> run_transform(const SingularityId& s) {
    TransformPlan plan = transform_plan(s);
    std::vector<Configuration> trace{realize(normalize_central(s))};
    Configuration cur = trace.back();
    cur.set_role(plan.cusp_curve, Role::D);
    std::string a_name;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        std::string made = cur.apply(plan.steps[i]);
        if (static_cast<int>(i) == plan.a_step) a_name = made;
        if (auto err = cur.coherence_error()) throw DomainError("cusp_transform: " + *err);
        if (auto err = cur.adjunction_error()) throw DomainError("cusp_transform: " + *err);
        trace.push_back(cur);
    }
    Configuration& out = trace.back();
    out.rename(plan.cusp_curve, "D");
    if (!a_name.empty()) {
        out.rename(a_name, "A");
        out.set_role("A", Role::A);
    }
    if (!plan.b_curve.empty()) {
        out.rename(plan.b_curve, "B");
        out.set_role("B", Role::B);
    }
    for (std::size_t i = 0; i < plan.string.size(); ++i) {
        std::string name = "C" + std::to_string(i + 1);
        out.rename(plan.string[i], name);
        out.set_role(name, Role::C);
    }
    if (out.at("D").cls.kind != CurveKind::CuspidalRational) throw DomainError("cusp_transform: D has no cusp");
    std::int64_t dd = out.self("D");
    if (dd > (a_name.empty() ? 9 : 8)) throw DomainError("cusp_transform: D.D exceeds its bound");
    for (const auto& name : out.curves_with_role(Role::C))
        if (out.self(name) > -1) throw DomainError("cusp_transform: string curve with C.C > -1");
    return trace;
}

}  // namespace

Configuration cusp_transform(const SingularityId& s) { return run_transform(s).back(); }

std::vector<Configuration> cusp_transform_trace(const SingularityId& s) { return run_transform(s); }

}  // namespace qsfill
