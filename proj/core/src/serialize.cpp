#include "qsfill/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "qsfill/errors.hpp"

namespace qsfill {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j, int indent) { return j.dump(indent); }

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DomainError(std::string("unexpected JSON shape: ") + e.what());
    }
}

json descriptor_json(const FillingDescriptor& d) {
    json j;
    j["singularity"] = d.singularity.str();
    j["label"] = d.singularity.label();
    j["dd"] = d.dd;
    j["string"] = d.string;
    j["case"] = to_string(d.case_tag);
    if (d.case_tag == CaseTag::CaseII) {
        j["i"] = d.case_i;
        j["j"] = d.case_j;
    }
    json a = json::array();
    for (const auto& x : d.attachments) a.push_back({x.count, x.index});
    j["attachments"] = a;
    j["base"] = base_name(d.base);
    j["model"] = to_string(d.base);
    return j;
}

// Model implied by base and case when a fixture leaves it out.
StandardModel infer_model(const SingularityId& s, const std::string& base, CaseTag c) {
    if (c == CaseTag::CaseI) return StandardModel::CuspQuadricTwoFibres_Q;
    if (c == CaseTag::CaseII) return StandardModel::CuspQuadricThreeFibres_Q;
    switch (s.family) {
        case Family::Cyclic: return StandardModel::TwoLines_P2;
        case Family::Dihedral:
            return base == "Q" ? StandardModel::CuspQuadricOneFibre_Q : StandardModel::CuspCubicPlusLine_blownP2;
        default: return base == "Q" ? StandardModel::CuspQuadric_Q : StandardModel::CuspCubic_P2;
    }
}

FillingDescriptor descriptor_of(const json& j) {
    return guarded([&] {
        FillingDescriptor d;
        d.singularity = SingularityId::parse(j.at("singularity").get<std::string>());
        d.dd = j.at("dd").get<std::int64_t>();
        d.string = j.at("string").get<std::vector<std::int64_t>>();
        std::string c = j.value("case", "none");
        if (c == "none") d.case_tag = CaseTag::None;
        else if (c == "I") d.case_tag = CaseTag::CaseI;
        else if (c == "II") d.case_tag = CaseTag::CaseII;
        else throw DomainError("unknown case '" + c + "'");
        if (d.case_tag == CaseTag::CaseII) {
            d.case_i = j.at("i").get<std::int64_t>();
            d.case_j = j.at("j").get<std::int64_t>();
        }
        for (const auto& a : j.at("attachments")) d.attachments.push_back({a.at(0).get<std::int64_t>(), a.at(1).get<std::int64_t>()});
        std::sort(d.attachments.begin(), d.attachments.end(),
                  [](const Attachment& x, const Attachment& y) { return x.index < y.index; });
        if (j.contains("model")) d.base = standard_model_from_string(j.at("model").get<std::string>());
        else d.base = infer_model(d.singularity, j.value("base", "P2"), d.case_tag);
        return d;
    });
}

json graph_json(const WeightedGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back({{"name", v.name}, {"weight", v.weight}, {"kind", to_string(v.kind)}});
    j["edges"] = json::array();
    for (const auto& e : g.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"multiplicity", e.multiplicity}});
    j["markers"] = json::array();
    for (const auto& m : g.markers) j["markers"].push_back({{"kind", m.kind}, {"curves", m.curves}});
    return j;
}

CurveKind kind_of(const std::string& s) {
    if (s == "sphere") return CurveKind::EmbeddedSphere;
    if (s == "cuspidal") return CurveKind::CuspidalRational;
    throw DomainError("unknown curve kind '" + s + "'");
}

json step_json(const RewriteStep& s) {
    switch (s.kind) {
        case RewriteStep::Kind::BlowUpAtPoint: return {{"op", "blow_up_at_point"}, {"point", s.point}};
        case RewriteStep::Kind::BlowUpFreshOnCurve: return {{"op", "blow_up_fresh"}, {"curve", s.curve}};
        case RewriteStep::Kind::BlowDown: return {{"op", "blow_down"}, {"curve", s.curve}};
    }
    return {};
}

RewriteStep step_of(const json& j) {
    std::string op = j.at("op").get<std::string>();
    if (op == "blow_up_at_point") return RewriteStep::at_point(j.at("point").get<int>());
    if (op == "blow_up_fresh") return RewriteStep::fresh_on(j.at("curve").get<std::string>());
    if (op == "blow_down") return RewriteStep::down(j.at("curve").get<std::string>());
    throw DomainError("unknown rewrite op '" + op + "'");
}

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string signed_weight(std::int64_t w) { return (w > 0 ? "+" : "") + std::to_string(w); }

}  // namespace

std::string to_json(const FillingDescriptor& d, int indent) { return dump(descriptor_json(d), indent); }

std::string to_json(const std::vector<FillingDescriptor>& v, int indent) {
    json a = json::array();
    for (const auto& d : v) a.push_back(descriptor_json(d));
    return dump(a, indent);
}

std::string to_json(const WeightedGraph& g, int indent) { return dump(graph_json(g), indent); }

std::string to_json(const Configuration& c, int indent) {
    json j;
    const auto& lat = c.lattice;
    json l;
    l["base"] = to_string(lat.base_model());
    l["blowups"] = lat.blowup_count();
    if (lat.base_model() == BaseModel::Plumbing) {
        json gram = json::array();
        for (int i = 0; i < lat.base_rank(); ++i) {
            json row = json::array();
            for (int k = 0; k < lat.base_rank(); ++k) row.push_back(lat.form(i, k));
            gram.push_back(row);
        }
        l["gram"] = gram;
    }
    l["c1"] = lat.c1_covector();
    l["contractions"] = lat.contractions();
    j["lattice"] = l;
    j["curves"] = json::array();
    for (const auto& cv : c.curves)
        j["curves"].push_back({{"name", cv.name},
                               {"role", to_string(cv.role)},
                               {"kind", to_string(cv.cls.kind)},
                               {"class", cv.cls.coeffs},
                               {"self", c.self(cv.name)}});
    j["points"] = json::array();
    for (const auto& p : c.points) {
        json pj;
        pj["id"] = p.id;
        pj["cusp"] = p.cusp();
        pj["branches"] = json::array();
        for (const auto& b : p.branches) pj["branches"].push_back({{"curve", b.curve}, {"mult", b.mult}});
        pj["contacts"] = json::array();
        for (const auto& ct : p.contacts) pj["contacts"].push_back({{"a", ct.a}, {"b", ct.b}, {"value", ct.value}});
        j["points"].push_back(pj);
    }
    j["next_point"] = c.next_point;
    j["next_serial"] = c.next_serial;
    return dump(j, indent);
}

std::string to_json(const Witness& w, int indent) {
    json j;
    j["singularity"] = w.singularity.str();
    j["model"] = to_string(w.model);
    j["steps"] = json::array();
    for (const auto& s : w.steps) j["steps"].push_back(step_json(s));
    j["labels"] = json::array();
    for (const auto& [from, to] : w.labels) j["labels"].push_back({from, to});
    return dump(j, indent);
}

std::string hj_json(std::int64_t n, std::int64_t q, int indent) {
    json j;
    j["n"] = n;
    j["q"] = q;
    j["terms"] = hj_expand(n, q).terms;
    j["dual_terms"] = hj_dual(n, q).terms;
    return dump(j, indent);
}

FillingDescriptor descriptor_from_json(std::string_view text) { return descriptor_of(parse(text)); }

std::vector<FillingDescriptor> descriptors_from_json(std::string_view text) {
    json j = parse(text);
    if (!j.is_array()) throw DomainError("expected a JSON array of descriptors");
    std::vector<FillingDescriptor> out;
    for (const auto& x : j) out.push_back(descriptor_of(x));
    return out;
}

WeightedGraph graph_from_json(std::string_view text) {
    json j = parse(text);
    return guarded([&] {
        WeightedGraph g;
        for (const auto& v : j.at("vertices"))
            g.vertices.push_back({v.at("name").get<std::string>(), v.at("weight").get<std::int64_t>(),
                                  kind_of(v.value("kind", "sphere"))});
        for (const auto& e : j.at("edges"))
            g.edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(), e.value("multiplicity", 1)});
        if (j.contains("markers"))
            for (const auto& m : j.at("markers"))
                g.markers.push_back({m.at("kind").get<std::string>(), m.at("curves").get<std::vector<std::string>>()});
        return g;
    });
}

Configuration configuration_from_json(std::string_view text) {
    json j = parse(text);
    return guarded([&] {
        Configuration c;
        const auto& l = j.at("lattice");
        std::string base = l.at("base").get<std::string>();
        int blowups = l.at("blowups").get<int>();
        if (base == "P2") c.lattice = AmbientLattice::projective_plane(blowups);
        else if (base == "Q") c.lattice = AmbientLattice::quadric(blowups);
        else if (base == "plumbing") {
            auto gram = l.at("gram").get<std::vector<Coeffs>>();
            Coeffs c1 = l.at("c1").get<Coeffs>();
            Coeffs base_c1(c1.begin(), c1.begin() + static_cast<std::ptrdiff_t>(gram.size()));
            c.lattice = AmbientLattice::plumbing(std::move(gram), std::move(base_c1));
            for (int i = 0; i < blowups; ++i) c.lattice.add_exceptional();
        } else throw DomainError("unknown lattice base '" + base + "'");
        c.lattice.restore(l.at("c1").get<Coeffs>(), l.value("contractions", 0));
        for (const auto& cv : j.at("curves"))
            c.add_curve(cv.at("name").get<std::string>(), cv.at("class").get<Coeffs>(), kind_of(cv.at("kind").get<std::string>()),
                        role_from_string(cv.at("role").get<std::string>()));
        for (const auto& p : j.at("points")) {
            std::vector<Branch> brs;
            for (const auto& b : p.at("branches")) brs.push_back({b.at("curve").get<std::string>(), b.at("mult").get<int>()});
            std::vector<Contact> cts;
            for (const auto& ct : p.at("contacts"))
                cts.push_back({ct.at("a").get<std::string>(), ct.at("b").get<std::string>(), ct.at("value").get<std::int64_t>()});
            c.points.push_back({p.at("id").get<int>(), std::move(brs), std::move(cts)});
        }
        c.next_point = j.value("next_point", 1);
        c.next_serial = j.value("next_serial", 1);
        return c;
    });
}

Witness witness_from_json(std::string_view text) {
    json j = parse(text);
    return guarded([&] {
        Witness w;
        w.singularity = SingularityId::parse(j.at("singularity").get<std::string>());
        w.model = standard_model_from_string(j.at("model").get<std::string>());
        for (const auto& s : j.at("steps")) w.steps.push_back(step_of(s));
        for (const auto& l : j.at("labels")) w.labels.emplace_back(l.at(0).get<std::string>(), l.at(1).get<std::string>());
        return w;
    });
}

std::string to_dot(const WeightedGraph& g, std::string_view title) {
    std::ostringstream os;
    os << "graph " << quote(title) << " {\n";
    for (const auto& v : g.vertices) {
        os << "  " << quote(v.name) << " [label=" << quote(v.name + ":" + signed_weight(v.weight));
        if (v.kind == CurveKind::CuspidalRational) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (const auto& e : g.edges) {
        os << "  " << quote(e.u) << " -- " << quote(e.v);
        if (e.multiplicity != 1) os << " [label=" << quote(std::to_string(e.multiplicity)) << "]";
        os << ";\n";
    }
    for (std::size_t i = 0; i < g.markers.size(); ++i) {
        const auto& m = g.markers[i];
        std::string id = m.kind + std::to_string(i + 1);
        os << "  " << quote(id) << " [label=" << quote(m.kind) << ", shape=point, xlabel=" << quote(m.kind) << "];\n";
        for (const auto& c : m.curves) os << "  " << quote(id) << " -- " << quote(c) << " [style=dotted];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const Configuration& c, std::string_view title) { return to_dot(c.graph(), title); }

std::string digest(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qsfill
