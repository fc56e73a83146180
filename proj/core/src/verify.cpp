#include "qsfill/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qsfill {

namespace {

void need(bool cond, const std::string& msg) {
    if (!cond) throw VerificationError(msg);
}

bool model_has(StandardModel m, char curve) {
    switch (curve) {
        case 'A':
            return m == StandardModel::CuspQuadricOneFibre_Q || m == StandardModel::CuspCubicPlusLine_blownP2 ||
                   m == StandardModel::CuspQuadricTwoFibres_Q || m == StandardModel::CuspQuadricThreeFibres_Q;
        case 'B':
            return m == StandardModel::CuspQuadricTwoFibres_Q || m == StandardModel::CuspQuadricThreeFibres_Q;
        default: return false;
    }
}

bool model_fits(StandardModel m, TargetKind k) {
    switch (k) {
        case TargetKind::Cyclic: return m == StandardModel::TwoLines_P2;
        case TargetKind::Dihedral:
            return m == StandardModel::CuspQuadricOneFibre_Q || m == StandardModel::CuspCubicPlusLine_blownP2;
        case TargetKind::Type32: return m == StandardModel::CuspCubic_P2 || m == StandardModel::CuspQuadric_Q;
        case TargetKind::Type31:
            return m == StandardModel::CuspQuadricTwoFibres_Q || m == StandardModel::CuspQuadricThreeFibres_Q;
    }
    return false;
}

std::string cname(std::size_t i) { return "C" + std::to_string(i); }

// Invariants every intermediate state of a replay must satisfy.
void check_state(const Configuration& z, const std::set<std::string>& divisor, std::size_t step) {
    std::string at = " after step " + std::to_string(step);
    if (auto e = z.coherence_error()) throw VerificationError("incidence coherence fails" + at + ": " + *e);
    if (auto e = z.adjunction_error()) throw VerificationError(*e + at);
    if (z.curve("D")) {
        std::int64_t bound = z.lattice.base_model() == BaseModel::Quadric ? 8 : 9;
        need(z.self("D") <= bound, "D.D exceeds " + std::to_string(bound) + at);
    }
    std::vector<std::string> minus_one;
    for (const auto& c : z.curves)
        if (!divisor.count(c.name) && c.cls.kind == CurveKind::EmbeddedSphere && z.self(c.name) == -1)
            minus_one.push_back(c.name);
    for (std::size_t i = 0; i < minus_one.size(); ++i)
        for (std::size_t j = i + 1; j < minus_one.size(); ++j)
            need(z.pair(minus_one[i], minus_one[j]) <= 0,
                 "exceptional -1-curves " + minus_one[i] + " and " + minus_one[j] + " meet" + at);
}

void relabel(Configuration& z, const std::vector<std::pair<std::string, std::string>>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) z.rename(labels[i].first, "__label" + std::to_string(i));
    std::set<std::string> labelled;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& to = labels[i].second;
        z.rename("__label" + std::to_string(i), to);
        labelled.insert(to);
        Role r = to == "D" ? Role::D : to == "A" ? Role::A : to == "B" ? Role::B : to == "L" ? Role::L : Role::C;
        z.set_role(to, r);
    }
    for (auto& c : z.curves)
        if (!labelled.count(c.name)) c.role = Role::E;
}

}  // namespace

Configuration witness_configuration(const Witness& w) {
    Configuration z = standard_model(w.model);
    for (const auto& s : w.steps) {
        if (s.kind == RewriteStep::Kind::BlowDown) throw VerificationError("witness steps must be blow-ups");
        z.apply(s);
    }
    relabel(z, w.labels);
    return z;
}

FillingDescriptor describe(const Configuration& z, const Target& t, StandardModel model) {
    need(model_fits(model, t.kind), to_string(model) + " is not a model for a " + to_string(t.kind) + " target");
    const std::size_t k = t.k();
    const bool cyclic = t.kind == TargetKind::Cyclic;
    const std::string anchor = cyclic ? "L" : "D";
    std::set<std::string> divisor{anchor};
    need(z.curve(anchor) != nullptr, "no curve " + anchor);
    if (model_has(model, 'A')) divisor.insert("A");
    if (model_has(model, 'B')) divisor.insert("B");
    for (std::size_t i = 1; i <= k; ++i) divisor.insert(cname(i));
    for (const auto& n : divisor) need(z.curve(n) != nullptr, "divisor curve " + n + " missing");
    for (std::size_t i = k + 1; z.curve(cname(i)); ++i) need(false, "string is longer than the target");

    need(z.self(anchor) == t.dd, anchor + "." + anchor + " is " + std::to_string(z.self(anchor)) + ", expected " +
                                     std::to_string(t.dd));
    if (!cyclic) need(z.at("D").cls.kind == CurveKind::CuspidalRational, "D lost its cusp");
    for (std::size_t i = 1; i <= k; ++i) {
        need(z.self(cname(i)) == t.weights[i - 1], cname(i) + " has the wrong self-intersection");
        need(z.pair(anchor, cname(i)) == (i == 1 ? 1 : 0), anchor + " meets the string in the wrong place");
        for (std::size_t j = i + 1; j <= k; ++j)
            need(z.pair(cname(i), cname(j)) == (j == i + 1 ? 1 : 0), "string is not a chain");
    }
    const IncidencePoint* cusp = nullptr;
    for (const auto& p : z.points)
        if (p.cusp()) cusp = &p;
    if (divisor.count("A")) {
        need(z.self("A") == 0 && z.pair("A", "D") == 2, "A is not a 0-curve meeting D twice");
        need(cusp && cusp->contains("A"), "A does not pass through the cusp");
        for (std::size_t i = 1; i <= k; ++i) need(z.pair("A", cname(i)) == 0, "A meets the string");
    }
    if (divisor.count("B")) {
        need(z.self("B") == -1 && z.pair("B", "D") == 2 && z.pair("A", "B") == 1, "B has the wrong intersections");
        need(cusp && cusp->contains("B"), "B does not pass through the cusp");
        for (std::size_t i = 1; i <= k; ++i) need(z.pair("B", cname(i)) == 0, "B meets the string");
    }

    FillingDescriptor d;
    d.singularity = t.id;
    d.dd = t.dd;
    d.string = t.weights;
    d.base = model;
    std::map<std::int64_t, std::int64_t> attach;
    int e_curves = 0, f_curves = 0;
    std::vector<std::string> rest;
    for (const auto& c : z.curves) {
        if (divisor.count(c.name)) continue;
        rest.push_back(c.name);
        need(c.cls.kind == CurveKind::EmbeddedSphere && z.self(c.name) == -1, c.name + " is not a -1-sphere");
        std::vector<std::string> nb;
        for (const auto& n : divisor) {
            std::int64_t v = z.pair(c.name, n);
            need(v >= 0 && v <= 1, c.name + " meets " + n + " with multiplicity " + std::to_string(v));
            if (v == 1) nb.push_back(n);
        }
        auto string_index = [&](const std::string& n) -> std::int64_t {
            if (n.size() < 2 || n[0] != 'C') return 0;
            return std::stoll(n.substr(1));
        };
        std::vector<std::int64_t> idx;
        bool on_d = false, on_b = false;
        for (const auto& n : nb) {
            if (auto i = string_index(n)) idx.push_back(i);
            else if (n == "D") on_d = true;
            else if (n == "B") on_b = true;
            else need(false, c.name + " meets " + n);
        }
        if (idx.size() == 1 && !on_d && !on_b) {
            ++attach[idx[0]];
        } else if (idx.empty() && on_d && !on_b) {
            // pre-admissible: contracts onto D
        } else if (idx.empty() && on_b && !on_d) {
            need(model == StandardModel::CuspQuadricTwoFibres_Q, c.name + " meets only B outside case I");
            ++e_curves;
        } else if (idx.size() == 1 && on_b && !on_d) {
            need(model == StandardModel::CuspQuadricThreeFibres_Q, c.name + " meets B and the string outside case II");
            d.case_i = idx[0];
            ++e_curves;
        } else if (idx.size() == 1 && on_d && !on_b) {
            need(model == StandardModel::CuspQuadricThreeFibres_Q, c.name + " meets D and the string outside case II");
            d.case_j = idx[0];
            ++f_curves;
        } else {
            need(false, c.name + " meets the divisor in an unexpected pattern");
        }
    }
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            need(z.pair(rest[i], rest[j]) == 0, rest[i] + " and " + rest[j] + " intersect");
    if (model == StandardModel::CuspQuadricTwoFibres_Q) {
        need(e_curves == 1, "case I needs exactly one -1-curve meeting B");
        d.case_tag = CaseTag::CaseI;
    } else if (model == StandardModel::CuspQuadricThreeFibres_Q) {
        need(e_curves == 1 && f_curves == 1, "case II needs one -1-curve on B and one joining D to the string");
        d.case_tag = CaseTag::CaseII;
    }
    for (auto [i, a] : attach) d.attachments.push_back({a, i});
    return d;
}

FillingDescriptor replay_witness(const Witness& w) {
    Target t = Target::of(w.singularity);
    std::set<std::string> divisor;
    for (const auto& [from, to] : w.labels) divisor.insert(from);

    Configuration z = standard_model(w.model);
    check_state(z, divisor, 0);
    std::vector<std::string> created;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        need(w.steps[i].kind != RewriteStep::Kind::BlowDown, "witness steps must be blow-ups");
        try {
            created.push_back(z.apply(w.steps[i]));
        } catch (const DomainError& e) {
            throw VerificationError("step " + std::to_string(i + 1) + " (" + w.steps[i].str() + ") fails: " + e.what());
        }
        check_state(z, divisor, i + 1);
    }
    Configuration closed = z;
    relabel(closed, w.labels);
    FillingDescriptor d = describe(closed, t, w.model);

    // back down to the standard model
    for (auto it = created.rbegin(); it != created.rend(); ++it) {
        try {
            z.blow_down(*it);
        } catch (const DomainError& e) {
            throw VerificationError(std::string("reverse replay fails: ") + e.what());
        }
        check_state(z, divisor, w.steps.size());
    }
    need(equivalent(z, standard_model(w.model)), "reverse replay does not return to the standard model");
    return d;
}

Witness verify_filling(const FillingDescriptor& d, const SearchCaps& caps) {
    if (d.case_tag == CaseTag::CaseII) {
        if (auto v = case2_violation(d)) {
            if (*v == 'i') throw VerificationError("case II indices i, j out of range");
            throw VerificationError(std::string("violates case II constraint (") + *v + ")");
        }
    }
    Target t = Target::of(d.singularity);
    need(d.dd == t.dd, "D.D = " + std::to_string(d.dd) + " differs from the transformed divisor's " + std::to_string(t.dd));
    need(d.string == t.weights, "string differs from the transformed divisor of " + d.singularity.str());
    need(model_fits(d.base, t.kind), to_string(d.base) + " cannot realize a " + to_string(t.kind) + " target");
    for (const auto& a : d.attachments)
        need(a.count > 0 && a.index >= 1 && a.index <= static_cast<std::int64_t>(t.k()), "attachment out of range");

    EnumerationResult r = search_fillings(d.singularity, caps);
    for (const auto& f : r.fillings) {
        if (!(f.descriptor == d)) continue;
        FillingDescriptor got = replay_witness(f.witness);
        need(got == d, "replayed witness describes " + got.str());
        return f.witness;
    }
    if (!r.complete) throw VerificationError("no witness found within caps (" + r.incomplete_reason + ")");
    throw VerificationError("not realizable: no admissible blow-up sequence from " + to_string(d.base));
}

}  // namespace qsfill
