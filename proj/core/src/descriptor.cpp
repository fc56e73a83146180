#include "qsfill/descriptor.hpp"

#include <algorithm>
#include <sstream>

#include "qsfill/errors.hpp"

namespace qsfill {

std::string to_string(StandardModel m) {
    switch (m) {
        case StandardModel::TwoLines_P2: return "TwoLines_P2";
        case StandardModel::CuspQuadricOneFibre_Q: return "CuspQuadricOneFibre_Q";
        case StandardModel::CuspCubicPlusLine_blownP2: return "CuspCubicPlusLine_blownP2";
        case StandardModel::CuspCubic_P2: return "CuspCubic_P2";
        case StandardModel::CuspQuadric_Q: return "CuspQuadric_Q";
        case StandardModel::CuspQuadricTwoFibres_Q: return "CuspQuadricTwoFibres_Q";
        case StandardModel::CuspQuadricThreeFibres_Q: return "CuspQuadricThreeFibres_Q";
    }
    return "?";
}

StandardModel standard_model_from_string(std::string_view s) {
    for (auto m : {StandardModel::TwoLines_P2, StandardModel::CuspQuadricOneFibre_Q,
                   StandardModel::CuspCubicPlusLine_blownP2, StandardModel::CuspCubic_P2, StandardModel::CuspQuadric_Q,
                   StandardModel::CuspQuadricTwoFibres_Q, StandardModel::CuspQuadricThreeFibres_Q})
        if (to_string(m) == s) return m;
    throw DomainError("unknown standard model '" + std::string(s) + "'");
}

std::string base_name(StandardModel m) {
    switch (m) {
        case StandardModel::TwoLines_P2:
        case StandardModel::CuspCubicPlusLine_blownP2:
        case StandardModel::CuspCubic_P2: return "P2";
        default: return "Q";
    }
}

Configuration standard_model(StandardModel m) {
    Configuration c;
    auto cusp_q = [&] {
        c.lattice = AmbientLattice::quadric();
        c.add_curve("D", {2, 2}, CurveKind::CuspidalRational, Role::D);
    };
    switch (m) {
        case StandardModel::TwoLines_P2:
            c.lattice = AmbientLattice::projective_plane();
            c.add_curve("L", {1}, CurveKind::EmbeddedSphere, Role::L);
            c.add_curve("C1", {1}, CurveKind::EmbeddedSphere, Role::C);
            c.add_point({{"L", 1}, {"C1", 1}});
            break;
        case StandardModel::CuspCubic_P2:
            c.lattice = AmbientLattice::projective_plane();
            c.add_curve("D", {3}, CurveKind::CuspidalRational, Role::D);
            c.add_point({{"D", 2}});
            break;
        case StandardModel::CuspQuadric_Q:
            cusp_q();
            c.add_point({{"D", 2}});
            break;
        case StandardModel::CuspQuadricOneFibre_Q:
            cusp_q();
            c.add_curve("A", {1, 0}, CurveKind::EmbeddedSphere, Role::A);
            c.add_point({{"D", 2}, {"A", 1}});
            break;
        case StandardModel::CuspCubicPlusLine_blownP2:
            // the line through the cusp and one further point of the cubic,
            // blown up at that point
            c.lattice = AmbientLattice::projective_plane(1);
            c.add_curve("D", {3, -1}, CurveKind::CuspidalRational, Role::D);
            c.add_curve("A", {1, -1}, CurveKind::EmbeddedSphere, Role::A);
            c.add_point({{"D", 2}, {"A", 1}});
            break;
        case StandardModel::CuspQuadricTwoFibres_Q:
            cusp_q();
            c.add_curve("A", {1, 0}, CurveKind::EmbeddedSphere, Role::A);
            c.add_curve("B", {0, 1}, CurveKind::EmbeddedSphere, Role::B);
            c.add_point({{"D", 2}, {"A", 1}, {"B", 1}});
            break;
        case StandardModel::CuspQuadricThreeFibres_Q:
            cusp_q();
            c.add_curve("A", {1, 0}, CurveKind::EmbeddedSphere, Role::A);
            c.add_curve("B", {0, 1}, CurveKind::EmbeddedSphere, Role::B);
            c.add_curve("C", {1, 0}, CurveKind::EmbeddedSphere, Role::C);
            c.add_point({{"D", 2}, {"A", 1}, {"B", 1}});
            c.add_point({{"D", 1}, {"C", 1}});
            c.add_point({{"C", 1}, {"D", 1}});
            c.add_point({{"C", 1}, {"B", 1}});
            break;
    }
    return c;
}

std::string to_string(CaseTag c) {
    switch (c) {
        case CaseTag::None: return "none";
        case CaseTag::CaseI: return "I";
        case CaseTag::CaseII: return "II";
    }
    return "?";
}

std::string FillingDescriptor::str() const {
    std::ostringstream os;
    os << '(' << singularity.label() << ';' << dd;
    for (auto w : string) os << ',' << w;
    os << ';';
    if (case_tag == CaseTag::CaseII) os << case_i << ',' << case_j << ';';
    for (std::size_t i = 0; i < attachments.size(); ++i) {
        if (i) os << ',';
        if (attachments[i].count != 1) os << attachments[i].count << 'x';
        os << attachments[i].index;
    }
    os << ") " << base_name(base);
    if (base == StandardModel::CuspCubicPlusLine_blownP2) os << "#1";
    return os.str();
}

std::optional<char> case2_violation(const FillingDescriptor& d) {
    if (d.case_tag != CaseTag::CaseII) return std::nullopt;
    auto k = static_cast<std::int64_t>(d.string.size());
    auto c = [&](std::int64_t idx) { return -d.string[static_cast<std::size_t>(idx - 1)]; };
    if (d.case_i < 1 || d.case_i > k || d.case_j < 1 || d.case_j > k) return 'i';
    if (d.case_i > 1 && c(d.case_i) == 2) return 'a';
    if (d.case_j < k && c(d.case_j) == 2) return 'b';
    if (d.singularity.is_platonic()) {
        std::int64_t b = d.singularity.b();
        std::int64_t bound = 5;
        if (b - 2 >= 1 && b - 2 <= k) bound = std::max<std::int64_t>(bound, c(b - 2) + 1);
        if (b > bound) return 'c';
    }
    return std::nullopt;
}

bool constraint_check_case2(const FillingDescriptor& d) {
    if (d.case_tag != CaseTag::CaseII) throw DomainError("constraint_check_case2: descriptor is not case II");
    return !case2_violation(d).has_value();
}

void sort_descriptors(std::vector<FillingDescriptor>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace qsfill
