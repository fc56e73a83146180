#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsfill/catalog.hpp"
#include "qsfill/config.hpp"

namespace qsfill {

enum class StandardModel {
    TwoLines_P2,                 // cyclic: L = h, C_1 = h
    CuspQuadricOneFibre_Q,       // dihedral: D of bidegree (2,2), A a fibre through the cusp
    CuspCubicPlusLine_blownP2,   // dihedral: D = 3h - e, A = h - e
    CuspCubic_P2,                // type (3,2): D = 3h
    CuspQuadric_Q,               // type (3,2): D of bidegree (2,2)
    CuspQuadricTwoFibres_Q,      // type (3,1) case I: A, B fibres through the cusp
    CuspQuadricThreeFibres_Q,    // type (3,1) case II: A, B as above, C a fibre meeting D twice
};

std::string to_string(StandardModel m);
StandardModel standard_model_from_string(std::string_view s);
// "P2" or "Q"
std::string base_name(StandardModel m);

// The model as a configuration.  Curve names are D, A, B, C, L, C1.
Configuration standard_model(StandardModel m);

enum class CaseTag { None, CaseI, CaseII };

std::string to_string(CaseTag c);

struct Attachment {
    std::int64_t count = 1;
    std::int64_t index = 1;  // 1-based string position
    auto operator<=>(const Attachment&) const = default;
};

struct FillingDescriptor {
    SingularityId singularity;
    std::int64_t dd = 0;                // D.D, or L.L = 1 for cyclic
    std::vector<std::int64_t> string;   // self-intersections -c_1..-c_k
    CaseTag case_tag = CaseTag::None;
    std::int64_t case_i = 0, case_j = 0;
    std::vector<Attachment> attachments;  // sorted by index, counts > 0
    StandardModel base = StandardModel::CuspCubic_P2;

    // e.g. "(6(3-2)+1;5,-4;3x1) P2"
    std::string str() const;
    auto operator<=>(const FillingDescriptor&) const = default;
    bool operator==(const FillingDescriptor&) const = default;
};

// Case II constraints; returns the letter of the first violated one.
// (c) is checked as b <= max{5, c_{b-2} + 1}, see README.
std::optional<char> case2_violation(const FillingDescriptor& d);
bool constraint_check_case2(const FillingDescriptor& d);

// Canonical ordering used for every emitted list.
void sort_descriptors(std::vector<FillingDescriptor>& v);

}  // namespace qsfill
