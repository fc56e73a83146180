#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsfill/config.hpp"
#include "qsfill/descriptor.hpp"

namespace qsfill {

enum class TargetKind { Cyclic, Dihedral, Type32, Type31 };

std::string to_string(TargetKind k);

// What the compactifying divisor looks like after the cusp transformation
// (or directly, for cyclic ids): D.D (L.L for cyclic) and the string weights.
struct Target {
    SingularityId id;
    TargetKind kind = TargetKind::Type32;
    std::int64_t dd = 0;
    std::vector<std::int64_t> weights;  // C_i.C_i, all <= -1

    std::size_t k() const { return weights.size(); }
    // Tetrahedral 6(b-2)+3 is treated as type (3,2).
    static Target of(const SingularityId& s);
};

struct SearchCaps {
    int max_blowups = 0;  // 0: derive a provable bound from the target
    std::size_t max_solutions = 100000;
    std::chrono::milliseconds time_budget{std::chrono::minutes(10)};
    unsigned threads = 1;
    // Shuffle the order in which moves are explored; output must not change.
    std::optional<std::uint64_t> shuffle_seed;
};

// Upper bound on the number of blow-ups any filling of t can need.
int default_max_blowups(const Target& t);

// Blow-up sequence from a standard model, plus the final names of the
// curves of the compactifying divisor.  Unlabelled curves are the
// exceptional curves left in the filling.
struct Witness {
    SingularityId singularity;
    StandardModel model = StandardModel::CuspCubic_P2;
    std::vector<RewriteStep> steps;
    std::vector<std::pair<std::string, std::string>> labels;  // curve -> D, A, B, L, C1..Ck

    bool operator==(const Witness&) const = default;
};

struct Filling {
    FillingDescriptor descriptor;
    Witness witness;
};

struct EnumerationResult {
    std::vector<Filling> fillings;  // canonical order, one per descriptor
    bool complete = true;
    std::string incomplete_reason;
    std::size_t states_explored = 0;

    std::vector<FillingDescriptor> descriptors() const;
};

class CapsExhausted : public std::runtime_error {
public:
    CapsExhausted(const std::string& what, EnumerationResult partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const EnumerationResult& partial() const { return partial_; }

private:
    EnumerationResult partial_;
};

// Search that reports truncation through the result instead of throwing.
EnumerationResult search_fillings(const SingularityId& s, const SearchCaps& caps = {});

// Complete list or CapsExhausted.
std::vector<FillingDescriptor> enumerate_fillings(const SingularityId& s, const SearchCaps& caps = {});

}  // namespace qsfill
