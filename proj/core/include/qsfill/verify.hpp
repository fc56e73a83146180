#pragma once

#include <string>
#include <vector>

#include "qsfill/enumerate.hpp"
#include "qsfill/errors.hpp"

namespace qsfill {

class VerificationError : public DomainError {
public:
    using DomainError::DomainError;
};

// Reads the descriptor off a closed configuration whose divisor curves carry
// the names D, A, B, L, C1..Ck.  Throws VerificationError if the
// configuration does not have the shape required by t.
FillingDescriptor describe(const Configuration& z, const Target& t, StandardModel model);

// Replays w from its standard model, checking after every step: incidence
// coherence, adjunction, the D.D bound, and that no two exceptional
// -1-curves meet.  Then blows everything back down to the standard model.
// Returns the descriptor of the final configuration.
FillingDescriptor replay_witness(const Witness& w);

// Finds and replays a witness for d; throws VerificationError naming the
// first violated constraint when d is not realizable.
Witness verify_filling(const FillingDescriptor& d, const SearchCaps& caps = {});

// Final configuration of a witness, with labels applied.
Configuration witness_configuration(const Witness& w);

}  // namespace qsfill
