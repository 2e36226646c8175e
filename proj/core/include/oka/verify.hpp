#ifndef OKA_VERIFY_HPP
#define OKA_VERIFY_HPP

#include <cstdint>
#include <string>

#include "oka/report.hpp"

namespace oka {

/// Exact-identity suites, one per subsystem. Each check is an exact
/// rational-arithmetic identity (or an exact structural assertion); all are
/// expected to pass for the built-in data.
VerificationReport verify_atlas();
VerificationReport verify_hamiltonian();
VerificationReport verify_invariants(std::uint64_t seed = 0);
VerificationReport verify_blowup();

/// suite is one of all | atlas | hamiltonian | invariants | blowup.
/// Throws std::invalid_argument for unknown names.
VerificationReport verify_suite(const std::string& suite,
                                std::uint64_t seed = 0);

}  // namespace oka

#endif
