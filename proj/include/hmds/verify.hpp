#pragma once

// Exhaustive checks of a code instance, reported claim by claim.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hmds/codespec.hpp"

namespace hmds {

enum class ClaimStatus { pass, fail, info };

struct Claim {
  std::string name;
  ClaimStatus status;
  std::string detail;
};

struct VerificationReport {
  std::vector<Claim> claims;

  bool passed() const;
  const Claim* find(const std::string& name) const;
};

/// Whether `spec` is the q = 5 worked example (same moduli, same Λ in order,
/// S = GF(5)).
bool is_reference_instance(const CodeSpec& spec);

/// Runs every check; budget-checked.
VerificationReport verify_code(const CodeSpec& spec);

/// Fixed-width table, one claim per line: STATUS  name  detail.
void print_report(std::ostream& out, const VerificationReport& report);

/// Weight table (i, enumeration, formula) followed by the closed-form comparison.
void print_weights(std::ostream& out, const CodeSpec& spec);

const char* to_string(ClaimStatus s);

}  // namespace hmds
