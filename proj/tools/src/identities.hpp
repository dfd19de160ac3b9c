#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mf24::cli {

struct IdentityCheck {
  std::string name;
  std::string statement;
  int prec = 0;
  bool ok = false;
  /// First exponent where the two sides differ, when they do.
  std::optional<int> first_difference;
};

/// phi(z) = eta^5(2z) / (eta^2(z) eta^2(4z)).
IdentityCheck check_phi_eta_identity(int prec);

/// The five theta-product combinations that isolate 4A, 8B1, 4B2, 24C1, 4C2.
std::vector<IdentityCheck> check_cusp_identities(int prec);

}  // namespace mf24::cli
