#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mf24/etafunc.hpp"
#include "mf24/spaces.hpp"

namespace mf24 {

struct EnumerateOptions {
  /// Worker threads for the top-level branches; 0 picks hardware_concurrency.
  int jobs = 1;
  /// Hard bound on |r_delta|. An accepted vector touching it is a bug.
  int safety_box = 64;
};

struct SearchStats {
  std::uint64_t nodes = 0;       // DFS nodes visited
  std::uint64_t leaves = 0;      // complete vectors tested
  std::uint64_t holomorphic = 0; // leaves with all cusp orders >= 0 and the congruences
  std::vector<int> lower;        // per-divisor box from the order polytope
  std::vector<int> upper;
};

/// Every exponent vector over divisors(level) with sum 2*weight, all cusp
/// orders >= 0, sum delta r = 0 and sum (level/delta) r = 0 (mod 24).
/// Sorted lexicographically on exponent_vector().
std::vector<EtaQuotient> enumerate_holomorphic_eta_quotients(int level, int weight,
                                                             const EnumerateOptions& options = {},
                                                             SearchStats* stats = nullptr);

/// The holomorphic weight-2 level-24 quotients whose character is chi_t.
std::vector<EtaQuotient> enumerate_eta_quotients(CharacterLabel character,
                                                 const EnumerateOptions& options = {},
                                                 SearchStats* stats = nullptr);

struct Classification {
  std::vector<EtaQuotient> eisenstein;
  std::vector<EtaQuotient> cuspidal_component;
};

/// Splits by whether the cusp-form coefficients vanish. NotInSpace from the
/// solver escapes as std::logic_error, since it cannot happen for valid input.
Classification classify_eisenstein(const std::vector<EtaQuotient>& quotients,
                                   CharacterLabel character, int verify_to = kDefaultVerifyTo);

struct ExpansionRow {
  EtaQuotient quotient;
  SolveResult solution;
};

/// Coefficients over the space basis for each Eisenstein quotient of the character.
std::vector<ExpansionRow> derive_expansion_table(CharacterLabel character,
                                                 int verify_to = kDefaultVerifyTo,
                                                 const EnumerateOptions& options = {});

/// f(z) = g(t z) with g an eta quotient of lower level M.
struct LowerLevelOrigin {
  int level;
  int dilation;
  EtaQuotient source;
};

/// The first (M, t) in (12, 1), (12, 2), (8, 1), (8, 3) from which f arises.
/// With `strict`, g must itself satisfy the level-M congruences; otherwise
/// only its support is checked.
std::optional<LowerLevelOrigin> lower_level_origin(const EtaQuotient& f, bool strict = true);

}  // namespace mf24
