#include "mf24/spaces.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mf24/errors.hpp"
#include "mf24/linalg.hpp"

namespace mf24 {

namespace {

struct Dimensions {
  int eisenstein;
  int cusp;
};

Dimensions dimensions_of(CharacterLabel c) {
  switch (c) {
    case CharacterLabel::chi1:
      return {7, 1};
    case CharacterLabel::chi8:
      return {4, 2};
    case CharacterLabel::chi12:
      return {8, 0};
    case CharacterLabel::chi24:
      return {4, 2};
    case CharacterLabel::other:
      break;
  }
  throw std::invalid_argument("no level-24 weight-2 space for this character");
}

constexpr int kStoredSturmBound = 8;

}  // namespace

int SpaceId::dimension() const {
  const Dimensions d = dimensions_of(character);
  switch (subspace) {
    case Subspace::M:
      return d.eisenstein + d.cusp;
    case Subspace::E:
      return d.eisenstein;
    case Subspace::S:
      return d.cusp;
  }
  return 0;
}

std::string SpaceId::name() const {
  switch (subspace) {
    case Subspace::M:
      return name_of(character);
    case Subspace::E:
      return "E:" + name_of(character);
    case Subspace::S:
      return "S:" + name_of(character);
  }
  return name_of(character);
}

SpaceId parse_space(std::string_view text) {
  SpaceId id;
  if (text.size() > 2 && text[1] == ':') {
    const char tag = text[0];
    if (tag == 'E') {
      id.subspace = Subspace::E;
    } else if (tag == 'S') {
      id.subspace = Subspace::S;
    } else if (tag == 'M') {
      id.subspace = Subspace::M;
    } else {
      throw ParseError("unknown subspace tag", 0);
    }
    text.remove_prefix(2);
  }
  id.character = parse_character(text);
  return id;
}

int sturm_bound(const SpaceId& space) {
  dimensions_of(space.character);
  const int bound = SpaceId::kWeight * gamma0_index(SpaceId::kLevel) / 12;
  if (bound != kStoredSturmBound) {
    throw std::logic_error("Sturm bound formula disagrees with the stored value");
  }
  return bound;
}

std::vector<std::string> Basis::labels() const {
  std::vector<std::string> out;
  for (const auto& e : elements) {
    out.push_back(e.label);
  }
  return out;
}

int Basis::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].label == label) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

namespace {

BasisElement make_ld(int d, int prec) {
  LdSpec spec{d};
  return {spec.label(), BasisElement::Kind::eisenstein, spec, Ld_series(spec, prec)};
}

BasisElement make_eis(int t1, int t2, int dilation, int prec) {
  EisensteinSpec spec{t1, t2, dilation};
  return {spec.label(), BasisElement::Kind::eisenstein, spec, eisenstein_series(spec, prec)};
}

BasisElement make_cusp(std::string label, const EtaQuotient& f, int prec) {
  return {std::move(label), BasisElement::Kind::cusp, f, eta_quotient_series(f, prec)};
}

std::vector<BasisElement> build_full_basis(CharacterLabel c, int prec) {
  std::vector<BasisElement> out;
  switch (c) {
    case CharacterLabel::chi1:
      for (int d : LdSpec::kAllowed) {
        out.push_back(make_ld(d, prec));
      }
      out.push_back(make_cusp("A", eta_A(), prec));
      break;
    case CharacterLabel::chi8:
      out.push_back(make_eis(1, 8, 1, prec));
      out.push_back(make_eis(1, 8, 3, prec));
      out.push_back(make_eis(8, 1, 1, prec));
      out.push_back(make_eis(8, 1, 3, prec));
      out.push_back(make_cusp("B_1", eta_B1(), prec));
      out.push_back(make_cusp("B_2", eta_B2(), prec));
      break;
    case CharacterLabel::chi12:
      for (auto [t1, t2] : {std::pair{12, 1}, {1, 12}, {-4, -3}, {-3, -4}}) {
        out.push_back(make_eis(t1, t2, 1, prec));
        out.push_back(make_eis(t1, t2, 2, prec));
      }
      break;
    case CharacterLabel::chi24:
      out.push_back(make_eis(1, 24, 1, prec));
      out.push_back(make_eis(24, 1, 1, prec));
      out.push_back(make_eis(-3, -8, 1, prec));
      out.push_back(make_eis(-8, -3, 1, prec));
      out.push_back(make_cusp("C_1", eta_C1(), prec));
      out.push_back(make_cusp("C_2", eta_C2(), prec));
      break;
    case CharacterLabel::other:
      throw std::invalid_argument("no level-24 weight-2 space for this character");
  }
  return out;
}

class BasisCache {
 public:
  std::shared_ptr<const std::vector<BasisElement>> get(CharacterLabel c, int prec) {
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find({c, prec});
      if (it != entries_.end()) {
        return it->second;
      }
    }
    auto built = std::make_shared<const std::vector<BasisElement>>(build_full_basis(c, prec));
    std::lock_guard lock(mutex_);
    return entries_.try_emplace({c, prec}, std::move(built)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<CharacterLabel, int>, std::shared_ptr<const std::vector<BasisElement>>>
      entries_;
};

BasisCache& basis_cache() {
  static BasisCache cache;
  return cache;
}

}  // namespace

Basis basis_for(const SpaceId& space, int prec) {
  if (prec < sturm_bound(space) + 1) {
    throw PrecisionError("basis precision " + std::to_string(prec) +
                         " does not cover the Sturm bound");
  }
  auto full = basis_cache().get(space.character, prec);
  Basis basis{space, prec, {}};
  for (const auto& e : *full) {
    const bool keep = space.subspace == Subspace::M ||
                      (space.subspace == Subspace::E && e.kind == BasisElement::Kind::eisenstein) ||
                      (space.subspace == Subspace::S && e.kind == BasisElement::Kind::cusp);
    if (keep) {
      basis.elements.push_back(e);
    }
  }
  return basis;
}

std::size_t basis_rank(const SpaceId& space, int last) {
  const Basis basis = basis_for(space, std::max(last + 1, sturm_bound(space) + 1));
  RationalMatrix m(static_cast<std::size_t>(last + 1), basis.size());
  for (int n = 0; n <= last; ++n) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      m(n, j) = basis.elements[j].series[n];
    }
  }
  return rank(std::move(m));
}

QSeries linear_combination(const Basis& basis, const std::vector<Rational>& coefficients) {
  if (coefficients.size() != basis.size()) {
    throw std::invalid_argument("linear_combination: coefficient count mismatch");
  }
  QSeries out(basis.prec);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coefficients[i] != 0) {
      out = add(out, scale(basis.elements[i].series, coefficients[i]));
    }
  }
  return out;
}

const Rational& SolveResult::coefficient(std::string_view label) const {
  for (const auto& [name, value] : coefficients) {
    if (name == label) {
      return value;
    }
  }
  throw std::out_of_range("no basis element labelled " + std::string(label));
}

std::vector<Rational> SolveResult::values() const {
  std::vector<Rational> out;
  for (const auto& entry : coefficients) {
    out.push_back(entry.second);
  }
  return out;
}

SolveResult solve_in_basis(const QSeries& target, const SpaceId& space, int verify_to) {
  const int bound = sturm_bound(space);
  if (verify_to < bound) {
    throw PrecisionError("verification bound " + std::to_string(verify_to) +
                         " is below the Sturm bound " + std::to_string(bound));
  }
  if (target.prec() <= verify_to) {
    throw PrecisionError("target known to O(q^" + std::to_string(target.prec()) +
                         "), cannot verify up to q^" + std::to_string(verify_to));
  }
  const Basis basis = basis_for(space, verify_to + 1);
  const std::size_t n = basis.size();

  std::vector<Rational> x;
  if (n == 0) {
    x = {};
  } else {
    RationalMatrix m(static_cast<std::size_t>(bound + 1), n);
    std::vector<Rational> rhs(static_cast<std::size_t>(bound + 1));
    for (int row = 0; row <= bound; ++row) {
      for (std::size_t j = 0; j < n; ++j) {
        m(row, j) = basis.elements[j].series[row];
      }
      rhs[row] = target[row];
    }
    LinearSolution sol = solve_linear(m, rhs);
    if (sol.status == LinearSolution::Status::inconsistent) {
      throw NotInSpace("coefficients q^0..q^" + std::to_string(bound) +
                       " are inconsistent with " + space.name());
    }
    if (sol.status == LinearSolution::Status::underdetermined) {
      throw AmbiguousSolution("basis of " + space.name() +
                              " does not determine the coefficients at the Sturm bound");
    }
    x = std::move(sol.x);
  }

  const QSeries rebuilt = n == 0 ? QSeries(verify_to + 1) : linear_combination(basis, x);
  for (int k = 0; k <= verify_to; ++k) {
    if (rebuilt[k] != target[k]) {
      throw NotInSpace("solution in " + space.name() + " fails at q^" + std::to_string(k) +
                       ": expected " + to_string(target[k]) + ", got " +
                       to_string(rebuilt[k]));
    }
  }

  SolveResult result{space, {}, verify_to};
  for (std::size_t j = 0; j < n; ++j) {
    result.coefficients.emplace_back(basis.elements[j].label, x[j]);
  }
  return result;
}

bool EisensteinCuspSplit::is_eisenstein() const {
  return std::all_of(cusp.begin(), cusp.end(), [](const auto& e) { return e.second == 0; });
}

EisensteinCuspSplit eisenstein_cusp_split(const SolveResult& solution) {
  const Basis basis = basis_for(solution.space, sturm_bound(solution.space) + 1);
  EisensteinCuspSplit split;
  for (const auto& entry : solution.coefficients) {
    const int idx = basis.index_of(entry.first);
    if (idx < 0) {
      throw std::logic_error("solution label " + entry.first + " is not in the basis");
    }
    if (basis.elements[idx].kind == BasisElement::Kind::cusp) {
      split.cusp.push_back(entry);
    } else {
      split.eisenstein.push_back(entry);
    }
  }
  return split;
}

EisensteinCuspSplit eisenstein_cusp_split(const QSeries& target, const SpaceId& space,
                                          int verify_to) {
  return eisenstein_cusp_split(solve_in_basis(target, space, verify_to));
}

}  // namespace mf24
