#include "mf24/repnum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "mf24/errors.hpp"

namespace mf24 {

namespace {

long isqrt(long n) {
  if (n < 0) {
    return -1;
  }
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

}  // namespace

std::uint64_t brute_force_count(const ThetaProductSpec& s, long n) {
  if (n < 0) {
    return 0;
  }
  const auto& a = s.coefficients();
  std::uint64_t count = 0;
  const long b0 = isqrt(n / a[0]);
  for (long x0 = -b0; x0 <= b0; ++x0) {
    const long r0 = n - a[0] * x0 * x0;
    const long b1 = isqrt(r0 / a[1]);
    for (long x1 = -b1; x1 <= b1; ++x1) {
      const long r1 = r0 - a[1] * x1 * x1;
      const long b2 = isqrt(r1 / a[2]);
      for (long x2 = -b2; x2 <= b2; ++x2) {
        const long r2 = r1 - a[2] * x2 * x2;
        if (r2 % a[3] != 0) {
          continue;
        }
        const long sq = r2 / a[3];
        const long x3 = isqrt(sq);
        if (x3 * x3 == sq) {
          count += (x3 == 0) ? 1 : 2;
        }
      }
    }
  }
  return count;
}

std::vector<std::uint64_t> brute_force_counts(const ThetaProductSpec& s, long n_max) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(n_max + 1, 0L)), 0);
  if (n_max < 0) {
    return counts;
  }
  const auto& a = s.coefficients();
  const long b0 = isqrt(n_max / a[0]);
  for (long x0 = -b0; x0 <= b0; ++x0) {
    const long v0 = a[0] * x0 * x0;
    const long b1 = isqrt((n_max - v0) / a[1]);
    for (long x1 = -b1; x1 <= b1; ++x1) {
      const long v1 = v0 + a[1] * x1 * x1;
      const long b2 = isqrt((n_max - v1) / a[2]);
      for (long x2 = -b2; x2 <= b2; ++x2) {
        const long v2 = v1 + a[2] * x2 * x2;
        const long b3 = isqrt((n_max - v2) / a[3]);
        for (long x3 = -b3; x3 <= b3; ++x3) {
          ++counts[v2 + a[3] * x3 * x3];
        }
      }
    }
  }
  return counts;
}

std::string name_of(CuspSequence seq) {
  switch (seq) {
    case CuspSequence::a:
      return "a";
    case CuspSequence::b1:
      return "b1";
    case CuspSequence::b2:
      return "b2";
    case CuspSequence::c1:
      return "c1";
    case CuspSequence::c2:
      return "c2";
  }
  return "?";
}

CuspCoefficients::CuspCoefficients(long n_max) : n_max_(n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("CuspCoefficients: negative bound");
  }
  const int prec = static_cast<int>(n_max + 1);
  for (const EtaQuotient& f : {eta_A(), eta_B1(), eta_B2(), eta_C1(), eta_C2()}) {
    series_.push_back(eta_quotient_series(f, prec));
  }
}

const Rational& CuspCoefficients::value(CuspSequence seq, long n) const {
  if (n < 0 || n > n_max_) {
    throw PrecisionError("cusp coefficient index " + std::to_string(n) + " outside [0, " +
                         std::to_string(n_max_) + "]");
  }
  return series_[static_cast<std::size_t>(seq)][static_cast<int>(n)];
}

std::shared_ptr<const CuspCoefficients> cusp_coefficients(long n_max) {
  static std::mutex mutex;
  static std::shared_ptr<const CuspCoefficients> cached;
  std::lock_guard lock(mutex);
  if (!cached || cached->n_max() < n_max) {
    const long bound = std::max(n_max, cached ? 2 * cached->n_max() : 1000L);
    cached = std::make_shared<const CuspCoefficients>(bound);
  }
  return cached;
}

Rational RepFormula::evaluate(long n, const CuspCoefficients& cusp) const {
  if (n < 1) {
    throw std::invalid_argument("representation formulas hold for n >= 1");
  }
  Rational total(0);
  for (const RepTerm& t : terms) {
    if (t.kind == RepTerm::Kind::sigma) {
      if (n % t.divisor == 0) {
        total += t.coefficient *
                 twisted_sigma(KroneckerChar(t.t1), KroneckerChar(t.t2), n / t.divisor);
      }
    } else {
      total += t.coefficient * cusp.value(t.sequence, n);
    }
  }
  return total;
}

Rational RepFormula::evaluate(long n) const { return evaluate(n, *cusp_coefficients(n)); }

namespace {

auto term_key(const RepTerm& t) {
  return std::make_tuple(static_cast<int>(t.kind), t.kind == RepTerm::Kind::sigma ? t.t1 : 0,
                         t.kind == RepTerm::Kind::sigma ? t.t2 : 0,
                         t.kind == RepTerm::Kind::sigma ? t.divisor : 1,
                         t.kind == RepTerm::Kind::cusp ? static_cast<int>(t.sequence) : 0);
}

// Rank of a character pair when printing: the trivial pair first.
int pair_rank(int t1, int t2) {
  if (t1 == 1 && t2 == 1) {
    return 0;
  }
  if (t1 == 1) {
    return 1;
  }
  if (t2 == 1) {
    return 2;
  }
  return t1 < t2 ? 4 : 3;
}

}  // namespace

RepFormula RepFormula::canonical() const {
  std::map<decltype(term_key(RepTerm{})), RepTerm> merged;
  for (const RepTerm& t : terms) {
    RepTerm norm = t;
    if (norm.kind == RepTerm::Kind::sigma) {
      norm.sequence = CuspSequence::a;
    } else {
      norm.t1 = norm.t2 = norm.divisor = 1;
    }
    auto [it, inserted] = merged.try_emplace(term_key(norm), norm);
    if (!inserted) {
      it->second.coefficient += norm.coefficient;
    }
  }
  RepFormula out{form, {}};
  for (auto& [key, t] : merged) {
    if (t.coefficient != 0) {
      out.terms.push_back(t);
    }
  }
  std::stable_sort(out.terms.begin(), out.terms.end(), [](const RepTerm& x, const RepTerm& y) {
    if (x.kind != y.kind) {
      return x.kind == RepTerm::Kind::sigma;
    }
    if (x.kind == RepTerm::Kind::cusp) {
      return x.sequence < y.sequence;
    }
    const int rx = pair_rank(x.t1, x.t2);
    const int ry = pair_rank(y.t1, y.t2);
    if (rx != ry) {
      return rx < ry;
    }
    return x.divisor < y.divisor;
  });
  return out;
}

bool operator==(const RepFormula& a, const RepFormula& b) {
  const RepFormula ca = a.canonical();
  const RepFormula cb = b.canonical();
  return ca.form == cb.form && ca.terms == cb.terms;
}

std::string to_string(const RepFormula& f) {
  const RepFormula c = f.canonical();
  std::ostringstream os;
  bool first = true;
  for (const RepTerm& t : c.terms) {
    const Rational mag = abs(t.coefficient);
    if (first) {
      os << (t.coefficient < 0 ? "-" : "");
    } else {
      os << (t.coefficient < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) {
      os << to_string(mag) << '*';
    }
    if (t.kind == RepTerm::Kind::cusp) {
      os << name_of(t.sequence) << "(n)";
      continue;
    }
    os << "sigma";
    if (t.t1 != 1 || t.t2 != 1) {
      os << '[' << t.t1 << ',' << t.t2 << ']';
    }
    os << (t.divisor == 1 ? "(n)" : "(n/" + std::to_string(t.divisor) + ")");
  }
  if (first) {
    os << '0';
  }
  return os.str();
}

std::vector<ThetaProductSpec> normalized_forms() {
  std::vector<ThetaProductSpec> out;
  constexpr std::array<int, 4> values{1, 2, 3, 6};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      for (int k = j; k < 4; ++k) {
        for (int l = k; l < 4; ++l) {
          ThetaProductSpec s({values[i], values[j], values[k], values[l]});
          if (s.is_primitive()) {
            out.push_back(s);
          }
        }
      }
    }
  }
  return out;
}

namespace {

RepTerm sig(long num, long den, int divisor = 1) {
  return RepTerm{RepTerm::Kind::sigma, 1, 1, divisor, CuspSequence::a, make_rational(num, den)};
}

RepTerm tw(int t1, int t2, long num, long den, int divisor = 1) {
  return RepTerm{RepTerm::Kind::sigma, t1, t2, divisor, CuspSequence::a, make_rational(num, den)};
}

RepTerm cusp(CuspSequence seq, long num, long den = 1) {
  return RepTerm{RepTerm::Kind::cusp, 1, 1, 1, seq, make_rational(num, den)};
}

RepFormula formula(std::array<int, 4> a, std::vector<RepTerm> terms) {
  return RepFormula{ThetaProductSpec(a), std::move(terms)};
}

using CS = CuspSequence;

}  // namespace

std::vector<RepFormula> printed_formulas() {
  // Universal forms first, then the remaining twelve; signs and divisors as printed.
  return {
      formula({1, 1, 1, 1}, {sig(8, 1), sig(-32, 1, 4)}),
      formula({1, 1, 2, 2}, {sig(4, 1), sig(-4, 1, 2), sig(8, 1, 4), sig(-32, 1, 8)}),
      formula({1, 1, 3, 3}, {sig(4, 1), sig(-8, 1, 2), sig(-12, 1, 3), sig(16, 1, 4),
                             sig(24, 1, 6), sig(-48, 1, 12)}),
      formula({1, 2, 3, 6}, {sig(1, 1), sig(-1, 1, 2), sig(3, 1, 3), sig(2, 1, 4), sig(-3, 1, 6),
                             sig(-8, 1, 8), sig(6, 1, 12), sig(-24, 1, 24), cusp(CS::a, 1)}),
      formula({1, 1, 1, 2}, {tw(1, 8, 8, 1), tw(8, 1, -2, 1)}),
      formula({1, 1, 3, 6}, {tw(1, 8, 16, 5), tw(1, 8, -24, 5, 3), tw(8, 1, -4, 5),
                             tw(8, 1, -6, 5, 3), cusp(CS::b1, 8, 5)}),
      formula({1, 2, 2, 2}, {tw(1, 8, 4, 1), tw(8, 1, -2, 1)}),
      formula({1, 2, 3, 3}, {tw(1, 8, 8, 5), tw(1, 8, 48, 5, 3), tw(8, 1, 2, 5),
                             tw(8, 1, -12, 5, 3), cusp(CS::b1, -8, 5), cusp(CS::b2, 8, 5)}),
      formula({1, 1, 1, 3}, {tw(1, 12, 6, 1), tw(12, 1, -1, 1), tw(-3, -4, -2, 1),
                             tw(-4, -3, 3, 1)}),
      formula({1, 1, 2, 6}, {tw(1, 12, 3, 1), tw(12, 1, -1, 1, 2), tw(-3, -4, 1, 1),
                             tw(-4, -3, 3, 1, 2)}),
      formula({1, 2, 2, 3}, {tw(1, 12, 3, 1), tw(12, 1, -1, 1, 2), tw(-3, -4, -1, 1),
                             tw(-4, -3, -3, 1, 2)}),
      formula({1, 1, 1, 6}, {tw(1, 24, 4, 1), tw(24, 1, -1, 3), tw(-3, -8, -4, 3),
                             tw(-8, -3, 1, 1), cusp(CS::c1, 8), cusp(CS::c2, 8, 3)}),
      formula({1, 1, 2, 3}, {tw(1, 24, 4, 1), tw(24, 1, -1, 3), tw(-3, -8, 4, 3),
                             tw(-8, -3, -1, 1)}),
      formula({1, 2, 2, 6}, {tw(1, 24, 2, 1), tw(24, 1, -1, 3), tw(-3, -8, -2, 3),
                             tw(-8, -3, 1, 1)}),

      formula({1, 1, 6, 6}, {sig(2, 1), sig(-2, 1, 2), sig(-6, 1, 3), sig(-4, 1, 4), sig(6, 1, 6),
                             sig(16, 1, 8), sig(12, 1, 12), sig(-48, 1, 24), cusp(CS::a, 2)}),
      formula({2, 2, 3, 3}, {sig(4, 1), sig(-8, 1, 2), sig(-12, 1, 3), sig(16, 1, 4),
                             sig(24, 1, 6), sig(-48, 1, 12)}),
      formula({1, 2, 6, 6}, {tw(1, 8, 4, 5), tw(1, 8, 24, 5, 3), tw(8, 1, 2, 5),
                             tw(8, 1, -12, 5, 3), cusp(CS::b1, 8, 5), cusp(CS::b2, -4, 5)}),
      formula({2, 2, 3, 6}, {tw(1, 8, 8, 5), tw(1, 8, -12, 5, 3), tw(8, 1, -4, 5),
                             tw(8, 1, -6, 5, 3), cusp(CS::b2, -4, 5)}),
      formula({1, 3, 3, 3}, {tw(1, 12, 2, 1), tw(12, 1, -1, 1), tw(-3, -4, 2, 1),
                             tw(-4, -3, -1, 1)}),
      formula({1, 3, 6, 6}, {tw(1, 12, 1, 1), tw(12, 1, -1, 1, 2), tw(-3, -4, 1, 1),
                             tw(-4, -3, 1, 1, 2)}),
      formula({2, 3, 3, 6}, {tw(1, 12, 1, 1), tw(12, 1, -1, 1, 2), tw(-3, -4, -1, 1),
                             tw(-4, -3, -1, 1, 2)}),
      formula({1, 3, 3, 6}, {tw(1, 24, 4, 3), tw(24, 1, -1, 3), tw(-3, -8, 4, 3),
                             tw(-8, -3, -1, 3)}),
      formula({1, 6, 6, 6}, {tw(1, 24, 2, 3), tw(24, 1, -1, 3), tw(-3, -8, 2, 3),
                             tw(-8, -3, -1, 3), cusp(CS::c1, 8, 3), cusp(CS::c2, 4, 3)}),
      formula({2, 2, 2, 3}, {tw(1, 24, 2, 1), tw(24, 1, -1, 3), tw(-3, -8, 2, 3),
                             tw(-8, -3, -1, 1), cusp(CS::c2, -4, 3)}),
      formula({2, 3, 3, 3}, {tw(1, 24, 4, 3), tw(24, 1, -1, 3), tw(-3, -8, -4, 3),
                             tw(-8, -3, 1, 3), cusp(CS::c1, -8, 3)}),
      formula({2, 3, 6, 6}, {tw(1, 24, 2, 3), tw(24, 1, -1, 3), tw(-3, -8, -2, 3),
                             tw(-8, -3, 1, 3)}),
  };
}

namespace {

// Replacements for printed formulas that disagree with the lattice count.
// Each one is recorded with its evidence in CORRECTIONS.md.
std::vector<RepFormula> corrections() {
  return {
      // Printed with the (1,1,3,3) right-hand side, which gives 4 at n = 1.
      formula({2, 2, 3, 3}, {sig(2, 1), sig(-2, 1, 2), sig(-6, 1, 3), sig(-4, 1, 4), sig(6, 1, 6),
                             sig(16, 1, 8), sig(12, 1, 12), sig(-48, 1, 24), cusp(CS::a, -2)}),
  };
}

}  // namespace

std::vector<RepFormula> corrected_formulas() {
  std::vector<RepFormula> out = printed_formulas();
  for (const RepFormula& fix : corrections()) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const RepFormula& f) { return f.form == fix.form; });
    if (it == out.end()) {
      throw std::logic_error("correction for unknown form " + to_string(fix.form));
    }
    *it = fix;
  }
  return out;
}

std::vector<ThetaProductSpec> corrected_forms() {
  std::vector<ThetaProductSpec> out;
  for (const RepFormula& fix : corrections()) {
    out.push_back(fix.form);
  }
  return out;
}

RepFormula formula_from_solution(const ThetaProductSpec& s, const SolveResult& solution) {
  const Basis basis = basis_for(solution.space, sturm_bound(solution.space) + 1);
  RepFormula out{s, {}};
  for (const auto& [label, value] : solution.coefficients) {
    if (value == 0) {
      continue;
    }
    const BasisElement& e = basis.elements.at(static_cast<std::size_t>(basis.index_of(label)));
    if (const auto* ld = std::get_if<LdSpec>(&e.generator)) {
      // L_d = L(q) - d L(q^d)
      out.terms.push_back(RepTerm{RepTerm::Kind::sigma, 1, 1, 1, CS::a, value});
      out.terms.push_back(RepTerm{RepTerm::Kind::sigma, 1, 1, ld->d, CS::a, -value * ld->d});
    } else if (const auto* eis = std::get_if<EisensteinSpec>(&e.generator)) {
      out.terms.push_back(
          RepTerm{RepTerm::Kind::sigma, eis->t1, eis->t2, eis->dilation, CS::a, value});
    } else {
      static const std::map<std::string, CuspSequence> kCusp{
          {"A", CS::a}, {"B_1", CS::b1}, {"B_2", CS::b2}, {"C_1", CS::c1}, {"C_2", CS::c2}};
      out.terms.push_back(
          RepTerm{RepTerm::Kind::cusp, 1, 1, 1, kCusp.at(label), value});
    }
  }
  return out.canonical();
}

RepFormula generated_formula(const ThetaProductSpec& s, int verify_to) {
  const CharacterLabel c = theta_product_character(s);
  if (c == CharacterLabel::other) {
    throw UnknownForm("no level-24 theta product " + to_string(s));
  }
  const SpaceId space{c, Subspace::M};
  const SolveResult sol = solve_in_basis(theta_product_series(s, verify_to + 1), space, verify_to);
  return formula_from_solution(s, sol);
}

std::vector<RepFormula> formula_table(int verify_to) {
  std::vector<RepFormula> out;
  for (const ThetaProductSpec& s : normalized_forms()) {
    out.push_back(generated_formula(s, verify_to));
  }
  return out;
}

std::vector<FormulaDiscrepancy> printed_formula_discrepancies(int verify_to) {
  std::vector<FormulaDiscrepancy> out;
  for (const RepFormula& printed : printed_formulas()) {
    RepFormula generated = generated_formula(printed.form, verify_to);
    if (!(printed == generated)) {
      out.push_back({printed.canonical(), std::move(generated)});
    }
  }
  return out;
}

namespace {

class FormulaRegistry {
 public:
  const RepFormula* find(const ThetaProductSpec& s) {
    std::lock_guard lock(mutex_);
    if (formulas_.empty()) {
      for (RepFormula& f : corrected_formulas()) {
        formulas_.emplace(f.form, f.canonical());
      }
      for (const ThetaProductSpec& t : all_level24_theta_products()) {
        if (formulas_.count(t) == 0) {
          formulas_.emplace(t, generated_formula(t));
        }
      }
    }
    auto it = formulas_.find(s);
    return it == formulas_.end() ? nullptr : &it->second;
  }

 private:
  std::mutex mutex_;
  std::map<ThetaProductSpec, RepFormula> formulas_;
};

FormulaRegistry& registry() {
  static FormulaRegistry r;
  return r;
}

}  // namespace

Rational formula_count(const ThetaProductSpec& s, long n) {
  const RepFormula* f = registry().find(s);
  if (f == nullptr) {
    throw UnknownForm("no closed formula for N(" + to_string(s) + "; n)");
  }
  return f->evaluate(n);
}

}  // namespace mf24
