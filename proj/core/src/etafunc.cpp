#include "mf24/etafunc.hpp"

#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "mf24/errors.hpp"

namespace mf24 {

std::vector<int> divisors(int n) {
  if (n < 1) {
    throw std::invalid_argument("divisors: n must be positive");
  }
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
    }
  }
  return out;
}

EtaQuotient::EtaQuotient(std::map<int, int> exponents, int level) : level_(level) {
  if (level < 1) {
    throw InvalidEtaQuotient("level must be positive");
  }
  for (const auto& [delta, r] : exponents) {
    if (delta < 1 || level % delta != 0) {
      throw InvalidEtaQuotient("eta(" + std::to_string(delta) + "z) is not of level " +
                               std::to_string(level));
    }
    if (r != 0) {
      exponents_.emplace(delta, r);
    }
  }
}

EtaQuotient EtaQuotient::from_vector(const std::vector<int>& exponents, int level) {
  const auto divs = divisors(level);
  if (exponents.size() != divs.size()) {
    throw InvalidEtaQuotient("expected " + std::to_string(divs.size()) + " exponents for level " +
                             std::to_string(level));
  }
  std::map<int, int> m;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    m[divs[i]] = exponents[i];
  }
  return EtaQuotient(std::move(m), level);
}

int EtaQuotient::exponent(int delta) const {
  auto it = exponents_.find(delta);
  return it == exponents_.end() ? 0 : it->second;
}

std::vector<int> EtaQuotient::exponent_vector() const {
  std::vector<int> out;
  for (int d : divisors(level_)) {
    out.push_back(exponent(d));
  }
  return out;
}

Rational EtaQuotient::weight() const {
  long total = 0;
  for (const auto& [delta, r] : exponents_) {
    total += r;
  }
  return make_rational(total, 2);
}

Rational EtaQuotient::leading_exponent() const {
  long total = 0;
  for (const auto& [delta, r] : exponents_) {
    total += static_cast<long>(delta) * r;
  }
  return make_rational(total, 24);
}

EtaQuotient eta_A() { return EtaQuotient({{2, 1}, {4, 1}, {6, 1}, {12, 1}}); }
EtaQuotient eta_B1() {
  return EtaQuotient({{1, 1}, {2, -1}, {3, -1}, {6, 4}, {8, 2}, {12, -1}});
}
EtaQuotient eta_B2() {
  return EtaQuotient({{1, 2}, {4, -1}, {6, -1}, {8, 1}, {12, 4}, {24, -1}});
}
EtaQuotient eta_C1() {
  return EtaQuotient({{1, 1}, {2, -1}, {3, -1}, {4, 1}, {6, 4}, {12, -2}, {24, 2}});
}
EtaQuotient eta_C2() {
  return EtaQuotient({{1, 2}, {2, -2}, {4, 4}, {6, 1}, {8, -1}, {12, -1}, {24, 1}});
}
EtaQuotient eta_phi_identity() { return EtaQuotient({{1, -2}, {2, 5}, {4, -2}}); }

namespace {

std::size_t skip_spaces(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
    ++i;
  }
  return i;
}

// Parses an optionally signed decimal integer starting at i.
int parse_int_at(std::string_view s, std::size_t& i) {
  i = skip_spaces(s, i);
  const std::size_t start = i;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
    throw ParseError("expected an integer", i < s.size() ? i : start);
  }
  long value = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    value = value * 10 + (s[i] - '0');
    if (value > 1'000'000) {
      throw ParseError("integer out of range", start);
    }
    ++i;
  }
  i = skip_spaces(s, i);
  return static_cast<int>(negative ? -value : value);
}

}  // namespace

EtaQuotient parse_eta_quotient(std::string_view text, int level) {
  std::map<int, int> exps;
  std::size_t i = 0;
  if (skip_spaces(text, 0) == text.size()) {
    return EtaQuotient({}, level);
  }
  while (true) {
    const std::size_t entry_start = skip_spaces(text, i);
    const int delta = parse_int_at(text, i);
    if (i >= text.size() || text[i] != ':') {
      throw ParseError("expected ':' after divisor", i);
    }
    ++i;
    const int r = parse_int_at(text, i);
    if (delta < 1 || level % delta != 0) {
      throw ParseError("divisor " + std::to_string(delta) + " does not divide level " +
                           std::to_string(level),
                       entry_start);
    }
    if (exps.count(delta) != 0) {
      throw ParseError("divisor " + std::to_string(delta) + " listed twice", entry_start);
    }
    exps[delta] = r;
    if (i == text.size()) {
      break;
    }
    if (text[i] != ',') {
      throw ParseError("expected ',' between entries", i);
    }
    ++i;
  }
  return EtaQuotient(std::move(exps), level);
}

std::string to_string(const EtaQuotient& f) {
  std::string out;
  for (const auto& [delta, r] : f.exponents()) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(delta) + ":" + std::to_string(r);
  }
  return out;
}

QSeries eta_series(int delta, int prec) {
  if (delta < 1) {
    throw std::invalid_argument("eta_series: delta must be positive");
  }
  std::vector<Integer> c(static_cast<std::size_t>(std::max(prec, 0)), Integer(0));
  if (prec > 0) {
    c[0] = 1;
  }
  // Multiply by (1 - q^m) for every m = delta n below the precision.
  for (int m = delta; m < prec; m += delta) {
    for (int i = prec - 1; i >= m; --i) {
      c[i] -= c[i - m];
    }
  }
  std::vector<Rational> out(c.begin(), c.end());
  return QSeries(std::move(out));
}

QSeries eta_series_pentagonal(int delta, int prec) {
  if (delta < 1) {
    throw std::invalid_argument("eta_series_pentagonal: delta must be positive");
  }
  // sum_{k in Z} (-1)^k q^{delta k(3k-1)/2}
  std::vector<Rational> c(static_cast<std::size_t>(std::max(prec, 0)), Rational(0));
  if (prec > 0) {
    c[0] = 1;
  }
  for (long k = 1; delta * (k * (3 * k - 1) / 2) < prec; ++k) {
    const int sign = (k % 2 == 0) ? 1 : -1;
    const long lower = delta * (k * (3 * k - 1) / 2);
    const long upper = delta * (k * (3 * k + 1) / 2);
    c[lower] = sign;
    if (upper < prec) {
      c[upper] = sign;
    }
  }
  return QSeries(std::move(c));
}

namespace {

// Applies prod (1 - q^{delta n})^{r_delta} to the series 1 in place.
// Returns false on int64 overflow so the caller can retry exactly.
bool expand_eta_product_int64(const EtaQuotient& f, int prec, std::vector<std::int64_t>& c) {
  c.assign(static_cast<std::size_t>(prec), 0);
  c[0] = 1;
  for (const auto& [delta, r] : f.exponents()) {
    const int times = r < 0 ? -r : r;
    for (int m = delta; m < prec; m += delta) {
      for (int t = 0; t < times; ++t) {
        if (r > 0) {
          for (int i = prec - 1; i >= m; --i) {
            if (__builtin_sub_overflow(c[i], c[i - m], &c[i])) {
              return false;
            }
          }
        } else {
          for (int i = m; i < prec; ++i) {
            if (__builtin_add_overflow(c[i], c[i - m], &c[i])) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

void expand_eta_product_exact(const EtaQuotient& f, int prec, std::vector<Integer>& c) {
  c.assign(static_cast<std::size_t>(prec), Integer(0));
  c[0] = 1;
  for (const auto& [delta, r] : f.exponents()) {
    const int times = r < 0 ? -r : r;
    for (int m = delta; m < prec; m += delta) {
      for (int t = 0; t < times; ++t) {
        if (r > 0) {
          for (int i = prec - 1; i >= m; --i) {
            c[i] -= c[i - m];
          }
        } else {
          for (int i = m; i < prec; ++i) {
            c[i] += c[i - m];
          }
        }
      }
    }
  }
}

}  // namespace

QSeries eta_quotient_series(const EtaQuotient& f, int prec) {
  const Rational e = f.leading_exponent();
  if (!is_integer(e)) {
    throw FractionalExponent("eta quotient " + to_string(f) + " has q-prefactor exponent " +
                             to_string(e) + ", not an integer");
  }
  if (e < 0) {
    throw NegativeValuation("eta quotient " + to_string(f) + " has negative valuation " +
                            to_string(e));
  }
  const long shift = e.get_num().get_si();
  std::vector<Rational> out(static_cast<std::size_t>(std::max(prec, 0)), Rational(0));
  const int inner = prec - static_cast<int>(shift);
  if (inner <= 0) {
    return QSeries(std::move(out));
  }
  std::vector<std::int64_t> fast;
  if (expand_eta_product_int64(f, inner, fast)) {
    for (int i = 0; i < inner; ++i) {
      out[shift + i] = Rational(static_cast<long>(fast[i]));
    }
  } else {
    std::vector<Integer> exact;
    expand_eta_product_exact(f, inner, exact);
    for (int i = 0; i < inner; ++i) {
      out[shift + i] = Rational(exact[i]);
    }
  }
  return QSeries(std::move(out));
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    out.push_back(n);
  }
  return out;
}

int valuation_at(int n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long integral_weight(const EtaQuotient& f) {
  const Rational k = f.weight();
  if (!is_integer(k)) {
    throw NonIntegralWeight("eta quotient " + to_string(f) + " has weight " + to_string(k));
  }
  return k.get_num().get_si();
}

}  // namespace

long character_discriminant(const EtaQuotient& f) {
  const long k = integral_weight(f);
  long s = (k % 2 == 0) ? 1 : -1;
  for (int p : prime_factors(f.level())) {
    long e = 0;
    for (const auto& [delta, r] : f.exponents()) {
      e += static_cast<long>(r) * valuation_at(delta, p);
    }
    if (e % 2 != 0) {
      s *= p;
    }
  }
  long mod4 = s % 4;
  if (mod4 < 0) {
    mod4 += 4;
  }
  return mod4 == 1 ? s : 4 * s;
}

CharacterLabel character_label(const EtaQuotient& f) {
  const long d = character_discriminant(f);
  for (CharacterLabel label : kSpaceCharacters) {
    const int t = modulus_of(label);
    bool agrees = true;
    for (long m = 1; m < 24 && agrees; ++m) {
      if (std::gcd(m, 24L) == 1) {
        agrees = kronecker(d, m) == kronecker(t, m);
      }
    }
    if (agrees) {
      return label;
    }
  }
  return CharacterLabel::other;
}

const CuspOrder& CuspOrderReport::at(int denominator) const {
  for (const auto& c : cusps) {
    if (c.denominator == denominator) {
      return c;
    }
  }
  throw std::out_of_range("no cusp with denominator " + std::to_string(denominator));
}

Rational CuspOrderReport::total_order() const {
  Rational total(0);
  for (const auto& c : cusps) {
    total += c.order * c.multiplicity;
  }
  return total;
}

int gamma0_index(int level) {
  long index = level;
  for (int p : prime_factors(level)) {
    index = index / p * (p + 1);
  }
  return static_cast<int>(index);
}

CuspOrderReport cusp_orders(const EtaQuotient& f) {
  const int N = f.level();
  CuspOrderReport report;
  for (int c : divisors(N)) {
    const int g = std::gcd(c, N / c);
    Rational sum(0);
    for (const auto& [delta, r] : f.exponents()) {
      const long gd = std::gcd(c, delta);
      sum += make_rational(gd * gd * r, static_cast<long>(g) * c * delta);
    }
    sum *= make_rational(N, 24);
    int phi = 0;
    for (int a = 1; a <= g; ++a) {
      if (std::gcd(a, g) == 1) {
        ++phi;
      }
    }
    report.cusps.push_back(CuspOrder{c, sum, N / (c * g), phi});
  }
  return report;
}

bool is_holomorphic_modular_form(const EtaQuotient& f) {
  integral_weight(f);
  for (const auto& c : cusp_orders(f).cusps) {
    if (c.order < 0) {
      return false;
    }
  }
  return true;
}

bool satisfies_eta_congruences(const EtaQuotient& f) {
  long at_infinity = 0;
  long at_zero = 0;
  for (const auto& [delta, r] : f.exponents()) {
    at_infinity += static_cast<long>(delta) * r;
    at_zero += static_cast<long>(f.level() / delta) * r;
  }
  return at_infinity % 24 == 0 && at_zero % 24 == 0;
}

}  // namespace mf24
