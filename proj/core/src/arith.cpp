#include "mf24/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "mf24/errors.hpp"

namespace mf24 {

namespace {

// Jacobi symbol (a | n) for odd n > 0.
int jacobi(long a, long n) {
  a %= n;
  if (a < 0) {
    a += n;
  }
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r = n % 8;
      if (r == 3 || r == 5) {
        result = -result;
      }
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) {
      result = -result;
    }
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(long t, long m) {
  if (m == 0) {
    return (t == 1 || t == -1) ? 1 : 0;
  }
  int result = 1;
  if (m < 0) {
    m = -m;
    if (t < 0) {
      result = -result;
    }
  }
  int twos = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (t % 2 == 0) {
      return 0;
    }
    long r = t % 8;
    if (r < 0) {
      r += 8;
    }
    if ((r == 3 || r == 5) && (twos % 2 == 1)) {
      result = -result;
    }
  }
  if (m == 1) {
    return result;
  }
  return result * jacobi(t, m);
}

KroneckerChar::KroneckerChar(int t) : t_(t) {
  if (std::find(kAllowed.begin(), kAllowed.end(), t) == kAllowed.end()) {
    throw std::invalid_argument("KroneckerChar: unsupported label " + std::to_string(t));
  }
}

int modulus_of(CharacterLabel label) {
  switch (label) {
    case CharacterLabel::chi1:
      return 1;
    case CharacterLabel::chi8:
      return 8;
    case CharacterLabel::chi12:
      return 12;
    case CharacterLabel::chi24:
      return 24;
    case CharacterLabel::other:
      break;
  }
  return 0;
}

std::string name_of(CharacterLabel label) {
  if (label == CharacterLabel::other) {
    return "other";
  }
  return "chi" + std::to_string(modulus_of(label));
}

CharacterLabel parse_character(std::string_view text) {
  std::string_view digits = text;
  if (digits.rfind("chi", 0) == 0) {
    digits.remove_prefix(3);
  } else if (digits.rfind("χ", 0) == 0) {
    digits.remove_prefix(std::string_view("χ").size());
  }
  for (CharacterLabel label : kSpaceCharacters) {
    if (digits == std::to_string(modulus_of(label))) {
      return label;
    }
  }
  throw ParseError("unknown character '" + std::string(text) + "' (expected 1, 8, 12 or 24)",
                   0);
}

Rational twisted_sigma(KroneckerChar chi, KroneckerChar psi, long n) {
  if (n <= 0) {
    return Rational(0);
  }
  long total = 0;
  for (long m = 1; m * m <= n; ++m) {
    if (n % m != 0) {
      continue;
    }
    const long other = n / m;
    total += chi(m) * psi(other) * m;
    if (other != m) {
      total += chi(other) * psi(m) * other;
    }
  }
  return Rational(total);
}

Rational twisted_sigma(KroneckerChar chi, KroneckerChar psi, const Rational& n) {
  if (!is_integer(n) || n <= 0) {
    return Rational(0);
  }
  return twisted_sigma(chi, psi, n.get_num().get_si());
}

long divisor_sum(long n) {
  if (n <= 0) {
    return 0;
  }
  long total = 0;
  for (long m = 1; m * m <= n; ++m) {
    if (n % m == 0) {
      total += m;
      if (m * m != n) {
        total += n / m;
      }
    }
  }
  return total;
}

namespace {

struct PairConstant {
  int t1;
  int t2;
  long num;
  long den;
};

constexpr std::array<PairConstant, 11> kPairs{{
    {-8, -3, 0, 1},
    {-3, -8, 0, 1},
    {1, 24, 0, 1},
    {24, 1, -3, 1},
    {1, 1, -1, 24},
    {1, 8, 0, 1},
    {8, 1, -1, 2},
    {1, 12, 0, 1},
    {12, 1, -1, 1},
    {-3, -4, 0, 1},
    {-4, -3, 0, 1},
}};

const PairConstant* find_pair(int t1, int t2) {
  for (const auto& p : kPairs) {
    if (p.t1 == t1 && p.t2 == t2) {
      return &p;
    }
  }
  return nullptr;
}

}  // namespace

bool EisensteinSpec::is_listed_pair(int t1, int t2) { return find_pair(t1, t2) != nullptr; }

Rational EisensteinSpec::constant() const {
  const PairConstant* p = find_pair(t1, t2);
  if (p == nullptr) {
    throw UnknownPair("no Eisenstein series E_{" + std::to_string(t1) + "," +
                      std::to_string(t2) + "}");
  }
  return make_rational(p->num, p->den);
}

std::string EisensteinSpec::label() const {
  std::string arg = dilation == 1 ? "z" : std::to_string(dilation) + "z";
  return "E_{" + std::to_string(t1) + "," + std::to_string(t2) + "}(" + arg + ")";
}

QSeries eisenstein_series(const EisensteinSpec& spec, int prec) {
  if (spec.dilation < 1) {
    throw std::invalid_argument("eisenstein_series: dilation must be positive");
  }
  const Rational c0 = spec.constant();
  const KroneckerChar chi(spec.t1);
  const KroneckerChar psi(spec.t2);
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(prec, 0)), Rational(0));
  if (prec > 0) {
    coeffs[0] = c0;
  }
  for (long n = 1; n * spec.dilation < prec; ++n) {
    coeffs[n * spec.dilation] = twisted_sigma(chi, psi, n);
  }
  return QSeries(std::move(coeffs));
}

QSeries L_series(int prec) { return eisenstein_series(EisensteinSpec{1, 1, 1}, prec); }

QSeries Ld_series(const LdSpec& spec, int prec) {
  if (std::find(LdSpec::kAllowed.begin(), LdSpec::kAllowed.end(), spec.d) ==
      LdSpec::kAllowed.end()) {
    throw BadDivisor("L_d requires 1 < d | 24, got d = " + std::to_string(spec.d));
  }
  const QSeries L = L_series(prec);
  return sub(L, scale(dilate(L, spec.d), Rational(spec.d)));
}

}  // namespace mf24
