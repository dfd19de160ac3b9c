#include "mf24/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mf24/errors.hpp"

namespace mf24 {

QSeries::QSeries(int prec) {
  if (prec < 0) {
    throw std::invalid_argument("QSeries: negative precision");
  }
  coeffs_.assign(static_cast<std::size_t>(prec), Rational(0));
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

QSeries QSeries::one(int prec) { return monomial(0, Rational(1), prec); }

QSeries QSeries::monomial(int exponent, const Rational& coeff, int prec) {
  QSeries s(prec);
  if (exponent >= 0 && exponent < prec) {
    s.coeffs_[static_cast<std::size_t>(exponent)] = coeff;
  }
  return s;
}

QSeries QSeries::from_integers(std::span<const long> coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) {
    out.emplace_back(c);
  }
  return QSeries(std::move(out));
}

const Rational& QSeries::operator[](int n) const {
  if (n < 0 || n >= prec()) {
    throw PrecisionError("coefficient q^" + std::to_string(n) +
                         " is beyond the known precision " +
                         std::to_string(prec()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

int QSeries::valuation() const {
  for (int n = 0; n < prec(); ++n) {
    if (coeffs_[static_cast<std::size_t>(n)] != 0) {
      return n;
    }
  }
  return prec();
}

QSeries QSeries::truncated(int prec) const {
  if (prec < 0 || prec > this->prec()) {
    throw PrecisionError("cannot truncate a series of precision " +
                         std::to_string(this->prec()) + " to " +
                         std::to_string(prec));
  }
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + prec));
}

QSeries add(const QSeries& a, const QSeries& b) {
  const int p = std::min(a.prec(), b.prec());
  std::vector<Rational> out(static_cast<std::size_t>(p));
  for (int n = 0; n < p; ++n) {
    out[n] = a[n] + b[n];
  }
  return QSeries(std::move(out));
}

QSeries sub(const QSeries& a, const QSeries& b) {
  const int p = std::min(a.prec(), b.prec());
  std::vector<Rational> out(static_cast<std::size_t>(p));
  for (int n = 0; n < p; ++n) {
    out[n] = a[n] - b[n];
  }
  return QSeries(std::move(out));
}

QSeries negate(const QSeries& a) { return scale(a, Rational(-1)); }

QSeries scale(const QSeries& a, const Rational& c) {
  std::vector<Rational> out(static_cast<std::size_t>(a.prec()));
  for (int n = 0; n < a.prec(); ++n) {
    out[n] = a[n] * c;
  }
  return QSeries(std::move(out));
}

QSeries mul(const QSeries& a, const QSeries& b) {
  const int p = std::min(a.prec(), b.prec());
  std::vector<Rational> out(static_cast<std::size_t>(p), Rational(0));
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  Rational term;
  for (int i = 0; i < p; ++i) {
    if (ac[i] == 0) {
      continue;
    }
    for (int j = 0; i + j < p; ++j) {
      if (bc[j] == 0) {
        continue;
      }
      term = ac[i] * bc[j];
      out[i + j] += term;
    }
  }
  return QSeries(std::move(out));
}

QSeries invert(const QSeries& a) {
  if (a.prec() == 0 || a[0] == 0) {
    throw NonUnitSeries("series with zero constant term has no inverse");
  }
  const int p = a.prec();
  const Rational inv0 = 1 / a[0];
  std::vector<Rational> out(static_cast<std::size_t>(p), Rational(0));
  out[0] = inv0;
  Rational acc;
  for (int n = 1; n < p; ++n) {
    acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (a[k] != 0) {
        acc += a[k] * out[n - k];
      }
    }
    out[n] = -acc * inv0;
  }
  return QSeries(std::move(out));
}

QSeries pow(const QSeries& a, unsigned exponent) {
  QSeries result = QSeries::one(a.prec());
  QSeries base = a;
  while (exponent != 0) {
    if (exponent & 1U) {
      result = mul(result, base);
    }
    exponent >>= 1U;
    if (exponent != 0) {
      base = mul(base, base);
    }
  }
  return result;
}

QSeries dilate(const QSeries& a, int m) {
  if (m < 1) {
    throw std::invalid_argument("dilate: factor must be positive");
  }
  std::vector<Rational> out(static_cast<std::size_t>(a.prec()), Rational(0));
  for (int n = 0; n * m < a.prec(); ++n) {
    out[n * m] = a[n];
  }
  return QSeries(std::move(out));
}

QSeries shift_up(const QSeries& a, int shift) {
  if (shift < 0) {
    throw std::invalid_argument("shift_up: negative shift");
  }
  std::vector<Rational> out(static_cast<std::size_t>(a.prec()), Rational(0));
  for (int n = shift; n < a.prec(); ++n) {
    out[n] = a[n - shift];
  }
  return QSeries(std::move(out));
}

int first_difference(const QSeries& a, const QSeries& b) {
  const int p = std::min(a.prec(), b.prec());
  for (int n = 0; n < p; ++n) {
    if (a[n] != b[n]) {
      return n;
    }
  }
  return -1;
}

bool equal_up_to_shared_precision(const QSeries& a, const QSeries& b) {
  return first_difference(a, b) < 0;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.prec() == b.prec() && first_difference(a, b) < 0;
}

std::string to_string(const QSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n < a.prec(); ++n) {
    const Rational& c = a[n];
    if (c == 0) {
      continue;
    }
    Rational mag = abs(c);
    if (first) {
      if (c < 0) {
        os << '-';
      }
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) {
      os << to_string(mag) << '*';
    }
    os << 'q';
    if (n > 1) {
      os << '^' << n;
    }
  }
  if (!first) {
    os << " + ";
  }
  if (a.prec() == 0) {
    os << "O(1)";
  } else if (a.prec() == 1) {
    os << "O(q)";
  } else {
    os << "O(q^" << a.prec() << ')';
  }
  return os.str();
}

}  // namespace mf24
