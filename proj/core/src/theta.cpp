#include "mf24/theta.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "mf24/errors.hpp"

namespace mf24 {

ThetaProductSpec::ThetaProductSpec(std::array<int, 4> a) : a_(a) {
  for (int x : a_) {
    if (x < 1) {
      throw std::invalid_argument("theta product coefficients must be positive");
    }
  }
  std::sort(a_.begin(), a_.end());
}

bool ThetaProductSpec::is_primitive() const {
  return std::gcd(std::gcd(a_[0], a_[1]), std::gcd(a_[2], a_[3])) == 1;
}

ThetaProductSpec parse_theta_spec(std::string_view text) {
  std::array<int, 4> a{};
  std::size_t i = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    while (i < text.size() && text[i] == ' ') {
      ++i;
    }
    const std::size_t start = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) {
        throw ParseError("coefficient out of range", start);
      }
      ++i;
    }
    if (i == start) {
      throw ParseError("expected a positive integer", i);
    }
    if (value == 0) {
      throw ParseError("coefficients must be positive", start);
    }
    a[k] = static_cast<int>(value);
    while (i < text.size() && text[i] == ' ') {
      ++i;
    }
    if (k < 3) {
      if (i >= text.size() || text[i] != ',') {
        throw ParseError("expected ',' (four comma-separated coefficients)", i);
      }
      ++i;
    }
  }
  if (i != text.size()) {
    throw ParseError("trailing characters after four coefficients", i);
  }
  return ThetaProductSpec(a);
}

std::string to_string(const ThetaProductSpec& s) {
  const auto& a = s.coefficients();
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
         std::to_string(a[3]);
}

QSeries phi_series(int a, int prec) {
  if (a < 1) {
    throw std::invalid_argument("phi_series: a must be positive");
  }
  std::vector<Rational> c(static_cast<std::size_t>(std::max(prec, 0)), Rational(0));
  if (prec > 0) {
    c[0] = 1;
  }
  for (long n = 1; a * n * n < prec; ++n) {
    c[a * n * n] = 2;
  }
  return QSeries(std::move(c));
}

QSeries theta_product_series(const ThetaProductSpec& s, int prec) {
  QSeries out = phi_series(s[0], prec);
  for (std::size_t i = 1; i < 4; ++i) {
    out = mul(out, phi_series(s[i], prec));
  }
  return out;
}

namespace {

using Quad = std::array<int, 4>;

const std::vector<Quad>& chi1_products() {
  static const std::vector<Quad> v{{1, 1, 1, 1}, {1, 1, 2, 2}, {1, 1, 3, 3}, {1, 1, 6, 6},
                                   {1, 2, 3, 6}, {2, 2, 2, 2}, {2, 2, 3, 3}, {2, 2, 6, 6},
                                   {3, 3, 3, 3}, {3, 3, 6, 6}, {6, 6, 6, 6}};
  return v;
}
const std::vector<Quad>& chi8_products() {
  static const std::vector<Quad> v{{1, 1, 1, 2}, {1, 1, 3, 6}, {1, 2, 2, 2}, {1, 2, 3, 3},
                                   {1, 2, 6, 6}, {2, 2, 3, 6}, {3, 3, 3, 6}, {3, 6, 6, 6}};
  return v;
}
const std::vector<Quad>& chi12_products() {
  static const std::vector<Quad> v{{1, 1, 1, 3}, {1, 1, 2, 6}, {1, 2, 2, 3}, {1, 3, 3, 3},
                                   {1, 3, 6, 6}, {2, 2, 2, 6}, {2, 3, 3, 6}, {2, 6, 6, 6}};
  return v;
}
const std::vector<Quad>& chi24_products() {
  static const std::vector<Quad> v{{1, 1, 1, 6}, {1, 1, 2, 3}, {1, 2, 2, 6}, {1, 3, 3, 6},
                                   {1, 6, 6, 6}, {2, 2, 2, 3}, {2, 3, 3, 3}, {2, 3, 6, 6}};
  return v;
}

}  // namespace

std::vector<ThetaProductSpec> theta_products_in(CharacterLabel character) {
  const std::vector<Quad>* src = nullptr;
  switch (character) {
    case CharacterLabel::chi1:
      src = &chi1_products();
      break;
    case CharacterLabel::chi8:
      src = &chi8_products();
      break;
    case CharacterLabel::chi12:
      src = &chi12_products();
      break;
    case CharacterLabel::chi24:
      src = &chi24_products();
      break;
    case CharacterLabel::other:
      return {};
  }
  std::vector<ThetaProductSpec> out;
  for (const Quad& q : *src) {
    out.emplace_back(q);
  }
  return out;
}

std::vector<ThetaProductSpec> all_level24_theta_products() {
  std::vector<ThetaProductSpec> out;
  for (CharacterLabel c : kSpaceCharacters) {
    auto part = theta_products_in(c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

CharacterLabel theta_product_character(const ThetaProductSpec& s) {
  for (CharacterLabel c : kSpaceCharacters) {
    const auto specs = theta_products_in(c);
    if (std::find(specs.begin(), specs.end(), s) != specs.end()) {
      return c;
    }
  }
  return CharacterLabel::other;
}

}  // namespace mf24
