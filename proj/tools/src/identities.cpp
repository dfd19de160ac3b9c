#include "identities.hpp"

#include <array>

#include "mf24/etafunc.hpp"
#include "mf24/theta.hpp"

namespace mf24::cli {

namespace {

IdentityCheck compare(std::string name, std::string statement, const QSeries& lhs,
                      const QSeries& rhs, int prec) {
  IdentityCheck check{std::move(name), std::move(statement), prec, false, std::nullopt};
  const int diff = first_difference(lhs, rhs);
  if (diff >= 0) {
    check.first_difference = diff;
  }
  check.ok = diff < 0 && lhs.prec() == prec && rhs.prec() == prec;
  return check;
}

struct Term {
  long coefficient;
  std::array<int, 4> form;
};

struct CuspIdentity {
  const char* name;
  std::vector<Term> terms;
  long multiple;
  EtaQuotient (*cusp_form)();
  const char* statement;
};

}  // namespace

IdentityCheck check_phi_eta_identity(int prec) {
  return compare("phi-eta", "phi(z) = eta^5(2z) / (eta^2(z) eta^2(4z))", phi_series(1, prec),
                 eta_quotient_series(eta_phi_identity(), prec), prec);
}

std::vector<IdentityCheck> check_cusp_identities(int prec) {
  const std::vector<CuspIdentity> identities{
      {"A", {{-1, {1, 1, 2, 2}}, {4, {1, 2, 3, 6}}, {-3, {3, 3, 6, 6}}}, 4, eta_A,
       "-phi[1,1,2,2] + 4 phi[1,2,3,6] - 3 phi[3,3,6,6] = 4 A"},
      {"B1",
       {{-2, {1, 1, 1, 2}}, {5, {1, 1, 3, 6}}, {9, {3, 3, 3, 6}}, {-12, {3, 6, 6, 6}}},
       8, eta_B1,
       "-2 phi[1,1,1,2] + 5 phi[1,1,3,6] + 9 phi[3,3,3,6] - 12 phi[3,6,6,6] = 8 B1"},
      {"B2",
       {{2, {1, 2, 2, 2}}, {-5, {2, 2, 3, 6}}, {-6, {3, 3, 3, 6}}, {9, {3, 6, 6, 6}}},
       4, eta_B2,
       "2 phi[1,2,2,2] - 5 phi[2,2,3,6] - 6 phi[3,3,3,6] + 9 phi[3,6,6,6] = 4 B2"},
      {"C1",
       {{2, {1, 1, 1, 6}}, {-3, {1, 1, 2, 3}}, {4, {2, 2, 2, 3}}, {-3, {2, 3, 3, 3}}},
       24, eta_C1,
       "2 phi[1,1,1,6] - 3 phi[1,1,2,3] + 4 phi[2,2,2,3] - 3 phi[2,3,3,3] = 24 C1"},
      {"C2",
       {{2, {1, 1, 2, 3}}, {-2, {1, 2, 2, 6}}, {-3, {2, 2, 2, 3}}, {3, {2, 3, 6, 6}}},
       4, eta_C2,
       "2 phi[1,1,2,3] - 2 phi[1,2,2,6] - 3 phi[2,2,2,3] + 3 phi[2,3,6,6] = 4 C2"},
  };

  std::vector<IdentityCheck> out;
  for (const CuspIdentity& id : identities) {
    QSeries lhs(prec);
    for (const Term& t : id.terms) {
      lhs = lhs + scale(theta_product_series(ThetaProductSpec(t.form), prec), Rational(t.coefficient));
    }
    const QSeries rhs = scale(eta_quotient_series(id.cusp_form(), prec), Rational(id.multiple));
    out.push_back(compare(id.name, id.statement, lhs, rhs, prec));
  }
  return out;
}

}  // namespace mf24::cli
