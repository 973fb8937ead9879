#pragma once

#include <vector>

#include "sqes/opcalc/diff_operator.hpp"

namespace sqes::opcalc {

/// Rewrites an r-operator in rho = r^2 / scale^2. Every D_r^k coefficient must
/// carry the parity of k so that each rho coefficient is a function of r^2.
inline DiffOperator change_variable_sqrt(const DiffOperator& a, const Rational& scale) {
  if (scale <= 0) throw DomainError("change_variable_sqrt: scale must be positive");
  const Rational l2 = scale * scale;
  // D_r^k = sum_i g[k][i](r) D_rho^i, with D_r = (2r/L^2) D_rho on functions of rho
  const LaurentPoly chain = LaurentPoly::monomial(1, Rational(2) / l2);
  std::vector<std::vector<LaurentPoly>> g{{LaurentPoly(Rational(1))}};
  const int top = std::max(a.order(), 0);
  for (int k = 0; k < top; ++k) {
    std::vector<LaurentPoly> next(g[k].size() + 1);
    for (size_t i = 0; i < g[k].size(); ++i) {
      next[i] += g[k][i].derivative();
      next[i + 1] += chain * g[k][i];
    }
    g.push_back(std::move(next));
  }

  DiffOperator out;
  for (int i = 0; i <= top; ++i) {
    LaurentPoly in_r;
    for (const auto& [k, c] : a.terms())
      if (static_cast<size_t>(i) < g[k].size()) in_r += c * g[k][i];
    LaurentPoly in_rho;
    for (const auto& [e, c] : in_r.terms()) {
      if (e % 2 != 0)
        throw ParityError("coefficient of D_rho^" + std::to_string(i) + " has odd power r^" + std::to_string(e));
      in_rho += LaurentPoly::monomial(e / 2, c * ipow(l2, e / 2));
    }
    out += DiffOperator::term(i, in_rho);
  }
  return out;
}

}  // namespace sqes::opcalc
