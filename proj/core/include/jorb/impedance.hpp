#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jorb/rational.hpp"
#include "jorb/sp_expr.hpp"

namespace jorb {

struct ValuedElement {
  ElementKind kind = ElementKind::Resistor;
  Rational value;  // ohm / henry / farad, > 0
};

using ValueMap = std::map<std::string, ValuedElement>;

/// Value file: `label = value` lines, '#' comments. Kinds come from the
/// label's leading letter.
ValueMap load_values(const std::string& path);
ValueMap parse_values(const std::string& text);

/// Exact impedance of a valued SP expression: Z_R = R, Z_L = L s,
/// Z_C = 1/(C s); series adds, parallel combines harmonically.
RationalZ z_of(const SPExprPtr& e, const ValueMap& values);

struct DegreeReport {
  Quadruple quad;
  int prefactor = 0;
  int num_degree = 0;
  int den_degree = 0;
  bool pass = false;
  bool cancellation_seen = false;  // draws disagreed before the reroll
  std::string detail;
};

/// Checks the impedance degree structure against the jorb quadruple: with
/// s^{v(l)} factored out so both polynomials have nonzero constant terms,
/// deg(num) = lambda_p and deg(den) = lambda_s. With no explicit values,
/// three independent random-rational draws must agree.
DegreeReport degree_check(const SPExprPtr& e, const ValueMap& values);
DegreeReport degree_check(const SPExprPtr& e, unsigned seed = 0);

struct EquivVerdict {
  bool identical = false;
  RationalZ lhs;
  RationalZ rhs;
  RationalZ difference;
};

/// Substitutes e2's values from rational-function expressions over e1's
/// values and compares the two impedances as exact rational functions.
EquivVerdict equiv_test(const SPExprPtr& e1, const ValueMap& values1, const SPExprPtr& e2,
                        const std::map<std::string, std::string>& param_map,
                        bool reciprocal_rhs = false);

/// Quadruple coincidence, the necessary condition for impedance equivalence.
bool phi_necessary(const SPExprPtr& e1, const SPExprPtr& e2);

}  // namespace jorb
