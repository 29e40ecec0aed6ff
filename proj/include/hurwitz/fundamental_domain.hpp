#pragma once

// Where does the fixed point of a positive-determinant matrix sit
// relative to the fundamental domain F = {|Re z| <= 1/2, |z| >= 1} and
// its left half F^- = {-1/2 <= Re z <= 0, |z| >= 1}?  For a normalized
// elliptic M = [[a,b],[c,d]] (c > 0) the fixed point z satisfies
// Re z = (a-d)/(2c) and |z|^2 = -b/c, so membership reduces to the sign
// tests (a-d) ? +-c and -b ? c.  The fixed point itself is never
// materialized and no floating point is used.

#include "hurwitz/modular_group.hpp"
#include "hurwitz/rational.hpp"

#include <string>

namespace hurwitz {

class RatMatrix {
 public:
  // requires det > 0; stores the +/- representative with c > 0, or
  // (c = 0 and d > 0), or (c = d = 0 and a > 0)
  RatMatrix(Rat a, Rat b, Rat c, Rat d);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }

  Rat det() const;
  Rat trace() const;

  bool operator==(const RatMatrix&) const = default;

 private:
  void normalize();
  Rat a_, b_, c_, d_;
};

RatMatrix rat_matrix(const GroupElement& g);
RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
std::string to_string(const RatMatrix& m);

enum class MatrixKind { Scalar, Elliptic, Parabolic, Hyperbolic };
std::string to_string(MatrixKind k);
MatrixKind kind(const RatMatrix& m);

// CornerRho = fixed point e^{i pi/3}, CornerRhoBar = e^{2 i pi/3},
// CornerI = i (only reported for F^- queries; for F the point i is an
// ordinary boundary point)
enum class DomainPosition {
  Outside,
  Interior,
  Edge,
  CornerRho,
  CornerRhoBar,
  CornerI
};
std::string to_string(DomainPosition p);

// both require an elliptic matrix and throw std::domain_error otherwise
DomainPosition position_in_f(const RatMatrix& m);
DomainPosition position_in_f_minus(const RatMatrix& m);

// angle fraction of F at the fixed point: 1 interior, 1/2 edge,
// 1/6 at rho and rho^2, 0 outside; requires m elliptic
Rat chi_weight(const RatMatrix& m);

// angle fraction of F^-: 1 interior, 1/2 edge, 1/4 at i, 1/6 at rho^2
Rat chi_minus_weight(const RatMatrix& m);

// chi^- of the fixed point if elliptic, -1/12 if scalar, 0 otherwise
Rat alpha(const RatMatrix& m);

}  // namespace hurwitz
