#include "hurwitz/fundamental_domain.hpp"

#include <sstream>
#include <stdexcept>

namespace hurwitz {

RatMatrix::RatMatrix(Rat a, Rat b, Rat c, Rat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  normalize();
}

void RatMatrix::normalize() {
  if (sgn(a_ * d_ - b_ * c_) <= 0)
    throw std::domain_error("matrix must have positive determinant");
  int cs = sgn(c_);
  bool flip = cs < 0;
  if (cs == 0) {
    int ds = sgn(d_);
    flip = ds < 0 || (ds == 0 && sgn(a_) < 0);
  }
  if (flip) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

Rat RatMatrix::det() const { return a_ * d_ - b_ * c_; }
Rat RatMatrix::trace() const { return a_ + d_; }

RatMatrix rat_matrix(const GroupElement& g) {
  return RatMatrix(Rat(g.a()), Rat(g.b()), Rat(g.c()), Rat(g.d()));
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
  return RatMatrix(lhs.a() * rhs.a() + lhs.b() * rhs.c(),
                   lhs.a() * rhs.b() + lhs.b() * rhs.d(),
                   lhs.c() * rhs.a() + lhs.d() * rhs.c(),
                   lhs.c() * rhs.b() + lhs.d() * rhs.d());
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << "[[" << to_string(m.a()) << "," << to_string(m.b()) << "],["
     << to_string(m.c()) << "," << to_string(m.d()) << "]]";
  return os.str();
}

std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::Scalar: return "scalar";
    case MatrixKind::Elliptic: return "elliptic";
    case MatrixKind::Parabolic: return "parabolic";
    case MatrixKind::Hyperbolic: return "hyperbolic";
  }
  throw std::logic_error("unreachable");
}

MatrixKind kind(const RatMatrix& m) {
  if (m.b() == 0 && m.c() == 0 && m.a() == m.d()) return MatrixKind::Scalar;
  Rat t = m.trace();
  Rat gap = t * t - 4 * m.det();
  int s = sgn(gap);
  if (s < 0) return MatrixKind::Elliptic;
  if (s == 0) return MatrixKind::Parabolic;
  return MatrixKind::Hyperbolic;
}

std::string to_string(DomainPosition p) {
  switch (p) {
    case DomainPosition::Outside: return "outside";
    case DomainPosition::Interior: return "interior";
    case DomainPosition::Edge: return "edge";
    case DomainPosition::CornerRho: return "corner-rho";
    case DomainPosition::CornerRhoBar: return "corner-rho-bar";
    case DomainPosition::CornerI: return "corner-i";
  }
  throw std::logic_error("unreachable");
}

namespace {

void require_elliptic(const RatMatrix& m, const char* who) {
  if (kind(m) != MatrixKind::Elliptic)
    throw std::domain_error(std::string(who) + " requires an elliptic matrix");
}

}  // namespace

// Re z = (a-d)/(2c) and |z|^2 = -b/c for the normalized representative,
// so F-membership is |a-d| <= c and -b >= c; equalities pick out the
// boundary, and both equalities at once pick out the corners.
DomainPosition position_in_f(const RatMatrix& m) {
  require_elliptic(m, "position_in_f");
  Rat u = m.a() - m.d();
  Rat mb = -m.b();
  const Rat& c = m.c();
  if (u > c || u < -c || mb < c) return DomainPosition::Outside;
  bool on_arc = (mb == c);
  if (u == c) return on_arc ? DomainPosition::CornerRho : DomainPosition::Edge;
  if (u == -c)
    return on_arc ? DomainPosition::CornerRhoBar : DomainPosition::Edge;
  return on_arc ? DomainPosition::Edge : DomainPosition::Interior;
}

DomainPosition position_in_f_minus(const RatMatrix& m) {
  require_elliptic(m, "position_in_f_minus");
  Rat u = m.a() - m.d();
  Rat mb = -m.b();
  const Rat& c = m.c();
  if (sgn(u) > 0 || u < -c || mb < c) return DomainPosition::Outside;
  bool on_arc = (mb == c);
  if (sgn(u) == 0)
    return on_arc ? DomainPosition::CornerI : DomainPosition::Edge;
  if (u == -c)
    return on_arc ? DomainPosition::CornerRhoBar : DomainPosition::Edge;
  return on_arc ? DomainPosition::Edge : DomainPosition::Interior;
}

Rat chi_weight(const RatMatrix& m) {
  switch (position_in_f(m)) {
    case DomainPosition::Interior: return 1;
    case DomainPosition::Edge: return make_rat(1, 2);
    case DomainPosition::CornerRho:
    case DomainPosition::CornerRhoBar: return make_rat(1, 6);
    case DomainPosition::Outside: return 0;
    default: throw std::logic_error("unreachable");
  }
}

Rat chi_minus_weight(const RatMatrix& m) {
  switch (position_in_f_minus(m)) {
    case DomainPosition::Interior: return 1;
    case DomainPosition::Edge: return make_rat(1, 2);
    case DomainPosition::CornerI: return make_rat(1, 4);
    case DomainPosition::CornerRhoBar: return make_rat(1, 6);
    case DomainPosition::Outside: return 0;
    default: throw std::logic_error("unreachable");
  }
}

Rat alpha(const RatMatrix& m) {
  switch (kind(m)) {
    case MatrixKind::Scalar: return make_rat(-1, 12);
    case MatrixKind::Elliptic: return chi_minus_weight(m);
    case MatrixKind::Parabolic:
    case MatrixKind::Hyperbolic: return 0;
  }
  throw std::logic_error("unreachable");
}

}  // namespace hurwitz
