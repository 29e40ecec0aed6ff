#include "hurwitz/cosets.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

IntMatrix::IntMatrix(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  normalize();
}

void IntMatrix::normalize() {
  if (sgn(a_ * d_ - b_ * c_) <= 0)
    throw std::domain_error("matrix must have positive determinant");
  int cs = sgn(c_);
  if (cs < 0 || (cs == 0 && sgn(d_) < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

Int IntMatrix::det() const { return a_ * d_ - b_ * c_; }
Int IntMatrix::trace() const { return a_ + d_; }

bool IntMatrix::elliptic() const {
  Int t = trace();
  return t * t < 4 * det();
}

bool operator<(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.a() != rhs.a()) return lhs.a() < rhs.a();
  if (lhs.b() != rhs.b()) return lhs.b() < rhs.b();
  if (lhs.c() != rhs.c()) return lhs.c() < rhs.c();
  return lhs.d() < rhs.d();
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  return IntMatrix(lhs.a() * rhs.a() + lhs.b() * rhs.c(),
                   lhs.a() * rhs.b() + lhs.b() * rhs.d(),
                   lhs.c() * rhs.a() + lhs.d() * rhs.c(),
                   lhs.c() * rhs.b() + lhs.d() * rhs.d());
}

IntMatrix int_matrix(const GroupElement& g) {
  return IntMatrix(g.a(), g.b(), g.c(), g.d());
}

RatMatrix rat_matrix(const IntMatrix& m) {
  return RatMatrix(Rat(m.a()), Rat(m.b()), Rat(m.c()), Rat(m.d()));
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << "," << m.d()
     << "]]";
  return os.str();
}

QuadForm form_of_matrix(const IntMatrix& m) {
  return QuadForm{m.c(), m.d() - m.a(), -m.b()};
}

bool operator<(const CosetLabel& lhs, const CosetLabel& rhs) {
  if (lhs.delta != rhs.delta) return lhs.delta < rhs.delta;
  if (lhs.delta_prime != rhs.delta_prime)
    return lhs.delta_prime < rhs.delta_prime;
  return lhs.beta < rhs.beta;
}

std::string to_string(const CosetLabel& label) {
  std::ostringstream os;
  os << "(" << label.delta_prime << "," << label.beta << "," << label.delta
     << ")";
  return os.str();
}

CosetDecomposition coset_label(const IntMatrix& m) {
  Int n = m.det();
  Int delta;
  mpz_gcd(delta.get_mpz_t(), m.c().get_mpz_t(), m.d().get_mpz_t());
  Int delta_prime = n / delta;
  Int c1 = m.c() / delta;
  Int d1 = m.d() / delta;
  // q, s with c1*q + d1*s = 1; then [[d1,q],[-c1,s]] in Gamma sends the
  // bottom row to (0, delta)
  Int g, q, s;
  mpz_gcdext(g.get_mpz_t(), q.get_mpz_t(), s.get_mpz_t(), c1.get_mpz_t(),
             d1.get_mpz_t());
  GroupElement clear_bottom(d1, q, -c1, s);
  Int b0 = m.a() * q + m.b() * s;  // top-right of m * clear_bottom
  Int beta;
  mpz_fdiv_r(beta.get_mpz_t(), b0.get_mpz_t(), delta_prime.get_mpz_t());
  Int k = (beta - b0) / delta_prime;
  GroupElement witness = clear_bottom * GroupElement::translation(k);
  return CosetDecomposition{CosetLabel{delta_prime, beta, delta}, witness};
}

std::vector<CosetLabel> coset_reps(const Int& n) {
  if (n < 1) throw std::domain_error("coset_reps requires n >= 1");
  std::vector<Int> divisors;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d * d != n) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  std::vector<CosetLabel> out;
  for (const Int& delta : divisors) {
    Int dp = n / delta;
    for (Int beta = 0; beta < dp; ++beta)
      out.push_back(CosetLabel{dp, beta, delta});
  }
  return out;
}

std::vector<WeightedMatrix> enumerate_weighted_elliptic(const Int& n) {
  if (n < 1)
    throw std::domain_error("enumerate_weighted_elliptic requires n >= 1");
  std::vector<WeightedMatrix> out;
  Int four_n = 4 * n;
  Int tmax = isqrt(four_n - 1);  // t^2 < 4n
  const Rat half = make_rat(1, 2);
  const Rat sixth = make_rat(1, 6);
  for (Int t = -tmax; t <= tmax; ++t) {
    Int disc = four_n - t * t;  // > 0
    Int cmax = isqrt(disc / 3);
    for (Int c = 1; c <= cmax; ++c) {
      Int four_c = 4 * c;
      // u = a - d, same parity as t;  -b = (u^2 + 4n - t^2) / (4c)
      Int u = -c;
      if (mpz_odd_p(Int(u - t).get_mpz_t())) ++u;
      for (; u <= c; u += 2) {
        Int num = u * u + disc;
        if (num % four_c != 0) continue;
        Int mb = num / four_c;
        if (mb < c) continue;  // fixed point below the unit circle arc
        Int a = (t + u) / 2;
        Int d = (t - u) / 2;
        bool u_strict = (-c < u) && (u < c);
        bool arc_strict = (mb > c);
        Rat weight;
        if (u_strict && arc_strict)
          weight = 1;
        else if (!u_strict && !arc_strict)
          weight = sixth;  // rho or rho^2
        else
          weight = half;
        out.push_back(WeightedMatrix{IntMatrix(a, -mb, c, d), weight});
      }
    }
  }
  return out;
}

RelationSides theorem1_sides(const Int& n) {
  if (n < 1) throw std::domain_error("theorem1_sides requires n >= 1");
  Rat lhs = 0;
  Int tmax = isqrt(4 * n);
  for (Int t = -tmax; t <= tmax; ++t)
    lhs += hurwitz_class_number(4 * n - t * t);
  Rat rhs = 0;
  for (Int a = 1; a * a <= n; ++a) {
    if (n % a != 0) continue;
    Int d = n / a;
    rhs += Rat(d);            // max(a, d) for a <= d
    if (a != d) rhs += Rat(d);  // the mirrored pair (d, a)
  }
  return RelationSides{lhs, rhs};
}

RelationSides eq0_sides(const Int& n) {
  if (n < 1) throw std::domain_error("eq0_sides requires n >= 1");
  Rat lhs = 0;
  for (const WeightedMatrix& wm : enumerate_weighted_elliptic(n))
    lhs += wm.weight;
  Rat rhs = 0;
  for (Int a = 1; a * a <= n; ++a) {
    if (n % a != 0) continue;
    Int d = n / a;
    rhs += Rat(d);
    if (a != d) rhs += Rat(d);
  }
  if (perfect_square(n)) rhs += make_rat(1, 6);
  return RelationSides{lhs, rhs};
}

namespace {

void require_valid_label(const Int& n, const CosetLabel& label) {
  if (label.delta < 1 || label.delta_prime < 1 ||
      label.delta * label.delta_prime != n || sgn(label.beta) < 0 ||
      label.beta >= label.delta_prime)
    throw std::domain_error("coset label " + to_string(label) +
                            " is inconsistent with n = " + n.get_str());
}

}  // namespace

Rat theorem2_sum(const Int& n, const CosetLabel& label) {
  require_valid_label(n, label);
  Rat total = 0;
  for (const WeightedMatrix& wm : enumerate_weighted_elliptic(n))
    if (coset_label(wm.matrix).label == label) total += wm.weight;
  return total;
}

Rat theorem2_predicted(const Int& n, const CosetLabel& label) {
  require_valid_label(n, label);
  Rat value = Rat(1 + sign(Int(label.delta_prime - label.delta)));
  // the coset sqrt(n)*Gamma is the one with delta' = delta, beta = 0
  if (label.delta_prime == label.delta && label.beta == 0)
    value += make_rat(1, 6);
  return value;
}

std::vector<CosetRow> theorem2_table(const Int& n) {
  std::map<CosetLabel, Rat> sums;
  for (const WeightedMatrix& wm : enumerate_weighted_elliptic(n))
    sums[coset_label(wm.matrix).label] += wm.weight;
  std::vector<CosetRow> rows;
  for (const CosetLabel& label : coset_reps(n)) {
    auto it = sums.find(label);
    Rat sum = (it == sums.end()) ? Rat(0) : it->second;
    rows.push_back(CosetRow{label, sum, theorem2_predicted(n, label)});
  }
  return rows;
}

Rat theorem21_sum(const Rat& x, const Rat& y, int max_depth) {
  if (sgn(y) <= 0) throw std::domain_error("theorem21_sum requires y > 0");
  // the sum is invariant under x -> x + ky, so reduce x into [0, y)
  Int k = rat_floor(x / y);
  Rat xn = x - Rat(k) * y;
  RatMatrix m(y, xn, Rat(0), Rat(1));

  if (y < 1) {
    // every triangle lies in {y >= 1}: all terms vanish; confirm on a
    // bounded range of words
    bool nonzero = false;
    enumerate_words(6, [&](const Word&, const GroupElement& g) {
      if (sgn(alpha(m * rat_matrix(g))) != 0) nonzero = true;
    });
    if (nonzero)
      throw std::logic_error("nonzero alpha term below the half-plane");
    return 0;
  }

  Rat total = 0;
  for (const GroupElement& g : locate(RatPoint{xn, y}, max_depth))
    total += alpha(m * rat_matrix(g));
  // M*gamma is scalar only for M = 1, gamma = 1
  if (sgn(xn) == 0 && y == 1) total += make_rat(-1, 12);
  return total;
}

}  // namespace hurwitz
