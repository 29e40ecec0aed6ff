#include "hurwitz/class_numbers.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Int QuadForm::discriminant() const { return B * B - 4 * A * C; }

bool QuadForm::positive_definite() const {
  return sgn(A) > 0 && sgn(discriminant()) < 0;
}

bool operator<(const QuadForm& lhs, const QuadForm& rhs) {
  if (lhs.A != rhs.A) return lhs.A < rhs.A;
  if (lhs.B != rhs.B) return lhs.B < rhs.B;
  return lhs.C < rhs.C;
}

std::string to_string(const QuadForm& f) {
  std::ostringstream os;
  os << "(" << f.A << "," << f.B << "," << f.C << ")";
  return os.str();
}

QuadForm apply(const QuadForm& f, const GroupElement& g) {
  const Int& p = g.a();
  const Int& q = g.b();
  const Int& r = g.c();
  const Int& s = g.d();
  return QuadForm{f.A * p * p + f.B * p * r + f.C * r * r,
                  2 * f.A * p * q + f.B * (p * s + q * r) + 2 * f.C * r * s,
                  f.A * q * q + f.B * q * s + f.C * s * s};
}

bool is_reduced(const QuadForm& f) {
  if (!f.positive_definite()) return false;
  Int ab = abs(f.B);
  if (ab > f.A || f.A > f.C) return false;
  if (sgn(f.B) < 0 && (ab == f.A || f.A == f.C)) return false;
  return true;
}

Reduction reduce(const QuadForm& f_in) {
  if (!f_in.positive_definite())
    throw std::domain_error("reduce requires a positive definite form");
  QuadForm f = f_in;
  GroupElement witness;
  const GroupElement s = GroupElement::S();
  for (int guard = 0;; ++guard) {
    if (guard > 100000)
      throw std::runtime_error("form reduction did not terminate");
    if (abs(f.B) > f.A) {
      // translate B into (-A, A]
      Int k = floor_div(f.A - f.B, 2 * f.A);
      GroupElement t = GroupElement::translation(k);
      f = apply(f, t);
      witness = witness * t;
    }
    if (f.A > f.C) {
      f = apply(f, s);
      witness = witness * s;
      continue;
    }
    break;
  }
  // boundary normalization: B >= 0 when |B| = A or A = C
  if (sgn(f.B) < 0) {
    if (-f.B == f.A) {
      GroupElement t = GroupElement::translation(1);
      f = apply(f, t);
      witness = witness * t;
    } else if (f.A == f.C) {
      f = apply(f, s);
      witness = witness * s;
    }
  }
  return Reduction{f, witness};
}

std::vector<QuadForm> enumerate_reduced(const Int& D) {
  if (sgn(D) <= 0 || (D % 4 != 0 && D % 4 != 3))
    throw std::domain_error("discriminant -D requires D > 0, D = 0,3 mod 4");
  std::vector<QuadForm> out;
  for (Int A = 1; 3 * A * A <= D; ++A) {
    for (Int B = -A; B <= A; ++B) {
      if (mpz_odd_p(Int(B - D).get_mpz_t())) continue;  // B^2 = -D mod 4
      Int num = B * B + D;                              // 4AC
      Int four_a = 4 * A;
      if (num % four_a != 0) continue;
      Int C = num / four_a;
      if (C < A) continue;
      if (sgn(B) < 0 && (-B == A || A == C)) continue;
      out.push_back(QuadForm{A, B, C});
    }
  }
  return out;
}

Rat hurwitz_class_number(const Int& D) {
  if (sgn(D) < 0 || (D % 4 != 0 && D % 4 != 3))
    throw std::domain_error("H(D) requires D >= 0 and D = 0,3 mod 4");
  if (D == 0) return make_rat(-1, 12);

  static std::mutex cache_mutex;
  static std::map<Int, Rat> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(D);
    if (it != cache.end()) return it->second;
  }

  Rat total = 0;
  for (const QuadForm& f : enumerate_reduced(D)) {
    if (f.B == 0 && f.A == f.C)
      total += make_rat(1, 2);  // multiple of x^2 + y^2
    else if (f.A == f.B && f.B == f.C)
      total += make_rat(1, 3);  // multiple of x^2 + xy + y^2
    else
      total += 1;
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(D, total);
  return total;
}

}  // namespace hurwitz
