#pragma once

// M_n: integral matrices of determinant n modulo +-1.  Provides the
// Gamma-equivariant bijection to quadratic forms, the right-coset
// decomposition M_n = |_| [[d',b],[0,d]] Gamma, the weighted elliptic
// enumeration behind the class number relation, and the relation sides
// themselves (computed by two independent pipelines).

#include "hurwitz/class_numbers.hpp"
#include "hurwitz/fundamental_domain.hpp"
#include "hurwitz/modular_group.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/tessellation.hpp"

#include <string>
#include <vector>

namespace hurwitz {

class IntMatrix {
 public:
  // requires det > 0; stores the +/- representative with c > 0, or
  // (c = 0 and d > 0)
  IntMatrix(Int a, Int b, Int c, Int d);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  Int det() const;
  Int trace() const;
  bool elliptic() const;  // trace^2 < 4 det

  bool operator==(const IntMatrix&) const = default;

 private:
  void normalize();
  Int a_, b_, c_, d_;
};

bool operator<(const IntMatrix& lhs, const IntMatrix& rhs);
IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
IntMatrix int_matrix(const GroupElement& g);
RatMatrix rat_matrix(const IntMatrix& m);
std::string to_string(const IntMatrix& m);

// [[a,b],[c,d]] <-> c x^2 + (d-a) xy - b y^2, discriminant t^2 - 4n
QuadForm form_of_matrix(const IntMatrix& m);

struct CosetLabel {
  Int delta_prime, beta, delta;  // n = delta_prime * delta, 0 <= beta < delta_prime
  bool operator==(const CosetLabel&) const = default;
};
bool operator<(const CosetLabel& lhs, const CosetLabel& rhs);
std::string to_string(const CosetLabel& label);

struct CosetDecomposition {
  CosetLabel label;
  // m * witness == [[delta_prime, beta],[0, delta]] (as +/- classes)
  GroupElement witness;
};

// delta = gcd(c,d), delta' = n/delta, beta by clearing the bottom row
// with an extended-gcd element of Gamma and reducing mod delta'
CosetDecomposition coset_label(const IntMatrix& m);

// all sigma(n) labels, ordered by delta ascending then beta; requires n >= 1
std::vector<CosetLabel> coset_reps(const Int& n);

struct WeightedMatrix {
  IntMatrix matrix;
  Rat weight;  // chi at the fixed point; > 0 by construction
};

// every elliptic M in M_n (c > 0) whose fixed point lies in F, paired
// with its chi weight.  Scans trace t (t^2 < 4n), c <= sqrt((4n-t^2)/3),
// u = a-d in [-c,c]; requires n >= 1
std::vector<WeightedMatrix> enumerate_weighted_elliptic(const Int& n);

struct RelationSides {
  Rat lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

// lhs = sum_{t^2 <= 4n} H(4n - t^2)   (class number pipeline)
// rhs = sum_{ad = n, a,d > 0} max(a,d)
RelationSides theorem1_sides(const Int& n);

// lhs = total chi weight over elliptic M_n  (matrix pipeline)
// rhs = divisor max-sum + 1/6 if n is a square
RelationSides eq0_sides(const Int& n);

// exact chi-weight subtotal of one right coset; throws on a label
// inconsistent with n
Rat theorem2_sum(const Int& n, const CosetLabel& label);

// 1 + sgn(delta' - delta), plus 1/6 for the coset sqrt(n)*Gamma
// (label (sqrt n, 0, sqrt n)); value in {0, 1, 2, 7/6}
Rat theorem2_predicted(const Int& n, const CosetLabel& label);

struct CosetRow {
  CosetLabel label;
  Rat sum, predicted;
  bool ok() const { return sum == predicted; }
};

// all cosets of M_n in one enumeration pass
std::vector<CosetRow> theorem2_table(const Int& n);

// sum_{g in Gamma} alpha([[y,x],[0,1]] g), evaluated by locating (x,y)
// in the tessellation after reducing x into [0,y); equals
// (1 + sgn(y-1))/2.  Requires y > 0.
Rat theorem21_sum(const Rat& x, const Rat& y,
                  int max_depth = kDefaultMaxDepth);

}  // namespace hurwitz
