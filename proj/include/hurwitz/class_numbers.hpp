#pragma once

// Positive definite integral binary quadratic forms, Gauss reduction,
// and the Hurwitz class number H(D) as an exact rational (H(0) = -1/12,
// the classes of a(x^2+y^2) and a(x^2+xy+y^2) weighted 1/2 and 1/3).

#include "hurwitz/modular_group.hpp"
#include "hurwitz/rational.hpp"

#include <string>
#include <vector>

namespace hurwitz {

struct QuadForm {
  Int A, B, C;  // A x^2 + B xy + C y^2

  Int discriminant() const;  // B^2 - 4AC
  bool positive_definite() const;
  bool operator==(const QuadForm&) const = default;
};

bool operator<(const QuadForm& lhs, const QuadForm& rhs);
std::string to_string(const QuadForm& f);  // "(A,B,C)"

// substitution action: (f.g)(x,y) = f(px+qy, rx+sy) for g = [[p,q],[r,s]]
QuadForm apply(const QuadForm& f, const GroupElement& g);

// |B| <= A <= C, with B >= 0 whenever |B| = A or A = C
bool is_reduced(const QuadForm& f);

struct Reduction {
  QuadForm form;           // the reduced representative
  GroupElement transform;  // witness: apply(input, transform) == form
};

// throws std::domain_error unless f is positive definite
Reduction reduce(const QuadForm& f);

// all reduced forms of discriminant -D; requires D > 0 and D = 0,3 mod 4
std::vector<QuadForm> enumerate_reduced(const Int& D);

// requires D >= 0 and D = 0,3 mod 4 (everything else throws: the callers
// in the relation sums only ever produce these residues, so a silent 0
// would hide bugs); memoized, safe for concurrent callers
Rat hurwitz_class_number(const Int& D);

}  // namespace hurwitz
