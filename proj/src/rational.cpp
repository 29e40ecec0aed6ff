#include "hurwitz/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hurwitz {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool perfect_square(const Int& n, Int* root) {
  if (sgn(n) < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rational(const std::string& text) {
  const auto fail = [&text]() {
    throw std::invalid_argument("bad rational literal \"" + text +
                                "\" (expected p or p/q)");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = (text[i] == '-');
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == num_begin) fail();
  Int num(text.substr(num_begin, i - num_begin));
  if (negative) num = -num;
  Int den(1);
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == den_begin || i != text.size()) fail();
    den = Int(text.substr(den_begin));
    if (den == 0) fail();
  }
  return make_rat(num, den);
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace hurwitz
