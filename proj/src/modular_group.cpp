#include "hurwitz/modular_group.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Letter letter_inverse(Letter l) {
  switch (l) {
    case Letter::S: return Letter::S;
    case Letter::U: return Letter::U2;
    case Letter::U2: return Letter::U;
  }
  throw std::logic_error("unreachable");
}

bool same_factor(Letter a, Letter b) {
  return (a == Letter::S) == (b == Letter::S);
}

std::string to_string(Letter l) {
  switch (l) {
    case Letter::S: return "S";
    case Letter::U: return "U";
    case Letter::U2: return "U2";
  }
  throw std::logic_error("unreachable");
}

bool Word::reduced() const {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (same_factor(letters[i - 1], letters[i])) return false;
  return true;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += "·";
    out += to_string(w.letters[i]);
  }
  return out;
}

GroupElement::GroupElement() : a_(1), b_(0), c_(0), d_(1) {}

GroupElement::GroupElement(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  normalize();
}

void GroupElement::normalize() {
  if (a_ * d_ - b_ * c_ != 1)
    throw std::invalid_argument("group element must have determinant 1");
  int cs = sgn(c_);
  if (cs < 0 || (cs == 0 && sgn(d_) < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

bool GroupElement::is_identity() const {
  return c_ == 0 && b_ == 0;  // then a = d = 1 by normalization
}

Int GroupElement::translation_offset() const {
  if (c_ != 0)
    throw std::domain_error("translation_offset requires c == 0");
  return b_;  // normalized: a = d = 1
}

GroupElement GroupElement::inverse() const {
  return GroupElement(d_, -b_, -c_, a_);
}

GroupElement GroupElement::identity() { return GroupElement(); }
GroupElement GroupElement::S() { return GroupElement(0, -1, 1, 0); }
GroupElement GroupElement::U() { return GroupElement(0, -1, 1, 1); }
GroupElement GroupElement::U2() { return GroupElement(-1, -1, 1, 0); }
GroupElement GroupElement::T() { return GroupElement(1, 1, 0, 1); }

GroupElement GroupElement::translation(const Int& n) {
  return GroupElement(1, n, 0, 1);
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return GroupElement(g.a() * h.a() + g.b() * h.c(),
                      g.a() * h.b() + g.b() * h.d(),
                      g.c() * h.a() + g.d() * h.c(),
                      g.c() * h.b() + g.d() * h.d());
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  return g * h;
}

bool operator<(const GroupElement& lhs, const GroupElement& rhs) {
  if (lhs.a() != rhs.a()) return lhs.a() < rhs.a();
  if (lhs.b() != rhs.b()) return lhs.b() < rhs.b();
  if (lhs.c() != rhs.c()) return lhs.c() < rhs.c();
  return lhs.d() < rhs.d();
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << "[[" << g.a() << "," << g.b() << "],[" << g.c() << "," << g.d()
     << "]]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << to_string(g);
}

GroupElement letter_element(Letter l) {
  switch (l) {
    case Letter::S: return GroupElement::S();
    case Letter::U: return GroupElement::U();
    case Letter::U2: return GroupElement::U2();
  }
  throw std::logic_error("unreachable");
}

GroupElement matrix_from_word(const Word& w) {
  if (!w.reduced())
    throw std::invalid_argument("word is not reduced: " + to_string(w));
  GroupElement g;
  for (Letter l : w.letters) g = g * letter_element(l);
  return g;
}

namespace {

Int frobenius(const GroupElement& g) {
  return g.a() * g.a() + g.b() * g.b() + g.c() * g.c() + g.d() * g.d();
}

}  // namespace

Word word_from_matrix(const GroupElement& g_in) {
  std::vector<Letter> reversed;
  GroupElement g = g_in;
  const GroupElement s = GroupElement::S();
  const GroupElement u = GroupElement::U();
  const GroupElement u2 = GroupElement::U2();

  for (int guard = 0;; ++guard) {
    if (guard > 100000)
      throw std::runtime_error("word decomposition did not terminate");
    if (g.is_identity()) break;
    if (g == s) { reversed.push_back(Letter::S); break; }
    if (g == u) { reversed.push_back(Letter::U); break; }
    if (g == u2) { reversed.push_back(Letter::U2); break; }

    // stripping the final letter L replaces g by g*L^{-1}
    const std::array<std::pair<Letter, GroupElement>, 3> candidates{{
        {Letter::S, g * s},    // ... ending in S
        {Letter::U, g * u2},   // ... ending in U
        {Letter::U2, g * u},   // ... ending in U2
    }};
    int best = -1;
    Int best_norm;
    bool tie = false;
    for (int i = 0; i < 3; ++i) {
      Int norm = frobenius(candidates[i].second);
      if (best < 0 || norm < best_norm) {
        best = i;
        best_norm = norm;
        tie = false;
      } else if (norm == best_norm) {
        tie = true;
      }
    }
    // the true final letter gives the unique minimal norm (it may equal
    // the current norm, e.g. for S*U*S); anything else is a bug
    if (tie || best_norm > frobenius(g))
      throw std::runtime_error("ambiguous word decomposition at " +
                               to_string(g));
    reversed.push_back(candidates[best].first);
    g = candidates[best].second;
  }
  return Word{std::vector<Letter>(reversed.rbegin(), reversed.rend())};
}

std::string to_string(GammaClass c) {
  switch (c) {
    case GammaClass::GammaInfty: return "GammaInfty";
    case GammaClass::TPlus: return "T+";
    case GammaClass::TMinus: return "T-";
    case GammaClass::TPrime: return "T'";
    case GammaClass::TDoublePrime: return "T''";
  }
  throw std::logic_error("unreachable");
}

GammaClass classify(const GroupElement& g) {
  if (g.in_gamma_infinity()) return GammaClass::GammaInfty;
  Word w = word_from_matrix(g);
  switch (w.letters.front()) {
    case Letter::U:
      return w.letters.back() == Letter::S ? GammaClass::TMinus
                                           : GammaClass::TPlus;
    case Letter::U2:
      return GammaClass::TPrime;
    case Letter::S:
      return GammaClass::TDoublePrime;
  }
  throw std::logic_error("unreachable");
}

std::pair<GroupElement, GroupElement> tree_children(const GroupElement& g) {
  if (classify(g) != GammaClass::TPlus)
    throw std::domain_error("tree_children requires an element of T+");
  return {GroupElement(g.a(), g.a() + g.b(), g.c(), g.c() + g.d()),
          GroupElement(g.a() + g.b(), g.b(), g.c() + g.d(), g.d())};
}

void enumerate_words(
    int max_len,
    const std::function<void(const Word&, const GroupElement&)>& visit) {
  struct Node {
    Word word;
    GroupElement element;
  };
  std::vector<Node> level{{Word{}, GroupElement()}};
  visit(level.front().word, level.front().element);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Node> next;
    next.reserve(level.size() * 2);
    for (const Node& node : level) {
      const auto extend = [&](Letter l) {
        Node child{node.word, node.element * letter_element(l)};
        child.word.letters.push_back(l);
        visit(child.word, child.element);
        next.push_back(std::move(child));
      };
      if (node.word.empty()) {
        extend(Letter::S);
        extend(Letter::U);
        extend(Letter::U2);
      } else if (node.word.letters.back() == Letter::S) {
        extend(Letter::U);
        extend(Letter::U2);
      } else {
        extend(Letter::S);
      }
    }
    level = std::move(next);
  }
}

std::vector<GroupElement> enumerate_elements(int max_len,
                                             std::optional<GammaClass> cls) {
  std::vector<GroupElement> out;
  enumerate_words(max_len, [&](const Word&, const GroupElement& g) {
    if (!cls || classify(g) == *cls) out.push_back(g);
  });
  return out;
}

bool word_order_less(const GroupElement& lhs, const GroupElement& rhs) {
  Word lw = word_from_matrix(lhs);
  Word rw = word_from_matrix(rhs);
  if (lw.length() != rw.length()) return lw.length() < rw.length();
  for (std::size_t i = 0; i < lw.length(); ++i)
    if (lw.letters[i] != rw.letters[i]) return lw.letters[i] < rw.letters[i];
  return false;
}

}  // namespace hurwitz
