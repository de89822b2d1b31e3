#include "ct/residue.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace ct {

ResidueClass::ResidueClass(Int r, Int m) : r_(0), m_(m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  r_ = mod_floor(r, m);
}

bool classes_disjoint(const ResidueClass& c1, const ResidueClass& c2) {
  Int g = gcd(c1.modulus(), c2.modulus());
  Int diff = c1.residue() - c2.residue();
  if (diff < 0) diff = -diff;
  return diff % g != 0;
}

std::optional<ResidueClass> class_intersection(const ResidueClass& c1, const ResidueClass& c2) {
  const Int m1 = c1.modulus(), m2 = c2.modulus();
  const Int g = gcd(m1, m2);
  const Int diff = sub(c2.residue(), c1.residue());
  if (diff % g != 0) return std::nullopt;
  // x = r1 + m1*t with m1*t == diff (mod m2); divide through by g.
  const Int m2g = m2 / g;
  const auto e = egcd(m1 / g, m2g);
  Int t = mod_floor(mul(mod_floor(e.x, m2g), mod_floor(diff / g, m2g)), m2g);
  Int l = lcm(m1, m2);
  Int x = mod_floor(add(c1.residue(), mul(m1, t)), l);
  return ResidueClass(x, l);
}

ClassTransposition::ClassTransposition(const ResidueClass& c1, const ResidueClass& c2)
    : c1_(c1), c2_(c2) {
  if (!classes_disjoint(c1, c2)) {
    throw std::invalid_argument("not a class transposition: classes " + to_string(c1) +
                                " and " + to_string(c2) + " intersect");
  }
  if (c2_ < c1_) std::swap(c1_, c2_);
}

Int ClassTransposition::apply(Int x) const {
  if (c1_.contains(x)) {
    Int k = exact_div(sub(x, c1_.residue()), c1_.modulus());
    return add(c2_.residue(), mul(k, c2_.modulus()));
  }
  if (c2_.contains(x)) {
    Int k = exact_div(sub(x, c2_.residue()), c2_.modulus());
    return add(c1_.residue(), mul(k, c1_.modulus()));
  }
  return x;
}

std::string to_string(const ResidueClass& c) {
  return std::to_string(c.residue()) + "(" + std::to_string(c.modulus()) + ")";
}

std::string to_string(const ClassTransposition& t) {
  return "[" + to_string(t.first()) + "," + to_string(t.second()) + "]";
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw std::invalid_argument(std::string("expected '") + c + "' in " + what);
  }
  Int integer(const char* what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument(std::string("expected integer in ") + what);
    return Int(std::strtoll(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10));
  }
  void expect_end(const char* what) {
    skip_ws();
    if (pos != text.size())
      throw std::invalid_argument(std::string("trailing characters after ") + what);
  }
};

ResidueClass parse_class_at(Cursor& cur) {
  Int r = cur.integer("residue class");
  cur.expect('(', "residue class");
  Int m = cur.integer("residue class");
  cur.expect(')', "residue class");
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  return ResidueClass(r, m);
}

}  // namespace

ResidueClass parse_residue_class(std::string_view text) {
  Cursor cur{text};
  ResidueClass c = parse_class_at(cur);
  cur.expect_end("residue class");
  return c;
}

ClassTransposition parse_class_transposition(std::string_view text) {
  Cursor cur{text};
  cur.expect('[', "class transposition");
  ResidueClass c1 = parse_class_at(cur);
  cur.expect(',', "class transposition");
  ResidueClass c2 = parse_class_at(cur);
  cur.expect(']', "class transposition");
  cur.expect_end("class transposition");
  return ClassTransposition(c1, c2);
}

}  // namespace ct
