#include "ga/parse.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ga {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t i = 0;
  if (s[i] == '-') ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("bad rational: " + s);
  if (i < s.size()) {
    if (s[i] != '/') throw std::invalid_argument("bad rational: " + s);
    ++i;
    size_t den = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den;
    if (den == 0 || i != s.size()) throw std::invalid_argument("bad rational: " + s);
  }
  Rational q(s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }
};

Blade parse_blade_token(Cursor& cur, const Signature& sig) {
  // caller consumed 'e'
  const int n = sig.n();
  Blade mask = 0;
  auto add_index = [&](int idx) {
    if (idx < 1 || idx > n) cur.fail("generator index " + std::to_string(idx) + " out of range");
    Blade bit = Blade{1} << (idx - 1);
    if (mask & bit) cur.fail("repeated generator index in blade");
    mask |= bit;
  };
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '{') {
    ++cur.pos;
    while (true) {
      cur.skip_ws();
      size_t start = cur.pos;
      while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
      if (cur.pos == start) cur.fail("expected generator index");
      add_index(std::stoi(cur.text.substr(start, cur.pos - start)));
      cur.skip_ws();
      if (cur.pos < cur.text.size() && cur.text[cur.pos] == ',') {
        ++cur.pos;
        continue;
      }
      if (cur.pos < cur.text.size() && cur.text[cur.pos] == '}') {
        ++cur.pos;
        break;
      }
      cur.fail("expected ',' or '}' in blade");
    }
  } else {
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
      add_index(cur.text[cur.pos] - '0');
      ++cur.pos;
    }
    // no digits: the bare identity blade "e"
  }
  return mask;
}

}  // namespace

Multivector parse_multivector(const Signature& sig, const std::string& text) {
  Cursor cur{text};
  Multivector out(sig);
  bool first = true;
  while (true) {
    if (cur.done()) {
      if (first) cur.fail("empty multivector");
      break;
    }
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++cur.pos;
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    cur.skip_ws();
    if (cur.pos >= cur.text.size()) cur.fail("dangling sign");

    Rational coeff(sign);
    bool have_number = false;
    c = cur.text[cur.pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = cur.pos;
      while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
      std::string num = cur.text.substr(start, cur.pos - start);
      cur.skip_ws();
      if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        ++cur.pos;
        cur.skip_ws();
        size_t dstart = cur.pos;
        while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
          ++cur.pos;
        if (cur.pos == dstart) cur.fail("expected denominator");
        num += "/" + cur.text.substr(dstart, cur.pos - dstart);
      }
      coeff *= rational_from_string(num);
      have_number = true;
      cur.skip_ws();
      if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*') {
        ++cur.pos;
        cur.skip_ws();
        if (cur.pos >= cur.text.size() || cur.text[cur.pos] != 'e') cur.fail("expected blade after '*'");
      }
    }
    Blade mask = 0;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == 'e') {
      ++cur.pos;
      mask = parse_blade_token(cur, sig);
    } else if (!have_number) {
      cur.fail("expected term");
    }
    out.add_term(mask, coeff);
    first = false;
  }
  return out;
}

std::string format_multivector(const Multivector& m) {
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, c] : m.coeffs()) {  // ascending mask order
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (b == 0) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << blade_name(b, m.sig().n());
    } else {
      out << to_string(mag) << '*' << blade_name(b, m.sig().n());
    }
  }
  return out.str();
}

std::string Multivector::str() const { return format_multivector(*this); }

}  // namespace ga
