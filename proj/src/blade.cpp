#include "ga/blade.hpp"

#include <cstdlib>
#include <sstream>

namespace ga {

Signature::Signature(int p, int q, int r) : p_(p), q_(q), r_(r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("signature counts must be nonnegative");
  int n = p + q + r;
  if (n < 1) throw std::invalid_argument("signature needs at least one generator");
  if (n > max_dimension())
    throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(max_dimension()));
}

std::string Signature::str() const {
  return std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_);
}

Signature Signature::parse(const std::string& text) {
  int v[3];
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t used = 0;
    v[i] = std::stoi(text.substr(pos), &used);
    pos += used;
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ',') throw std::invalid_argument("expected p,q,r");
      ++pos;
    }
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in signature");
  return Signature(v[0], v[1], v[2]);
}

int Signature::max_dimension() {
  static const int cap = [] {
    int value = 8;
    if (const char* env = std::getenv("GA_N_MAX")) {
      value = std::atoi(env);
      if (value < 1) value = 8;
      if (value > 12) value = 12;
    }
    return value;
  }();
  return cap;
}

BladeProduct blade_product(Blade a, Blade b, const Signature& sig) {
  const int n = sig.n();
  // Transposition count: each generator of b passes the generators of a
  // with a strictly larger index on its way to sorted position.
  int swaps = 0;
  for (int j = 0; j < n; ++j) {
    if (b & (Blade{1} << j)) swaps += std::popcount(a >> (j + 1));
  }
  int coeff = (swaps & 1) ? -1 : 1;
  Blade repeated = a & b;
  for (int j = 0; j < n; ++j) {
    if (repeated & (Blade{1} << j)) {
      int eta = sig.eta(j + 1);
      if (eta == 0) return {0, a ^ b};
      coeff *= eta;
    }
  }
  return {coeff, a ^ b};
}

std::string blade_name(Blade b, int n) {
  if (b == 0) return "e";
  std::ostringstream out;
  if (n <= 9) {
    out << 'e';
    for (int j = 0; j < n; ++j)
      if (b & (Blade{1} << j)) out << (j + 1);
  } else {
    out << "e{";
    bool first = true;
    for (int j = 0; j < n; ++j) {
      if (b & (Blade{1} << j)) {
        if (!first) out << ',';
        out << (j + 1);
        first = false;
      }
    }
    out << '}';
  }
  return out.str();
}

}  // namespace ga
