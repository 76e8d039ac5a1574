#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ga {

// Metric signature of Cl(p,q,r): p generators square to +e, q to -e and the
// r degenerate ones to 0. Degenerate generators occupy the last indices
// p+q+1..n, so every radical/Grassmann subspace is recognizable by bitmask.
class Signature {
 public:
  Signature(int p, int q, int r);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  int n() const { return p_ + q_ + r_; }

  // eta(a) for the 1-based generator index a: +1, -1 or 0.
  int eta(int a) const {
    if (a < 1 || a > n()) throw std::out_of_range("generator index out of range");
    if (a <= p_) return 1;
    if (a <= p_ + q_) return -1;
    return 0;
  }

  bool degenerate(int a) const { return eta(a) == 0; }
  std::uint32_t blade_count() const { return std::uint32_t{1} << n(); }
  // Mask with the bits of all degenerate generators set.
  std::uint32_t radical_mask() const {
    return ((std::uint32_t{1} << n()) - 1u) & ~((std::uint32_t{1} << (p_ + q_)) - 1u);
  }

  bool operator==(const Signature&) const = default;

  std::string str() const;
  static Signature parse(const std::string& text);  // "p,q,r"

  // Default 8; the GA_N_MAX environment variable can raise it up to 12.
  static int max_dimension();

 private:
  int p_, q_, r_;
};

}  // namespace ga
