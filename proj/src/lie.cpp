#include "ga/lie.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ga {

long long trig_cos_pow(int m) {
  if (m < 0) throw std::invalid_argument("negative argument");
  long long full = (m % 2 == 0) ? (1LL << (m / 2)) : 0;
  long long half = (m % 2 == 1) ? (1LL << ((m - 1) / 2)) : 0;
  switch (m % 8) {
    case 0: return full;
    case 1: return half;
    case 2: return 0;
    case 3: return -half;
    case 4: return -full;
    case 5: return -half;
    case 6: return 0;
    case 7: return half;
  }
  return 0;
}

long long trig_sin_pow(int m) {
  if (m < 0) throw std::invalid_argument("negative argument");
  long long full = (m % 2 == 0) ? (1LL << (m / 2)) : 0;
  long long half = (m % 2 == 1) ? (1LL << ((m - 1) / 2)) : 0;
  switch (m % 8) {
    case 0: return 0;
    case 1: return half;
    case 2: return full;
    case 3: return half;
    case 4: return 0;
    case 5: return -half;
    case 6: return -full;
    case 7: return -half;
  }
  return 0;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  long long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

long long dim_qt_trig(int n, int k) {
  long long base = 1LL << n;
  switch (k & 3) {
    case 0: return (base + 2 * trig_cos_pow(n)) / 4;
    case 1: return (base + 2 * trig_sin_pow(n)) / 4;
    case 2: return (base - 2 * trig_cos_pow(n)) / 4;
    case 3: return (base - 2 * trig_sin_pow(n)) / 4;
  }
  return 0;
}

long long dim_qt_comb(int n, int k) {
  long long acc = 0;
  for (int j = k & 3; j <= n; j += 4) acc += binomial(n, j);
  return acc;
}

namespace {
long long lambda0_dim_trig(int r) { return r >= 1 ? dim_qt_trig(r, 0) : 1; }
long long lambda0_dim_comb(int r) { return r >= 1 ? dim_qt_comb(r, 0) : 1; }
}  // namespace

long long dim_a_trig(int n, int r) {
  return dim_qt_trig(n, 2) + dim_qt_trig(n, 3) + lambda0_dim_trig(r);
}
long long dim_b_trig(int n, int r) {
  return dim_qt_trig(n, 1) + dim_qt_trig(n, 2) + lambda0_dim_trig(r);
}
// r-part is dim Lambda^{013bar}_r = 3*2^{r-2} + 2^{r/2-1} cos(pi r/4).
long long dim_q_trig(int n, int r) {
  long long rpart = r >= 1 ? (3 * (1LL << r) + 2 * trig_cos_pow(r)) / 4 : 1;
  return dim_qt_trig(n, 2) + rpart;
}
long long dim_a_comb(int n, int r) {
  return dim_qt_comb(n, 2) + dim_qt_comb(n, 3) + lambda0_dim_comb(r);
}
long long dim_b_comb(int n, int r) {
  return dim_qt_comb(n, 1) + dim_qt_comb(n, 2) + lambda0_dim_comb(r);
}
long long dim_q_comb(int n, int r) {
  long long rpart = r >= 1 ? (1LL << r) - dim_qt_comb(r, 2) : 1;
  return dim_qt_comb(n, 2) + rpart;
}

namespace {

enum class Family { A, B, Q };

struct Piece {
  enum Kind { CN, Lam, Mix } kind;
  int k;    // non-degenerate factor grade for Mix
  int off;  // Lambda^{n-off} / {C^k Lambda^{n-off}}
};

struct RAlt {
  enum Kind { Any, EqNMinus, LeNMinus, GeNMinus, NeqN } kind;
  int off = 0;

  bool matches(int n, int r) const {
    switch (kind) {
      case Any: return true;
      case EqNMinus: return r == n - off;
      case LeNMinus: return r <= n - off;
      case GeNMinus: return r >= n - off;
      case NeqN: return r != n;
    }
    return false;
  }
};

enum class DimCorr {
  None, One, BinomRN1, BinomRN2, Nm1, Three, N, HalfNNm1, Six, Np1,
  HalfNm1Np2, ThreeNm3, QRow5, QRow11, NPlusHalfNm1Nm2, HalfNNp1,
};

long long dim_correction(DimCorr c, int n, int r, int pq) {
  switch (c) {
    case DimCorr::None: return 0;
    case DimCorr::One: return 1;
    case DimCorr::BinomRN1: return binomial(r, n - 1);
    case DimCorr::BinomRN2: return binomial(r, n - 2);
    case DimCorr::Nm1: return n - 1;
    case DimCorr::Three: return 3;
    case DimCorr::N: return n;
    case DimCorr::HalfNNm1: return (long long)n * (n - 1) / 2;
    case DimCorr::Six: return 6;
    case DimCorr::Np1: return n + 1;
    case DimCorr::HalfNm1Np2: return (long long)(n - 1) * (n + 2) / 2;
    case DimCorr::ThreeNm3: return 3LL * n - 3;
    case DimCorr::QRow5: return n >= 7 ? (long long)(n - 3) * (n - 2) / 2 : 1;
    case DimCorr::QRow11:
      if (n >= 7)
        return (long long)pq * binomial(r, n - 3) +
               (long long)pq * (pq - 1) / 2 * binomial(r, n - 4);
      return pq;
    case DimCorr::NPlusHalfNm1Nm2: return n + (long long)(n - 1) * (n - 2) / 2;
    case DimCorr::HalfNNp1: return (long long)n * (n + 1) / 2;
  }
  return 0;
}

struct LieRow {
  std::vector<GroupId> groups;
  int nmod4;  // -1 = any
  std::vector<RAlt> rconds;  // OR; empty = any r
  Family family;
  std::vector<Piece> extras;
  DimCorr corr;
};

using G = GroupId;
constexpr RAlt r_any{RAlt::Any};
constexpr RAlt r_eq_n{RAlt::EqNMinus, 0};
RAlt r_eq(int off) { return {RAlt::EqNMinus, off}; }
RAlt r_le(int off) { return {RAlt::LeNMinus, off}; }
RAlt r_ge(int off) { return {RAlt::GeNMinus, off}; }
constexpr RAlt r_neq_n{RAlt::NeqN};

// One entry per (group-list, n mod 4, r-condition) line of the dimension
// tables; the guards are transcribed verbatim, including the small-n
// special cases in the two Q rows.
const std::vector<LieRow>& lie_rows() {
  static const std::vector<LieRow> rows = [] {
    std::vector<LieRow> t;
    auto row = [&](std::vector<GroupId> gs, int nmod4, std::vector<RAlt> rc, Family fam,
                   std::vector<Piece> extras, DimCorr corr) {
      t.push_back({std::move(gs), nmod4, std::move(rc), fam, std::move(extras), corr});
    };
    const Piece cn{Piece::CN, 0, 0};
    
    auto lam = [](int off) { return Piece{Piece::Lam, 0, off}; };
    auto mix = [](int k, int off) { return Piece{Piece::Mix, k, off}; };

    // A-family.
    row({G::A01}, 0, {}, Family::A, {}, DimCorr::None);
    row({G::A01}, 2, {}, Family::A, {}, DimCorr::None);
    row({G::A01}, 3, {}, Family::A, {}, DimCorr::None);
    // The n%4 == 0 line splits like the Ac03 one: the pseudoscalar enters
    // the norm set (and the tangent space) when r is n-2 or n-1.
    row({G::A23}, 0, {r_le(3), r_eq_n}, Family::A, {}, DimCorr::None);
    row({G::A23}, 0, {r_eq(2), r_eq(1)}, Family::A, {cn}, DimCorr::One);
    row({G::A23}, 2, {r_le(2)}, Family::A, {}, DimCorr::None);
    row({G::A23}, 3, {r_le(3)}, Family::A, {}, DimCorr::None);
    row({G::Ac12}, 0, {}, Family::A, {}, DimCorr::None);
    row({G::Ac12}, 3, {}, Family::A, {}, DimCorr::None);
    row({G::Ac12}, 1, {r_neq_n}, Family::A, {}, DimCorr::None);
    row({G::Ac12}, 2, {r_le(2)}, Family::A, {}, DimCorr::None);
    row({G::Ac03}, 2, {}, Family::A, {}, DimCorr::None);
    row({G::Ac03}, 3, {}, Family::A, {}, DimCorr::None);
    row({G::Ac03}, 0, {r_le(3), r_eq_n}, Family::A, {}, DimCorr::None);
    row({G::Ac03}, 1, {r_le(4), r_eq_n}, Family::A, {}, DimCorr::None);
    row({G::A01, G::A23}, 1, {}, Family::A, {cn}, DimCorr::One);
    row({G::Ac12}, 1, {r_eq_n}, Family::A, {cn}, DimCorr::One);
    row({G::Ac03}, 0, {r_eq(2), r_eq(1)}, Family::A, {cn}, DimCorr::One);
    row({G::A23, G::Ac12}, 2, {r_eq(1), r_eq_n}, Family::A, {lam(1)}, DimCorr::BinomRN1);
    row({G::A23}, 3, {r_ge(2)}, Family::A, {lam(2)}, DimCorr::BinomRN2);
    row({G::Ac03}, 1, {r_eq(1)}, Family::A, {mix(1, 2)}, DimCorr::Nm1);
    row({G::Ac03}, 1, {r_eq(3)}, Family::A, {mix(2, 3)}, DimCorr::Three);
    row({G::Ac03}, 1, {r_eq(2)}, Family::A, {mix(1, 2), mix(2, 3)}, DimCorr::N);

    // B-family.
    row({G::Bc01}, -1, {}, Family::B, {}, DimCorr::None);
    row({G::B12}, 0, {}, Family::B, {}, DimCorr::None);
    row({G::B12}, 1, {}, Family::B, {}, DimCorr::None);
    row({G::B12}, 2, {}, Family::B, {}, DimCorr::None);
    row({G::B03}, 0, {r_le(3)}, Family::B, {}, DimCorr::None);
    row({G::B03}, 1, {r_le(4)}, Family::B, {}, DimCorr::None);
    row({G::B03}, 2, {}, Family::B, {}, DimCorr::None);
    row({G::Bc23}, 1, {}, Family::B, {}, DimCorr::None);
    row({G::Bc23}, 2, {}, Family::B, {}, DimCorr::None);
    row({G::Bc23}, 0, {r_le(3)}, Family::B, {}, DimCorr::None);
    row({G::Bc23}, 3, {r_le(2)}, Family::B, {}, DimCorr::None);
    row({G::B03, G::B12}, 3, {}, Family::B, {cn}, DimCorr::One);
    row({G::Bc23}, 3, {r_eq(1), r_eq_n}, Family::B, {cn}, DimCorr::One);
    row({G::B03, G::Bc23}, 0, {r_eq_n}, Family::B, {lam(1)}, DimCorr::N);
    row({G::B03}, 1, {r_eq_n}, Family::B, {lam(2)}, DimCorr::HalfNNm1);
    row({G::B03, G::Bc23}, 0, {r_eq(2)}, Family::B, {mix(1, 2), mix(2, 2)}, DimCorr::Three);
    row({G::B03}, 1, {r_eq(3)}, Family::B, {mix(1, 3), mix(2, 3)}, DimCorr::Six);
    row({G::B03, G::Bc23}, 0, {r_eq(1)}, Family::B, {lam(1), mix(1, 2), mix(1, 1)}, DimCorr::Np1);
    row({G::B03}, 1, {r_eq(1)}, Family::B, {lam(2), mix(1, 3), mix(1, 2)}, DimCorr::HalfNm1Np2);
    row({G::B03}, 1, {r_eq(2)}, Family::B, {lam(2), mix(1, 3), mix(1, 2), mix(2, 3)},
        DimCorr::ThreeNm3);

    // Q-family.
    row({G::Qt01}, 0, {}, Family::Q, {}, DimCorr::None);
    row({G::Qt01}, 1, {r_eq_n}, Family::Q, {}, DimCorr::None);
    row({G::Qt01}, 2, {r_eq_n, r_le(4)}, Family::Q, {}, DimCorr::None);
    row({G::Qt01}, 3, {r_eq_n, r_le(5)}, Family::Q, {}, DimCorr::None);
    row({G::Qt23}, 0, {r_eq_n, r_le(4)}, Family::Q, {}, DimCorr::None);
    row({G::Qt23}, 1, {r_eq_n}, Family::Q, {}, DimCorr::None);
    row({G::Qt23}, 2, {}, Family::Q, {}, DimCorr::None);
    row({G::Qt23}, 3, {r_eq_n, r_le(3)}, Family::Q, {}, DimCorr::None);
    row({G::Qt12}, 0, {}, Family::Q, {}, DimCorr::None);
    row({G::Qt12}, 1, {}, Family::Q, {}, DimCorr::None);
    row({G::Qt12}, 2, {}, Family::Q, {}, DimCorr::None);
    row({G::Qt12}, 3, {r_eq_n}, Family::Q, {}, DimCorr::None);
    row({G::Qt03}, 0, {r_eq_n, r_le(4)}, Family::Q, {}, DimCorr::None);
    row({G::Qt03}, 1, {r_eq_n, r_le(5)}, Family::Q, {}, DimCorr::None);
    row({G::Qt03}, 2, {r_eq_n, r_le(4)}, Family::Q, {}, DimCorr::None);
    row({G::Qt03}, 3, {r_eq_n}, Family::Q, {}, DimCorr::None);
    row({G::Qt01, G::Qt23}, 1, {r_neq_n}, Family::Q, {cn}, DimCorr::One);
    row({G::Qt23}, 3, {r_eq(2), r_eq(1)}, Family::Q, {cn}, DimCorr::One);
    row({G::Qt12, G::Qt03}, 3, {r_neq_n}, Family::Q, {cn}, DimCorr::One);
    row({G::Qt01, G::Qt03}, 2, {r_eq(1)}, Family::Q, {mix(1, 2)}, DimCorr::Nm1);
    row({G::Qt23, G::Qt03}, 0, {r_eq(1)}, Family::Q, {mix(1, 2), cn}, DimCorr::N);
    row({G::Qt01}, 3, {r_eq(1)}, Family::Q, {mix(1, 3)}, DimCorr::QRow5);
    row({G::Qt01, G::Qt03}, 2, {r_eq(3)}, Family::Q, {mix(2, 3)}, DimCorr::Three);
    // Qt23 at (0, r = n-3) sits in this row too: with p+q = 3 the
    // pseudoscalar commutes into neither twisted centralizer, so no C^n
    // piece appears (the published +C^n variant fails the kernel check).
    row({G::Qt03, G::Qt23}, 0, {r_eq(3)}, Family::Q, {mix(2, 3)}, DimCorr::Three);
    row({G::Qt01}, 3, {r_eq(4)}, Family::Q, {mix(2, 4)}, DimCorr::Six);
    row({G::Qt03}, 1, {r_eq(4)}, Family::Q, {mix(2, 4)}, DimCorr::Six);
    row({G::Qt01, G::Qt03}, 2, {r_eq(2)}, Family::Q, {mix(1, 2), mix(2, 3)}, DimCorr::N);
    row({G::Qt23, G::Qt03}, 0, {r_eq(2)}, Family::Q, {mix(1, 2), mix(2, 3), cn}, DimCorr::Np1);
    row({G::Qt01}, 3, {r_eq(3), r_eq(2)}, Family::Q, {mix(1, 3), mix(2, 4)}, DimCorr::QRow11);
    row({G::Qt03}, 1, {r_eq(3)}, Family::Q, {mix(1, 3), mix(2, 4), mix(2, 3)}, DimCorr::ThreeNm3);
    row({G::Qt03}, 1, {r_eq(1)}, Family::Q, {mix(1, 2), mix(1, 3), cn}, DimCorr::NPlusHalfNm1Nm2);
    row({G::Qt03}, 1, {r_eq(2)}, Family::Q, {mix(1, 2), mix(1, 3), mix(2, 3), mix(2, 4), cn},
        DimCorr::HalfNNp1);
    return t;
  }();
  return rows;
}

bool row_matches(const LieRow& row, GroupId g, int n, int r) {
  bool found = false;
  for (GroupId gg : row.groups)
    if (gg == g) found = true;
  if (!found) return false;
  if (row.nmod4 >= 0 && n % 4 != row.nmod4) return false;
  if (row.rconds.empty()) return true;
  for (const RAlt& alt : row.rconds)
    if (alt.matches(n, r)) return true;
  return false;
}

BladeSubspace family_base(Family fam, const Signature& sig) {
  switch (fam) {
    case Family::A:
      return sub_lambda_qt(sig, 0).direct_sum(sub_qt_sum(sig, 2, 3));
    case Family::B:
      return sub_lambda_qt(sig, 0).direct_sum(sub_qt_sum(sig, 1, 2));
    case Family::Q:
      return sub_lambda_qt(sig, 0)
          .unite(sub_lambda_qt(sig, 1))
          .unite(sub_lambda_qt(sig, 3))
          .direct_sum(sub_qt(sig, 2));
  }
  throw std::logic_error("unreachable");
}

long long family_dim(Family fam, int n, int r) {
  switch (fam) {
    case Family::A: return dim_a_trig(n, r);
    case Family::B: return dim_b_trig(n, r);
    case Family::Q: return dim_q_trig(n, r);
  }
  return 0;
}

std::string row_label(const LieRow& row, const Signature& sig) {
  std::ostringstream out;
  out << (row.family == Family::A ? "A" : row.family == Family::B ? "B" : "Q") << "-base";
  for (const Piece& p : row.extras) {
    switch (p.kind) {
      case Piece::CN: out << "+C^n"; break;
      case Piece::Lam: out << "+Lambda^{n-" << p.off << "}"; break;
      case Piece::Mix: out << "+{C^" << p.k << " Lambda^{n-" << p.off << "}}"; break;
    }
  }
  out << " (n%4=" << (row.nmod4 < 0 ? std::string("any") : std::to_string(row.nmod4)) << ", r="
      << sig.r() << ")";
  return out.str();
}

}  // namespace

std::optional<LieExpectation> expected_lie(GroupId g, const Signature& sig) {
  const int n = sig.n(), r = sig.r();
  const LieRow* match = nullptr;
  for (const LieRow& row : lie_rows()) {
    if (!row_matches(row, g, n, r)) continue;
    if (match) throw std::logic_error("overlapping dimension-table guards");
    match = &row;
  }
  if (!match) return std::nullopt;
  BladeSubspace span = family_base(match->family, sig);
  for (const Piece& p : match->extras) {
    switch (p.kind) {
      case Piece::CN: span = span.direct_sum(sub_grade(sig, n)); break;
      case Piece::Lam: span = span.direct_sum(sub_lambda(sig, n - p.off)); break;
      case Piece::Mix: span = span.direct_sum(sub_mixed(sig, p.k, n - p.off)); break;
    }
  }
  long long dim = family_dim(match->family, n, r) +
                  dim_correction(match->corr, n, r, sig.p() + sig.q());
  return LieExpectation{span, dim, row_label(*match, sig)};
}

void check_lie_table_guards() {
  for (GroupId g : generalized_group_ids()) {
    for (int n = 1; n <= 12; ++n) {
      for (int r = 0; r <= n; ++r) {
        int hits = 0;
        for (const LieRow& row : lie_rows())
          if (row_matches(row, g, n, r)) ++hits;
        if (hits > 1)
          throw std::logic_error("overlapping table guards for " + group_name(g) + ", n=" +
                                 std::to_string(n) + ", r=" + std::to_string(r));
      }
    }
  }
}

namespace {

CentralizerKind kind_for_rep(Rep rep) {
  switch (rep) {
    case Rep::Ad: return CentralizerKind::Plain;
    case Rep::AdCheck: return CentralizerKind::Check;
    case Rep::AdTilde: return CentralizerKind::Tilde;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LinearSubspace lie_algebra(GroupId g, const Signature& sig) {
  GroupSpec spec = group_spec(g, sig);
  if (!spec.rep) return lie_algebra_norm_form(g, sig);
  const BladeSubspace& target = *spec.target;
  const CentralizerKind kind = kind_for_rep(*spec.rep);
  const int dim = int(sig.blade_count());
  const bool twisted_rep = *spec.rep == Rep::AdCheck;
  LinearSubspace k = LinearSubspace::full(dim);
  for (Blade v : target.blades()) {
    const bool twist = twisted_rep || (*spec.rep == Rep::AdTilde && grade(v) % 2 == 1);
    // Only the component outside the target span constrains u.
    SparseOperator op(dim, dim);
    for (Blade b = 0; b < Blade(dim); ++b) {
      Blade out = v ^ b;
      if (target.contains(out)) continue;
      BladeProduct uv = blade_product(b, v, sig);
      BladeProduct vu = blade_product(v, b, sig);
      int c = uv.coeff;
      if (twist && grade(b) % 2 == 1) c = -c;
      c -= vu.coeff;
      if (c != 0) op.add(int(out), int(b), c);
    }
    k = restrict_kernel(k, op);
    if (k.dim() == 0) break;
  }
  return k;
}

LinearSubspace lie_algebra_norm_form(GroupId g, const Signature& sig) {
  GroupSpec spec = group_spec(g, sig);
  const int dim = int(sig.blade_count());
  LinearSubspace k = LinearSubspace::full(dim);
  for (const auto& [func, ctarget] : spec.norm_form) {
    BladeSubspace s = centralizer_closed_form(sig, ctarget);
    SparseOperator op(dim, dim);
    for (Blade b = 0; b < Blade(dim); ++b) {
      if (s.contains(b)) continue;
      int sign = func == NormFunc::Psi ? reversion_sign(grade(b)) : conjugation_sign(grade(b));
      if (sign + 1 != 0) op.add(int(b), int(b), sign + 1);
    }
    k = restrict_kernel(k, op);
  }
  return k;
}

bool bracket_closure_check(const LinearSubspace& s, const Signature& sig) {
  std::vector<Multivector> basis;
  basis.reserve(s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<Rational> row(s.ambient_dim());
    for (int j = 0; j < s.ambient_dim(); ++j) row[j] = s.basis().at(i, j);
    basis.push_back(Multivector::from_vector(sig, row));
  }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Multivector bracket = basis[i] * basis[j] - basis[j] * basis[i];
      if (!s.contains(bracket.to_vector())) return false;
    }
  return true;
}

Multivector exp_nilpotent(const Multivector& u) {
  const Signature& sig = u.sig();
  Multivector acc = Multivector::scalar(sig, 1);
  Multivector term = Multivector::scalar(sig, 1);
  for (std::uint32_t k = 1; k <= sig.blade_count() + 1; ++k) {
    term = (term * u).scale(Rational(1, (unsigned long)k));
    if (term.is_zero()) return acc + term;
    acc = acc + term;
  }
  throw std::invalid_argument("exp_nilpotent: element is not nilpotent");
}

bool exp_nilpotent_check(GroupId g, const Multivector& u) {
  return member(g, exp_nilpotent(u), MemberMode::Norm);
}

}  // namespace ga
