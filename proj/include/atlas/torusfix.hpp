#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atlas/matrix.hpp"
#include "atlas/shift.hpp"
#include "atlas/smith.hpp"

namespace atlas {

enum class Ambient {
  complex_torus,  // (C^*)^n
  unit_torus,     // U(1)^n
  real_torus,     // R^n / Z^n
  higgs           // (R^2/Z^2)^s x C^s, torus block plus a linear fiber block
};

enum class Unit { complex_dim, real_dim };

enum class Solvable { yes, no, conditional };

/// Affine monomial self-map of a torus: z -> b * conj^eta(z)^M.  For the mixed
/// Higgs ambient the torus block is real (eta must be 0 there) and the fiber
/// block is carried separately.
struct TorusInvolution {
  Ambient ambient = Ambient::complex_torus;
  int n = 0;            // torus coordinates
  IntegerMatrix M;      // n x n
  bool conj = false;
  ShiftVec shift;       // length n; real-torus coordinates live in .phase

  struct Fiber {
    IntegerMatrix L;    // s x s lattice action on the C^s block
    int sign = +1;
    bool conj = false;
    std::vector<std::pair<Rational, Rational>> shift;  // (re, im) per coordinate
    bool symbolic = false;
  };
  std::optional<Fiber> fiber;

  bool has_fiber() const { return fiber.has_value(); }
};

/// Square of the self-map (torus block only); used for involutivity checks.
inline TorusInvolution square(const TorusInvolution& t) {
  TorusInvolution s = t;
  s.fiber.reset();
  s.conj = false;
  s.M = t.M * t.M;  // conjugation commutes with monomial maps
  ShiftVec tb = t.conj ? conj_shift(t.shift) : t.shift;
  s.shift = mul_shift(t.shift, act(t.M, tb));
  return s;
}

inline bool is_involution(const TorusInvolution& t) {
  TorusInvolution s = square(t);
  return s.M.is_identity() && (any_symbolic(s.shift) ? false : shift_is_one(s.shift));
}

/// What the fixed set looks like: emptiness, dimension (with its unit),
/// component count, and any conditions a symbolic shift leaves open.
struct FixedSetSummary {
  Solvable nonempty = Solvable::yes;
  int dim = 0;          // in `unit` units; meaningful only when nonempty
  Unit unit = Unit::complex_dim;
  int torus_dim = 0;    // dimension in torus directions, for torsion censuses
  i64 components = 1;   // of the nonempty solution set, before any quotient
  std::vector<std::string> constraints;

  bool is_empty() const { return nonempty == Solvable::no; }
};

namespace detail {

struct TorusSolve {
  Solvable solvable = Solvable::yes;
  int dim = 0;  // free torus directions
  i64 components = 1;
  std::vector<std::string> constraints;
  SmithDecomposition snf;
};

// Solutions of A*x = c on R^n/Z^n; c given by exact phases, possibly symbolic.
inline TorusSolve solve_on_torus(const IntegerMatrix& A, const ShiftVec& c) {
  TorusSolve out;
  out.snf = smith_normal_form(A);
  const int m = A.rows(), n = A.cols();
  out.dim = n - out.snf.rank();
  for (i64 t : out.snf.torsion_orders()) out.components = checked_mul(out.components, t);

  for (int i = 0; i < m; ++i) {
    i64 d = (i < std::min(m, n)) ? out.snf.D(i, i) : 0;
    if (d != 0) continue;
    // zero row: the transported target must be integral
    bool symbolic = false;
    std::string expr;
    Rational val(0);
    for (int j = 0; j < m; ++j) {
      i64 u = out.snf.U(i, j);
      if (u == 0) continue;
      if (c[j].symbolic) {
        symbolic = true;
        if (!expr.empty()) expr += " + ";
        expr += std::to_string(u) + "*arg(" + c[j].name + ")";
      } else {
        val += Rational(u) * c[j].phase;
      }
    }
    if (symbolic) {
      if (out.solvable == Solvable::yes) out.solvable = Solvable::conditional;
      std::string cond = expr;
      if (!val.is_zero()) cond += " + " + val.str();
      out.constraints.push_back(cond + " in Z");
    } else if (!val.is_integer()) {
      out.solvable = Solvable::no;
      break;
    }
  }
  return out;
}

struct LinearSolve {
  Solvable solvable = Solvable::yes;
  int dim = 0;
  std::vector<std::string> constraints;
};

// Solutions of A*x = c over R^n (no lattice).
inline LinearSolve solve_linear(const IntegerMatrix& A, const RatVec& c, bool symbolic,
                                const std::string& what) {
  LinearSolve out;
  int rank = rational_rank(A);
  out.dim = A.cols() - rank;
  if (symbolic) {
    if (rank < A.rows()) {
      out.solvable = Solvable::conditional;
      out.constraints.push_back(what + " must lie in the image lattice of the linear part");
    }
    return out;
  }
  std::vector<RatVec> cols(A.cols(), RatVec(A.rows()));
  for (int j = 0; j < A.cols(); ++j)
    for (int i = 0; i < A.rows(); ++i) cols[j][i] = Rational(A(i, j));
  if (!solve_rational(cols, c)) out.solvable = Solvable::no;
  return out;
}

inline RatVec phases_of(const ShiftVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.phase);
  return out;
}

inline RatVec logmods_of(const ShiftVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.logmod);
  return out;
}

inline Solvable meet(Solvable a, Solvable b) {
  if (a == Solvable::no || b == Solvable::no) return Solvable::no;
  if (a == Solvable::conditional || b == Solvable::conditional) return Solvable::conditional;
  return Solvable::yes;
}

// Fixed set of the fiber map psi -> sign * L * conj^eta(psi) + c on C^s,
// realified to 2s coordinates (re, im interleaved).
inline LinearSolve fiber_fixed(const TorusInvolution::Fiber& f) {
  int s = f.L.rows();
  IntegerMatrix R(2 * s, 2 * s, 0);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      i64 v = checked_mul(static_cast<i64>(f.sign), f.L(i, j));
      if (v == 0) continue;
      R(2 * i, 2 * j) = v;
      R(2 * i + 1, 2 * j + 1) = f.conj ? checked_neg(v) : v;
    }
  IntegerMatrix A = R - IntegerMatrix::identity(2 * s);
  RatVec c(2 * s, Rational(0));
  for (int i = 0; i < s; ++i) {
    c[2 * i] = -f.shift[i].first;
    c[2 * i + 1] = -f.shift[i].second;
  }
  return solve_linear(A, c, f.symbolic, "fiber shift");
}

}  // namespace detail

/// Exact description of the fixed set of an affine monomial torus map, by
/// Smith normal form.  All counts are for the pre-quotient set.
inline FixedSetSummary fixed_subgroup(const TorusInvolution& t) {
  using namespace detail;
  FixedSetSummary out;

  switch (t.ambient) {
    case Ambient::complex_torus: {
      if (!t.conj) {
        // fixed points solve z^(M-I) = b^-1: phases on the torus, moduli on R^n
        IntegerMatrix A = t.M - IntegerMatrix::identity(t.n);
        ShiftVec target = t.shift;
        for (auto& s : target) {
          if (s.symbolic) continue;
          s.phase = (-s.phase).mod1();
          s.logmod = -s.logmod;
        }
        TorusSolve ph = solve_on_torus(A, target);
        bool sym = any_symbolic(t.shift);
        LinearSolve lm = solve_linear(A, logmods_of(target), sym, "modulus part of the shift");
        out.nonempty = meet(ph.solvable, lm.solvable);
        out.unit = Unit::complex_dim;
        out.dim = ph.dim;
        out.torus_dim = ph.dim;
        out.components = ph.components;
        out.constraints = ph.constraints;
        for (auto& c : lm.constraints) out.constraints.push_back(c);
      } else {
        // modulus block: (I - M) x = m over R^n; phase block: (I + M) y = q mod Z^n
        IntegerMatrix Aph = IntegerMatrix::identity(t.n) + t.M;
        IntegerMatrix Alm = IntegerMatrix::identity(t.n) - t.M;
        TorusSolve ph = solve_on_torus(Aph, t.shift);
        bool sym = any_symbolic(t.shift);
        LinearSolve lm = solve_linear(Alm, logmods_of(t.shift), sym, "modulus part of the shift");
        out.nonempty = meet(ph.solvable, lm.solvable);
        out.unit = Unit::real_dim;
        out.dim = ph.dim + lm.dim;
        out.torus_dim = ph.dim;
        out.components = ph.components;
        out.constraints = ph.constraints;
        for (auto& c : lm.constraints) out.constraints.push_back(c);
      }
      break;
    }
    case Ambient::unit_torus: {
      IntegerMatrix Meff = t.conj ? -t.M : t.M;
      IntegerMatrix A = Meff - IntegerMatrix::identity(t.n);
      ShiftVec target = t.shift;
      for (auto& s : target)
        if (!s.symbolic) s.phase = (-s.phase).mod1();
      TorusSolve ph = solve_on_torus(A, target);
      out.nonempty = ph.solvable;
      out.unit = Unit::real_dim;
      out.dim = ph.dim;
      out.torus_dim = ph.dim;
      out.components = ph.components;
      out.constraints = ph.constraints;
      break;
    }
    case Ambient::real_torus: {
      if (t.conj) throw domain_error("real torus maps carry no conjugation flag");
      IntegerMatrix A = t.M - IntegerMatrix::identity(t.n);
      ShiftVec target = t.shift;
      for (auto& s : target)
        if (!s.symbolic) s.phase = (-s.phase).mod1();
      TorusSolve ph = solve_on_torus(A, target);
      out.nonempty = ph.solvable;
      out.unit = Unit::real_dim;
      out.dim = ph.dim;
      out.torus_dim = ph.dim;
      out.components = ph.components;
      out.constraints = ph.constraints;
      break;
    }
    case Ambient::higgs: {
      if (t.conj) throw domain_error("the Higgs torus block carries no conjugation flag");
      if (!t.fiber) throw domain_error("higgs ambient needs a fiber block");
      IntegerMatrix A = t.M - IntegerMatrix::identity(t.n);
      ShiftVec target = t.shift;
      for (auto& s : target)
        if (!s.symbolic) s.phase = (-s.phase).mod1();
      TorusSolve ph = solve_on_torus(A, target);
      LinearSolve fb = fiber_fixed(*t.fiber);
      out.nonempty = meet(ph.solvable, fb.solvable);
      out.components = ph.components;
      out.torus_dim = ph.dim;
      out.constraints = ph.constraints;
      for (auto& c : fb.constraints) out.constraints.push_back(c);
      if (!t.fiber->conj) {
        // holomorphic case: both blocks are complex subvarieties
        if ((ph.dim + fb.dim) % 2 != 0)
          throw domain_error("odd real dimension in a holomorphic fixed set");
        out.unit = Unit::complex_dim;
        out.dim = (ph.dim + fb.dim) / 2;
      } else {
        out.unit = Unit::real_dim;
        out.dim = ph.dim + fb.dim;
      }
      break;
    }
  }
  if (out.nonempty == Solvable::no) {
    out.dim = 0;
    out.torus_dim = 0;
    out.components = 0;
  }
  return out;
}

/// Exact count of fixed points among the N-torsion points of the torus
/// directions, by direct enumeration.  The independent oracle for
/// fixed_subgroup.
inline i64 torsion_point_census(const TorusInvolution& t, i64 N, i64 cap = 100'000'000) {
  if (t.ambient == Ambient::higgs) throw domain_error("census needs a torus ambient");
  if (N < 1) throw domain_error("census needs N >= 1");
  if (any_symbolic(t.shift)) throw domain_error("census needs concrete shifts");
  for (const auto& s : t.shift) {
    if (!s.logmod.is_zero()) throw domain_error("census shift must have unit modulus");
    if (N % s.phase.den() != 0) throw domain_error("census shift order must divide N");
  }

  // effective matrix and target on (Z/N)^n
  IntegerMatrix A(t.n, t.n);
  std::vector<i64> rhs(t.n);
  bool negate = (t.ambient == Ambient::complex_torus && t.conj) ||
                (t.ambient == Ambient::unit_torus && t.conj);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) A(i, j) = negate ? checked_neg(t.M(i, j)) : t.M(i, j);
  // fixed points: A*k + N*q = k (mod N)
  for (int i = 0; i < t.n; ++i) {
    Rational nq = Rational(N) * t.shift[i].phase;
    rhs[i] = pos_mod(nq.num(), N);  // nq is integral by the precondition
  }

  double total = 1;
  for (int i = 0; i < t.n; ++i) total *= static_cast<double>(N);
  if (total > static_cast<double>(cap)) throw domain_error("census enumeration above cap");

  std::vector<i64> k(t.n, 0);
  i64 count = 0;
  for (;;) {
    bool fixed = true;
    for (int i = 0; i < t.n && fixed; ++i) {
      i64 acc = rhs[i];
      for (int j = 0; j < t.n; ++j) acc = checked_add(acc, checked_mul(A(i, j), k[j]));
      if (pos_mod(checked_sub(acc, k[i]), N) != 0) fixed = false;
    }
    if (fixed) ++count;
    int pos = 0;
    while (pos < t.n) {
      if (++k[pos] < N) break;
      k[pos] = 0;
      ++pos;
    }
    if (pos == t.n) break;
  }
  return count;
}

/// The closed-form dimension claim ambient_dim / (2 * ord(omega sigma(omega))),
/// kept for cross-checks only; the Smith-form answer is authoritative.
struct PaperDim {
  Rational value;
  bool integral = true;
};

inline PaperDim paper_dimension(i64 order_of_gamma, i64 ambient_dim) {
  if (order_of_gamma < 1) throw domain_error("order must be >= 1");
  Rational v(ambient_dim, checked_mul(2, order_of_gamma));
  return {v, v.is_integer()};
}

}  // namespace atlas
