#pragma once

#include <string>
#include <vector>

#include "atlas/matrix.hpp"
#include "atlas/rational.hpp"

namespace atlas {

/// Exact coordinate of a multiplicative shift: the value is
/// exp(2*pi*i*phase) * exp(logmod), or a named free parameter.
struct UnitShift {
  Rational phase;   // in Q, taken mod 1
  Rational logmod;  // real part of the logarithm, exact rational
  bool symbolic = false;
  std::string name;

  static UnitShift one() { return {}; }
  static UnitShift root_of_unity(const Rational& p) { return {p.mod1(), Rational(0), false, ""}; }
  static UnitShift free(const std::string& n) { return {Rational(0), Rational(0), true, n}; }

  bool is_trivial() const { return !symbolic && phase.mod1().is_zero() && logmod.is_zero(); }

  std::string str() const {
    if (symbolic) return name;
    std::string s = "e(" + phase.mod1().str() + ")";
    if (!logmod.is_zero()) s += "*exp(" + logmod.str() + ")";
    return s;
  }
};

using ShiftVec = std::vector<UnitShift>;

inline bool any_symbolic(const ShiftVec& v) {
  for (const auto& s : v)
    if (s.symbolic) return true;
  return false;
}

// shift^M coordinatewise-multiplicative action of an integer matrix
inline ShiftVec act(const IntegerMatrix& M, const ShiftVec& v) {
  if (M.cols() != static_cast<int>(v.size())) throw domain_error("shift action shape mismatch");
  ShiftVec out(M.rows());
  for (int i = 0; i < M.rows(); ++i) {
    UnitShift acc;
    std::string sym;
    bool symbolic = false;
    for (int j = 0; j < M.cols(); ++j) {
      i64 c = M(i, j);
      if (c == 0) continue;
      if (v[j].symbolic) {
        symbolic = true;
        if (!sym.empty()) sym += "*";
        sym += v[j].name + "^" + std::to_string(c);
      } else {
        acc.phase += Rational(c) * v[j].phase;
        acc.logmod += Rational(c) * v[j].logmod;
      }
    }
    acc.phase = acc.phase.mod1();
    acc.symbolic = symbolic;
    acc.name = sym;
    out[i] = acc;
  }
  return out;
}

inline ShiftVec conj_shift(const ShiftVec& v) {
  ShiftVec out = v;
  for (auto& s : out) {
    if (s.symbolic) {
      s.name = "conj(" + s.name + ")";
      continue;
    }
    s.phase = (-s.phase).mod1();
  }
  return out;
}

inline ShiftVec mul_shift(const ShiftVec& a, const ShiftVec& b) {
  if (a.size() != b.size()) throw domain_error("shift product shape mismatch");
  ShiftVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].symbolic || b[i].symbolic) {
      out[i].symbolic = true;
      out[i].name = (a[i].symbolic ? a[i].name : a[i].str()) + "*" +
                    (b[i].symbolic ? b[i].name : b[i].str());
      continue;
    }
    out[i].phase = (a[i].phase + b[i].phase).mod1();
    out[i].logmod = a[i].logmod + b[i].logmod;
  }
  return out;
}

inline bool shift_is_one(const ShiftVec& v) {
  for (const auto& s : v)
    if (!s.is_trivial()) return false;
  return true;
}

}  // namespace atlas
