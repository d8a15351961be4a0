#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "atlas/rootdatum.hpp"
#include "atlas/weyl.hpp"

namespace atlas {

enum class Epsilon { holomorphic, antiholomorphic };

inline char epsilon_char(Epsilon e) { return e == Epsilon::holomorphic ? '+' : '-'; }

/// Order-2 integer matrix on the cocharacter lattice realizing a group
/// involution there.  The holomorphic involution and its conjugation partner
/// share the same matrix; the epsilon flag only changes how torus coefficients
/// transform downstream.
struct LatticeInvolution {
  IntegerMatrix S;
  Epsilon epsilon = Epsilon::holomorphic;
  std::vector<int> diagram_permutation;  // on simple-root indices
  std::vector<int> painted;              // accepted for documentation, ignored
  std::string label;
};

/// Build the lattice involution induced by a diagram automorphism.  theta must
/// be an involutive permutation of the simple-root indices preserving the
/// Cartan matrix; GL(n) blocks compose the flip with inversion so that the
/// lattice map stays integral.
inline LatticeInvolution from_diagram_automorphism(const RootDatum& d, const std::vector<int>& theta,
                                                   Epsilon epsilon, const std::string& label = "") {
  if (static_cast<int>(theta.size()) != d.num_simple())
    throw domain_error("diagram automorphism has wrong length");
  for (int i = 0; i < d.num_simple(); ++i) {
    if (theta[i] < 0 || theta[i] >= d.num_simple())
      throw domain_error("diagram automorphism index out of range");
    if (theta[theta[i]] != i) throw domain_error("diagram automorphism is not an involution");
  }
  for (int i = 0; i < d.num_simple(); ++i)
    for (int j = 0; j < d.num_simple(); ++j)
      if (d.cartan(theta[i], theta[j]) != d.cartan(i, j))
        throw domain_error("permutation does not preserve the Cartan matrix");

  // theta must respect the factor partition (possibly exchanging factors)
  std::map<int, int> factor_image;
  for (size_t fi = 0; fi < d.factors.size(); ++fi)
    for (int si : d.factors[fi].simple_indices) {
      int tfi = -1;
      for (size_t fj = 0; fj < d.factors.size(); ++fj)
        for (int sj : d.factors[fj].simple_indices)
          if (sj == theta[si]) tfi = static_cast<int>(fj);
      auto it = factor_image.find(static_cast<int>(fi));
      if (it == factor_image.end())
        factor_image[static_cast<int>(fi)] = tfi;
      else if (it->second != tfi)
        throw domain_error("diagram automorphism splits a factor");
    }

  IntegerMatrix S(d.s, d.s, 0);
  std::set<int> done;
  for (size_t fi = 0; fi < d.factors.size(); ++fi) {
    const Factor& f = d.factors[fi];
    if (f.series == 'Z') {
      for (int k = 0; k < f.block; ++k) S(f.offset + k, f.offset + k) = 1;
      continue;
    }
    int tfi = factor_image.count(static_cast<int>(fi)) ? factor_image[static_cast<int>(fi)]
                                                       : static_cast<int>(fi);
    const Factor& g = d.factors[tfi];
    if (f.series != g.series || f.block != g.block || f.isogeny != g.isogeny)
      throw domain_error("diagram automorphism maps a factor to a non-isomorphic one");
    if (f.series == 'L') {
      // A GL block supports two patterns: the straight match e_k -> e_k and
      // the flip, which is only integral as e_k -> -e_{n+1-k}.
      int n = f.block;
      bool flipped = false;
      if (n >= 3) {
        int first_img = theta[f.simple_indices[0]];
        if (first_img == g.simple_indices[0])
          flipped = false;
        else if (first_img == g.simple_indices[n - 2])
          flipped = true;
        else
          throw domain_error("unsupported GL-block diagram automorphism");
        for (int k = 0; k + 1 < n; ++k) {
          int expect = flipped ? g.simple_indices[n - 2 - k] : g.simple_indices[k];
          if (theta[f.simple_indices[k]] != expect)
            throw domain_error("unsupported GL-block diagram automorphism");
        }
      }
      for (int k = 0; k < n; ++k) {
        if (flipped)
          S(g.offset + (n - 1 - k), f.offset + k) = -1;
        else
          S(g.offset + k, f.offset + k) = 1;
      }
    } else {
      // sc: coroot basis vectors permute; ad: coweight basis vectors permute
      for (int k = 0; k < f.block; ++k) {
        int si = f.simple_indices[k];
        int ti = theta[si];
        int pos = -1;
        for (int m = 0; m < g.block; ++m)
          if (g.simple_indices[m] == ti) pos = m;
        if (pos < 0) throw domain_error("diagram automorphism leaves the factor pair");
        S(g.offset + pos, f.offset + k) = 1;
      }
    }
    done.insert(static_cast<int>(fi));
  }

  LatticeInvolution inv;
  inv.S = S;
  inv.epsilon = epsilon;
  inv.diagram_permutation = theta;
  inv.label = label.empty() ? "theta" : label;
  if (!(S * S).is_identity()) throw domain_error("lattice involution does not square to identity");

  // S maps roots to roots: the root alpha transports to alpha o S
  std::set<IntVec> root_set;
  for (const Root& r : d.roots) root_set.insert(r.covector);
  for (const Root& r : d.roots) {
    IntVec image = S.transpose().apply(r.covector);
    if (!root_set.count(image)) throw domain_error("lattice involution does not preserve the roots");
  }
  // S preserves the central sublattice setwise
  for (const IntVec& zv : d.central_basis) {
    RatVec img = to_rat(S.apply(zv));
    if (!detail::in_lattice(d.central_basis, img))
      throw domain_error("lattice involution does not preserve the central sublattice");
  }
  return inv;
}

/// The permutation omega -> S omega S^{-1} of W.  Errors when S fails to
/// normalize W.
inline WeylAutomorphism induced_weyl_automorphism(const LatticeInvolution& inv, const WeylGroup& w) {
  WeylAutomorphism table(w.order());
  const IntegerMatrix& S = inv.S;
  for (int i = 0; i < w.order(); ++i) {
    IntegerMatrix conj = S * w.elements[i] * S;  // S is an involution
    if (!w.contains(conj)) throw domain_error("lattice involution does not normalize W");
    table[i] = w.index_of(conj);
  }
  for (int i = 0; i < w.order(); ++i)
    if (table[table[i]] != i) throw domain_error("induced Weyl automorphism is not an involution");
  return table;
}

/// Named aliases for involution inputs.  The name only fixes (theta, epsilon);
/// everything downstream consumes the lattice matrix.
inline LatticeInvolution involution_from_name(const RootDatum& d, const std::string& name,
                                              Epsilon epsilon) {
  int n = d.num_simple();
  std::vector<int> theta(n);
  for (int i = 0; i < n; ++i) theta[i] = i;
  if (name == "id" || name == "inner" || name == "split" || name == "compact") {
    // trivial diagram action
  } else if (name == "flip") {
    for (const Factor& f : d.factors) {
      int r = static_cast<int>(f.simple_indices.size());
      for (int k = 0; k < r; ++k) {
        if (f.series == 'A' || f.series == 'L') {
          theta[f.simple_indices[k]] = f.simple_indices[r - 1 - k];
        } else if (f.series == 'D') {
          // exchange the two fork ends
          if (k == r - 2)
            theta[f.simple_indices[k]] = f.simple_indices[r - 1];
          else if (k == r - 1)
            theta[f.simple_indices[k]] = f.simple_indices[r - 2];
        }
      }
    }
  } else if (name == "swap") {
    if (d.factors.size() < 2) throw domain_error("swap needs at least two factors");
    const Factor& a = d.factors[0];
    const Factor& b = d.factors[1];
    if (a.series != b.series || a.block != b.block || a.isogeny != b.isogeny)
      throw domain_error("swap needs two isomorphic leading factors");
    int r = static_cast<int>(a.simple_indices.size());
    for (int k = 0; k < r; ++k) {
      theta[a.simple_indices[k]] = b.simple_indices[k];
      theta[b.simple_indices[k]] = a.simple_indices[k];
    }
  } else {
    throw domain_error("unknown involution alias: " + name);
  }
  return from_diagram_automorphism(d, theta, epsilon, name);
}

}  // namespace atlas
