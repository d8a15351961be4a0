#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "atlas/elliptic.hpp"
#include "atlas/involution.hpp"
#include "atlas/rootdatum.hpp"
#include "atlas/torusfix.hpp"
#include "atlas/weyl.hpp"

namespace atlas {

enum class Side { higgs, representation };

inline std::string side_name(Side s) { return s == Side::higgs ? "higgs" : "representation"; }

/// (B,B,B)-type label of the fixed locus from the three sign choices.
inline std::string brane_label(Epsilon curve_eps, Epsilon group_eps, int higgs_sign) {
  if (curve_eps != group_eps)
    throw domain_error("curve and group involutions must have matching epsilon");
  if (curve_eps == Epsilon::holomorphic) return higgs_sign > 0 ? "(B,B,B)" : "(B,A,A)";
  return higgs_sign > 0 ? "(A,A,B)" : "(A,B,A)";
}

/// Twist of the involution by a central Higgs pair or character, given in
/// exact coordinates along the designated central basis.
struct Twist {
  // representation side: (b_{k,1}, b_{k,2}) per central basis vector
  std::vector<std::array<UnitShift, 2>> chi;
  // Higgs side: y_k in (Q/Z)^2 and a Higgs-field shift phi_k in Q + iQ
  std::vector<std::array<Rational, 2>> y;
  std::vector<std::pair<Rational, Rational>> phi;
  bool phi_symbolic = false;

  bool is_trivial() const { return chi.empty() && y.empty() && phi.empty() && !phi_symbolic; }
};

struct InvolutionQuery {
  RootDatum datum;
  WeylGroup weyl;
  LatticeInvolution sigma;
  WeylAutomorphism sigma_w;
  EllipticInvolution curve;
  int higgs_sign = +1;
  Twist twist;

  int rank() const { return datum.s; }
};

namespace detail {

// s x l integer matrix whose columns are the central basis vectors
inline IntegerMatrix central_matrix(const RootDatum& d) {
  int l = d.central_rank();
  IntegerMatrix Z(d.s, std::max(l, 1), 0);
  for (int k = 0; k < l; ++k)
    for (int i = 0; i < d.s; ++i) Z(i, k) = d.central_basis[k][i];
  return Z;
}

// assemble the per-coordinate shift vector sum_k Z_k (x) b_k on the 2s torus
inline ShiftVec assemble_central_shift(const RootDatum& d,
                                       const std::vector<std::array<UnitShift, 2>>& per_central) {
  int l = d.central_rank();
  ShiftVec flat(2 * std::max(l, 1), UnitShift::one());
  for (int k = 0; k < l && k < static_cast<int>(per_central.size()); ++k) {
    flat[2 * k] = per_central[k][0];
    flat[2 * k + 1] = per_central[k][1];
  }
  IntegerMatrix lift = kron(central_matrix(d), IntegerMatrix::identity(2));
  return act(lift, flat);
}

}  // namespace detail

inline InvolutionQuery make_query(RootDatum datum, LatticeInvolution sigma,
                                  EllipticInvolution curve, int higgs_sign, Twist twist = {}) {
  if (sigma.epsilon != curve.epsilon)
    throw domain_error("curve and group involutions must have matching epsilon");
  if ((curve.epsilon == Epsilon::antiholomorphic) && curve.region == Region::H)
    throw domain_error("anti-holomorphic involutions require a region A-E");
  InvolutionQuery q;
  q.weyl = WeylGroup::generate(datum);
  q.sigma_w = induced_weyl_automorphism(sigma, q.weyl);
  q.datum = std::move(datum);
  q.sigma = std::move(sigma);
  q.curve = curve;
  q.higgs_sign = higgs_sign;
  q.twist = std::move(twist);
  int l = q.datum.central_rank();
  if (static_cast<int>(q.twist.chi.size()) > l || static_cast<int>(q.twist.y.size()) > l ||
      static_cast<int>(q.twist.phi.size()) > l)
    throw domain_error("twist has more coordinates than the central rank");
  return q;
}

/// The rank-2s affine torus map whose fixed set is the omega-component of the
/// fixed locus: lattice part omega o sigma across blocks, curve map within
/// blocks, shifts from the twist.
inline TorusInvolution build_twisted_involution(const InvolutionQuery& q, int omega, Side side) {
  const int s = q.datum.s;
  const IntegerMatrix M_omega = q.weyl.elements[omega] * q.sigma.S;
  const IntegerMatrix omega_lift = kron(q.weyl.elements[omega], IntegerMatrix::identity(2));

  TorusInvolution t;
  if (side == Side::representation) {
    TorusMap2 f = f_map(q.curve, q.higgs_sign);
    t.ambient = Ambient::complex_torus;
    t.n = 2 * s;
    t.M = kron(M_omega, f.M);
    t.conj = f.conj;
    ShiftVec beta = detail::assemble_central_shift(q.datum, q.twist.chi);
    t.shift = act(omega_lift, beta);
  } else {
    EllipticInvolution pulled = q.curve;
    if (q.curve.epsilon == Epsilon::antiholomorphic) pulled.a = q.curve.a.negated();
    IntegerMatrix P = pi1_matrix(pulled);
    t.ambient = Ambient::higgs;
    t.n = 2 * s;
    t.M = kron(M_omega, P);
    t.conj = false;
    std::vector<std::array<UnitShift, 2>> ys;
    for (const auto& yk : q.twist.y)
      ys.push_back({UnitShift::root_of_unity(yk[0]), UnitShift::root_of_unity(yk[1])});
    ShiftVec beta = detail::assemble_central_shift(q.datum, ys);
    t.shift = act(omega_lift, beta);

    TorusInvolution::Fiber fb;
    fb.L = M_omega;
    fb.sign = q.curve.epsilon == Epsilon::holomorphic ? q.higgs_sign : -q.higgs_sign;
    fb.conj = q.curve.epsilon == Epsilon::antiholomorphic;
    fb.symbolic = q.twist.phi_symbolic;
    std::vector<std::pair<Rational, Rational>> phi(s, {Rational(0), Rational(0)});
    int l = q.datum.central_rank();
    for (int k = 0; k < l && k < static_cast<int>(q.twist.phi.size()); ++k)
      for (int i = 0; i < s; ++i) {
        Rational c(q.datum.central_basis[k][i]);
        phi[i].first += c * q.twist.phi[k].first;
        phi[i].second += c * q.twist.phi[k].second;
      }
    // transport the shift by omega
    std::vector<std::pair<Rational, Rational>> phi_w(s, {Rational(0), Rational(0)});
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        Rational c(q.weyl.elements[omega](i, j));
        phi_w[i].first += c * phi[j].first;
        phi_w[i].second += c * phi[j].second;
      }
    fb.shift = std::move(phi_w);
    t.fiber = std::move(fb);
  }

  // consistency: the square's lattice part must be the action of gamma, and
  // on cocycle classes the square must be the identity outright
  int gamma = q.weyl.mul(omega, q.sigma_w[omega]);
  TorusInvolution sq = square(t);
  IntegerMatrix expected = kron(q.weyl.elements[gamma], IntegerMatrix::identity(2));
  if (sq.M != expected) throw domain_error("twisted map square has the wrong lattice action");
  if (gamma == 0 && !any_symbolic(sq.shift) && !shift_is_one(sq.shift))
    throw domain_error("twist violates the involution condition");
  return t;
}

/// One block of the fixed-locus decomposition.
struct FixedLocusComponent {
  int omega = 0;
  std::string omega_word;
  int class_id = 0;
  int class_size = 0;
  int gamma = 0;
  std::string gamma_word;
  int gamma_class = 0;
  i64 gamma_order = 1;
  FixedSetSummary fixed;
  PaperDim paper{Rational(0), true};
  bool paper_matches = false;
  i64 normalizer_order = 1;
  bool maximal = false;
  std::string brane;
  bool in_singular_locus = false;
  std::optional<i64> postquotient_orbits;
};

struct PseudoRealSlice {
  CentralElement2 z;
  int omega_z = 0;
  std::string omega_z_word;
  std::vector<int> component_indices;  // into ModuliReport::components
  std::string diagnostic;
};

struct ModuliReport {
  Side side = Side::representation;
  std::string group_label;
  std::string sigma_label;
  char epsilon = '+';
  std::string curve_name;
  Region region = Region::H;
  int higgs_sign = +1;
  bool twist_trivial = true;
  std::string brane;
  int weyl_order = 0;
  int twisted_class_count = 0;
  std::vector<FixedLocusComponent> components;
  std::vector<int> empty_class_reps;  // twisted classes whose fixed set is empty
  std::vector<std::pair<int, std::vector<int>>> gamma_slices;  // gamma class -> components
  std::vector<PseudoRealSlice> pseudo_real;  // filled for anti-holomorphic queries
};

namespace detail {

// orbit count of the normalizer action on the components of the solution set
// of the torus block; exact, small cases only
inline std::optional<i64> postquotient_orbit_count(const InvolutionQuery& q,
                                                   const TorusInvolution& t, int omega,
                                                   const std::vector<int>& normalizer) {
  if (q.datum.s > 2 || any_symbolic(t.shift)) return std::nullopt;
  // the component structure sits in the torus/phase directions
  IntegerMatrix A(1, 1);
  ShiftVec target = t.shift;
  if (t.ambient == Ambient::complex_torus && !t.conj) {
    A = t.M - IntegerMatrix::identity(t.n);
    for (auto& s : target) {
      s.phase = (-s.phase).mod1();
      s.logmod = -s.logmod;
    }
  } else if (t.ambient == Ambient::complex_torus && t.conj) {
    A = IntegerMatrix::identity(t.n) + t.M;
  } else {
    A = t.M - IntegerMatrix::identity(t.n);
    for (auto& s : target) s.phase = (-s.phase).mod1();
  }
  SmithDecomposition snf = smith_normal_form(A);
  RatVec c(t.n);
  for (int i = 0; i < t.n; ++i) c[i] = target[i].phase;
  RatVec uc = snf.U.apply(c);
  const int n = t.n;
  std::vector<i64> dvals(n, 0);
  for (int i = 0; i < n; ++i) dvals[i] = snf.D(i, i);
  for (int i = 0; i < n; ++i)
    if (dvals[i] == 0 && !uc[i].is_integer()) return 0;  // empty set

  // particular solution in y coordinates and component offsets
  RatVec y0(n, Rational(0));
  for (int i = 0; i < n; ++i)
    if (dvals[i] != 0) y0[i] = uc[i] / Rational(dvals[i]);
  // inverse of V, exact; V is unimodular
  std::vector<RatVec> vcols(n, RatVec(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) vcols[j][i] = Rational(snf.V(i, j));
  auto vinv_times = [&](const RatVec& x) {
    auto sol = solve_rational(vcols, x);
    if (!sol) throw domain_error("singular unimodular matrix");
    return *sol;
  };

  auto label_of_point = [&](const RatVec& x) {
    RatVec y = vinv_times(x);
    std::vector<i64> label;
    for (int i = 0; i < n; ++i) {
      if (dvals[i] == 0) continue;
      Rational r = Rational(dvals[i]) * y[i] - uc[i];
      if (!r.is_integer()) throw domain_error("point is not on the fixed locus");
      label.push_back(pos_mod(r.num(), dvals[i]));
    }
    return label;
  };

  // enumerate one point per component
  std::vector<RatVec> reps;
  std::vector<std::vector<i64>> labels;
  std::vector<int> radix;
  for (int i = 0; i < n; ++i)
    if (dvals[i] > 1) radix.push_back(i);
  i64 total = 1;
  for (int i : radix) total = checked_mul(total, dvals[i]);
  if (total > 4096) return std::nullopt;
  for (i64 idx = 0; idx < total; ++idx) {
    RatVec y = y0;
    i64 rem = idx;
    for (int i : radix) {
      i64 k = rem % dvals[i];
      rem /= dvals[i];
      y[i] += Rational(k, dvals[i]);
    }
    RatVec x = snf.V.apply(y);
    reps.push_back(x);
    labels.push_back(label_of_point(x));
  }

  auto find_label = [&](const std::vector<i64>& lb) {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == lb) return static_cast<int>(i);
    throw domain_error("component label not found");
  };

  // union-find over the normalizer action
  std::vector<int> parent(reps.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int g : normalizer) {
    IntegerMatrix G = kron(q.weyl.elements[g], IntegerMatrix::identity(2));
    for (size_t i = 0; i < reps.size(); ++i) {
      RatVec moved = G.apply(reps[i]);
      int j = find_label(label_of_point(moved));
      int a = find(static_cast<int>(i)), b = find(j);
      if (a != b) parent[a] = b;
    }
  }
  std::set<int> roots;
  for (size_t i = 0; i < reps.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<i64>(roots.size());
}

}  // namespace detail

/// Decompose the fixed locus over the twisted conjugacy classes.
inline ModuliReport fixed_locus_decomposition(const InvolutionQuery& q, Side side) {
  ModuliReport rep;
  rep.side = side;
  rep.group_label = q.datum.label;
  rep.sigma_label = q.sigma.label;
  rep.epsilon = epsilon_char(q.curve.epsilon);
  rep.curve_name = q.curve.name();
  rep.region = q.curve.region;
  rep.higgs_sign = q.higgs_sign;
  rep.twist_trivial = q.twist.is_trivial();
  rep.brane = brane_label(q.curve.epsilon, q.sigma.epsilon, q.higgs_sign);
  rep.weyl_order = q.weyl.order();

  UpsilonData ups = upsilon(q.weyl, q.sigma_w);
  rep.twisted_class_count = static_cast<int>(ups.twisted.size());
  const i64 ambient_real_dim = 4 * static_cast<i64>(q.datum.s);

  for (size_t ci = 0; ci < ups.twisted.size(); ++ci) {
    const TwistedClass& tc = ups.twisted[ci];
    TorusInvolution t = build_twisted_involution(q, tc.representative, side);
    FixedSetSummary fs = fixed_subgroup(t);
    if (fs.is_empty()) {
      rep.empty_class_reps.push_back(tc.representative);
      continue;
    }
    FixedLocusComponent c;
    c.omega = tc.representative;
    c.omega_word = q.weyl.words[tc.representative];
    c.class_id = static_cast<int>(ci);
    c.class_size = static_cast<int>(tc.members.size());
    c.gamma = tc.gamma;
    c.gamma_word = q.weyl.words[tc.gamma];
    c.gamma_class = ups.delta[ci];
    c.gamma_order = q.weyl.element_order(tc.gamma);
    c.fixed = fs;
    c.paper = paper_dimension(c.gamma_order, ambient_real_dim);
    i64 real_dim = fs.unit == Unit::complex_dim ? 2 * fs.dim : fs.dim;
    c.paper_matches = c.paper.integral && Rational(real_dim) == c.paper.value;
    std::vector<int> normalizer = normalizer_fixed_torus(q.weyl, q.sigma_w, tc.representative);
    c.normalizer_order = static_cast<i64>(normalizer.size());
    c.maximal = tc.gamma == 0;
    c.brane = rep.brane;
    c.in_singular_locus = !c.maximal;
    if (fs.nonempty == Solvable::yes)
      c.postquotient_orbits = detail::postquotient_orbit_count(q, t, tc.representative, normalizer);
    rep.components.push_back(std::move(c));
  }

  for (int gcls : ups.gamma_class_ids) {
    std::vector<int> idxs;
    for (size_t i = 0; i < rep.components.size(); ++i)
      if (rep.components[i].gamma_class == gcls) idxs.push_back(static_cast<int>(i));
    rep.gamma_slices.emplace_back(gcls, std::move(idxs));
  }
  return rep;
}

/// The pseudo-real slice for a sigma-fixed central 2-torsion element z: the
/// components whose gamma lies in the conjugacy class of omega_z.
inline PseudoRealSlice pseudo_real_moduli(const InvolutionQuery& q, const ModuliReport& rep,
                                          const CentralElement2& z) {
  if (q.curve.epsilon != Epsilon::antiholomorphic)
    throw domain_error("pseudo-real slices require anti-holomorphic involutions");
  IntVec moved = q.sigma.S.apply(z.two_v);
  for (int i = 0; i < q.datum.s; ++i)
    if (pos_mod(checked_sub(moved[i], z.two_v[i]), 2) != 0)
      throw domain_error("z is not fixed by the conjugation");

  PseudoRealSlice slice;
  slice.z = z;
  slice.omega_z = omega_z(q.datum, q.weyl, z);
  slice.omega_z_word = q.weyl.words[slice.omega_z];

  // ordinary class of omega_z
  std::vector<TwistedClass> ord = ordinary_classes(q.weyl);
  int target_class = -1;
  for (size_t c = 0; c < ord.size(); ++c)
    for (int m : ord[c].members)
      if (m == slice.omega_z) target_class = static_cast<int>(c);

  for (size_t i = 0; i < rep.components.size(); ++i)
    if (rep.components[i].gamma_class == target_class)
      slice.component_indices.push_back(static_cast<int>(i));
  if (slice.component_indices.empty())
    slice.diagnostic = "no twisted class satisfies omega*sigma(omega) ~ " + slice.omega_z_word +
                       "; the shifted cocycle set is empty";
  return slice;
}

/// All pseudo-real slices over the sigma-fixed central 2-torsion.
inline void attach_pseudo_real_slices(const InvolutionQuery& q, ModuliReport& rep) {
  if (q.curve.epsilon != Epsilon::antiholomorphic) return;
  for (const CentralElement2& z : center_two_torsion(q.datum)) {
    IntVec moved = q.sigma.S.apply(z.two_v);
    bool fixed = true;
    for (int i = 0; i < q.datum.s; ++i)
      if (pos_mod(checked_sub(moved[i], z.two_v[i]), 2) != 0) fixed = false;
    if (!fixed) continue;
    rep.pseudo_real.push_back(pseudo_real_moduli(q, rep, z));
  }
}

}  // namespace atlas
