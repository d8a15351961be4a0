#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlas/matrix.hpp"
#include "atlas/smith.hpp"

namespace atlas {

enum class Isogeny { simply_connected, adjoint, gl, torus };

struct Factor {
  char series = 'A';  // A,B,C,D,G for semisimple; 'L' for GL(n); 'Z' for central torus
  int rank = 0;       // semisimple rank (GL(n): n-1; torus: 0)
  Isogeny isogeny = Isogeny::simply_connected;
  int offset = 0;       // first coordinate of the block
  int block = 0;        // number of coordinates in the block
  std::vector<int> simple_indices;  // indices into the datum's simple root list
};

struct Root {
  IntVec covector;       // functional on the cocharacter lattice
  IntVec coroot;
  IntVec simple_coeffs;  // coordinates in the simple-root basis
  int factor = 0;

  i64 height() const {
    i64 h = 0;
    for (i64 c : simple_coeffs) h = checked_add(h, c);
    return h;
  }
};

/// Cocharacter lattice Z^s of a reductive group together with its root data.
/// The lattice is always the honest unsplit one; the central sublattice is
/// carried as an explicit list of basis vectors, not as a coordinate split.
struct RootDatum {
  std::string label;
  int s = 0;  // total rank
  std::vector<Factor> factors;
  std::vector<IntVec> simple_roots;    // covectors
  std::vector<IntVec> simple_coroots;  // vectors
  std::vector<Root> roots;             // full (finite) root set
  std::vector<IntVec> central_basis;   // basis of Lambda_Z as a sublattice
  std::vector<IntVec> ss_lattice_basis;  // basis of Lambda intersect span(coroots)

  int num_simple() const { return static_cast<int>(simple_roots.size()); }
  int central_rank() const { return static_cast<int>(central_basis.size()); }

  i64 pairing(const IntVec& root_cov, const IntVec& coroot) const { return dot(root_cov, coroot); }

  i64 cartan(int i, int j) const { return dot(simple_roots[i], simple_coroots[j]); }

  // Reflection in the i-th simple root as a matrix on the lattice.
  IntegerMatrix simple_reflection(int i) const {
    IntegerMatrix m = IntegerMatrix::identity(s);
    for (int col = 0; col < s; ++col) {
      // s_i(e_col) = e_col - <alpha_i, e_col> alpha_i^vee
      i64 c = simple_roots[i][col];
      for (int row = 0; row < s; ++row)
        m(row, col) = checked_sub(m(row, col), checked_mul(c, simple_coroots[i][row]));
    }
    return m;
  }

  // Orthogonal projection is not available integrally; this is the rational
  // projection onto the coroot span along the central span.
  RatVec project_semisimple(const RatVec& v) const;
};

namespace detail {

inline std::vector<std::vector<i64>> cartan_matrix(char series, int r) {
  std::vector<std::vector<i64>> c(r, std::vector<i64>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int i, int j, i64 cij, i64 cji) {
    c[i][j] = cij;
    c[j][i] = cji;
  };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      if (r < 2) throw domain_error("B series needs rank >= 2");
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 2, r - 1, -2, -1);
      break;
    case 'C':
      if (r < 2) throw domain_error("C series needs rank >= 2");
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 2, r - 1, -1, -2);
      break;
    case 'D':
      if (r < 3) throw domain_error("D series needs rank >= 3");
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 3, r - 1, -1, -1);
      break;
    case 'G':
      if (r != 2) throw domain_error("G series has rank 2");
      link(0, 1, -1, -3);
      break;
    default:
      throw domain_error(std::string("unknown series ") + series);
  }
  return c;
}

struct FactorSpec {
  char series;
  int rank;     // for GL: n
  Isogeny isogeny;
};

inline FactorSpec parse_factor(const std::string& tok) {
  if (tok.size() >= 3 && tok.substr(0, 2) == "GL") {
    int n = std::stoi(tok.substr(2));
    if (n < 1) throw domain_error("GL(n) needs n >= 1");
    return {'L', n, Isogeny::gl};
  }
  if (tok.empty()) throw domain_error("empty factor");
  char series = tok[0];
  if (std::string("ABCDG").find(series) == std::string::npos)
    throw domain_error("unsupported type string: " + tok);
  auto dotpos = tok.find('.');
  std::string rank_str = dotpos == std::string::npos ? tok.substr(1) : tok.substr(1, dotpos - 1);
  int r = 0;
  try {
    r = std::stoi(rank_str);
  } catch (const std::exception&) {
    throw domain_error("bad rank in type string: " + tok);
  }
  if (r < 1) throw domain_error("rank 0 factor: " + tok);
  Isogeny iso = Isogeny::simply_connected;
  if (dotpos != std::string::npos) {
    std::string suffix = tok.substr(dotpos + 1);
    if (suffix == "sc")
      iso = Isogeny::simply_connected;
    else if (suffix == "ad")
      iso = Isogeny::adjoint;
    else
      throw domain_error("unknown isogeny suffix: " + tok);
  }
  return {series, r, iso};
}

}  // namespace detail

inline RatVec RootDatum::project_semisimple(const RatVec& v) const {
  RatVec out = v;
  for (const Factor& f : factors) {
    if (f.series == 'Z') {
      for (int k = 0; k < f.block; ++k) out[f.offset + k] = Rational(0);
    } else if (f.series == 'L') {
      Rational mean(0);
      for (int k = 0; k < f.block; ++k) mean += v[f.offset + k];
      mean = mean / Rational(f.block);
      for (int k = 0; k < f.block; ++k) out[f.offset + k] = v[f.offset + k] - mean;
    }
  }
  return out;
}

/// Construct a root datum from a type string.  Grammar:
///   datum  := factor ('x' factor)* ('+Z' k)?
///   factor := GLn | Xr | Xr.sc | Xr.ad        (X in A,B,C,D,G)
/// A bare Xr means the simply connected form.
inline RootDatum build_datum(const std::string& spec) {
  RootDatum d;
  d.label = spec;

  std::string body = spec;
  int central_torus = 0;
  auto plus = body.find("+Z");
  if (plus != std::string::npos) {
    try {
      central_torus = std::stoi(body.substr(plus + 2));
    } catch (const std::exception&) {
      throw domain_error("bad central torus in type string: " + spec);
    }
    if (central_torus < 1) throw domain_error("central torus rank must be >= 1");
    body = body.substr(0, plus);
  }

  std::vector<std::string> toks;
  for (size_t pos = 0; pos < body.size();) {
    auto next = body.find('x', pos);
    if (next == std::string::npos) {
      toks.push_back(body.substr(pos));
      break;
    }
    toks.push_back(body.substr(pos, next - pos));
    pos = next + 1;
  }
  if (toks.empty() && central_torus == 0) throw domain_error("empty type string");

  for (const std::string& tok : toks) {
    if (tok.empty()) throw domain_error("empty factor in type string: " + spec);
    detail::FactorSpec fs = detail::parse_factor(tok);
    Factor f;
    f.series = fs.series;
    f.isogeny = fs.isogeny;
    f.offset = d.s;
    const int simple_base = d.num_simple();
    if (fs.series == 'L') {
      int n = fs.rank;
      f.rank = n - 1;
      f.block = n;
      for (int i = 0; i + 1 < n; ++i) {
        IntVec root(d.s + n, 0), coroot(d.s + n, 0);
        root[d.s + i] = 1;
        root[d.s + i + 1] = -1;
        coroot[d.s + i] = 1;
        coroot[d.s + i + 1] = -1;
        f.simple_indices.push_back(simple_base + i);
        d.simple_roots.push_back(root);
        d.simple_coroots.push_back(coroot);
      }
    } else {
      int r = fs.rank;
      f.rank = r;
      f.block = r;
      auto cartan = detail::cartan_matrix(fs.series, r);
      for (int i = 0; i < r; ++i) {
        IntVec root(d.s + r, 0), coroot(d.s + r, 0);
        if (fs.isogeny == Isogeny::simply_connected) {
          // coroot basis: coroots are unit vectors, roots are Cartan rows
          coroot[d.s + i] = 1;
          for (int j = 0; j < r; ++j) root[d.s + j] = cartan[i][j];
        } else {
          // coweight basis: roots are unit covectors, coroots are Cartan columns
          root[d.s + i] = 1;
          for (int j = 0; j < r; ++j) coroot[d.s + j] = cartan[j][i];
        }
        f.simple_indices.push_back(simple_base + i);
        d.simple_roots.push_back(root);
        d.simple_coroots.push_back(coroot);
      }
    }
    d.s += f.block;
    d.factors.push_back(f);
  }
  if (central_torus > 0) {
    Factor f;
    f.series = 'Z';
    f.rank = 0;
    f.offset = d.s;
    f.block = central_torus;
    d.s += central_torus;
    d.factors.push_back(f);
  }
  if (d.s == 0) throw domain_error("rank 0 datum");

  // pad all vectors to the final rank
  for (auto& v : d.simple_roots) v.resize(d.s, 0);
  for (auto& v : d.simple_coroots) v.resize(d.s, 0);

  // central and semisimple sublattice bases
  for (const Factor& f : d.factors) {
    if (f.series == 'L') {
      IntVec ones(d.s, 0);
      for (int k = 0; k < f.block; ++k) ones[f.offset + k] = 1;
      d.central_basis.push_back(ones);
      for (int k = 0; k + 1 < f.block; ++k) {
        IntVec v(d.s, 0);
        v[f.offset + k] = 1;
        v[f.offset + k + 1] = -1;
        d.ss_lattice_basis.push_back(v);
      }
    } else if (f.series == 'Z') {
      for (int k = 0; k < f.block; ++k) {
        IntVec v(d.s, 0);
        v[f.offset + k] = 1;
        d.central_basis.push_back(v);
      }
    } else {
      for (int k = 0; k < f.block; ++k) {
        IntVec v(d.s, 0);
        v[f.offset + k] = 1;
        d.ss_lattice_basis.push_back(v);
      }
    }
  }

  // close the simple roots under reflection
  std::map<IntVec, Root> closure;
  std::vector<Root> frontier;
  for (size_t fi = 0; fi < d.factors.size(); ++fi) {
    const Factor& f = d.factors[fi];
    for (size_t k = 0; k < f.simple_indices.size(); ++k) {
      int idx = f.simple_indices[k];
      Root r;
      r.covector = d.simple_roots[idx];
      r.coroot = d.simple_coroots[idx];
      r.simple_coeffs.assign(d.num_simple(), 0);
      r.simple_coeffs[idx] = 1;
      r.factor = static_cast<int>(fi);
      closure[r.covector] = r;
      frontier.push_back(r);
    }
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& rt : frontier) {
      for (int i = 0; i < d.num_simple(); ++i) {
        i64 n = dot(rt.covector, d.simple_coroots[i]);   // <rt, alpha_i^vee>
        i64 m = dot(d.simple_roots[i], rt.coroot);       // <alpha_i, rt^vee>
        Root img;
        img.covector.resize(d.s);
        img.coroot.resize(d.s);
        for (int c = 0; c < d.s; ++c) {
          img.covector[c] = checked_sub(rt.covector[c], checked_mul(n, d.simple_roots[i][c]));
          img.coroot[c] = checked_sub(rt.coroot[c], checked_mul(m, d.simple_coroots[i][c]));
        }
        img.simple_coeffs = rt.simple_coeffs;
        img.simple_coeffs[i] = checked_sub(img.simple_coeffs[i], n);
        img.factor = rt.factor;
        if (closure.emplace(img.covector, img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  d.roots.reserve(closure.size());
  for (auto& [cov, r] : closure) d.roots.push_back(r);

  // validate the Cartan matrix block
  for (int i = 0; i < d.num_simple(); ++i) {
    if (d.cartan(i, i) != 2) throw domain_error("invalid Cartan diagonal");
    for (int j = 0; j < d.num_simple(); ++j) {
      if (i != j && d.cartan(i, j) > 0) throw domain_error("invalid Cartan matrix");
      if (i != j && (d.cartan(i, j) == 0) != (d.cartan(j, i) == 0))
        throw domain_error("asymmetric Cartan zero pattern");
    }
  }
  // centrality of the designated central basis
  for (const IntVec& zv : d.central_basis)
    for (const IntVec& alpha : d.simple_roots)
      if (dot(alpha, zv) != 0) throw domain_error("central basis vector pairs nontrivially with a root");
  return d;
}

/// 2-torsion point of the torus written as 2v with entries in {0,1}; the point
/// itself is exp(v), v in (1/2)Lambda.
struct CentralElement2 {
  IntVec two_v;
  std::string group_label;

  bool is_trivial() const {
    for (i64 x : two_v)
      if (x != 0) return false;
    return true;
  }

  RatVec v() const {
    RatVec r;
    r.reserve(two_v.size());
    for (i64 x : two_v) r.emplace_back(x, 2);
    return r;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < two_v.size(); ++i)
      s += (two_v[i] ? "1/2" : "0") + std::string(i + 1 < two_v.size() ? "," : "");
    return s + ")";
  }
};

/// All 2-torsion points of T lying in the center of G: exp(v) is central iff
/// every root pairs evenly with 2v.
inline std::vector<CentralElement2> center_two_torsion(const RootDatum& d) {
  if (d.s > 24) throw domain_error("center_two_torsion: rank too large for enumeration");
  std::vector<CentralElement2> out;
  for (i64 mask = 0; mask < (i64(1) << d.s); ++mask) {
    IntVec two_v(d.s, 0);
    for (int i = 0; i < d.s; ++i) two_v[i] = (mask >> i) & 1;
    bool central = true;
    for (const IntVec& alpha : d.simple_roots)
      if (pos_mod(dot(alpha, two_v), 2) != 0) {
        central = false;
        break;
      }
    if (central) out.push_back({two_v, d.label});
  }
  return out;
}

namespace detail {

struct AlcoveData {
  RatVec barycenter;                 // of the product of factor alcoves
  std::vector<std::vector<RatVec>> factor_vertices;  // per factor, 0 excluded
};

// Fundamental coweights over Q, expressed in lattice coordinates, and the
// marks of the highest root; vertices of the factor alcove are w_j / mark_j.
inline AlcoveData alcove_data(const RootDatum& d) {
  AlcoveData a;
  a.barycenter.assign(d.s, Rational(0));
  for (size_t fi = 0; fi < d.factors.size(); ++fi) {
    const Factor& f = d.factors[fi];
    std::vector<RatVec> verts;
    if (f.series != 'Z' && f.rank > 0) {
      // highest root of the factor = unique root of maximal height
      const Root* high = nullptr;
      for (const Root& r : d.roots) {
        if (r.factor != static_cast<int>(fi)) continue;
        if (!high || r.height() > high->height()) high = &r;
      }
      if (!high) throw domain_error("factor without roots");
      int r = f.rank;
      // fundamental coweight w_j: write w_j = sum_k c_k alpha_k^vee and solve
      // <alpha_i, w_j> = sum_k c_k cartan(i,k) = delta_ij
      std::vector<RatVec> cartan_cols(r, RatVec(r));
      for (int k = 0; k < r; ++k)
        for (int i = 0; i < r; ++i)
          cartan_cols[k][i] = Rational(d.cartan(f.simple_indices[i], f.simple_indices[k]));
      for (int j = 0; j < r; ++j) {
        RatVec rhs(r, Rational(0));
        rhs[j] = Rational(1);
        auto c = solve_rational(cartan_cols, rhs);
        if (!c) throw domain_error("singular Cartan matrix");
        RatVec x(d.s, Rational(0));
        for (int k = 0; k < r; ++k)
          for (int t = 0; t < d.s; ++t)
            x[t] += (*c)[k] * Rational(d.simple_coroots[f.simple_indices[k]][t]);
        i64 mark = high->simple_coeffs[f.simple_indices[j]];
        if (mark <= 0) throw domain_error("nonpositive mark");
        for (auto& coord : x) coord = coord / Rational(mark);
        verts.push_back(x);
      }
      // barycenter of {0, v_1, ..., v_r}
      for (const RatVec& v : verts)
        for (int t = 0; t < d.s; ++t) a.barycenter[t] += v[t] / Rational(r + 1);
    }
    a.factor_vertices.push_back(verts);
  }
  return a;
}

// membership of a rational vector in the sublattice spanned by basis
inline bool in_lattice(const std::vector<IntVec>& basis, const RatVec& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  std::vector<RatVec> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(to_rat(b));
  auto sol = solve_rational(cols, v);
  if (!sol) return false;
  for (const auto& c : *sol)
    if (!c.is_integer()) return false;
  return true;
}

}  // namespace detail

/// The Weyl element carrying the fundamental alcove to its translate by the
/// alcove vertex exponentiating to z.  Returns an index into `elements`.
inline int omega_z(const RootDatum& d, const CentralElement2& z,
                   const std::vector<IntegerMatrix>& elements) {
  RatVec v = z.v();
  RatVec v_ss = d.project_semisimple(v);

  detail::AlcoveData alc = detail::alcove_data(d);

  RatVec u(d.s, Rational(0));
  bool v_ss_integral = detail::in_lattice(d.ss_lattice_basis, v_ss);
  if (!v_ss_integral) {
    // choose the matching alcove vertex factor by factor; the trivial choice
    // is preferred whenever the factor component is already in the lattice
    for (size_t fi = 0; fi < d.factors.size(); ++fi) {
      const Factor& f = d.factors[fi];
      if (f.series == 'Z') continue;
      RatVec vf(d.s, Rational(0));
      for (int k = 0; k < f.block; ++k) vf[f.offset + k] = v_ss[f.offset + k];
      if (detail::in_lattice(d.ss_lattice_basis, vf)) continue;
      std::vector<RatVec> matches;
      for (const RatVec& cand : alc.factor_vertices[fi]) {
        RatVec diff(d.s);
        for (int t = 0; t < d.s; ++t) diff[t] = cand[t] - vf[t];
        if (detail::in_lattice(d.ss_lattice_basis, diff)) matches.push_back(cand);
      }
      if (matches.empty())
        throw domain_error("z is not representable as an alcove vertex of order <= 2");
      if (matches.size() > 1)
        throw domain_error("ambiguous alcove vertex for z");
      for (int t = 0; t < d.s; ++t) u[t] += matches[0][t];
    }
  }

  RatVec target(d.s);
  for (int t = 0; t < d.s; ++t) target[t] = alc.barycenter[t] - u[t];
  int found = -1;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].apply(alc.barycenter) == target) {
      if (found >= 0) throw domain_error("alcove translate matched by two Weyl elements");
      found = static_cast<int>(i);
    }
  }
  if (found < 0) throw domain_error("no Weyl element carries the alcove to its translate");
  return found;
}

}  // namespace atlas
