#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "atlas/moduli.hpp"

namespace atlas {

/// Line-oriented `key = value` query file with `#` comments.  Unknown keys are
/// rejected.
struct QueryFile {
  std::string group;
  std::string sigma = "id";
  std::string epsilon = "+";
  std::string curve;             // REGION:a or REGION:a:t
  std::string sign = "+";
  std::string side = "representation";
  std::string z;                 // pseudo-real selector, optional
  std::string format = "table";
  std::vector<int> painted;      // documentation only
  std::vector<std::string> commands;
  std::map<int, std::string> twist_b;    // central index (1-based) -> "p1,p2"
  std::map<int, std::string> twist_y;    // -> "q1,q2"
  std::map<int, std::string> twist_phi;  // -> "re,im"
  bool twist_free = false;               // symbolic twist request
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace detail

inline QueryFile parse_query_file(const std::string& text) {
  QueryFile q;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw parse_error("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string val = detail::trim(line.substr(eq + 1));
    if (key == "group") q.group = val;
    else if (key == "sigma") q.sigma = val;
    else if (key == "epsilon") q.epsilon = val;
    else if (key == "curve") q.curve = val;
    else if (key == "sign") q.sign = val;
    else if (key == "side") q.side = val;
    else if (key == "z") q.z = val;
    else if (key == "format") q.format = val;
    else if (key == "painted") {
      for (const auto& tok : detail::split(val, ','))
        if (!tok.empty()) q.painted.push_back(std::stoi(tok));
    } else if (key == "commands") {
      q.commands = detail::split(val, ',');
    } else if (key == "twist") {
      if (val == "trivial") {
        // nothing to record
      } else if (val == "free") {
        q.twist_free = true;
      } else {
        throw parse_error("line " + std::to_string(lineno) +
                          ": twist must be 'trivial' or 'free' (use twist.b/.y/.phi for values)");
      }
    } else if (key.rfind("twist.b", 0) == 0) {
      q.twist_b[std::stoi(key.substr(7))] = val;
    } else if (key.rfind("twist.y", 0) == 0) {
      q.twist_y[std::stoi(key.substr(7))] = val;
    } else if (key.rfind("twist.phi", 0) == 0) {
      q.twist_phi[std::stoi(key.substr(9))] = val;
    } else {
      throw parse_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return q;
}

inline Epsilon parse_epsilon(const std::string& s) {
  if (s == "+" || s == "holomorphic") return Epsilon::holomorphic;
  if (s == "-" || s == "antiholomorphic" || s == "anti-holomorphic")
    return Epsilon::antiholomorphic;
  throw parse_error("epsilon must be '+' or '-', got '" + s + "'");
}

inline int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1") return +1;
  if (s == "-" || s == "-1") return -1;
  throw parse_error("sign must be '+' or '-', got '" + s + "'");
}

inline Side parse_side(const std::string& s) {
  if (s == "higgs" || s == "M") return Side::higgs;
  if (s == "representation" || s == "rep" || s == "R") return Side::representation;
  throw parse_error("side must be 'higgs' or 'representation', got '" + s + "'");
}

/// REGION:a or REGION:a:t, e.g. "A:-1", "C:+gamma", "H:+1", "A:-1:t".
inline EllipticInvolution parse_curve(const std::string& s, Epsilon epsilon) {
  auto parts = detail::split(s, ':');
  if (parts.size() < 2 || parts.size() > 3) throw parse_error("curve must be REGION:a[:t]");
  Region region = parse_region(parts[0]);
  AParam a = parse_a_param(parts[1]);
  bool translated = parts.size() == 3;
  if (translated && parts[2] != "t") throw parse_error("curve translation marker must be 't'");
  return find_involution(region, epsilon, a, translated);
}

inline LatticeInvolution parse_sigma(const RootDatum& d, const std::string& s, Epsilon epsilon) {
  if (s.rfind("perm:", 0) == 0) {
    auto toks = detail::split(s.substr(5), ',');
    std::vector<int> theta;
    for (const auto& t : toks) theta.push_back(std::stoi(t) - 1);
    return from_diagram_automorphism(d, theta, epsilon, s);
  }
  return involution_from_name(d, s, epsilon);
}

inline std::array<Rational, 2> parse_pair(const std::string& s) {
  auto toks = detail::split(s, ',');
  if (toks.size() != 2) throw parse_error("expected 'p,q', got '" + s + "'");
  return {parse_rational(toks[0]), parse_rational(toks[1])};
}

inline Twist build_twist(const QueryFile& qf, const RootDatum& d) {
  Twist t;
  int l = d.central_rank();
  auto need = [&](int k) {
    if (k < 1 || k > l)
      throw parse_error("twist coordinate " + std::to_string(k) + " outside central rank " +
                        std::to_string(l));
  };
  if (!qf.twist_b.empty()) {
    t.chi.assign(l, {UnitShift::one(), UnitShift::one()});
    for (const auto& [k, val] : qf.twist_b) {
      need(k);
      auto p = parse_pair(val);
      t.chi[k - 1] = {UnitShift::root_of_unity(p[0]), UnitShift::root_of_unity(p[1])};
    }
  }
  if (qf.twist_free) {
    if (l == 0) throw parse_error("free twist needs a positive central rank");
    t.chi.assign(l, {UnitShift::one(), UnitShift::one()});
    for (int k = 0; k < l; ++k)
      t.chi[k] = {UnitShift::free("b" + std::to_string(k + 1) + "_1"),
                  UnitShift::free("b" + std::to_string(k + 1) + "_2")};
  }
  if (!qf.twist_y.empty()) {
    t.y.assign(l, {Rational(0), Rational(0)});
    for (const auto& [k, val] : qf.twist_y) {
      need(k);
      t.y[k - 1] = parse_pair(val);
    }
  }
  if (!qf.twist_phi.empty()) {
    t.phi.assign(l, {Rational(0), Rational(0)});
    for (const auto& [k, val] : qf.twist_phi) {
      need(k);
      auto p = parse_pair(val);
      t.phi[k - 1] = {p[0], p[1]};
    }
  }
  return t;
}

inline InvolutionQuery query_from_file(const QueryFile& qf) {
  if (qf.group.empty()) throw parse_error("query needs a group");
  if (qf.curve.empty()) throw parse_error("query needs a curve involution");
  RootDatum d = build_datum(qf.group);
  Epsilon eps = parse_epsilon(qf.epsilon);
  LatticeInvolution sigma = parse_sigma(d, qf.sigma, eps);
  sigma.painted = qf.painted;
  EllipticInvolution curve = parse_curve(qf.curve, eps);
  Twist twist = build_twist(qf, d);
  return make_query(std::move(d), std::move(sigma), curve, parse_sign(qf.sign), std::move(twist));
}

inline CentralElement2 parse_z(const RootDatum& d, const LatticeInvolution& sigma,
                               const std::string& spec) {
  auto all = center_two_torsion(d);
  auto fixed_by_sigma = [&](const CentralElement2& z) {
    IntVec moved = sigma.S.apply(z.two_v);
    for (size_t i = 0; i < z.two_v.size(); ++i)
      if (pos_mod(checked_sub(moved[i], z.two_v[i]), 2) != 0) return false;
    return true;
  };
  if (spec.empty() || spec == "0" || spec == "trivial") {
    return all.front();
  }
  if (spec == "nontrivial") {
    std::vector<CentralElement2> cands;
    for (const auto& z : all)
      if (!z.is_trivial() && fixed_by_sigma(z)) cands.push_back(z);
    if (cands.empty()) throw domain_error("no nontrivial sigma-fixed central 2-torsion element");
    if (cands.size() > 1)
      throw domain_error("several nontrivial central elements; give coordinates instead");
    return cands.front();
  }
  auto toks = detail::split(spec, ',');
  if (static_cast<int>(toks.size()) != d.s)
    throw parse_error("z needs " + std::to_string(d.s) + " coordinates");
  CentralElement2 z;
  z.group_label = d.label;
  for (const auto& t : toks) {
    Rational rm = parse_rational(t).mod1();
    if (rm.is_zero())
      z.two_v.push_back(0);
    else if (rm == Rational(1, 2))
      z.two_v.push_back(1);
    else
      throw parse_error("z coordinates must be half-integers");
  }
  for (const auto& cand : all)
    if (cand.two_v == z.two_v) return z;
  throw domain_error("z is not central in " + d.label);
}

}  // namespace atlas
