#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "atlas/matrix.hpp"
#include "atlas/rootdatum.hpp"

namespace atlas {

inline i64 weyl_order_cap() {
  if (const char* env = std::getenv("BRANE_ATLAS_ORDER_CAP")) {
    i64 cap = std::atoll(env);
    if (cap > 0) return cap;
  }
  return 10'000'000;
}

/// Finite reflection group acting on the cocharacter lattice, enumerated as
/// integer matrices in a deterministic order (breadth-first layer, then
/// lexicographic entry order).  Index 0 is the identity.
class WeylGroup {
 public:
  std::vector<IntegerMatrix> elements;
  std::vector<std::string> words;       // reduced words in the generators
  std::vector<int> generators;          // element indices of the simple reflections

  int order() const { return static_cast<int>(elements.size()); }

  int index_of(const IntegerMatrix& m) const {
    auto it = index_.find(m.entries());
    if (it == index_.end()) throw domain_error("matrix is not a Weyl group element");
    return it->second;
  }

  bool contains(const IntegerMatrix& m) const { return index_.count(m.entries()) > 0; }

  int mul(int a, int b) const { return index_of(elements[a] * elements[b]); }

  int inverse(int a) const { return inverse_[a]; }

  int element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  static WeylGroup generate(const RootDatum& d) {
    WeylGroup w;
    const i64 cap = weyl_order_cap();
    std::vector<IntegerMatrix> gens;
    for (int i = 0; i < d.num_simple(); ++i) gens.push_back(d.simple_reflection(i));

    w.push(IntegerMatrix::identity(d.s), "e");
    std::vector<int> layer = {0};
    while (!layer.empty()) {
      // collect the next layer, then sort it for a stable ordering
      std::vector<std::pair<IntegerMatrix, std::string>> fresh;
      for (int idx : layer) {
        for (size_t g = 0; g < gens.size(); ++g) {
          IntegerMatrix m = gens[g] * w.elements[idx];
          if (w.index_.count(m.entries())) continue;
          bool seen = false;
          for (const auto& [fm, fw] : fresh)
            if (fm == m) {
              seen = true;
              break;
            }
          if (seen) continue;
          std::string word = "s" + std::to_string(g + 1);
          if (w.words[idx] != "e") word += "*" + w.words[idx];
          fresh.emplace_back(m, word);
        }
      }
      std::sort(fresh.begin(), fresh.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      layer.clear();
      for (auto& [m, word] : fresh) {
        if (static_cast<i64>(w.elements.size()) >= cap)
          throw domain_error(
              "Weyl enumeration cap exceeded (raise BRANE_ATLAS_ORDER_CAP or use a "
              "permutation representation)");
        layer.push_back(w.push(std::move(m), std::move(word)));
      }
    }
    for (size_t g = 0; g < gens.size(); ++g) w.generators.push_back(w.index_of(gens[g]));
    w.inverse_.resize(w.order());
    for (int i = 0; i < w.order(); ++i) {
      bool set = false;
      for (int j = 0; j < w.order(); ++j)
        if ((w.elements[i] * w.elements[j]).is_identity()) {
          w.inverse_[i] = j;
          set = true;
          break;
        }
      if (!set) throw domain_error("element without inverse");
    }
    return w;
  }

 private:
  std::map<std::vector<i64>, int> index_;
  std::vector<int> inverse_;

  int push(IntegerMatrix m, std::string word) {
    int idx = static_cast<int>(elements.size());
    index_[m.entries()] = idx;
    elements.push_back(std::move(m));
    words.push_back(std::move(word));
    return idx;
  }
};

/// An automorphism of W given as a permutation table over element indices.
using WeylAutomorphism = std::vector<int>;

inline WeylAutomorphism identity_automorphism(const WeylGroup& w) {
  WeylAutomorphism a(w.order());
  for (int i = 0; i < w.order(); ++i) a[i] = i;
  return a;
}

/// omega' * omega * sigma(omega')^{-1}
inline int twisted_ad(const WeylGroup& w, const WeylAutomorphism& sigma, int g, int omega) {
  return w.mul(w.mul(g, omega), w.inverse(sigma[g]));
}

/// Orbit of the twisted adjoint action, with its gamma value
/// omega * sigma(omega) recorded for the representative.
struct TwistedClass {
  int representative = 0;       // smallest element index in the class
  std::vector<int> members;     // sorted element indices
  int gamma = 0;                // representative * sigma(representative)
};

inline std::vector<TwistedClass> twisted_classes(const WeylGroup& w,
                                                 const WeylAutomorphism& sigma) {
  if (static_cast<int>(sigma.size()) != w.order())
    throw domain_error("automorphism table size mismatch");
  std::vector<int> cls(w.order(), -1);
  std::vector<TwistedClass> out;
  for (int start = 0; start < w.order(); ++start) {
    if (cls[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> orbit = {start};
    cls[start] = id;
    for (size_t q = 0; q < orbit.size(); ++q) {
      for (int g = 0; g < w.order(); ++g) {
        int img = twisted_ad(w, sigma, g, orbit[q]);
        if (cls[img] < 0) {
          cls[img] = id;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    TwistedClass tc;
    tc.representative = orbit.front();
    tc.members = std::move(orbit);
    tc.gamma = w.mul(tc.representative, sigma[tc.representative]);
    out.push_back(std::move(tc));
  }
  return out;
}

inline std::vector<TwistedClass> ordinary_classes(const WeylGroup& w) {
  return twisted_classes(w, identity_automorphism(w));
}

/// Upsilon_sigma: the gamma values omega*sigma(omega) grouped into ordinary
/// conjugacy classes, together with the map delta from twisted classes.
struct UpsilonData {
  std::vector<TwistedClass> twisted;        // W /_sigma W
  std::vector<TwistedClass> ordinary;       // all ordinary classes of W
  std::vector<int> gamma_class_ids;         // distinct ordinary-class ids hit, sorted
  std::vector<int> delta;                   // twisted class -> ordinary class id
};

inline UpsilonData upsilon(const WeylGroup& w, const WeylAutomorphism& sigma) {
  UpsilonData u;
  u.twisted = twisted_classes(w, sigma);
  u.ordinary = ordinary_classes(w);
  std::vector<int> which_class(w.order());
  for (size_t c = 0; c < u.ordinary.size(); ++c)
    for (int m : u.ordinary[c].members) which_class[m] = static_cast<int>(c);
  for (const TwistedClass& tc : u.twisted) {
    int gcls = which_class[tc.gamma];
    u.delta.push_back(gcls);
    // delta is well defined on the class; verified cheaply here
    for (int m : tc.members) {
      int gm = w.mul(m, sigma[m]);
      if (which_class[gm] != gcls)
        throw domain_error("gamma class is not constant on a twisted class");
    }
    if (std::find(u.gamma_class_ids.begin(), u.gamma_class_ids.end(), gcls) ==
        u.gamma_class_ids.end())
      u.gamma_class_ids.push_back(gcls);
  }
  std::sort(u.gamma_class_ids.begin(), u.gamma_class_ids.end());
  return u;
}

/// Shifted cocycles {omega : omega sigma(omega) = gamma} partitioned by the
/// coboundary relation.  For gamma = e this is nonabelian H^1(sigma, W).
inline std::vector<TwistedClass> shifted_h1(const WeylGroup& w, const WeylAutomorphism& sigma,
                                            int gamma) {
  std::vector<TwistedClass> all = twisted_classes(w, sigma);
  std::vector<int> cls(w.order());
  for (size_t c = 0; c < all.size(); ++c)
    for (int m : all[c].members) cls[m] = static_cast<int>(c);
  std::map<int, std::vector<int>> by_class;
  for (int omega = 0; omega < w.order(); ++omega)
    if (w.mul(omega, sigma[omega]) == gamma) by_class[cls[omega]].push_back(omega);
  std::vector<TwistedClass> out;
  for (auto& [cid, members] : by_class) {
    TwistedClass tc;
    std::sort(members.begin(), members.end());
    tc.representative = members.front();
    tc.members = std::move(members);
    tc.gamma = gamma;
    out.push_back(std::move(tc));
  }
  return out;
}

/// N_W(T^{omega sigma}) realized as the stabilizer of omega under the twisted
/// adjoint action.
inline std::vector<int> normalizer_fixed_torus(const WeylGroup& w, const WeylAutomorphism& sigma,
                                               int omega) {
  std::vector<int> out;
  for (int g = 0; g < w.order(); ++g)
    if (twisted_ad(w, sigma, g, omega) == omega) out.push_back(g);
  return out;
}

inline int omega_z(const RootDatum& d, const WeylGroup& w, const CentralElement2& z) {
  return omega_z(d, z, w.elements);
}

}  // namespace atlas
