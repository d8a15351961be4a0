#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "atlas/moduli.hpp"

namespace atlas {

enum class ReportFormat { table, structured };

inline std::string dim_string(const FixedSetSummary& f) {
  std::string unit = f.unit == Unit::complex_dim ? "complex" : "real";
  return std::to_string(f.dim) + " (" + unit + ")";
}

inline std::string solvable_string(Solvable s) {
  switch (s) {
    case Solvable::yes: return "yes";
    case Solvable::no: return "no";
    case Solvable::conditional: return "conditional";
  }
  return "?";
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += std::to_string(v[i]) + (i + 1 < v.size() ? "," : "");
  return s.empty() ? "-" : s;
}

inline void pad_row(std::ostringstream& os, const std::vector<std::string>& cells,
                    const std::vector<size_t>& widths) {
  for (size_t i = 0; i < cells.size(); ++i) {
    os << std::left << std::setw(static_cast<int>(widths[i]) + 2) << cells[i];
  }
  os << "\n";
}

}  // namespace detail

inline std::string emit_report(const ModuliReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::structured) {
    auto kv = [&os](const std::string& k, const std::string& v) { os << k << " = " << v << "\n"; };
    kv("query.group", r.group_label);
    kv("query.sigma", r.sigma_label);
    kv("query.epsilon", std::string(1, r.epsilon));
    kv("query.curve", r.curve_name);
    kv("query.region", region_name(r.region));
    kv("query.sign", r.higgs_sign > 0 ? "+" : "-");
    kv("query.side", side_name(r.side));
    kv("query.twist", r.twist_trivial ? "trivial" : "nontrivial");
    kv("report.brane", r.brane);
    kv("report.weyl_order", std::to_string(r.weyl_order));
    kv("report.twisted_classes", std::to_string(r.twisted_class_count));
    kv("report.component_count", std::to_string(r.components.size()));
    kv("report.empty_classes", std::to_string(r.empty_class_reps.size()));
    for (size_t i = 0; i < r.components.size(); ++i) {
      const FixedLocusComponent& c = r.components[i];
      std::string p = "component." + std::to_string(i);
      kv(p + ".omega", c.omega_word);
      kv(p + ".class_size", std::to_string(c.class_size));
      kv(p + ".gamma", c.gamma_word);
      kv(p + ".gamma_class", std::to_string(c.gamma_class));
      kv(p + ".gamma_order", std::to_string(c.gamma_order));
      kv(p + ".dim", std::to_string(c.fixed.dim));
      kv(p + ".dim_unit", c.fixed.unit == Unit::complex_dim ? "complex" : "real");
      kv(p + ".pi0", std::to_string(c.fixed.components));
      kv(p + ".nonempty", solvable_string(c.fixed.nonempty));
      kv(p + ".normalizer", std::to_string(c.normalizer_order));
      kv(p + ".maximal", c.maximal ? "yes" : "no");
      kv(p + ".brane", c.brane);
      kv(p + ".singular", c.in_singular_locus ? "yes" : "no");
      kv(p + ".paper_dim", c.paper.value.str());
      kv(p + ".paper_dim_integral", c.paper.integral ? "yes" : "no");
      kv(p + ".paper_matches", c.paper_matches ? "yes" : "no");
      if (c.postquotient_orbits)
        kv(p + ".postquotient_orbits", std::to_string(*c.postquotient_orbits));
      for (size_t k = 0; k < c.fixed.constraints.size(); ++k)
        kv(p + ".constraint." + std::to_string(k), c.fixed.constraints[k]);
    }
    for (size_t i = 0; i < r.gamma_slices.size(); ++i) {
      std::string p = "gamma_slice." + std::to_string(i);
      kv(p + ".gamma_class", std::to_string(r.gamma_slices[i].first));
      kv(p + ".components", detail::join_ints(r.gamma_slices[i].second));
    }
    for (size_t i = 0; i < r.pseudo_real.size(); ++i) {
      const PseudoRealSlice& s = r.pseudo_real[i];
      std::string p = "pseudoreal." + std::to_string(i);
      kv(p + ".z", s.z.str());
      kv(p + ".omega_z", s.omega_z_word);
      kv(p + ".components", detail::join_ints(s.component_indices));
      if (!s.diagnostic.empty()) kv(p + ".diagnostic", s.diagnostic);
    }
    return os.str();
  }

  os << "query: group=" << r.group_label << " sigma=" << r.sigma_label << " epsilon=" << r.epsilon
     << " curve=" << r.curve_name << " region=" << region_name(r.region)
     << " sign=" << (r.higgs_sign > 0 ? "+" : "-") << " side=" << side_name(r.side)
     << " twist=" << (r.twist_trivial ? "trivial" : "nontrivial") << "\n";
  os << "brane " << r.brane << "   |W| = " << r.weyl_order
     << "   twisted classes: " << r.twisted_class_count << "\n";
  if (r.components.empty()) {
    os << "no fixed components\n";
    return os.str();
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"class", "omega", "gamma", "|class|", "|N_W|", "dim", "pi0", "maximal", "brane",
                  "singular", "paper-dim"});
  for (const FixedLocusComponent& c : r.components) {
    std::string paper = c.paper.value.str();
    paper += c.paper_matches ? " (ok)" : (c.paper.integral ? " (differs)" : " (non-integral)");
    rows.push_back({std::to_string(c.class_id), c.omega_word, c.gamma_word,
                    std::to_string(c.class_size), std::to_string(c.normalizer_order),
                    dim_string(c.fixed), std::to_string(c.fixed.components),
                    c.maximal ? "yes" : "no", c.brane, c.in_singular_locus ? "yes" : "no", paper});
  }
  std::vector<size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  for (const auto& row : rows) detail::pad_row(os, row, widths);
  for (const FixedLocusComponent& c : r.components)
    for (const auto& cstr : c.fixed.constraints)
      os << "constraint (class " << c.class_id << "): " << cstr << "\n";
  if (!r.empty_class_reps.empty())
    os << "empty classes (fixed set vanishes): " << detail::join_ints(r.empty_class_reps) << "\n";
  for (const PseudoRealSlice& s : r.pseudo_real) {
    os << "pseudo-real z=" << s.z.str() << "  omega_z=" << s.omega_z_word
       << "  components: " << detail::join_ints(s.component_indices);
    if (!s.diagnostic.empty()) os << "  [" << s.diagnostic << "]";
    os << "\n";
  }
  return os.str();
}

/// Parse a structured report back into key/value pairs (the round-trip
/// counterpart of the structured emitter).
inline std::vector<std::pair<std::string, std::string>> parse_structured(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto eq = line.find(" = ");
    if (eq == std::string::npos) throw parse_error("bad structured line: " + line);
    out.emplace_back(line.substr(0, eq), line.substr(eq + 3));
  }
  return out;
}

inline std::string emit_structured_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << " = " << v << "\n";
  return os.str();
}

}  // namespace atlas
