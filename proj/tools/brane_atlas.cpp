// brane-atlas: classify fixed loci of involutions on Higgs-bundle and
// representation moduli over an elliptic curve, by Weyl-group twisted
// conjugacy and exact integer-matrix computations on tori.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "atlas/moduli.hpp"
#include "atlas/query.hpp"
#include "atlas/report.hpp"
#include "atlas/tables_check.hpp"

namespace {

using namespace atlas;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw atlas::parse_error("cannot open query file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct QueryFlags {
  std::string file;
  std::string group;
  std::string sigma;
  std::string epsilon;
  std::string curve;
  std::string sign;
  std::string side;
  std::string z;
  std::string format;
};

void add_query_flags(CLI::App* cmd, QueryFlags& f) {
  cmd->add_option("--query", f.file, "query file (key = value lines)");
  cmd->add_option("--group", f.group, "group type string, e.g. A1.sc, GL2, A1xA1+Z1");
  cmd->add_option("--sigma", f.sigma, "involution alias (id|split|compact|flip|swap) or perm:i1,i2,...");
  cmd->add_option("--epsilon", f.epsilon, "+ (holomorphic) or - (anti-holomorphic)");
  cmd->add_option("--curve", f.curve, "curve involution REGION:a[:t], e.g. A:-1, C:+gamma:t");
  cmd->add_option("--sign", f.sign, "Higgs-field sign + or -");
  cmd->add_option("--side", f.side, "higgs or representation");
  cmd->add_option("--format", f.format, "table or structured");
}

QueryFile merge_flags(const QueryFlags& f) {
  QueryFile qf;
  if (!f.file.empty()) qf = parse_query_file(read_file(f.file));
  if (!f.group.empty()) qf.group = f.group;
  if (!f.sigma.empty()) qf.sigma = f.sigma;
  if (!f.epsilon.empty()) qf.epsilon = f.epsilon;
  if (!f.curve.empty()) qf.curve = f.curve;
  if (!f.sign.empty()) qf.sign = f.sign;
  if (!f.side.empty()) qf.side = f.side;
  if (!f.z.empty()) qf.z = f.z;
  if (!f.format.empty()) qf.format = f.format;
  return qf;
}

int run(int argc, char** argv) {
  CLI::App app{
      "brane-atlas: fixed loci of involutions on moduli of G-Higgs bundles over an elliptic "
      "curve.\nEnvironment: BRANE_ATLAS_ORDER_CAP overrides the Weyl enumeration cap."};
  app.require_subcommand(1);

  // weyl
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group order and conjugacy data");
  std::string weyl_group, weyl_sigma = "id", weyl_eps = "+";
  weyl_cmd->add_option("--group", weyl_group, "group type string")->required();
  weyl_cmd->add_option("--sigma", weyl_sigma, "involution alias or perm:...");
  weyl_cmd->add_option("--epsilon", weyl_eps, "+ or -");

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "twisted conjugacy classes W /_sigma W");
  std::string cls_group, cls_sigma = "id", cls_eps = "+";
  classes_cmd->add_option("--group", cls_group)->required();
  classes_cmd->add_option("--sigma", cls_sigma);
  classes_cmd->add_option("--epsilon", cls_eps);

  // cohomology
  auto* coh_cmd = app.add_subcommand("cohomology", "H^1(sigma, W) and shifted variants");
  std::string coh_group, coh_sigma = "id", coh_eps = "+";
  coh_cmd->add_option("--group", coh_group)->required();
  coh_cmd->add_option("--sigma", coh_sigma);
  coh_cmd->add_option("--epsilon", coh_eps);

  // elliptic
  auto* ell_cmd = app.add_subcommand("elliptic", "curve involution catalog for a region");
  std::string ell_region, ell_eps = "-";
  ell_cmd->add_option("--region", ell_region, "H, A, B, C, D or E")->required();
  ell_cmd->add_option("--epsilon", ell_eps, "+ or -");

  // fixed-locus
  auto* fl_cmd = app.add_subcommand("fixed-locus", "decompose the fixed locus of a query");
  QueryFlags fl_flags;
  add_query_flags(fl_cmd, fl_flags);

  // pseudo-real
  auto* pr_cmd = app.add_subcommand("pseudo-real", "pseudo-real moduli slice for a central z");
  QueryFlags pr_flags;
  add_query_flags(pr_cmd, pr_flags);
  pr_cmd->add_option("--z", pr_flags.z, "central element: 0, nontrivial, or coordinates");

  // check-tables
  auto* chk_cmd = app.add_subcommand("check-tables", "validate the embedded curve catalogs");

  CLI11_PARSE(app, argc, argv);

  if (*weyl_cmd) {
    RootDatum d = build_datum(weyl_group);
    WeylGroup w = WeylGroup::generate(d);
    std::cout << "group " << d.label << "  rank " << d.s << "\n";
    std::cout << "|W| = " << w.order() << "\n";
    std::cout << "conjugacy classes: " << ordinary_classes(w).size() << "\n";
    if (weyl_sigma != "id") {
      LatticeInvolution s = parse_sigma(d, weyl_sigma, parse_epsilon(weyl_eps));
      auto tw = twisted_classes(w, induced_weyl_automorphism(s, w));
      std::cout << "twisted classes (sigma=" << weyl_sigma << "): " << tw.size() << "\n";
    }
    return 0;
  }
  if (*classes_cmd) {
    RootDatum d = build_datum(cls_group);
    WeylGroup w = WeylGroup::generate(d);
    LatticeInvolution s = parse_sigma(d, cls_sigma, parse_epsilon(cls_eps));
    WeylAutomorphism sw = induced_weyl_automorphism(s, w);
    UpsilonData u = upsilon(w, sw);
    std::cout << "group " << d.label << "  |W| = " << w.order() << "  sigma = " << cls_sigma
              << "\n";
    std::cout << "twisted classes: " << u.twisted.size() << "\n";
    for (size_t i = 0; i < u.twisted.size(); ++i) {
      const TwistedClass& tc = u.twisted[i];
      std::cout << "class " << i << ": rep " << w.words[tc.representative] << "  size "
                << tc.members.size() << "  gamma " << w.words[tc.gamma] << "  |N_W| "
                << normalizer_fixed_torus(w, sw, tc.representative).size() << "  delta-class "
                << u.delta[i] << "\n";
    }
    std::cout << "Upsilon classes: " << u.gamma_class_ids.size() << "\n";
    return 0;
  }
  if (*coh_cmd) {
    RootDatum d = build_datum(coh_group);
    WeylGroup w = WeylGroup::generate(d);
    LatticeInvolution s = parse_sigma(d, coh_sigma, parse_epsilon(coh_eps));
    WeylAutomorphism sw = induced_weyl_automorphism(s, w);
    UpsilonData u = upsilon(w, sw);
    auto h1 = shifted_h1(w, sw, 0);
    std::cout << "group " << d.label << "  sigma = " << coh_sigma << "\n";
    std::cout << "H^1(sigma, W) classes: " << h1.size() << "\n";
    for (const auto& c : h1)
      std::cout << "  [" << w.words[c.representative] << "]  cocycles " << c.members.size() << "\n";
    std::cout << "Upsilon_sigma size: " << u.gamma_class_ids.size() << "\n";
    for (int gcls : u.gamma_class_ids) {
      int gamma = u.ordinary[gcls].representative;
      auto hg = shifted_h1(w, sw, gamma);
      std::cout << "  gamma " << w.words[gamma] << ": H^1_gamma classes " << hg.size() << "\n";
    }
    return 0;
  }
  if (*ell_cmd) {
    Region region = parse_region(ell_region);
    Epsilon eps = parse_epsilon(ell_eps);
    std::cout << "region " << region_name(region) << ": " << region_constraint(region) << "\n";
    for (const EllipticInvolution& inv : enumerate_involutions(region, eps)) {
      std::cout << inv.name();
      if (inv.translated) std::cout << "  [" << inv.translation_domain << "]";
      if (inv.topological_type)
        std::cout << "  type (" << inv.topological_type->first << ","
                  << inv.topological_type->second << ")";
      if (!inv.fixed_locus.empty()) std::cout << "  fixed " << inv.fixed_locus;
      if (!inv.quotient.empty()) std::cout << "  quotient " << inv.quotient;
      std::cout << "  pi1 " << pi1_matrix(inv).str();
      if (!inv.f_tabulated) std::cout << "  (no f catalog entry)";
      std::cout << "\n";
    }
    return 0;
  }
  if (*fl_cmd || *pr_cmd) {
    const QueryFlags& flags = *fl_cmd ? fl_flags : pr_flags;
    QueryFile qf = merge_flags(flags);
    InvolutionQuery q = query_from_file(qf);
    Side side = parse_side(qf.side);
    ModuliReport rep = fixed_locus_decomposition(q, side);
    if (*pr_cmd) {
      CentralElement2 z = parse_z(q.datum, q.sigma, qf.z);
      rep.pseudo_real.push_back(pseudo_real_moduli(q, rep, z));
    } else {
      attach_pseudo_real_slices(q, rep);
    }
    ReportFormat fmt = qf.format == "structured" ? ReportFormat::structured : ReportFormat::table;
    if (qf.format != "table" && qf.format != "structured" && !qf.format.empty())
      throw parse_error("format must be 'table' or 'structured'");
    std::cout << emit_report(rep, fmt);
    return 0;
  }
  if (*chk_cmd) {
    TablesCheckResult res = check_tables();
    std::cout << res.log;
    std::cout << (res.ok ? "check-tables: all validations passed\n"
                         : "check-tables: FAILURES detected\n");
    return res.ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const atlas::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const atlas::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const atlas::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
