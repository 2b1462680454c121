// plumbtau: command-line front end.
//
// Exit codes: 0 success, 2 malformed input, 3 mathematical precondition
// failure, 4 reference-table mismatch.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plumbtau/catalog.hpp"
#include "plumbtau/io.hpp"
#include "tables.hpp"

#ifndef PLUMBTAU_GOLDEN_DIR
#define PLUMBTAU_GOLDEN_DIR "data/golden"
#endif

namespace {

using namespace plumbtau;
using io::json;

constexpr int kExitSchema = 2;
constexpr int kExitMath = 3;
constexpr int kExitMismatch = 4;

struct Options {
  std::string input;
  std::string format = "json";
  std::string spinc;
  std::string what;
  std::string check;
  std::string fixtures = PLUMBTAU_GOLDEN_DIR;
  std::vector<std::string> tables;
  long long strands = 1, writhe = 0, components = 1;
};

json load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("input is not valid JSON: ") + e.what());
  }
}

void emit(const json& out, const std::string& format) {
  if (format == "table") {
    if (out.contains("classes") && out["classes"].is_array() && !out["classes"].empty()) {
      std::cout << io::render_table(out["classes"]);
    } else if (out.contains("rows") && out["rows"].is_array() && !out["rows"].empty()) {
      std::cout << io::render_table(out["rows"]);
    } else {
      for (auto it = out.begin(); it != out.end(); ++it)
        std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
    return;
  }
  std::cout << out.dump(1) << "\n";
}

struct LatticeDoc {
  PlumbingTree tree;
  PlumbingLattice lattice;
};

LatticeDoc lattice_of(const json& doc) {
  PlumbingTree tree = io::read_plumbing(io::field(doc, "plumbing", "input"));
  return {tree, PlumbingLattice(tree)};
}

io::Selector selector_of(const json& doc, const Options& o, const std::string& fallback) {
  if (!o.spinc.empty()) return io::parse_selector_text(o.spinc);
  if (doc.contains("spinc")) return io::read_selector(doc["spinc"]);
  return fallback;
}

int cmd_tau(const Options& o) {
  json doc = load(o.input);
  auto [tree, lat] = lattice_of(doc);
  LeafLink link = io::read_leaf_link(io::field(doc, "leaf_link", "input"), tree);
  auto subset = io::resolve(lat, selector_of(doc, o, "all"));
  emit(io::tau_table_json(lat, link, subset), o.format);
  return 0;
}

int cmd_dinv(const Options& o) {
  json doc = load(o.input);
  emit(io::dinv_table_json(lattice_of(doc).lattice), o.format);
  return 0;
}

int cmd_spinc(const Options& o) {
  json doc = load(o.input);
  emit(io::spinc_table_json(lattice_of(doc).lattice), o.format);
  return 0;
}

int cmd_surgery(const Options& o) {
  json doc = load(o.input);
  const json& s = io::field(doc, "surgery", "input");
  json out{{"what", o.what}};
  if (o.what == "tau-curve") {
    out["value"] = io::to_json(tau_from_curve(io::read_curve(io::field(s, "curve", "surgery"), "surgery.curve")));
    emit(out, o.format);
    return 0;
  }
  SurgeryPresentation p = io::read_surgery(s);
  if (o.what == "self-int") {
    out["value"] = io::to_json(self_intersection(p));
  } else if (o.what == "chern") {
    out["value"] = io::to_json(chern_evaluation(p));
  } else if (o.what == "sl") {
    Integer sl0;
    if (s.contains("sl_T0")) sl0 = io::read_integer(s["sl_T0"], "surgery.sl_T0");
    else if (s.contains("braid")) sl0 = self_linking_braid(io::read_braid(s["braid"], "surgery.braid"));
    else io::schema_fail("surgery.sl_T0", "missing (give sl_T0 or braid)");
    out["sl_T0"] = sl0.str();
    out["value"] = io::to_json(self_linking_shift(sl0, p));
  } else {
    throw SchemaError("--what: expected self-int, chern, sl or tau-curve");
  }
  emit(out, o.format);
  return 0;
}

int cmd_tau_qp(const Options& o) {
  BraidDatum b{o.strands, o.writhe, o.components};
  emit({{"self_linking", self_linking_braid(b).str()}, {"tau", io::to_json(tau_qp_braid(b))}}, o.format);
  return 0;
}

int cmd_floer(const Options& o) {
  json doc = load(o.input);
  auto [c, f] = io::read_floer(io::field(doc, "floer_complex", "input"));
  json out{{"what", o.what}};
  if (o.what == "verify") {
    auto r = verify_axioms(c);
    out["ok"] = r.ok();
    out["violations"] = r.violations;
  } else if (o.what == "d") {
    out["value"] = correction_term(c);
  } else if (o.what == "tau-top") {
    out["value"] = tau_top(c, f);
  } else if (o.what == "tau-bot") {
    out["value"] = tau_bot(c, f);
  } else if (o.what == "homology") {
    auto h = homology_minus(c);
    json towers = json::array(), torsion = json::array();
    for (const auto& t : h.towers) towers.push_back(t.grading);
    for (const auto& t : h.torsion) torsion.push_back({{"grading", t.grading}, {"power", t.power}});
    out["towers"] = towers;
    out["torsion"] = torsion;
  } else {
    throw SchemaError("--what: expected d, tau-top, tau-bot, verify or homology");
  }
  emit(out, o.format);
  return 0;
}

// Tau at the contact class: explicit "tau" field, or the lattice value.
Rational contact_tau(const json& doc, const std::optional<LatticeDoc>& ld, const std::optional<LeafLink>& link) {
  if (doc.contains("tau")) return io::read_rational(doc["tau"], "tau");
  if (!ld || !link) io::schema_fail("input.tau", "missing (give tau, or plumbing + leaf_link + contact_class)");
  auto cls = ld->lattice.class_of(io::read_int_vector(io::field(doc, "contact_class", "input"), "contact_class"));
  return tau(ld->lattice, *link, cls).value;
}

int cmd_obstruct(const Options& o) {
  json doc = load(o.input);
  std::optional<LatticeDoc> ld;
  std::optional<LeafLink> link;
  if (doc.contains("plumbing")) {
    ld.emplace(lattice_of(doc));
    if (doc.contains("leaf_link")) link = io::read_leaf_link(doc["leaf_link"], ld->tree);
  }
  auto need_lattice = [&] {
    if (!ld) io::schema_fail("input.plumbing", "missing");
    if (!link) io::schema_fail("input.leaf_link", "missing");
  };
  auto ell = [&]() -> Integer {
    if (doc.contains("ell")) return io::read_integer(doc["ell"], "ell");
    if (link) return link->components();
    io::schema_fail("input.ell", "missing");
  };
  auto contact_class = [&] {
    return ld->lattice.class_of(io::read_int_vector(io::field(doc, "contact_class", "input"), "contact_class"));
  };
  Verdict v;
  if (o.check == "slice-bennequin") {
    v = slice_bennequin_check(io::read_rational(io::field(doc, "sl", "input"), "sl"), contact_tau(doc, ld, link), ell());
  } else if (o.check == "qhb4-filling") {
    std::vector<Rational> sls;
    if (doc.contains("sl_values")) {
      for (std::size_t i = 0; i < doc["sl_values"].size(); ++i)
        sls.push_back(io::read_rational(doc["sl_values"][i], "sl_values[" + std::to_string(i) + "]"));
    }
    v = qhb4_filling_obstruction(contact_tau(doc, ld, link), ell(), sls);
  } else if (o.check == "integrality") {
    v = integrality_obstruction(contact_tau(doc, ld, link));
  } else if (o.check == "metaboliser" || o.check == "conjugation") {
    need_lattice();
    auto subset = io::resolve(ld->lattice, selector_of(doc, o, "d0"));
    auto profile = make_profile(ld->lattice, *link, subset);
    v = o.check == "metaboliser" ? metaboliser_obstruction(ld->lattice, profile, contact_class())
                                 : conjugation_obstruction(ld->lattice, profile, contact_class());
  } else if (o.check == "pl-genus" || o.check == "concordance") {
    need_lattice();
    auto subset = io::resolve(ld->lattice, selector_of(doc, o, "d0"));
    auto profile = make_profile(ld->lattice, *link, subset);
    if (o.check == "concordance") {
      v = concordance_obstruction(profile, subset);
    } else {
      auto b = pl_genus_lower_bound(profile, subset);
      emit({{"check", "pl-genus"}, {"bound", b.ceiling.str()}, {"raw", io::to_json(b.raw)}}, o.format);
      return 0;
    }
  } else {
    throw SchemaError("--check: unknown check '" + o.check + "'");
  }
  emit(io::to_json(v), o.format);
  return 0;
}

int cmd_tables(const Options& o) {
  std::vector<std::string> names = o.tables;
  if (names.empty()) names = {"m3", "nk", "l2d", "m3d", "eq72"};
  bool all_match = true;
  json report = json::object();
  for (const auto& name : names) {
    json computed = tables::build(name);
    std::string path = o.fixtures + "/" + name + ".json";
    std::ifstream in(path);
    bool match = false;
    if (in) {
      json expected = json::parse(in, nullptr, false);
      match = !expected.is_discarded() && expected == computed;
    }
    all_match = all_match && match;
    if (o.format == "table") {
      std::cout << "== " << name << (match ? " (matches " : " (MISMATCH against ") << path << ")\n";
      if (computed.contains("rows")) std::cout << io::render_table(computed["rows"]);
      else std::cout << computed.dump() << "\n";
    } else {
      report[name] = {{"match", match}, {"table", computed}};
    }
  }
  if (o.format != "table") std::cout << report.dump(1) << "\n";
  return all_match ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tau-invariants, correction terms and obstructions for links in plumbed three-manifolds"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto input = [&](CLI::App* sub) { sub->add_option("--input,-i", o.input, "JSON input file, or - for stdin")->required(); };

  auto* tau_cmd = app.add_subcommand("tau", "Per-class tau table of a leaf link");
  input(tau_cmd);
  tau_cmd->add_option("--spinc", o.spinc, "all, d0, or vectors like \"-3,0;3,0\"");

  auto* dinv_cmd = app.add_subcommand("dinv", "Correction terms of every Spin^c structure");
  input(dinv_cmd);

  auto* spinc_cmd = app.add_subcommand("spinc", "Spin^c classes, conjugation and |H_1|");
  input(spinc_cmd);

  auto* surgery_cmd = app.add_subcommand("surgery", "Linking-matrix quantities of a surgery presentation");
  input(surgery_cmd);
  surgery_cmd->add_option("--what", o.what, "self-int, chern, sl or tau-curve")->required();

  auto* qp_cmd = app.add_subcommand("tau-qp", "Tau of a quasi-positive braid closure");
  qp_cmd->add_option("--strands", o.strands)->required();
  qp_cmd->add_option("--writhe", o.writhe)->required();
  qp_cmd->add_option("--components", o.components)->required();

  auto* floer_cmd = app.add_subcommand("floer", "Invariants of a filtered F2[U] complex");
  input(floer_cmd);
  floer_cmd->add_option("--what", o.what, "d, tau-top, tau-bot, verify or homology")->required();

  auto* obstruct_cmd = app.add_subcommand("obstruct", "Run an obstruction check");
  input(obstruct_cmd);
  obstruct_cmd->add_option("--check", o.check,
                           "slice-bennequin, qhb4-filling, metaboliser, conjugation, pl-genus, integrality, concordance")
      ->required();
  obstruct_cmd->add_option("--spinc", o.spinc, "Spin^c subset for the profile (default d0)");

  auto* tables_cmd = app.add_subcommand("paper-examples", "Recompute the reference tables and diff against fixtures");
  tables_cmd->add_option("tables", o.tables, "Any of m3, nk, l2d, m3d, eq72 (default: all)")
      ->check(CLI::IsMember({"m3", "nk", "l2d", "m3d", "eq72"}));
  tables_cmd->add_option("--fixtures", o.fixtures, "Directory holding the reference JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitSchema;
  }

  try {
    if (*tau_cmd) return cmd_tau(o);
    if (*dinv_cmd) return cmd_dinv(o);
    if (*spinc_cmd) return cmd_spinc(o);
    if (*surgery_cmd) return cmd_surgery(o);
    if (*qp_cmd) return cmd_tau_qp(o);
    if (*floer_cmd) return cmd_floer(o);
    if (*obstruct_cmd) return cmd_obstruct(o);
    if (*tables_cmd) return cmd_tables(o);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitSchema;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return 0;
}
