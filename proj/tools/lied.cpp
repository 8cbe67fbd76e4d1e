// Command-line front end: verification suites and file-based workflows.
// Exit status 0 when every check passes, 1 on a failed check, 2 on bad input.

#include "lied/cobar.hpp"
#include "lied/instances.hpp"
#include "lied/io.hpp"
#include "lied/koszul.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

using namespace lied;

namespace {

constexpr int kMaxArityBound = 6;

struct Config {
  std::string format = "text";
  std::string report_path;
  int max_arity = 6;
  std::vector<std::string> inputs;
  std::string output;
  std::string kind;
};

struct Outcome {
  std::string command;
  Report checks;
  json extra = json::object();
};

int default_arity() {
  const char* env = std::getenv("LIED_MAX_ARITY");
  if (!env) return 6;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw std::invalid_argument("LIED_MAX_ARITY is not an integer");
  }
}

void tag(Report& r, const std::string& subject) {
  for (auto& c : r)
    if (c.subject.empty()) c.subject = subject;
}

int finish(const Outcome& o, const Config& cfg) {
  bool ok = all_ok(o.checks);
  json j = {{"schema", "lied/report/1"}, {"command", o.command}, {"ok", ok}, {"checks", to_json(o.checks)}};
  for (auto& [k, v] : o.extra.items()) j[k] = v;
  if (!cfg.report_path.empty()) write_json_file(cfg.report_path, j);
  if (cfg.format == "json") {
    std::cout << j.dump(1) << "\n";
  } else {
    for (auto& c : o.checks) {
      std::cout << (c.ok ? "ok    " : "FAIL  ") << c.label;
      if (!c.subject.empty()) std::cout << " [" << c.subject << "]";
      if (!c.ok && !c.detail.empty()) std::cout << "  " << c.detail;
      std::cout << "\n";
    }
    int bad = 0;
    for (auto& c : o.checks) bad += !c.ok;
    std::cout << o.command << ": " << o.checks.size() - bad << "/" << o.checks.size() << " checks passed\n";
  }
  return ok ? 0 : 1;
}

void need_output(const Config& cfg) {
  if (cfg.output.empty()) throw std::invalid_argument("missing -o <file>");
}

Outcome verify_operad(const Config& cfg) {
  Outcome o{"verify operad", {}, json::object()};
  Cooperad lied3 = build_lied3(), leib = build_leibk(5), lie = build_liek(5);
  Report r = check_cooperad(lied3);
  tag(r, "LieD[3]");
  append(o.checks, r);
  r = check_cooperad(leib);
  tag(r, "Leib^i(<=5)");
  append(o.checks, r);
  r = check_cooperad(lie);
  tag(r, "Lie^i(<=5)");
  append(o.checks, r);
  append(o.checks, check_cooperad_morphism(build_psi(lied3, lie), lied3, lie));
  append(o.checks, check_psi_homology(lied3, cfg.max_arity));
  return o;
}

Outcome verify_acyclicity_cmd(const Config& cfg) {
  Outcome o{"verify acyclicity", {}, json::object()};
  std::vector<AcyclicityRow> rows;
  o.checks = verify_acyclicity(build_lied3(), cfg.max_arity, 3, true, &rows);
  json table = json::array();
  for (auto& r : rows) {
    json torsion = json::array();
    for (auto& t : r.homology.torsion) torsion.push_back(to_string(t));
    table.push_back({{"arity", r.arity}, {"degree", r.degree}, {"rank", r.rank},
                     {"betti", r.homology.free_rank}, {"torsion", torsion}});
  }
  o.extra["homology"] = table;
  return o;
}

Outcome check_morphism_cmd(const Config& cfg) {
  WeakMorphism f = morphism_from_json(read_json_file(cfg.inputs.at(0)));
  Outcome o{"check morphism", {}, json::object()};
  Report r = check_structure(f.source);
  tag(r, "source");
  append(o.checks, r);
  r = check_structure(f.target);
  tag(r, "target");
  append(o.checks, r);
  append(o.checks, check_morphism(f));
  return o;
}

Outcome transfer_cmd(const Config& cfg) {
  need_output(cfg);
  WeakLie3Structure s = structure_from_json(read_json_file(cfg.inputs.at(0)));
  DeformationRetract r = retract_from_json(read_json_file(cfg.inputs.at(1)));
  Outcome o{"transfer", {}, json::object()};
  Report rr = r.check();
  tag(rr, "retract");
  append(o.checks, rr);
  rr = check_structure(s);
  tag(rr, "input");
  append(o.checks, rr);
  WeakMorphism i = build_inclusion(s, r);
  rr = check_structure(i.source);
  tag(rr, "transferred");
  append(o.checks, rr);
  rr = check_morphism(i);
  tag(rr, "inclusion");
  append(o.checks, rr);
  write_json_file(cfg.output, {{"structure", to_json(i.source)}, {"inclusion", to_json(i)}});
  return o;
}

Outcome skew_cmd(const Config& cfg) {
  WeakLie3Structure s = structure_from_json(read_json_file(cfg.inputs.at(0)));
  Outcome o{"skew", {}, json::object()};
  Report r = check_structure(s);
  tag(r, "input");
  append(o.checks, r);
  Lie3Structure t = skew_structure(s);
  append(o.checks, check_lie3(t));
  append(o.checks, check_phi_consistency(s));
  if (!cfg.output.empty()) write_json_file(cfg.output, to_json(t));
  return o;
}

Outcome defect_cmd(const Config& cfg) {
  WeakMorphism f = morphism_from_json(read_json_file(cfg.inputs.at(0)));
  WeakMorphism fp = morphism_from_json(read_json_file(cfg.inputs.at(1)));
  Outcome o{"defect", {}, json::object()};
  Report r = check_morphism(f);
  tag(r, "f");
  append(o.checks, r);
  r = check_morphism(fp);
  tag(r, "f'");
  append(o.checks, r);
  FunctorialityDefect d = functoriality_defect(fp, f);
  append(o.checks, d.report);
  o.extra["defect"] = to_json(d.defect);
  o.extra["witness"] = to_json(d.witness);
  return o;
}

Outcome clwx_cmd(const Config& cfg, bool convert) {
  if (convert) need_output(cfg);
  CLWXData x = clwx_from_json(read_json_file(cfg.inputs.at(0)));
  Outcome o{convert ? "clwx to-wlie3" : "clwx check", check_clwx(x), json::object()};
  if (!all_ok(o.checks)) return o;
  WeakLie3Structure s = clwx_to_wlie3(x);
  Report r = check_structure(s);
  tag(r, "induced");
  append(o.checks, r);
  append(o.checks, check_corollary(x));
  if (convert) write_json_file(cfg.output, to_json(s));
  return o;
}

// Sample inputs for the file workflows.
int example_cmd(const Config& cfg) {
  need_output(cfg);
  Rng rng(7);
  json j;
  if (cfg.kind == "zero") {
    j = to_json(WeakLie3Structure::zero(share(Complex3::make({1, 1, 1}))));
  } else if (cfg.kind == "sl2") {
    j = to_json(strict_lie({3, 0, 0, 0, 0, 0}));
  } else if (cfg.kind == "structure" || cfg.kind == "retract") {
    HttInstance in = random_htt_instance(rng, false, 3);
    j = cfg.kind == "structure" ? to_json(in.structure) : to_json(in.retract);
  } else if (cfg.kind == "morphism" || cfg.kind == "morphism2") {
    WeakLie3Structure top = random_weak_structure(rng, 3);
    WeakMorphism fp = random_pull_back(rng, top);
    WeakMorphism f = random_pull_back(rng, fp.source);
    j = cfg.kind == "morphism" ? to_json(f) : to_json(fp);
  } else if (cfg.kind == "clwx") {
    j = to_json(clwx_family({1, 0, 1, 0, 0}));
  } else if (cfg.kind == "clwx-anchored") {
    j = to_json(clwx_family({0, 4, 0, 1, 1}));
  } else {
    throw std::invalid_argument("unknown example kind " + cfg.kind);
  }
  write_json_file(cfg.output, j);
  std::cout << "wrote " << cfg.output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Exact verification of weak Lie 3-algebras and the LieD[3] cooperad"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--report", cfg.report_path, "also write the JSON report to this file");

  auto* verify = app.add_subcommand("verify", "built-in verification suites")->require_subcommand(1);
  auto* v_operad = verify->add_subcommand("operad", "cooperads, psi and H(psi)");
  auto* v_acyc = verify->add_subcommand("acyclicity", "homology of the twisted composite product");
  auto* v_phi = verify->add_subcommand("phi", "Phi is a right-inverse chain map");
  auto* v_eq = verify->add_subcommand("equations", "equation tables against the Maurer-Cartan expansion");
  for (auto* s : {v_operad, v_acyc})
    s->add_option("--max-arity", cfg.max_arity, "arity bound (default $LIED_MAX_ARITY or 6)");

  auto* check = app.add_subcommand("check", "check a structure or morphism file")->require_subcommand(1);
  auto* c_alg = check->add_subcommand("algebra", "fifteen weak Lie 3-algebra equations");
  auto* c_mor = check->add_subcommand("morphism", "eight weak morphism equations");
  c_alg->add_option("file", cfg.inputs)->required()->expected(1);
  c_mor->add_option("file", cfg.inputs)->required()->expected(1);

  auto* transfer = app.add_subcommand("transfer", "homotopy transfer along a deformation retract");
  transfer->add_option("files", cfg.inputs, "structure.json retract.json")->required()->expected(2);
  transfer->add_option("-o", cfg.output, "output file")->required();

  auto* skew = app.add_subcommand("skew", "skew-symmetrization");
  skew->add_option("file", cfg.inputs)->required()->expected(1);
  skew->add_option("-o", cfg.output, "output file");

  auto* defect = app.add_subcommand("defect", "functoriality defect of skew-symmetrization");
  defect->add_option("files", cfg.inputs, "f.json fprime.json (f: L -> L', f': L' -> L'')")->required()->expected(2);

  auto* clwx = app.add_subcommand("clwx", "CLWX 2-algebroids")->require_subcommand(1);
  auto* x_check = clwx->add_subcommand("check", "axioms, induced structure, closed form");
  auto* x_conv = clwx->add_subcommand("to-wlie3", "write the induced weak Lie 3-algebra");
  x_check->add_option("file", cfg.inputs)->required()->expected(1);
  x_conv->add_option("file", cfg.inputs)->required()->expected(1);
  x_conv->add_option("-o", cfg.output, "output file")->required();

  auto* example = app.add_subcommand("example", "write a sample input file");
  example->add_option("kind", cfg.kind, "zero|sl2|structure|retract|morphism|morphism2|clwx|clwx-anchored")->required();
  example->add_option("-o", cfg.output, "output file")->required();

  try {
    cfg.max_arity = default_arity();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cfg.max_arity < 2 || cfg.max_arity > kMaxArityBound)
      throw std::invalid_argument("arity bound must lie in 2.." + std::to_string(kMaxArityBound));
    if (*example) return example_cmd(cfg);
    Outcome o;
    if (*v_operad) o = verify_operad(cfg);
    else if (*v_acyc) o = verify_acyclicity_cmd(cfg);
    else if (*v_phi) o = {"verify phi", check_phi(), json::object()};
    else if (*v_eq) o = {"verify equations", check_equation_tables(), json::object()};
    else if (*c_alg) o = {"check algebra", check_structure(structure_from_json(read_json_file(cfg.inputs.at(0)))), json::object()};
    else if (*c_mor) o = check_morphism_cmd(cfg);
    else if (*transfer) o = transfer_cmd(cfg);
    else if (*skew) o = skew_cmd(cfg);
    else if (*defect) o = defect_cmd(cfg);
    else if (*x_check) o = clwx_cmd(cfg, false);
    else if (*x_conv) o = clwx_cmd(cfg, true);
    return finish(o, cfg);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
