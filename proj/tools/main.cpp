// eqop: enumerate graph-subgroup families, build free equivariant colored
// operads, check pseudo indexing systems and F-equivalences, and compute
// free operad extensions with an independent oracle cross-check.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eqop/json_io.hpp"
#include "eqop/pseudoindex.hpp"
#include "eqop/report.hpp"

using namespace eqop;

namespace {

struct Options {
  std::string format = "text";
  unsigned long long seed = 1;
};

int finish(RunReport& rep, const Options& opt,
           std::chrono::steady_clock::time_point start) {
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (opt.format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.ok() ? 0 : 1;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("parse error in " + path + ": " + e.what());
  }
  return j;
}

GroupPtr load_group(const std::string& name, const std::string& file) {
  if (!file.empty()) return group_from_json(read_json_file(file));
  return group_by_name(name);
}

std::string subgroup_desc(const Subgroup& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (i) out += ' ';
    out += s.parent->name(s.members[i]);
  }
  return out + "}";
}

GSigmaFamily load_family(const std::string& kind, const std::string& file,
                         GroupPtr g, int max_arity) {
  if (!file.empty()) return family_from_json(read_json_file(file));
  if (kind == "graph") return graph_subgroup_family(g, max_arity);
  if (kind == "all") return all_subgroups_family(g, max_arity);
  if (kind == "trivial") return trivial_subgroups_family(g, max_arity);
  throw std::invalid_argument("unknown family kind: " + kind);
}

// ----- paper example replays -----

GSet quartic_colors() {
  std::vector<std::vector<int>> act(4);
  act[0] = {0, 1, 2, 3, 4, 5};
  act[1] = {2, 3, 1, 0, 5, 4};
  act[2] = {1, 0, 3, 2, 4, 5};
  act[3] = {3, 2, 0, 1, 5, 4};
  return GSet(cyclic_group(4), {"a", "-a", "ia", "-ia", "b", "ib"},
              std::move(act));
}

void replay_paper_examples(RunReport& rep) {
  {
    // quartic-roots orbit forest: four components, isomorphic in opposite
    // pairs only
    GSet c = quartic_colors();
    Signature C{{0, 5, 5, 1}, 4};
    ColoredForest f = orbit_corolla_forest(c, C);
    rep.add("quartic orbit forest has |G| = 4 components",
            f.components.size() == 4);
    bool pair1 = !tree_isos(f.components[0], f.components[2]).empty();
    bool pair2 = !tree_isos(f.components[1], f.components[3]).empty();
    bool cross = tree_isos(f.components[0], f.components[1]).empty() &&
                 tree_isos(f.components[0], f.components[3]).empty() &&
                 tree_isos(f.components[2], f.components[1]).empty() &&
                 tree_isos(f.components[2], f.components[3]).empty();
    rep.add("components C and -C isomorphic", pair1);
    rep.add("components iC and -iC isomorphic", pair2);
    rep.add("no cross-pair isomorphisms", cross);
  }
  {
    // Z/2 corollas: exactly two nontrivial stabilizing graph subgroups each
    GSet c(cyclic_group(2), {"a", "-a", "b"}, {{0, 1, 2}, {1, 0, 2}});
    Signature C{{0, 2, 2, 1}, 2};
    Signature D{{0, 0, 1, 1}, 2};
    int nC = 0, nD = 0;
    for (const Subgroup& gam : enumerate_graph_subgroups(c.group, 4)) {
      if (gam.order() == 1) continue;
      if (stabilizes(c, gam, C)) ++nC;
      if (stabilizes(c, gam, D)) ++nD;
    }
    rep.add("corolla (a,b,b,-a;b): two nontrivial stabilizing graphs",
            nC == 2, "found " + std::to_string(nC));
    rep.add("corolla (a,a,-a,-a;b): two nontrivial stabilizing graphs",
            nD == 2, "found " + std::to_string(nD));
    auto base = sig_groupoid_orbits(c, 4, {C, D});
    auto amb = product_with_sym_op(c.group, 4);
    rep.add("Aut(a,b,b,-a;b) has order 4",
            base->aut_subgroup(C, amb).order() == 4);
    rep.add("Aut(a,a,-a,-a;b) has order 8",
            base->aut_subgroup(D, amb).order() == 8);
  }
  {
    // two-tree forest: leaf-roots (b,c;a) and (;a), with four and three
    // vertex corollas
    GSet c = trivial_gset(3);  // a=c0, b=c1, c=c2
    ColoredTree T;
    T.edge_color = {0, 0, 0, 1, 1, 2};
    T.vertices = {{0, {1, 4}}, {1, {2, 3}}, {2, {}}, {4, {5}}};
    T.root_edge = 0;
    T.finalize();
    ColoredTree S;
    S.edge_color = {0, 1, 2};
    S.vertices = {{0, {1}}, {1, {2}}, {2, {}}};
    S.root_edge = 0;
    S.finalize();
    rep.add("lr(T) = (b,c;a)", T.leaf_root(c) == Signature{{1, 2}, 0});
    rep.add("lr(S) = (;a)", S.leaf_root(c) == Signature{{}, 0});
    rep.add("T has 4 vertex corollas", T.vertex_corollas().size() == 4);
    rep.add("S has 3 vertex corollas", S.vertex_corollas().size() == 3);
    rep.add("lr of a stick is (c;c)",
            stick_tree(2).leaf_root(c) == Signature{{2}, 2});
  }
}

std::string render_stage_table(const ExtensionProblem& p,
                               const ExtensionResult& r) {
  const SigGroupoid& sg = *p.x.base;
  std::ostringstream out;
  for (size_t k = 0; k < r.stages.size(); ++k) {
    out << "O_" << k << ":";
    for (int n = 0; n <= sg.max_arity; ++n) {
      long long total = 0;
      bool any = false;
      for (int o = 0; o < sg.gpd->n_objects(); ++o)
        if (sg.sig_of_obj[o].arity() == n) {
          total += r.stages[k].sizes[o];
          any = true;
        }
      if (any) out << " " << n << ":" << total;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "equivariant colored operad workbench: graph-subgroup families, free "
      "operads, pseudo indexing systems, F-equivalences, operad extensions"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "Seed for randomized suites");

  std::string group_name = "Z2", group_file, file, family_kind = "graph";
  int arity = 2, max_arity = 3, bound = 3, inert = 1, n_colors = 1;
  bool reduced = false;
  std::string arity_range;

  auto* enumerate = app.add_subcommand("enumerate", "Canonical enumerations");
  enumerate->require_subcommand(1);
  auto* e_sub = enumerate->add_subcommand("subgroups", "Subgroup lattice");
  e_sub->add_option("--group", group_name, "Builtin group name");
  e_sub->add_option("--group-file", group_file, "Group JSON file");
  auto* e_graph =
      enumerate->add_subcommand("graph-subgroups", "Graph subgroups");
  e_graph->add_option("--group", group_name);
  e_graph->add_option("--group-file", group_file);
  e_graph->add_option("--arity", arity, "Arity n of G x Sigma_n^op");
  auto* e_trees = enumerate->add_subcommand("trees", "Tree iso classes");
  int max_vertex_arity = -1;
  e_trees->add_option("--colors", n_colors, "Number of (trivial) colors");
  e_trees->add_option("--arity", arity, "Leaf-root arity");
  e_trees->add_option("--bound", bound, "Vertex bound");
  e_trees->add_flag("--reduced", reduced, "Only vertices of arity >= 2");
  e_trees->add_option("--max-vertex-arity", max_vertex_arity,
                      "Cap on vertex arities (e.g. 2 for binary)");
  auto* e_alt =
      enumerate->add_subcommand("alternating", "Alternating tree classes");
  e_alt->add_option("--colors", n_colors);
  e_alt->add_option("--inert", inert, "Exact inert vertex count");
  e_alt->add_option("--bound", bound, "Vertex bound");
  e_alt->add_option("--max-arity", max_arity, "Vertex/leaf arity cap");

  auto* check = app.add_subcommand("check", "Verification runs");
  check->require_subcommand(1);
  auto* c_family = check->add_subcommand("family", "Family closure axioms");
  c_family->add_option("--file", file, "Family JSON file")->required();
  auto* c_pis =
      check->add_subcommand("pseudo-indexing", "Pseudo indexing system");
  c_pis->add_option("--group", group_name);
  c_pis->add_option("--group-file", group_file);
  c_pis->add_option("--family", family_kind, "graph|all|trivial");
  c_pis->add_option("--file", file, "Family JSON file (overrides --family)");
  c_pis->add_option("--bound", bound, "Tree vertex bound");
  c_pis->add_option("--arity-range", arity_range, "Arity range a..b");
  c_pis->add_option("--max-arity", max_arity, "Family arity bound");
  auto* c_laws = check->add_subcommand("operad-laws", "Operad axioms");
  c_laws->add_option("--file", file, "Operad JSON file")->required();
  c_laws->add_option("--bound", bound, "Tree bound for associativity");
  auto* c_feq = check->add_subcommand("f-equivalence", "F-equivalence");
  c_feq->add_option("--file", file, "Bundle JSON: {X, Y, map, family}")
      ->required();

  auto* extend = app.add_subcommand("extend", "Free operad extension");
  extend->add_option("--file", file, "Extension problem JSON")->required();
  int bound_override = -1;
  extend->add_option("--bound", bound_override, "Override the vertex bound");

  auto* paper = app.add_subcommand("paper-examples", "Replay worked examples");
  (void)paper;

  auto* sample = app.add_subcommand("sample", "Write sample input files");
  std::string sample_kind = "group", sample_out = "sample.json";
  sample->add_option("kind", sample_kind, "group|family|operad|fequiv|problem");
  sample->add_option("--out", sample_out, "Output path");

  CLI11_PARSE(app, argc, argv);

  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  for (int i = 0; i < argc; ++i) {
    if (i) rep.command += ' ';
    rep.command += argv[i];
  }

  try {
    if (e_sub->parsed()) {
      GroupPtr g = load_group(group_name, group_file);
      auto subs = enumerate_subgroups(g);
      std::ostringstream out;
      for (const auto& s : subs)
        out << subgroup_desc(s) << " order " << s.order() << "\n";
      rep.table("subgroups", out.str());
      rep.add("count", true, std::to_string(subs.size()));
    } else if (e_graph->parsed()) {
      GroupPtr g = load_group(group_name, group_file);
      auto gs = enumerate_graph_subgroups(g, arity);
      auto brute = enumerate_graph_subgroups_bruteforce(g, arity);
      std::ostringstream out;
      for (const auto& s : gs)
        out << subgroup_desc(s) << " order " << s.order() << "\n";
      rep.table("graph-subgroups", out.str());
      rep.add("count", true, std::to_string(gs.size()));
      bool agree = gs.size() == brute.size();
      for (size_t i = 0; agree && i < gs.size(); ++i)
        agree = gs[i].members == brute[i].members;
      rep.add("matches brute-force lattice filter", agree);
    } else if (e_trees->parsed()) {
      GSet colors = trivial_gset(n_colors);
      Signature sig{std::vector<int>(arity, 0), 0};
      auto classes = enumerate_trees(
          colors, sig,
          reduced ? std::optional<int>() : std::optional<int>(bound), reduced,
          max_vertex_arity > 0 ? max_vertex_arity : std::max(arity, 2));
      std::ostringstream out;
      for (const auto& cl : classes)
        out << tree_key(cl.rep) << "  |Aut| = " << cl.aut.group->size() << "\n";
      rep.table("tree-classes", out.str());
      rep.add("count", true, std::to_string(classes.size()));
    } else if (e_alt->parsed()) {
      GSet colors = trivial_gset(n_colors);
      auto any = [](const Signature&) { return true; };
      auto alts = enumerate_alternating(colors, inert, bound, max_arity,
                                        max_arity, any, any);
      std::ostringstream out;
      for (const auto& at : alts)
        out << tree_key(at.tree) << "  inert=" << at.inert_count() << "\n";
      rep.table("alternating-classes", out.str());
      rep.add("count", true, std::to_string(alts.size()));
      bool all_k = true;
      for (const auto& at : alts) all_k = all_k && at.inert_count() == inert;
      rep.add("inert count filter", all_k);
    } else if (c_family->parsed()) {
      Json j = read_json_file(file);
      GroupPtr g = group_from_json(j.at("group"));
      int ma = j.at("max_arity").get<int>();
      // validate the raw data rather than the closure the loader would take
      std::vector<std::vector<Subgroup>> raw(ma + 1);
      GSigmaFamily probe(g, ma);
      for (const auto& [key, lst] : j.at("arities").items()) {
        int n = std::stoi(key);
        for (const auto& mem : lst)
          raw[n].push_back(
              Subgroup{probe.ambient(n), mem.get<std::vector<int>>()});
      }
      auto w = validate_family(g, raw);
      rep.add("family closure", !w.has_value(),
              w ? w->describe() : "closed under subgroups and conjugation");
    } else if (c_pis->parsed()) {
      GSigmaFamily fam = [&]() {
        if (!file.empty()) return family_from_json(read_json_file(file));
        GroupPtr g = load_group(group_name, group_file);
        int ma = max_arity;
        if (!arity_range.empty()) {
          auto dots = arity_range.find("..");
          if (dots == std::string::npos)
            throw std::invalid_argument("bad --arity-range, expected a..b");
          ma = std::stoi(arity_range.substr(dots + 2));
        }
        return load_family(family_kind, "", g, ma);
      }();
      auto w = check_pseudo_indexing(fam, bound);
      rep.add("pseudo indexing system up to bound " + std::to_string(bound),
              !w.has_value(), w ? w->describe(fam) : "no violation");
    } else if (c_laws->parsed()) {
      Operad o = operad_from_json(read_json_file(file));
      auto w = check_operad_laws(o, bound);
      rep.add("operad laws", !w.has_value(),
              w ? *w : "unit, associativity, equivariance hold");
    } else if (c_feq->parsed()) {
      Json j = read_json_file(file);
      SymSeq x = symseq_from_json(j.at("X"));
      SymSeq y = symseq_from_json(j.at("Y"), x.base);
      NatTrans t;
      t.comp.resize(x.base->gpd->n_objects());
      for (const auto& [key, m] : j.at("map").items()) {
        for (int o = 0; o < x.base->gpd->n_objects(); ++o)
          if (x.base->sig_of_obj[o].key(x.base->colors) == key)
            t.comp[o] = m.get<std::vector<int>>();
      }
      SymSeqMap f(x, y, t);
      GSigmaFamily fam = family_from_json(j.at("family"));
      auto w = is_F_equivalence(f, fam);
      rep.add("F-equivalence", !w.has_value(),
              w ? "witness at " + w->sig.key(x.base->colors) +
                      ", subgroup order " + std::to_string(w->lambda.order())
                : "all stabilizer fixed-point maps are bijections");
    } else if (extend->parsed()) {
      ExtensionProblem p = extension_problem_from_json(read_json_file(file));
      if (bound_override > 0) p.bound = bound_override;
      ExtensionResult r = extension_colimit(p);
      OracleResult orc = oracle_extension(p);
      rep.table("stages", render_stage_table(p, r));
      rep.add("oracle-match", extensions_agree(p, r, orc));
      rep.add("stabilized", !r.saturated,
              r.saturated ? "not stabilized: vertex bound saturated"
                          : "index category empty before the bound");
      if (r.relations_dropped)
        rep.add("arity range", false,
                "some gluing relations exceeded the arity range");
    } else if (paper->parsed()) {
      replay_paper_examples(rep);
    } else if (sample->parsed()) {
      Json j;
      if (sample_kind == "group") {
        j = group_to_json(*cyclic_group(2));
      } else if (sample_kind == "family") {
        j = family_to_json(graph_subgroup_family(cyclic_group(2), 3));
      } else if (sample_kind == "operad") {
        GSet c1 = trivial_gset(1);
        j = operad_to_json(associative_operad(sig_groupoid_all(c1, 3)));
      } else if (sample_kind == "fequiv") {
        GSet c(cyclic_group(2), {"c"}, {{0}, {0}});
        auto base = sig_groupoid_all(c, 1);
        int o1 = base->object(Signature{{0}, 0});
        std::vector<std::vector<std::string>> elx(base->gpd->n_objects());
        std::vector<std::vector<std::string>> ely(base->gpd->n_objects());
        elx[o1] = {"x0", "x1"};
        ely[o1] = {"y0", "y1"};
        std::vector<std::vector<int>> actx(base->gpd->n_arrows());
        std::vector<std::vector<int>> acty(base->gpd->n_arrows());
        for (int a = 0; a < base->gpd->n_arrows(); ++a) {
          if (base->gpd->arrow(a).src != o1) continue;
          actx[a] = base->arrow_el[a].g == 1 ? std::vector<int>{1, 0}
                                             : std::vector<int>{0, 1};
          acty[a] = {0, 1};
        }
        SymSeq X{base, SetValuedFunctor(base->gpd, elx, actx)};
        SymSeq Y{base, SetValuedFunctor(base->gpd, ely, acty)};
        j["X"] = symseq_to_json(X);
        j["Y"] = symseq_to_json(Y);
        j["map"] = {{Signature{{0}, 0}.key(c), {0, 0}}};
        j["family"] = family_to_json(graph_subgroup_family(c.group, 1));
      } else if (sample_kind == "problem") {
        GSet c1 = trivial_gset(1);
        auto base = sig_groupoid_all(c1, 3);
        ExtensionProblem p;
        p.base_op = initial_operad(base);
        p.x = empty_symseq(base);
        std::vector<std::vector<std::string>> el(base->gpd->n_objects());
        el[base->object(Signature{{0, 0}, 0})] = {"m"};
        std::vector<std::vector<int>> act(base->gpd->n_arrows());
        for (int a = 0; a < base->gpd->n_arrows(); ++a)
          if (base->gpd->arrow(a).src == base->object(Signature{{0, 0}, 0}))
            act[a] = {0};
        p.y = SymSeq{base, SetValuedFunctor(base->gpd, el, act)};
        p.u.comp.resize(base->gpd->n_objects());
        p.attach.comp.resize(base->gpd->n_objects());
        p.bound = 8;
        j = extension_problem_to_json(p);
      } else {
        throw std::invalid_argument("unknown sample kind: " + sample_kind);
      }
      std::ofstream out(sample_out);
      out << j.dump(2) << "\n";
      rep.add("wrote " + sample_out, true);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return finish(rep, opt, start);
}
