#include "eqop/json_io.hpp"

#include <stdexcept>

namespace eqop {

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["elements"] = g.names();
  std::vector<std::vector<int>> mul(g.size(), std::vector<int>(g.size()));
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) mul[a][b] = g.mul(a, b);
  j["mul"] = mul;
  j["id"] = g.id();
  return j;
}

GroupPtr group_from_json(const Json& j) {
  return std::make_shared<const FiniteGroup>(
      j.at("elements").get<std::vector<std::string>>(),
      j.at("mul").get<std::vector<std::vector<int>>>(), j.at("id").get<int>());
}

GroupPtr group_by_name(const std::string& name) {
  if (name == "trivial" || name == "1") return trivial_group();
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  if (name == "K4") return group_product(cyclic_group(2), cyclic_group(2));
  throw std::invalid_argument("unknown builtin group: " + name);
}

Json family_to_json(const GSigmaFamily& f) {
  Json j;
  j["group"] = group_to_json(*f.group());
  j["max_arity"] = f.max_arity();
  Json ar = Json::object();
  for (int n = 0; n <= f.max_arity(); ++n) {
    Json lst = Json::array();
    for (const Subgroup& s : f.at(n)) lst.push_back(s.members);
    ar[std::to_string(n)] = lst;
  }
  j["arities"] = ar;
  return j;
}

GSigmaFamily family_from_json(const Json& j) {
  GroupPtr g = group_from_json(j.at("group"));
  GSigmaFamily f(g, j.at("max_arity").get<int>());
  for (const auto& [key, lst] : j.at("arities").items()) {
    int n = std::stoi(key);
    for (const auto& mem : lst)
      f.add(n, Subgroup{f.ambient(n), mem.get<std::vector<int>>()});
  }
  return f;
}

Json gset_to_json(const GSet& c) {
  Json j;
  j["group"] = group_to_json(*c.group);
  j["colors"] = c.names;
  j["action"] = c.act;
  return j;
}

GSet gset_from_json(const Json& j) {
  return GSet(group_from_json(j.at("group")),
              j.at("colors").get<std::vector<std::string>>(),
              j.at("action").get<std::vector<std::vector<int>>>());
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  Json j;
  std::vector<std::string> objs;
  for (int o = 0; o < g.n_objects(); ++o) objs.push_back(g.object_name(o));
  j["objects"] = objs;
  Json arrows = Json::array();
  for (int a = 0; a < g.n_arrows(); ++a) {
    const auto& ar = g.arrow(a);
    arrows.push_back({{"src", ar.src},
                      {"dst", ar.dst},
                      {"name", ar.name},
                      {"inv", g.inverse(a)}});
  }
  j["arrows"] = arrows;
  std::vector<int> ids;
  for (int o = 0; o < g.n_objects(); ++o) ids.push_back(g.identity(o));
  j["identities"] = ids;
  Json comp = Json::array();
  for (int f = 0; f < g.n_arrows(); ++f)
    for (int h : g.arrows_from(g.arrow(f).dst))
      comp.push_back({h, f, g.compose(h, f)});
  j["compose"] = comp;
  return j;
}

GroupoidPtr groupoid_from_json(const Json& j) {
  std::vector<FiniteGroupoid::Arrow> arrows;
  for (const auto& a : j.at("arrows"))
    arrows.push_back({a.at("src").get<int>(), a.at("dst").get<int>(),
                      a.at("name").get<std::string>()});
  std::unordered_map<std::int64_t, int> comp;
  int na = static_cast<int>(arrows.size());
  for (const auto& e : j.at("compose"))
    comp[static_cast<std::int64_t>(e.at(0).get<int>()) * na +
         e.at(1).get<int>()] = e.at(2).get<int>();
  return std::make_shared<const FiniteGroupoid>(
      j.at("objects").get<std::vector<std::string>>(), std::move(arrows),
      j.at("identities").get<std::vector<int>>(), std::move(comp));
}

Json functor_to_json(const GroupoidFunctor& f) {
  Json j;
  j["objects"] = f.obj_map;
  j["arrows"] = f.arrow_map;
  return j;
}

Json tree_to_json(const GSet& colors, const ColoredTree& t) {
  Json j;
  j["colors"] = colors.names;
  j["root"] = t.root_edge;
  Json edges = Json::array();
  for (int e = 0; e < t.n_edges(); ++e) {
    Json je{{"id", e}, {"color", t.edge_color[e]}};
    // parent = the next edge toward the root (output of the vertex below)
    int v = t.vertex_below[e];
    if (v < 0)
      je["parent"] = nullptr;
    else
      je["parent"] = t.vertices[v].out;
    edges.push_back(je);
  }
  j["edges"] = edges;
  Json verts = Json::array();
  for (const auto& v : t.vertices)
    verts.push_back({{"out", v.out}, {"in", v.in}});
  j["vertices"] = verts;
  return j;
}

ColoredTree tree_from_json(const Json& j) {
  ColoredTree t;
  t.edge_color.resize(j.at("edges").size());
  for (const auto& e : j.at("edges"))
    t.edge_color[e.at("id").get<int>()] = e.at("color").get<int>();
  for (const auto& v : j.at("vertices"))
    t.vertices.push_back(
        {v.at("out").get<int>(), v.at("in").get<std::vector<int>>()});
  t.root_edge = j.at("root").get<int>();
  t.finalize();
  return t;
}

Json symseq_to_json(const SymSeq& x) {
  const SigGroupoid& sg = *x.base;
  Json j;
  j["colors"] = gset_to_json(sg.colors);
  j["max_arity"] = sg.max_arity;
  Json vals = Json::object();
  for (int o = 0; o < sg.gpd->n_objects(); ++o)
    vals[sg.sig_of_obj[o].key(sg.colors)] = x.values.elems[o];
  j["values"] = vals;
  Json acts = Json::array();
  for (int a = 0; a < sg.gpd->n_arrows(); ++a) {
    if (x.values.action[a].empty()) continue;
    const auto& el = sg.arrow_el[a];
    acts.push_back(
        {{"sig", sg.sig_of_obj[sg.gpd->arrow(a).src].key(sg.colors)},
         {"g", sg.colors.group->name(el.g)},
         {"sigma", el.sigma},
         {"map", x.values.action[a]}});
  }
  j["actions"] = acts;
  return j;
}

namespace {
Signature sig_from_key(const SigGroupoid& sg, const std::string& key) {
  // "c1,...,cn;c0" with color names
  auto idx = [&](const std::string& nm) {
    for (int c = 0; c < sg.colors.size(); ++c)
      if (sg.colors.names[c] == nm) return c;
    throw std::invalid_argument("unknown color name: " + nm);
  };
  Signature s;
  auto semi = key.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("bad signature key: " + key);
  s.dst = idx(key.substr(semi + 1));
  std::string srcs = key.substr(0, semi);
  size_t pos = 0;
  while (pos < srcs.size()) {
    auto comma = srcs.find(',', pos);
    if (comma == std::string::npos) comma = srcs.size();
    s.src.push_back(idx(srcs.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return s;
}
}  // namespace

SymSeq symseq_from_json(const Json& j, SigGroupoidPtr base) {
  if (!base) {
    GSet colors = gset_from_json(j.at("colors"));
    base = sig_groupoid_all(colors, j.at("max_arity").get<int>());
  }
  const SigGroupoid& sg = *base;
  std::vector<std::vector<std::string>> el(sg.gpd->n_objects());
  for (const auto& [key, names] : j.at("values").items())
    el[sg.object(sig_from_key(sg, key))] =
        names.get<std::vector<std::string>>();
  std::vector<std::vector<int>> act(sg.gpd->n_arrows());
  for (const auto& a : j.at("actions")) {
    Signature s = sig_from_key(sg, a.at("sig").get<std::string>());
    int g = -1;
    for (int gi = 0; gi < sg.colors.group->size(); ++gi)
      if (sg.colors.group->name(gi) == a.at("g").get<std::string>()) g = gi;
    if (g < 0) throw std::invalid_argument("unknown group element name");
    int arrow = sg.arrow(sg.object(s), g, a.at("sigma").get<Perm>());
    act[arrow] = a.at("map").get<std::vector<int>>();
  }
  // identity-ish arrows on empty values stay empty; fill defaults for
  // missing actions on nonempty sources only if truly specified
  for (int a = 0; a < sg.gpd->n_arrows(); ++a) {
    if (!act[a].empty()) continue;
    if (el[sg.gpd->arrow(a).src].empty()) continue;
    throw std::invalid_argument("symseq json: missing action for an arrow");
  }
  return SymSeq{base, SetValuedFunctor(base->gpd, std::move(el),
                                       std::move(act))};
}

Json operad_to_json(const Operad& o) {
  Json j = symseq_to_json(o.levels);
  const SigGroupoid& sg = o.base();
  Json units = Json::object();
  for (const auto& [c, u] : o.unit) units[sg.colors.names[c]] = u;
  j["units"] = units;
  Json pc = Json::array();
  for (const auto& [key, table] : o.comp) {
    auto [oo, slot, io] = key;
    pc.push_back({{"outer", sg.sig_of_obj[oo].key(sg.colors)},
                  {"slot", slot},
                  {"inner", sg.sig_of_obj[io].key(sg.colors)},
                  {"table", table}});
  }
  j["partial_compose"] = pc;
  return j;
}

Operad operad_from_json(const Json& j) {
  Operad o;
  o.levels = symseq_from_json(j);
  const SigGroupoid& sg = o.base();
  for (const auto& [cname, u] : j.at("units").items()) {
    for (int c = 0; c < sg.colors.size(); ++c)
      if (sg.colors.names[c] == cname) o.unit[c] = u.get<int>();
  }
  for (const auto& e : j.at("partial_compose")) {
    Signature outer = sig_from_key(sg, e.at("outer").get<std::string>());
    Signature inner = sig_from_key(sg, e.at("inner").get<std::string>());
    o.comp[{sg.object(outer), e.at("slot").get<int>(), sg.object(inner)}] =
        e.at("table").get<std::vector<std::vector<int>>>();
  }
  return o;
}

namespace {
Json nat_to_json(const SigGroupoid& sg, const NatTrans& t) {
  Json j = Json::object();
  for (size_t o = 0; o < t.comp.size(); ++o)
    if (!t.comp[o].empty())
      j[sg.sig_of_obj[o].key(sg.colors)] = t.comp[o];
  return j;
}
NatTrans nat_from_json(const SigGroupoid& sg, const Json& j) {
  NatTrans t;
  t.comp.resize(sg.gpd->n_objects());
  for (const auto& [key, m] : j.items())
    t.comp[sg.object(sig_from_key(sg, key))] = m.get<std::vector<int>>();
  return t;
}
}  // namespace

Json extension_problem_to_json(const ExtensionProblem& p) {
  Json j;
  j["operad"] = operad_to_json(p.base_op);
  j["X"] = symseq_to_json(p.x);
  j["Y"] = symseq_to_json(p.y);
  j["u"] = nat_to_json(*p.x.base, p.u);
  j["attach"] = nat_to_json(*p.x.base, p.attach);
  j["bound"] = p.bound;
  return j;
}

ExtensionProblem extension_problem_from_json(const Json& j) {
  ExtensionProblem p;
  p.base_op = operad_from_json(j.at("operad"));
  SigGroupoidPtr base = p.base_op.levels.base;
  p.x = symseq_from_json(j.at("X"), base);
  p.y = symseq_from_json(j.at("Y"), base);
  p.u = nat_from_json(*base, j.at("u"));
  p.attach = nat_from_json(*base, j.at("attach"));
  p.bound = j.at("bound").get<int>();
  p.validate();
  return p;
}

}  // namespace eqop
