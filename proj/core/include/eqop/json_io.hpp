#ifndef EQOP_JSON_IO_HPP
#define EQOP_JSON_IO_HPP

#include "eqop/extension.hpp"
#include "eqop/gsfamily.hpp"
#include "eqop/operad.hpp"
#include "json.hpp"

namespace eqop {

using Json = nlohmann::json;

// Groups: { "elements": [name], "mul": [[index]], "id": index }
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);
/// Builtin names: "trivial", "Z2", "Z3", "Z4", "S3", "S4", "K4".
GroupPtr group_by_name(const std::string& name);

// Families: { "group": ..., "max_arity": n,
//             "arities": { "n": [[member indices of G x Sigma_n^op]] } }
// with (g, sigma) encoded as g * n! + lexicographic rank of sigma.
Json family_to_json(const GSigmaFamily& f);
GSigmaFamily family_from_json(const Json& j);

// Color G-sets: { "group": ..., "colors": [name], "action": [[perm]] }
Json gset_to_json(const GSet& c);
GSet gset_from_json(const Json& j);

// Groupoids: { "objects": [name],
//              "arrows": [{ "src": i, "dst": j, "name": s, "inv": a }],
//              "identities": [a], "compose": [[g, f, gf]] }
Json groupoid_to_json(const FiniteGroupoid& g);
GroupoidPtr groupoid_from_json(const Json& j);
Json functor_to_json(const GroupoidFunctor& f);

// Trees: { "colors": [name], "root": edge,
//          "edges": [{ "id": e, "color": c, "parent": e' | null }],
//          "vertices": [{ "out": e, "in": [e] }] }
Json tree_to_json(const GSet& colors, const ColoredTree& t);
ColoredTree tree_from_json(const Json& j);

// Symmetric sequences: { "colors": gset, "max_arity": n,
//   "values": { "c1,...,cn;c0": [element names] },
//   "actions": [{ "sig": key, "g": name, "sigma": [perm], "map": [int] }] }
Json symseq_to_json(const SymSeq& x);
SymSeq symseq_from_json(const Json& j, SigGroupoidPtr base = nullptr);

// Operads: symseq plus { "units": { color: element },
//   "partial_compose": [{ "outer": key, "slot": i, "inner": key,
//                         "table": [[int]] }] }
Json operad_to_json(const Operad& o);
Operad operad_from_json(const Json& j);

// Extension problems: { "operad": ..., "X": symseq, "Y": symseq,
//   "u": { sig: [int] }, "attach": { sig: [int] }, "bound": n }
Json extension_problem_to_json(const ExtensionProblem& p);
ExtensionProblem extension_problem_from_json(const Json& j);

}  // namespace eqop

#endif
