#include "eqop/pseudoindex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eqop {

std::string PseudoIndexWitness::describe(const GSigmaFamily& f) const {
  std::string s = "tree " + tree_key(tree) + ", subgroup of order " +
                  std::to_string(lambda_members.size());
  (void)f;
  return s;
}

std::optional<PseudoIndexWitness> check_pseudo_indexing(const GSigmaFamily& f,
                                                        int bound) {
  GroupPtr g = f.group();
  int max_ar = f.max_arity();
  GSet colors(g, {"*"}, std::vector<std::vector<int>>(g->size(), {0}));
  auto vertex_ok = [&](const Signature& c) { return c.arity() <= max_ar; };
  for (const ColoredTree& t :
       enumerate_all_trees(colors, bound, max_ar, max_ar, vertex_ok)) {
    int n = static_cast<int>(t.leaves.size());
    if (n > max_ar) continue;
    TreeAut aut = tree_aut(t);
    GroupPtr big = group_product(g, aut.group);
    int asz = aut.group->size();
    // image of (gi, iso) in G x Sigma_n^op through the leaf-root functor
    auto lr_image = [&](int member) {
      int gi = member / asz;
      const TreeIso& iso = aut.isos[member % asz];
      Perm lam = leaf_perm(t, t, iso);
      return gsigma_encode(g->size(), n, gi, perm_inverse(lam));
    };
    for (const Subgroup& lambda : enumerate_subgroups(big)) {
      // slotwise condition at every planar vertex
      bool slotwise = true;
      for (size_t pi = 0; pi < t.planar_vertices.size() && slotwise; ++pi) {
        int v = t.planar_vertices[pi];
        int k = static_cast<int>(t.vertices[v].in.size());
        std::set<int> img;
        for (int m : lambda.members) {
          const TreeIso& iso = aut.isos[m % asz];
          if (iso.vertex_map[v] != v) continue;
          Perm pi_v = vertex_input_perm(t, t, iso, v);
          img.insert(gsigma_encode(g->size(), k, m / asz, perm_inverse(pi_v)));
        }
        Subgroup proj{f.ambient(k),
                      std::vector<int>(img.begin(), img.end())};
        // the projection of the slot stabilizer is a subgroup
        if (subgroup_closure(*f.ambient(k), proj.members) != proj.members)
          throw std::logic_error("pseudo-indexing: projection not a subgroup");
        if (!f.contains(k, proj)) slotwise = false;
      }
      if (!slotwise) continue;
      std::set<int> lr_img;
      for (int m : lambda.members) lr_img.insert(lr_image(m));
      Subgroup lr_sub{f.ambient(n),
                      std::vector<int>(lr_img.begin(), lr_img.end())};
      if (subgroup_closure(*f.ambient(n), lr_sub.members) != lr_sub.members)
        throw std::logic_error("pseudo-indexing: lr image not a subgroup");
      if (!f.contains(n, lr_sub))
        return PseudoIndexWitness{t, lambda.members};
    }
  }
  return std::nullopt;
}

}  // namespace eqop
