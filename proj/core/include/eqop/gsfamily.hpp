#ifndef EQOP_GSFAMILY_HPP
#define EQOP_GSFAMILY_HPP

#include <functional>
#include <optional>
#include <string>

#include "eqop/fingroup.hpp"

namespace eqop {

/// Witness for a family-closure violation: arity, offending subgroup, and
/// either a missing subgroup or a missing conjugate.
struct FamilyWitness {
  int arity = -1;
  Subgroup member;
  std::optional<Subgroup> missing;
  std::optional<int> conjugator;
  std::string describe() const;
};

/// A (G,Sigma)-family over a declared finite arity range: for each arity n
/// a collection of subgroups of G x Sigma_n^op, closed under passing to
/// subgroups and under conjugation.
class GSigmaFamily {
 public:
  GSigmaFamily(GroupPtr g, int max_arity);

  GroupPtr group() const { return g_; }
  int max_arity() const { return max_arity_; }
  /// The ambient group G x Sigma_n^op.
  GroupPtr ambient(int n) const;

  /// Insert a subgroup together with its closure under subgroups and
  /// conjugation; `generators_` remembers the inserted representative.
  void add(int n, const Subgroup& h);
  bool contains(int n, const Subgroup& h) const;
  bool contains_members(int n, const std::vector<int>& members) const;
  const std::vector<Subgroup>& at(int n) const;
  const std::vector<Subgroup>& generators(int n) const;

 private:
  GroupPtr g_;
  int max_arity_;
  mutable std::vector<GroupPtr> ambient_;  // lazily built per arity
  std::vector<std::vector<Subgroup>> per_arity_;
  std::vector<std::set<std::vector<int>>> index_;
  std::vector<std::vector<Subgroup>> generators_;
};

/// Every subgroup Gamma <= G x Sigma_n^op with Gamma meet Sigma_n^op trivial,
/// built directly as graphs of partial homomorphisms H -> Sigma_n and checked
/// against that description.
std::vector<Subgroup> enumerate_graph_subgroups(GroupPtr g, int n);

/// Independent oracle: filter the full subgroup lattice of G x Sigma_n^op by
/// the trivial-intersection condition.
std::vector<Subgroup> enumerate_graph_subgroups_bruteforce(GroupPtr g, int n);

/// Validates subgroup- and conjugation-closure of candidate data given as raw
/// per-arity collections; returns a witness on failure.
std::optional<FamilyWitness> validate_family(
    GroupPtr g, const std::vector<std::vector<Subgroup>>& per_arity);
std::optional<FamilyWitness> validate_family(const GSigmaFamily& f);

// Standard families.
GSigmaFamily all_subgroups_family(GroupPtr g, int max_arity);
GSigmaFamily graph_subgroup_family(GroupPtr g, int max_arity);
GSigmaFamily trivial_subgroups_family(GroupPtr g, int max_arity);

/// Pullback along a homomorphism phi: G -> Gbar (extended by the identity on
/// the Sigma_n^op factor): (phi* Fbar)_n = { H : (phi x id)(H) in Fbar_n }.
GSigmaFamily pullback_family(GroupPtr g, const std::vector<int>& phi,
                             const GSigmaFamily& fbar);

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                     const std::vector<int>& phi);

/// Image of a subgroup under an elementwise map (must be a homomorphism on it).
Subgroup map_subgroup(const Subgroup& h, GroupPtr target,
                      const std::vector<int>& phi);

/// Group-level meet: subgroups K of A x B with pi_A(K) in FA and pi_B(K) in
/// FB, materialized over the full lattice of A x B.
std::vector<Subgroup> meet_subgroup_collections(
    GroupPtr a, GroupPtr b, const std::function<bool(const Subgroup&)>& in_fa,
    const std::function<bool(const Subgroup&)>& in_fb);

/// Projections for subgroups of a product built by group_product.
Subgroup project_first(const Subgroup& k, GroupPtr a, GroupPtr b);
Subgroup project_second(const Subgroup& k, GroupPtr a, GroupPtr b);

}  // namespace eqop

#endif
