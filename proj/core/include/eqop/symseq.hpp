#ifndef EQOP_SYMSEQ_HPP
#define EQOP_SYMSEQ_HPP

#include <optional>
#include <random>

#include "eqop/groupoid.hpp"
#include "eqop/gsfamily.hpp"
#include "eqop/trees.hpp"

namespace eqop {

/// The truncated base groupoid G |x Sigma_C^op: objects are signatures of
/// arity <= max_arity, an arrow C -> D is a pair (g, sigma) with
/// g.C.sigma = D, composed as (h,rho) o (g,sigma) = (hg, sigma o rho).
struct SigGroupoid {
  GSet colors;
  int max_arity = 0;
  GroupoidPtr gpd;
  std::vector<Signature> sig_of_obj;
  std::map<Signature, int> obj_of_sig;
  std::vector<GSigmaElem> arrow_el;

  int object(const Signature& s) const;
  bool has_object(const Signature& s) const { return obj_of_sig.count(s) > 0; }
  int arrow(int src_obj, int g, const Perm& sigma) const;
  /// Aut(sig) as a subgroup of the ambient G x Sigma_n^op.
  Subgroup aut_subgroup(const Signature& s, GroupPtr ambient) const;

 private:
  friend std::shared_ptr<const SigGroupoid> build_sig_groupoid(
      const GSet&, int, const std::vector<Signature>&);
  std::map<std::tuple<int, int, long long>, int> arrow_of_;
};

using SigGroupoidPtr = std::shared_ptr<const SigGroupoid>;

/// Base with every signature up to the arity bound.
SigGroupoidPtr sig_groupoid_all(const GSet& colors, int max_arity);
/// Base restricted to the (G x Sigma)-orbit closure of the seeds.
SigGroupoidPtr sig_groupoid_orbits(const GSet& colors, int max_arity,
                                   const std::vector<Signature>& seeds);

/// A finite-set-valued equivariant symmetric sequence on a truncated base.
struct SymSeq {
  SigGroupoidPtr base;
  SetValuedFunctor values;

  int size_at(const Signature& s) const {
    return values.size(base->object(s));
  }
  const std::vector<std::string>& names_at(const Signature& s) const {
    return values.elems[base->object(s)];
  }
};

/// A natural transformation of symmetric sequences over one base.
struct SymSeqMap {
  SymSeq src;
  SymSeq dst;
  NatTrans nat;

  SymSeqMap(SymSeq s, SymSeq d, NatTrans n);
  bool injective() const;
  bool bijective() const;
};

SymSeq empty_symseq(SigGroupoidPtr base);
/// One-point value at every signature of the given arities.
SymSeq point_symseq(SigGroupoidPtr base, const std::vector<int>& arities);

/// The representable (G |x Sigma_C^op)(C, -).
SymSeq representable(SigGroupoidPtr base, const Signature& sig);
/// Its quotient by a stabilizing subgroup Lambda <= G x Sigma_n^op acting by
/// precomposition: the generating objects Sigma_C[G._C C]/Lambda.
SymSeq quotient_representable(SigGroupoidPtr base, const Signature& sig,
                              const Subgroup& lambda);

/// The groupoid functor induced by an equivariant map of colors.
GroupoidFunctor induced_sig_functor(const SigGroupoidPtr& src,
                                    const SigGroupoidPtr& dst,
                                    const std::vector<int>& phi);
bool is_equivariant_color_map(const GSet& c, const GSet& d,
                              const std::vector<int>& phi);

SymSeq pullback_symseq(const std::vector<int>& phi, const SymSeq& y,
                       SigGroupoidPtr src_base);
SymSeq pushforward_symseq(const std::vector<int>& phi, const SymSeq& x,
                          SigGroupoidPtr dst_base);

std::vector<NatTrans> symseq_homs(const SymSeq& x, const SymSeq& y);

/// Elements of X(C) fixed by a stabilizing subgroup.
std::vector<int> fixed_points(const SymSeq& x, const Signature& sig,
                              const Subgroup& lambda);

struct FEquivWitness {
  Signature sig;
  Subgroup lambda;
};

/// True (no witness) iff for every in-range signature and every stabilizing
/// Lambda in the family the fixed-point map is a bijection. Witnesses report
/// the largest failing Lambda at the first failing signature.
std::optional<FEquivWitness> is_F_equivalence(const SymSeqMap& f,
                                              const GSigmaFamily& fam);

/// Random symmetric sequence: each component carries a few random orbits.
SymSeq random_symseq(SigGroupoidPtr base, std::mt19937_64& rng,
                     int max_orbits_per_component);

}  // namespace eqop

#endif
