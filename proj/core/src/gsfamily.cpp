#include "eqop/gsfamily.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqop {

std::string FamilyWitness::describe() const {
  std::string s = "arity " + std::to_string(arity) + ": subgroup {";
  for (size_t i = 0; i < member.members.size(); ++i) {
    if (i) s += ',';
    s += member.parent->name(member.members[i]);
  }
  s += "}";
  if (missing) {
    s += " lacks ";
    s += conjugator ? "conjugate" : "subgroup";
    s += " {";
    for (size_t i = 0; i < missing->members.size(); ++i) {
      if (i) s += ',';
      s += missing->parent->name(missing->members[i]);
    }
    s += "}";
    if (conjugator)
      s += " by " + member.parent->name(*conjugator);
  }
  return s;
}

GSigmaFamily::GSigmaFamily(GroupPtr g, int max_arity)
    : g_(std::move(g)), max_arity_(max_arity) {
  if (max_arity_ < 0) throw std::invalid_argument("family: negative arity");
  ambient_.resize(max_arity_ + 1);
  per_arity_.resize(max_arity_ + 1);
  index_.resize(max_arity_ + 1);
  generators_.resize(max_arity_ + 1);
}

GroupPtr GSigmaFamily::ambient(int n) const {
  if (n < 0 || n > max_arity_)
    throw std::out_of_range("family: arity out of declared range");
  if (!ambient_[n]) ambient_[n] = product_with_sym_op(g_, n);
  return ambient_[n];
}

void GSigmaFamily::add(int n, const Subgroup& h) {
  GroupPtr amb = ambient(n);
  if (h.parent->size() != amb->size())
    throw std::invalid_argument("family: subgroup of wrong ambient group");
  generators_[n].push_back(Subgroup{amb, h.members});
  // close under conjugation, then subgroups of every conjugate
  std::set<std::vector<int>> conjs;
  for (int x = 0; x < amb->size(); ++x)
    conjs.insert(conjugate_subgroup(Subgroup{amb, h.members}, x).members);
  for (const auto& cm : conjs) {
    if (index_[n].count(cm)) continue;
    for (const auto& s : enumerate_subgroups_of(Subgroup{amb, cm})) {
      // subgroups of a family member need their own conjugates as well
      for (int x = 0; x < amb->size(); ++x) {
        auto c = conjugate_subgroup(s, x);
        if (index_[n].insert(c.members).second)
          per_arity_[n].push_back(std::move(c));
      }
    }
  }
  std::sort(per_arity_[n].begin(), per_arity_[n].end());
}

bool GSigmaFamily::contains(int n, const Subgroup& h) const {
  return contains_members(n, h.members);
}

bool GSigmaFamily::contains_members(int n,
                                    const std::vector<int>& members) const {
  if (n < 0 || n > max_arity_)
    throw std::out_of_range("family: arity out of declared range");
  return index_[n].count(members) > 0;
}

const std::vector<Subgroup>& GSigmaFamily::at(int n) const {
  if (n < 0 || n > max_arity_)
    throw std::out_of_range("family: arity out of declared range");
  return per_arity_[n];
}

const std::vector<Subgroup>& GSigmaFamily::generators(int n) const {
  return generators_[n];
}

std::vector<Subgroup> enumerate_graph_subgroups(GroupPtr g, int n) {
  GroupPtr amb = product_with_sym_op(g, n);
  long long f = factorial(n);
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  GroupPtr sym = symmetric_group(n);
  for (const Subgroup& h : enumerate_subgroups(g)) {
    // homomorphisms phi: H -> Sigma_n by assigning each member a permutation
    // and filtering; H is small, so brute force over |Sigma_n|^|gens| via
    // successive extension of partial maps on the member list.
    std::vector<int> hm = h.members;
    std::vector<int> phi(hm.size(), -1);
    std::vector<int> pos(g->size(), -1);
    for (size_t i = 0; i < hm.size(); ++i) pos[hm[i]] = static_cast<int>(i);
    // assign images in order; check all products defined so far
    auto emit = [&]() {
      std::vector<int> members;
      members.reserve(hm.size());
      for (size_t i = 0; i < hm.size(); ++i) {
        // Gamma = { (h, phi(h)^{-1}) }
        Perm p = perm_unrank(n, phi[i]);
        members.push_back(
            gsigma_encode(g->size(), n, hm[i], perm_inverse(p)));
      }
      std::sort(members.begin(), members.end());
      if (seen.insert(members).second)
        out.push_back(Subgroup{amb, std::move(members)});
    };
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == hm.size()) {
        emit();
        return;
      }
      if (hm[i] == g->id()) {
        phi[i] = static_cast<int>(perm_rank(perm_identity(n)));
        rec(i + 1);
        return;
      }
      for (long long r = 0; r < f; ++r) {
        phi[i] = static_cast<int>(r);
        bool ok = true;
        for (size_t j = 0; j <= i && ok; ++j) {
          for (size_t k = 0; k <= i && ok; ++k) {
            int prod = g->mul(hm[j], hm[k]);
            int pp = pos[prod];
            if (pp < 0 || static_cast<size_t>(pp) > i ||
                phi[static_cast<size_t>(pp)] < 0)
              continue;
            Perm a = perm_unrank(n, phi[j]);
            Perm b = perm_unrank(n, phi[k]);
            if (perm_rank(perm_compose(a, b)) != phi[pp]) ok = false;
          }
        }
        if (ok) rec(i + 1);
      }
    };
    rec(0);
  }
  // post-invariant: each Gamma is the graph of a homomorphism
  for (const Subgroup& gam : out) {
    std::set<int> firsts;
    for (int m : gam.members) {
      auto e = gsigma_decode(*amb, g->size(), n, m);
      if (!firsts.insert(e.g).second)
        throw std::logic_error("graph subgroup: first projection not injective");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> enumerate_graph_subgroups_bruteforce(GroupPtr g, int n) {
  GroupPtr amb = product_with_sym_op(g, n);
  long long f = factorial(n);
  std::vector<Subgroup> out;
  long long id_rank = perm_rank(perm_identity(n));
  for (const Subgroup& s : enumerate_subgroups(amb)) {
    bool graph = true;
    for (int m : s.members) {
      int gi = static_cast<int>(m / f);
      long long sr = m % f;
      if (gi == g->id() && sr != id_rank) {
        graph = false;
        break;
      }
    }
    if (graph) out.push_back(s);
  }
  return out;
}

std::optional<FamilyWitness> validate_family(
    GroupPtr g, const std::vector<std::vector<Subgroup>>& per_arity) {
  for (int n = 0; n < static_cast<int>(per_arity.size()); ++n) {
    if (per_arity[n].empty()) continue;
    GroupPtr amb = per_arity[n].front().parent;
    std::set<std::vector<int>> idx;
    for (const auto& s : per_arity[n]) idx.insert(s.members);
    for (const auto& s : per_arity[n]) {
      for (const auto& sub : enumerate_subgroups_of(s)) {
        if (!idx.count(sub.members))
          return FamilyWitness{n, s, sub, std::nullopt};
      }
      for (int x = 0; x < amb->size(); ++x) {
        auto c = conjugate_subgroup(s, x);
        if (!idx.count(c.members)) return FamilyWitness{n, s, c, x};
      }
    }
  }
  return std::nullopt;
}

std::optional<FamilyWitness> validate_family(const GSigmaFamily& f) {
  std::vector<std::vector<Subgroup>> per;
  for (int n = 0; n <= f.max_arity(); ++n) per.push_back(f.at(n));
  return validate_family(f.group(), per);
}

GSigmaFamily all_subgroups_family(GroupPtr g, int max_arity) {
  GSigmaFamily f(g, max_arity);
  for (int n = 0; n <= max_arity; ++n) f.add(n, full_subgroup(f.ambient(n)));
  return f;
}

GSigmaFamily graph_subgroup_family(GroupPtr g, int max_arity) {
  GSigmaFamily f(g, max_arity);
  for (int n = 0; n <= max_arity; ++n)
    for (const Subgroup& gam : enumerate_graph_subgroups(g, n)) f.add(n, gam);
  return f;
}

GSigmaFamily trivial_subgroups_family(GroupPtr g, int max_arity) {
  GSigmaFamily f(g, max_arity);
  for (int n = 0; n <= max_arity; ++n) f.add(n, trivial_subgroup(f.ambient(n)));
  return f;
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                     const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != g.size()) return false;
  for (int v : phi)
    if (v < 0 || v >= h.size()) return false;
  if (phi[g.id()] != h.id()) return false;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
  return true;
}

Subgroup map_subgroup(const Subgroup& h, GroupPtr target,
                      const std::vector<int>& phi) {
  std::set<int> img;
  for (int m : h.members) img.insert(phi[m]);
  return Subgroup{std::move(target),
                  std::vector<int>(img.begin(), img.end())};
}

GSigmaFamily pullback_family(GroupPtr g, const std::vector<int>& phi,
                             const GSigmaFamily& fbar) {
  GroupPtr gbar = fbar.group();
  if (!is_homomorphism(*g, *gbar, phi))
    throw std::invalid_argument("pullback_family: phi is not a homomorphism");
  GSigmaFamily out(g, fbar.max_arity());
  for (int n = 0; n <= fbar.max_arity(); ++n) {
    GroupPtr amb = out.ambient(n);
    GroupPtr ambbar = fbar.ambient(n);
    long long f = factorial(n);
    std::vector<int> ext(amb->size());
    for (int i = 0; i < amb->size(); ++i) {
      int gi = static_cast<int>(i / f);
      ext[i] = static_cast<int>(phi[gi] * f + (i % f));
    }
    for (const Subgroup& h : enumerate_subgroups(amb)) {
      if (fbar.contains(n, map_subgroup(h, ambbar, ext))) out.add(n, h);
    }
  }
  return out;
}

std::vector<Subgroup> meet_subgroup_collections(
    GroupPtr a, GroupPtr b, const std::function<bool(const Subgroup&)>& in_fa,
    const std::function<bool(const Subgroup&)>& in_fb) {
  GroupPtr prod = group_product(a, b);
  std::vector<Subgroup> out;
  for (const Subgroup& k : enumerate_subgroups(prod)) {
    if (in_fa(project_first(k, a, b)) && in_fb(project_second(k, a, b)))
      out.push_back(k);
  }
  return out;
}

Subgroup project_first(const Subgroup& k, GroupPtr a, GroupPtr b) {
  std::set<int> img;
  for (int m : k.members) img.insert(m / b->size());
  return Subgroup{a, std::vector<int>(img.begin(), img.end())};
}

Subgroup project_second(const Subgroup& k, GroupPtr a, GroupPtr b) {
  std::set<int> img;
  for (int m : k.members) img.insert(m % b->size());
  return Subgroup{b, std::vector<int>(img.begin(), img.end())};
}

}  // namespace eqop
