#include "rosi/classfun.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rosi/error.hpp"

namespace rosi {

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  for (std::size_t i = 0; i < byClass.size(); ++i) byClass[i] += o.byClass[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  for (std::size_t i = 0; i < byClass.size(); ++i) byClass[i] -= o.byClass[i];
  return *this;
}

ClassFunction constant_function(const Group& q, long long v) {
  ClassFunction f;
  f.parent = q;
  f.byClass.assign(q.num_element_classes(), v);
  return f;
}

ClassFunction perm_character(const Group& q, const Subgroup& k) {
  if (!k.members.subset_of(q.full_subgroup().members) || k.order == 0)
    throw Error(Err::NotASubgroup, "K is not a subgroup of Q");
  // coset structure of K in Q
  std::vector<std::int64_t> cosetIdx(q.order(), -1);
  std::vector<std::uint32_t> reps;
  auto km = k.members.members();
  for (std::uint32_t m = 0; m < q.order(); ++m) {
    if (cosetIdx[m] != -1) continue;
    auto cid = static_cast<std::int64_t>(reps.size());
    for (auto x : km) cosetIdx[q.mult(m, x)] = cid;
    reps.push_back(m);
  }
  ClassFunction f;
  f.parent = q;
  f.byClass.assign(q.num_element_classes(), 0);
  for (int c = 0; c < q.num_element_classes(); ++c) {
    std::uint32_t x = q.element_classes()[c][0];
    long long fixed = 0;
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (cosetIdx[q.mult(x, reps[j])] == static_cast<std::int64_t>(j)) ++fixed;
    f.byClass[c] = fixed;
  }
  return f;
}

ClassFunction augmented_perm_character(const Group& q, const Subgroup& k) {
  ClassFunction f = perm_character(q, k);
  for (auto& v : f.byClass) v -= 1;
  return f;
}

long long fixed_dim(const ClassFunction& chi, const Subgroup& h) {
  long long sum = 0;
  for (auto m : h.members.members()) sum += chi.at_element(m);
  if (sum % static_cast<long long>(h.order) != 0)
    throw Error(Err::NonIntegralInnerProduct,
                "inner product with the trivial character is not integral");
  return sum / static_cast<long long>(h.order);
}

long long norm_squared(const ClassFunction& chi) {
  long long sum = 0;
  for (std::uint32_t x = 0; x < chi.parent.order(); ++x) {
    long long v = chi.at_element(x);
    sum += v * v;
  }
  return sum / static_cast<long long>(chi.parent.order());
}

bool respects_fusion(const Group& g, const Group& sylowView, const ClassFunction& chi) {
  std::map<int, long long> valueOfGClass;
  for (std::uint32_t x = 0; x < sylowView.order(); ++x) {
    auto gi = g.index_of(sylowView.element(x));
    if (!gi)
      throw Error(Err::NotASubgroup, "Sylow view element missing in G");
    int gc = g.class_of_element(*gi);
    long long v = chi.at_element(x);
    auto [it, inserted] = valueOfGClass.emplace(gc, v);
    if (!inserted && it->second != v) return false;
  }
  return true;
}

std::vector<Subgroup> rank_two_elementary_subgroups(const Group& q, int p) {
  std::vector<std::uint32_t> orderP;
  for (std::uint32_t x = 0; x < q.order(); ++x)
    if (q.element_order(x) == p) orderP.push_back(x);
  std::vector<Subgroup> out;
  std::unordered_map<DenseBitset, char, DenseBitsetHash> seen;
  for (std::size_t i = 0; i < orderP.size(); ++i)
    for (std::size_t j = i + 1; j < orderP.size(); ++j) {
      std::uint32_t x = orderP[i], y = orderP[j];
      if (q.mult(x, y) != q.mult(y, x)) continue;
      Subgroup e = q.subgroup_generated({x, y});
      if (e.order != static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p))
        continue;
      if (seen.emplace(e.members, 1).second) out.push_back(std::move(e));
    }
  return out;
}

bool p_effective(const Group& g, const Group& sylowView, const ClassFunction& chi,
                 int p) {
  if (p_rank(g, g.full_subgroup(), p) != 2)
    throw Error(Err::RankMismatch, "p-effectiveness requires rk_p(G) = 2");
  for (const auto& e : rank_two_elementary_subgroups(sylowView, p))
    if (fixed_dim(chi, e) != 0) return false;
  return true;
}

long long double_coset_count(const Group& q, const Subgroup& e, const Subgroup& k) {
  DenseBitset seen(q.order());
  long long count = 0;
  auto em = e.members.members();
  auto km = k.members.members();
  for (std::uint32_t x = 0; x < q.order(); ++x) {
    if (seen.test(x)) continue;
    ++count;
    for (auto a : em)
      for (auto b : km) seen.set(q.mult(q.mult(a, x), b));
  }
  return count;
}

bool one_double_coset_per_rank_two(const Group& q, const Subgroup& k, int p) {
  for (const auto& e : rank_two_elementary_subgroups(q, p))
    if (double_coset_count(q, e, k) != 1) return false;
  return true;
}

namespace {

bool isotropy_rank_conditions_ok(const Group& g, const SylowRepresentation& rep) {
  const auto& lat = g.lattice();
  auto dims = fixed_dims_by_class(g, rep);
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    if (dims[c] <= 0 || lat.classes[c].order == 1) continue;
    Subgroup n = normalizer(g, lat.classes[c].rep);
    Quotient q = quotient(g, n, lat.classes[c].rep);
    for (int qp : prime_divisors(q.group.order())) {
      if (qp == rep.p) continue;
      if (p_rank(q.group, q.group.full_subgroup(), qp) > 1) return false;
    }
  }
  return true;
}

} // namespace

std::optional<SylowRepresentation> build_effective_character(const Group& g, int p) {
  if (p_rank(g, g.full_subgroup(), p) != 2)
    throw Error(Err::RankMismatch, "construction requires rk_p(G) = 2");
  Subgroup syl = sylow(g, p);
  Group view = as_group(g, syl);

  bool elementaryAbelian = view.is_abelian();
  if (elementaryAbelian)
    for (std::uint32_t x = 1; x < view.order(); ++x)
      if (view.element_order(x) != p) {
        elementaryAbelian = false;
        break;
      }
  if (!elementaryAbelian) return std::nullopt;

  // rank-one subgroups of the Sylow subgroup, keyed by their G-class
  struct RankOne {
    Subgroup inView;
    int gClass;
  };
  std::vector<RankOne> subs;
  {
    std::unordered_map<DenseBitset, char, DenseBitsetHash> seen;
    for (std::uint32_t x = 1; x < view.order(); ++x) {
      if (view.element_order(x) != p) continue;
      Subgroup s = view.subgroup_generated({x});
      if (!seen.emplace(s.members, 1).second) continue;
      auto gi = g.index_of(view.element(x));
      Subgroup inG = g.subgroup_generated({*gi});
      int cls = g.lattice().class_of(inG.members);
      subs.push_back(RankOne{std::move(s), cls});
    }
  }
  std::map<int, std::vector<int>> orbit; // G-class -> indices into subs
  for (std::size_t i = 0; i < subs.size(); ++i)
    orbit[subs[i].gClass].push_back(static_cast<int>(i));

  std::vector<int> orbitKeys;
  for (auto& [k, v] : orbit) orbitKeys.push_back(k);

  struct Candidate {
    std::size_t total;
    std::vector<int> keys;
  };
  std::vector<Candidate> cands;
  for (std::uint32_t mask = 1; mask < (1u << orbitKeys.size()); ++mask) {
    Candidate c;
    c.total = 0;
    for (std::size_t i = 0; i < orbitKeys.size(); ++i)
      if (mask & (1u << i)) {
        c.keys.push_back(orbitKeys[i]);
        c.total += orbit[orbitKeys[i]].size();
      }
    cands.push_back(std::move(c));
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.total != b.total) return a.total < b.total;
    return a.keys < b.keys;
  });

  for (const auto& cand : cands) {
    ClassFunction chi = constant_function(view, 0);
    std::vector<std::string> labels;
    for (int key : cand.keys) {
      labels.push_back(g.lattice().classes[key].label);
      for (int si : orbit[key]) {
        ClassFunction part = augmented_perm_character(view, subs[si].inView);
        chi += part;
      }
    }
    if (!respects_fusion(g, view, chi)) continue;
    if (!p_effective(g, view, chi, p)) continue;
    SylowRepresentation rep;
    rep.p = p;
    rep.sylow = syl;
    rep.sylowView = view;
    rep.character = std::move(chi);
    rep.multiplicity = 1;
    rep.familyLabels = std::move(labels);
    rep.source = "permFamily";
    if (!isotropy_rank_conditions_ok(g, rep)) continue;
    return rep;
  }
  return std::nullopt;
}

std::optional<SylowRepresentation> search_virtual_effective(const Group& g, int p,
                                                            int maxCoefSum) {
  if (p_rank(g, g.full_subgroup(), p) != 2)
    throw Error(Err::RankMismatch, "construction requires rk_p(G) = 2");
  Subgroup syl = sylow(g, p);
  Group view = as_group(g, syl);
  const auto& vlat = view.lattice();
  std::size_t m = vlat.classes.size();

  std::vector<ClassFunction> permChars;
  permChars.reserve(m);
  for (std::size_t c = 0; c < m; ++c)
    permChars.push_back(perm_character(view, vlat.classes[c].rep));

  // rank-2 elementary abelian classes of the Sylow subgroup
  std::vector<int> rankTwoClasses;
  std::uint64_t p2 = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p);
  for (std::size_t c = 0; c < m; ++c) {
    if (vlat.classes[c].order != p2) continue;
    bool elem = true;
    for (auto x : vlat.classes[c].rep.members.members())
      if (x != 0 && view.element_order(x) != p) {
        elem = false;
        break;
      }
    Group sub = as_group(view, vlat.classes[c].rep);
    if (elem && sub.is_abelian()) rankTwoClasses.push_back(static_cast<int>(c));
  }

  // G-fusion classes of Sylow elements
  std::vector<int> gClassOfElem(view.order());
  for (std::uint32_t x = 0; x < view.order(); ++x)
    gClassOfElem[x] = g.class_of_element(*g.index_of(view.element(x)));

  std::vector<long long> coef(m, 0);
  std::vector<long long> chiVals(view.num_element_classes());

  auto check = [&]() -> bool {
    for (int c = 0; c < view.num_element_classes(); ++c) {
      chiVals[c] = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (coef[j] != 0) chiVals[c] += coef[j] * permChars[j].byClass[c];
    }
    long long deg = chiVals[view.class_of_element(0)];
    if (deg < 1) return false;
    for (auto v : chiVals)
      if (v > deg || v < -deg) return false;
    // fusion
    std::map<int, long long> seen;
    for (std::uint32_t x = 0; x < view.order(); ++x) {
      long long v = chiVals[view.class_of_element(x)];
      auto [it, ins] = seen.emplace(gClassOfElem[x], v);
      if (!ins && it->second != v) return false;
    }
    // fixed dimensions at every subgroup class: integral, >= 0, zero on
    // rank-2 elementary abelian classes, monotone
    std::vector<long long> d(m);
    for (std::size_t c = 0; c < m; ++c) {
      long long sum = 0;
      for (auto x : vlat.classes[c].rep.members.members())
        sum += chiVals[view.class_of_element(x)];
      if (sum % static_cast<long long>(vlat.classes[c].order) != 0) return false;
      d[c] = sum / static_cast<long long>(vlat.classes[c].order);
      if (d[c] < 0) return false;
    }
    for (int c : rankTwoClasses)
      if (d[c] != 0) return false;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (vlat.leq[a][b] && d[b] > d[a]) return false;
    return true;
  };

  std::optional<SylowRepresentation> result;
  auto accept = [&]() -> bool {
    if (!check()) return false;
    ClassFunction chi;
    chi.parent = view;
    chi.byClass = chiVals;
    SylowRepresentation rep;
    rep.p = p;
    rep.sylow = syl;
    rep.sylowView = view;
    rep.character = std::move(chi);
    rep.multiplicity = 1;
    rep.source = "virtualSearch";
    if (!isotropy_rank_conditions_ok(g, rep)) return false;
    result = std::move(rep);
    return true;
  };

  // enumerate coefficient vectors by total |coef|, then per-coordinate with
  // values 0, 1, -1, 2, -2, ...
  std::function<bool(std::size_t, int)> rec = [&](std::size_t pos, int budget) -> bool {
    if (pos == m) {
      if (budget != 0) return false;
      return accept();
    }
    for (int mag = 0; mag <= budget; ++mag) {
      for (int sign = 0; sign < (mag == 0 ? 1 : 2); ++sign) {
        coef[pos] = sign == 0 ? mag : -mag;
        if (rec(pos + 1, budget - mag)) return true;
      }
    }
    coef[pos] = 0;
    return false;
  };

  for (int total = 1; total <= maxCoefSum; ++total)
    if (rec(0, total)) return result;
  return std::nullopt;
}

std::vector<long long> fixed_dims_by_class(const Group& g,
                                           const SylowRepresentation& rep) {
  if (!respects_fusion(g, rep.sylowView, rep.character))
    throw Error(Err::FusionViolation, "character does not respect fusion");
  const auto& lat = g.lattice();
  std::vector<long long> dims(lat.classes.size(), 0);
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    const auto& info = lat.classes[c];
    if (info.order == 1) {
      dims[c] = rep.character.degree() * rep.multiplicity;
      continue;
    }
    std::uint64_t o = info.order;
    while (o % static_cast<std::uint64_t>(rep.p) == 0)
      o /= static_cast<std::uint64_t>(rep.p);
    if (o != 1) continue; // not a p-subgroup
    // find a conjugate inside the Sylow subgroup
    bool found = false;
    for (std::uint32_t t = 0; t < g.order() && !found; ++t) {
      bool inside = true;
      for (auto s : info.rep.gens)
        if (!rep.sylow.members.test(g.conj(t, s))) {
          inside = false;
          break;
        }
      if (!inside) continue;
      std::vector<std::uint32_t> viewGens;
      for (auto s : info.rep.gens)
        viewGens.push_back(*rep.sylowView.index_of(g.element(g.conj(t, s))));
      Subgroup hv = rep.sylowView.subgroup_generated(viewGens);
      dims[c] = fixed_dim(rep.character, hv) * rep.multiplicity;
      found = true;
    }
    if (!found)
      throw Error(Err::NotASubgroup, "p-subgroup has no conjugate in the Sylow subgroup");
  }
  return dims;
}

Family isotropy_of(const Group& g, const SylowRepresentation& rep) {
  auto dims = fixed_dims_by_class(g, rep);
  std::vector<int> ids;
  for (std::size_t c = 0; c < dims.size(); ++c)
    if (dims[c] > 0) ids.push_back(static_cast<int>(c));
  return Family::from_ids(g, ids);
}

} // namespace rosi
