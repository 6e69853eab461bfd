#include "rosi/superclass.hpp"

#include <algorithm>
#include <numeric>

#include "rosi/error.hpp"

namespace rosi {

SuperClassFunction SuperClassFunction::constant(const Group& g, const Family& f,
                                                long long v) {
  SuperClassFunction n;
  n.values.assign(g.lattice().classes.size(), -1);
  for (int c : f.classIds) n.values[c] = v;
  return n;
}

Family SuperClassFunction::support(const Group& g) const {
  std::vector<int> ids;
  for (std::size_t c = 0; c < values.size(); ++c)
    if (values[c] >= 0) ids.push_back(static_cast<int>(c));
  return Family::from_ids(g, ids);
}

SuperClassFunction SuperClassFunction::scaled(long long k) const {
  SuperClassFunction n;
  n.values.reserve(values.size());
  for (auto v : values) n.values.push_back(v < 0 ? -1 : k * (v + 1) - 1);
  return n;
}

bool is_monotone(const Group& g, const SuperClassFunction& n) {
  const auto& lat = g.lattice();
  std::size_t nc = lat.classes.size();
  for (std::size_t h = 0; h < nc; ++h)
    for (std::size_t k = 0; k < nc; ++k)
      if (lat.leq[h][k] && n.values[k] > n.values[h]) return false;
  return true;
}

bool is_strictly_monotone(const Group& g, const SuperClassFunction& n) {
  if (!is_monotone(g, n)) return false;
  const auto& lat = g.lattice();
  std::size_t nc = lat.classes.size();
  for (std::size_t h = 0; h < nc; ++h)
    for (std::size_t k = 0; k < nc; ++k) {
      if (h == k || !lat.leq[h][k]) continue;
      if (n.values[h] >= 0 && n.values[k] >= 0 && n.values[k] >= n.values[h])
        return false;
    }
  return true;
}

bool closure_condition(const Group& g, const SuperClassFunction& n) {
  const auto& lat = g.lattice();
  // actual subgroups whose class carries a value
  std::vector<std::pair<DenseBitset, int>> subs;
  for (const auto& kv : lat.classOfSubgroup)
    if (n.values[kv.second] >= 0) subs.emplace_back(kv.first, kv.second);
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
    if (a.first.count() != b.first.count()) return a.first.count() < b.first.count();
    return a.first.member_lex_less(b.first);
  });

  for (const auto& [hBits, hCls] : subs) {
    long long v = n.values[hCls];
    // supergroups of H with the same value
    std::vector<std::size_t> sup;
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (n.values[subs[i].second] == v && hBits.subset_of(subs[i].first))
        sup.push_back(i);
    for (std::size_t a = 0; a < sup.size(); ++a)
      for (std::size_t b = a + 1; b < sup.size(); ++b) {
        const auto& kBits = subs[sup[a]].first;
        const auto& lBits = subs[sup[b]].first;
        if (kBits.subset_of(lBits) || lBits.subset_of(kBits)) continue;
        Subgroup k = g.subgroup_from_members(kBits);
        auto gens = k.gens;
        Subgroup l = g.subgroup_from_members(lBits);
        gens.insert(gens.end(), l.gens.begin(), l.gens.end());
        Subgroup join = g.subgroup_generated(gens);
        int jc = lat.class_of(join.members);
        if (jc < 0 || n.values[jc] != v) return false;
      }
  }
  return true;
}

std::vector<long long> distinct_values_desc(const SuperClassFunction& n) {
  std::vector<long long> vals;
  for (auto v : n.values)
    if (v >= 0) vals.push_back(v);
  std::sort(vals.rbegin(), vals.rend());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::vector<LevelComponent> level_components(const Group& g,
                                             const SuperClassFunction& n, int level) {
  if (!closure_condition(g, n))
    throw Error(Err::MaximalNotUnique,
                "level components require the closure condition");
  auto vals = distinct_values_desc(n);
  if (level < 0 || static_cast<std::size_t>(level) >= vals.size())
    throw Error(Err::ParseError, "level index out of range");
  long long v = vals[level];

  const auto& lat = g.lattice();
  std::vector<int> ids;
  for (std::size_t c = 0; c < n.values.size(); ++c)
    if (n.values[c] == v) ids.push_back(static_cast<int>(c));

  // union-find over comparability
  std::vector<int> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if (lat.leq[ids[a]][ids[b]] || lat.leq[ids[b]][ids[a]])
        parent[find(static_cast<int>(a))] = find(static_cast<int>(b));

  std::map<int, LevelComponent> comps;
  for (std::size_t a = 0; a < ids.size(); ++a)
    comps[find(static_cast<int>(a))].classIds.push_back(ids[a]);

  std::vector<LevelComponent> out;
  for (auto& [root, comp] : comps) {
    std::sort(comp.classIds.begin(), comp.classIds.end());
    std::vector<int> maximal;
    for (int c : comp.classIds) {
      bool isMax = true;
      for (int c2 : comp.classIds)
        if (c2 != c && lat.leq[c][c2]) {
          isMax = false;
          break;
        }
      if (isMax) maximal.push_back(c);
    }
    if (maximal.size() != 1)
      throw Error(Err::MaximalNotUnique, "level component has no unique maximal class");
    comp.maximalClass = maximal[0];
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const LevelComponent& a, const LevelComponent& b) {
    return a.classIds < b.classIds;
  });
  return out;
}

long long q_period_multiple(const Group& w, int q) {
  Subgroup sq = sylow(w, q);
  if (sq.order == 1) return 2;
  int rank = p_rank(w, w.full_subgroup(), q);
  if (rank >= 2)
    throw Error(Err::RankTooLarge, "q-period needs rk_q(W) <= 1");

  bool cyclic = false;
  for (auto m : sq.members.members())
    if (static_cast<std::uint64_t>(w.element_order(m)) == sq.order) {
      cyclic = true;
      break;
    }
  Subgroup n = normalizer(w, sq);
  Subgroup c = centralizer_in(w, n, sq.gens);
  long long twist = 2 * static_cast<long long>(n.order / c.order);
  if (cyclic) return twist;
  // rank-one 2-group that is not cyclic: generalized quaternion
  return std::lcm<long long>(4, twist);
}

long long rank_one_period_lcm(const Group& g) {
  long long m = 1;
  for (int q : prime_divisors(g.order()))
    if (p_rank(g, g.full_subgroup(), q) == 1)
      m = std::lcm(m, q_period_multiple(g, q));
  return m;
}

int longest_chain_length(const Group& g, const Family& f, bool countObjects) {
  const auto& lat = g.lattice();
  // DP over classes ordered by subgroup order
  std::vector<int> ids = f.classIds;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return lat.classes[a].order < lat.classes[b].order;
  });
  std::map<int, int> depth;
  int best = 0;
  for (int c : ids) {
    int d = 0;
    for (int c2 : ids) {
      if (c2 == c) continue;
      if (lat.leq[c2][c] && !(lat.leq[c][c2])) d = std::max(d, depth[c2] + 1);
    }
    depth[c] = d;
    best = std::max(best, d);
  }
  return countObjects ? best + 1 : best;
}

} // namespace rosi
