#include "rosi/isotropy.hpp"

#include <algorithm>
#include <functional>

#include "rosi/builtins.hpp"
#include "rosi/error.hpp"

namespace rosi {

bool Family::contains(int classId) const {
  return std::binary_search(classIds.begin(), classIds.end(), classId);
}

Family Family::from_ids(const Group& g, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Family f;
  f.classIds = std::move(ids);
  if (!f.is_closed(g))
    throw Error(Err::FamilyNotClosed, "family is not closed under subgroups");
  return f;
}

Family Family::down_closure(const Group& g, const std::vector<int>& ids) {
  const auto& lat = g.lattice();
  std::vector<int> all;
  for (int c : ids)
    for (int b : lat.below[c]) all.push_back(b);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Family f;
  f.classIds = std::move(all);
  return f;
}

bool Family::is_closed(const Group& g) const {
  const auto& lat = g.lattice();
  for (int c : classIds)
    for (int b : lat.below[c])
      if (!contains(b)) return false;
  return true;
}

Family Family::united(const Family& other) const {
  Family f;
  f.classIds = classIds;
  f.classIds.insert(f.classIds.end(), other.classIds.begin(), other.classIds.end());
  std::sort(f.classIds.begin(), f.classIds.end());
  f.classIds.erase(std::unique(f.classIds.begin(), f.classIds.end()),
                   f.classIds.end());
  return f;
}

int RankProfile::max_rank() const {
  int m = 0;
  for (auto& [p, r] : perPrime) m = std::max(m, r);
  return m;
}

namespace {

// Largest k such that an elementary abelian p-subgroup of rank k sits inside
// the given p-group (subgroup of g).
int elementary_rank(const Group& g, const Subgroup& s, int p) {
  std::vector<std::uint32_t> orderP;
  for (auto m : s.members.members())
    if (g.element_order(m) == p) orderP.push_back(m);
  if (orderP.empty()) return 0;

  int best = 1;
  std::vector<std::uint32_t> chosen;
  DenseBitset cur(g.order());

  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t i = start; i < orderP.size(); ++i) {
      std::uint32_t x = orderP[i];
      if (!chosen.empty() && cur.test(x)) continue;
      bool commutes = true;
      for (auto c : chosen)
        if (g.mult(c, x) != g.mult(x, c)) {
          commutes = false;
          break;
        }
      if (!commutes) continue;
      auto saved = cur;
      chosen.push_back(x);
      cur = g.subgroup_generated(chosen).members;
      dfs(i + 1);
      chosen.pop_back();
      cur = saved;
    }
  };
  chosen.reserve(8);
  dfs(0);
  return best;
}

} // namespace

int p_rank(const Group& g, const Subgroup& h, int p) {
  Subgroup s = sylow_in(g, h, p);
  if (s.order == 1) return 0;
  return elementary_rank(g, s, p);
}

RankProfile rank_profile(const Group& g) {
  RankProfile rp;
  for (int p : prime_divisors(g.order())) {
    int r = p_rank(g, g.full_subgroup(), p);
    rp.perPrime[p] = r;
    if (r == 2) rp.rankTwoPrimes.push_back(p);
  }
  return rp;
}

Family rank_one_family(const Group& g, int p) {
  const auto& lat = g.lattice();
  std::vector<int> ids;
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    const auto& info = lat.classes[c];
    std::uint64_t o = info.order;
    bool ppower = true;
    while (o % static_cast<std::uint64_t>(p) == 0) o /= static_cast<std::uint64_t>(p);
    ppower = (o == 1);
    if (!ppower) continue;
    if (info.order == 1 || p_rank(g, info.rep, p) <= 1)
      ids.push_back(static_cast<int>(c));
  }
  return Family::from_ids(g, ids);
}

std::optional<QdWitness> involves_qd(const Group& g, int p, std::uint64_t orderBound) {
  std::uint64_t pp = static_cast<std::uint64_t>(p);
  std::uint64_t qdOrder = pp * pp * pp * (pp * pp - 1);
  // Qd(p) <= N/K with K of p'-order requires p^3 | |G|.
  if (p_valuation(g.order(), p) < 3) return std::nullopt;

  Group qdGroup = make_builtin("Qd" + std::to_string(p));
  const auto& lat = g.lattice();
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    const auto& info = lat.classes[c];
    if (info.order % pp == 0) continue; // only p'-subgroups K
    std::uint64_t nOrder = g.order() / info.classSize; // |N_G(K)|
    std::uint64_t wOrder = nOrder / info.order;
    if (wOrder % qdOrder != 0) continue;

    Group w = g;
    if (info.order > 1) {
      Subgroup n = normalizer(g, info.rep);
      w = quotient(g, n, info.rep).group;
    }
    if (w.order() > orderBound)
      throw Error(Err::OrderBoundExceeded, "quotient exceeds order bound");
    const auto& wlat = w.lattice();
    for (std::size_t d = 0; d < wlat.classes.size(); ++d) {
      if (wlat.classes[d].order != qdOrder) continue;
      if (is_isomorphic(as_group(w, wlat.classes[d].rep), qdGroup)) {
        QdWitness wit;
        wit.kClassId = static_cast<int>(c);
        wit.kClassLabel = info.label;
        wit.kOrder = info.order;
        wit.wOrder = w.order();
        wit.wClassLabel = wlat.classes[d].label;
        return wit;
      }
    }
  }
  return std::nullopt;
}

HypothesisReport check_rank_one_hypotheses(const Group& g) {
  HypothesisReport r;
  r.profile = rank_profile(g);
  r.rankOk = r.profile.max_rank() <= 2;
  r.swanRoute = r.profile.max_rank() <= 1;
  r.singleRankTwoPrime = r.profile.rankTwoPrimes.size() == 1 && r.rankOk;

  r.qdOk = true;
  for (int p : r.profile.rankTwoPrimes) {
    if (p == 2) continue;
    QdVerdict v;
    v.p = p;
    v.witness = involves_qd(g, p);
    if (v.witness) r.qdOk = false;
    r.qd.push_back(std::move(v));
  }

  r.normalizerOk = true;
  for (int p : r.profile.rankTwoPrimes) {
    Family hp = rank_one_family(g, p);
    const auto& lat = g.lattice();
    for (int c : hp.classIds) {
      const auto& info = lat.classes[c];
      if (info.order == 1) continue;
      Subgroup n = normalizer(g, info.rep);
      Quotient q = quotient(g, n, info.rep);
      for (int qp : prime_divisors(q.group.order())) {
        if (qp == p) continue;
        NormalizerRankEntry e;
        e.p = p;
        e.classId = c;
        e.classLabel = info.label;
        e.normalizerOrder = n.order;
        e.quotientOrder = q.group.order();
        e.q = qp;
        e.rank = p_rank(q.group, q.group.full_subgroup(), qp);
        e.ok = e.rank <= 1;
        if (!e.ok) {
          r.normalizerOk = false;
          r.failingClasses.push_back(c);
        }
        r.normalizerRanks.push_back(std::move(e));
      }
    }
  }
  std::sort(r.failingClasses.begin(), r.failingClasses.end());
  r.failingClasses.erase(std::unique(r.failingClasses.begin(), r.failingClasses.end()),
                         r.failingClasses.end());
  r.pass = r.rankOk && r.qdOk && r.normalizerOk;
  return r;
}

NecessaryReport check_smith_necessary(const Group& g, const Family& iso,
                                      const std::vector<long long>& dims) {
  (void)dims;
  if (!iso.is_closed(g))
    throw Error(Err::FamilyNotClosed, "isotropy family is not closed");
  const auto& lat = g.lattice();
  for (int c : iso.classIds) {
    auto ps = prime_divisors(lat.classes[c].order);
    if (ps.size() > 1)
      throw Error(Err::FamilyNotClosed,
                  "isotropy family contains a composite-order subgroup");
  }

  NecessaryReport rep;
  auto primeOf = [&](int c) {
    auto ps = prime_divisors(lat.classes[c].order);
    return ps.empty() ? 0 : ps[0];
  };

  for (int p : prime_divisors(g.order())) {
    // maximal p-members of the family
    for (int c : iso.classIds) {
      std::uint64_t o = lat.classes[c].order;
      if (o != 1 && primeOf(c) != p) continue;
      bool maximal = true;
      for (int c2 : iso.classIds) {
        if (c2 == c) continue;
        std::uint64_t o2 = lat.classes[c2].order;
        if (o2 == 1 || (o2 > 1 && primeOf(c2) == p)) {
          if (lat.leq[c][c2] && o2 > o) {
            maximal = false;
            break;
          }
        }
      }
      if (!maximal) continue;
      Subgroup n = normalizer(g, lat.classes[c].rep);
      Quotient q = quotient(g, n, lat.classes[c].rep);
      int rk = p_rank(q.group, q.group.full_subgroup(), p);
      if (rk > 1)
        rep.violations.push_back(
            NecessaryViolation{1, c, lat.classes[c].label, p, p, rk});
    }
  }

  for (int c : iso.classIds) {
    if (lat.classes[c].order == 1) continue;
    int p = primeOf(c);
    Subgroup n = normalizer(g, lat.classes[c].rep);
    Quotient q = quotient(g, n, lat.classes[c].rep);
    for (int qp : prime_divisors(q.group.order())) {
      if (qp == p) continue;
      int rk = p_rank(q.group, q.group.full_subgroup(), qp);
      if (rk > 1)
        rep.violations.push_back(
            NecessaryViolation{2, c, lat.classes[c].label, p, qp, rk});
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

} // namespace rosi
