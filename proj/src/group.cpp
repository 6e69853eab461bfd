#include "rosi/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "rosi/error.hpp"

namespace rosi {

namespace {
constexpr std::uint64_t kMultTableMax = 3000;
}

struct Group::Data {
  std::size_t degree = 0;
  std::uint64_t orderBound = Group::kDefaultOrderBound;
  std::vector<Perm> gens;
  std::vector<std::uint32_t> genIdx;
  std::vector<Perm> elems;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<std::uint32_t> invIdx;
  std::vector<int> elemOrd;
  bool hasTable = false;
  std::vector<std::uint16_t> table;
  std::vector<int> classOfElem;
  std::vector<std::vector<std::uint32_t>> elemClasses;
  bool abelian = false;
  DenseBitset fullBits;

  mutable std::once_flag latOnce;
  mutable std::unique_ptr<SubgroupLattice> lat;

  std::uint32_t n() const { return static_cast<std::uint32_t>(elems.size()); }

  std::uint32_t mult(std::uint32_t a, std::uint32_t b) const {
    if (hasTable) return table[static_cast<std::size_t>(a) * elems.size() + b];
    return index.at(compose(elems[a], elems[b]));
  }
  std::uint32_t inv(std::uint32_t a) const { return invIdx[a]; }
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const {
    return mult(mult(invIdx[g], x), g);
  }
  std::uint32_t power(std::uint32_t x, std::uint64_t k) const {
    std::uint32_t r = 0;
    while (k--) r = mult(r, x);
    return r;
  }

  struct ClosureResult {
    DenseBitset bits;
    std::vector<std::uint32_t> members; // in BFS order
  };

  // Subgroup generated by the given element indices. When earlyFull is set,
  // bails out to the whole group as soon as more than half the elements are
  // reached (a proper subgroup has index >= 2).
  ClosureResult closure_indices(const std::vector<std::uint32_t>& g,
                                bool earlyFull) const {
    ClosureResult r;
    r.bits = DenseBitset(elems.size());
    r.bits.set(0);
    r.members.push_back(0);
    for (std::size_t qi = 0; qi < r.members.size(); ++qi) {
      std::uint32_t m = r.members[qi];
      for (auto gi : g) {
        std::uint32_t t = mult(m, gi);
        if (!r.bits.test(t)) {
          r.bits.set(t);
          r.members.push_back(t);
          if (earlyFull && r.members.size() * 2 > elems.size()) {
            r.bits = fullBits;
            r.members.resize(elems.size());
            std::iota(r.members.begin(), r.members.end(), 0u);
            return r;
          }
        }
      }
    }
    return r;
  }

  std::vector<std::uint32_t> small_gens(const DenseBitset& bits,
                                        std::uint64_t size) const {
    std::vector<std::uint32_t> g;
    if (size <= 1) return g;
    auto mem = bits.members();
    DenseBitset cur(elems.size());
    cur.set(0);
    std::uint64_t curSize = 1;
    for (auto m : mem) {
      if (cur.test(m)) continue;
      g.push_back(m);
      auto c = closure_indices(g, false);
      cur = c.bits;
      curSize = c.members.size();
      if (curSize == size) break;
    }
    return g;
  }

  DenseBitset conj_subgroup_bits(const DenseBitset& h, std::uint32_t g) const {
    DenseBitset r(elems.size());
    for (auto m : h.members()) r.set(conj(g, m));
    return r;
  }

  void build_lattice() const;
};

Group Group::closure(std::size_t degree, std::vector<Perm> generators,
                     std::uint64_t orderBound) {
  if (degree == 0) throw Error(Err::ParseError, "degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw Error(Err::DegreeMismatch, "generator degree mismatch");
    if (!g.is_valid())
      throw Error(Err::ParseError, "generator is not a permutation");
  }
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->orderBound = orderBound;
  d->gens = std::move(generators);

  d->elems.push_back(Perm::identity(degree));
  d->index.emplace(d->elems[0], 0u);
  for (std::size_t qi = 0; qi < d->elems.size(); ++qi) {
    Perm cur = d->elems[qi];
    for (const auto& g : d->gens) {
      Perm p = compose(cur, g);
      if (d->index.find(p) == d->index.end()) {
        auto idx = static_cast<std::uint32_t>(d->elems.size());
        d->index.emplace(p, idx);
        d->elems.push_back(std::move(p));
        if (d->elems.size() > orderBound)
          throw Error(Err::OrderBoundExceeded, "group order exceeds bound");
      }
    }
  }

  std::uint32_t n = d->n();
  d->fullBits = DenseBitset(n);
  for (std::uint32_t i = 0; i < n; ++i) d->fullBits.set(i);

  d->invIdx.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    d->invIdx[i] = d->index.at(inverse(d->elems[i]));

  if (n <= kMultTableMax) {
    d->table.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        d->table[static_cast<std::size_t>(a) * n + b] =
            static_cast<std::uint16_t>(d->index.at(compose(d->elems[a], d->elems[b])));
    d->hasTable = true;
  }

  d->elemOrd.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) d->elemOrd[i] = perm_order(d->elems[i]);

  d->genIdx.clear();
  for (const auto& g : d->gens) d->genIdx.push_back(d->index.at(g));

  // conjugacy classes of elements
  d->classOfElem.assign(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (d->classOfElem[i] != -1) continue;
    int cid = static_cast<int>(d->elemClasses.size());
    std::vector<std::uint32_t> orbit{i};
    d->classOfElem[i] = cid;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (auto g : d->genIdx) {
        std::uint32_t y = d->conj(g, orbit[qi]);
        if (d->classOfElem[y] == -1) {
          d->classOfElem[y] = cid;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    d->elemClasses.push_back(std::move(orbit));
  }

  d->abelian = true;
  for (std::size_t a = 0; a < d->genIdx.size() && d->abelian; ++a)
    for (std::size_t b = a + 1; b < d->genIdx.size(); ++b)
      if (d->mult(d->genIdx[a], d->genIdx[b]) != d->mult(d->genIdx[b], d->genIdx[a])) {
        d->abelian = false;
        break;
      }

  Group g;
  g.d_ = std::move(d);
  return g;
}

std::size_t Group::degree() const { return d_->degree; }
std::uint64_t Group::order() const { return d_->elems.size(); }
const std::vector<Perm>& Group::generators() const { return d_->gens; }
const Perm& Group::element(std::uint32_t i) const { return d_->elems[i]; }

std::optional<std::uint32_t> Group::index_of(const Perm& p) const {
  auto it = d_->index.find(p);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Group::mult(std::uint32_t a, std::uint32_t b) const { return d_->mult(a, b); }
std::uint32_t Group::inv(std::uint32_t a) const { return d_->inv(a); }
std::uint32_t Group::conj(std::uint32_t g, std::uint32_t x) const { return d_->conj(g, x); }
int Group::element_order(std::uint32_t a) const { return d_->elemOrd[a]; }

int Group::num_element_classes() const { return static_cast<int>(d_->elemClasses.size()); }
int Group::class_of_element(std::uint32_t a) const { return d_->classOfElem[a]; }
const std::vector<std::vector<std::uint32_t>>& Group::element_classes() const {
  return d_->elemClasses;
}

Subgroup Group::trivial_subgroup() const {
  Subgroup s;
  s.members = DenseBitset(order());
  s.members.set(0);
  s.order = 1;
  return s;
}

Subgroup Group::full_subgroup() const {
  Subgroup s;
  s.members = d_->fullBits;
  s.order = order();
  s.gens = d_->genIdx;
  return s;
}

Subgroup Group::subgroup_generated(const std::vector<std::uint32_t>& genIdx) const {
  auto c = d_->closure_indices(genIdx, false);
  Subgroup s;
  s.members = std::move(c.bits);
  s.order = c.members.size();
  s.gens = d_->small_gens(s.members, s.order);
  return s;
}

Subgroup Group::subgroup_from_members(const DenseBitset& members) const {
  Subgroup s;
  s.members = members;
  s.order = members.count();
  s.gens = d_->small_gens(members, s.order);
  // sanity: closed under the group operation
  auto c = d_->closure_indices(s.gens, false);
  if (c.members.size() != s.order || !c.bits.subset_of(members))
    throw Error(Err::NotASubgroup, "member set is not closed");
  return s;
}

Subgroup Group::conjugate_subgroup(const Subgroup& h, std::uint32_t g) const {
  Subgroup s;
  s.members = d_->conj_subgroup_bits(h.members, g);
  s.order = h.order;
  s.gens.reserve(h.gens.size());
  for (auto x : h.gens) s.gens.push_back(d_->conj(g, x));
  return s;
}

bool Group::is_abelian() const { return d_->abelian; }

int SubgroupLattice::class_of(const DenseBitset& members) const {
  auto it = classOfSubgroup.find(members);
  if (it == classOfSubgroup.end()) return -1;
  return it->second;
}

int SubgroupLattice::class_by_label(const std::string& label) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].label == label) return static_cast<int>(i);
  return -1;
}

void Group::Data::build_lattice() const {
  auto L = std::make_unique<SubgroupLattice>();
  std::uint32_t n = this->n();

  // distinct cyclic subgroups, each with one generating element
  std::vector<std::pair<DenseBitset, std::uint32_t>> cyclics;
  {
    std::unordered_map<DenseBitset, char, DenseBitsetHash> seen;
    for (std::uint32_t e = 1; e < n; ++e) {
      auto c = closure_indices({e}, false);
      if (seen.emplace(c.bits, 1).second) cyclics.emplace_back(c.bits, e);
    }
  }

  struct Rec {
    DenseBitset canonical;
    std::uint64_t order;
    std::uint32_t size;
  };
  std::vector<Rec> recs;
  auto& subMap = L->classOfSubgroup;

  auto register_subgroup = [&](const DenseBitset& bs) -> int {
    auto it = subMap.find(bs);
    if (it != subMap.end()) return it->second;
    int cid = static_cast<int>(recs.size());
    std::vector<DenseBitset> orbit{bs};
    subMap.emplace(bs, cid);
    DenseBitset canonical = bs;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (auto g : genIdx) {
        DenseBitset nb = conj_subgroup_bits(orbit[qi], g);
        if (subMap.emplace(nb, cid).second) {
          if (nb.member_lex_less(canonical)) canonical = nb;
          orbit.push_back(std::move(nb));
        }
      }
    }
    recs.push_back(Rec{canonical, canonical.count(),
                       static_cast<std::uint32_t>(orbit.size())});
    return cid;
  };

  {
    DenseBitset triv(n);
    triv.set(0);
    register_subgroup(triv);
  }
  register_subgroup(fullBits);
  for (auto& [bs, e] : cyclics) register_subgroup(bs);

  // close under joins with cyclic subgroups
  std::vector<std::vector<std::uint32_t>> genCache;
  for (std::size_t wi = 0; wi < recs.size(); ++wi) {
    if (genCache.size() <= wi) genCache.resize(recs.size());
    if (genCache[wi].empty() && recs[wi].order > 1)
      genCache[wi] = small_gens(recs[wi].canonical, recs[wi].order);
    if (recs[wi].order == elems.size()) continue;
    for (auto& [zbits, zgen] : cyclics) {
      if (zbits.subset_of(recs[wi].canonical)) continue;
      auto joinGens = genCache[wi];
      joinGens.push_back(zgen);
      auto j = closure_indices(joinGens, true);
      register_subgroup(j.bits);
      if (genCache.size() < recs.size()) genCache.resize(recs.size());
    }
  }

  // canonical ordering: (order, ascending member sequence)
  std::vector<int> perm(recs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (recs[a].order != recs[b].order) return recs[a].order < recs[b].order;
    return recs[a].canonical.member_lex_less(recs[b].canonical);
  });
  std::vector<int> newId(recs.size());
  for (std::size_t i = 0; i < perm.size(); ++i) newId[perm[i]] = static_cast<int>(i);
  for (auto& kv : subMap) kv.second = newId[kv.second];

  std::uint64_t lastOrder = 0;
  int seq = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const Rec& r = recs[perm[i]];
    SubgroupClassInfo info;
    info.order = r.order;
    info.classSize = r.size;
    info.rep.members = r.canonical;
    info.rep.order = r.order;
    info.rep.gens = small_gens(r.canonical, r.order);
    if (r.order != lastOrder) {
      lastOrder = r.order;
      seq = 0;
    }
    info.label = std::to_string(r.order) + "." + std::to_string(seq++);
    info.cyclic = false;
    for (auto m : r.canonical.members())
      if (static_cast<std::uint64_t>(elemOrd[m]) == r.order) {
        info.cyclic = true;
        std::size_t moved = moved_points(elems[m]);
        info.repGeneratorFixedPoints = static_cast<int>(degree - moved);
        break;
      }
    L->classes.push_back(std::move(info));
  }

  // subconjugacy: which classes occur among subgroups of each representative
  std::size_t nc = L->classes.size();
  L->below.assign(nc, {});
  for (std::size_t c = 0; c < nc; ++c) {
    const DenseBitset& rep = L->classes[c].rep.members;
    std::vector<int> ids;
    for (const auto& kv : subMap)
      if (kv.first.subset_of(rep)) ids.push_back(kv.second);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    L->below[c] = std::move(ids);
  }
  L->leq.assign(nc, std::vector<char>(nc, 0));
  for (std::size_t c = 0; c < nc; ++c)
    for (int b : L->below[c]) L->leq[b][c] = 1;

  lat = std::move(L);
}

const SubgroupLattice& Group::lattice() const {
  std::call_once(d_->latOnce, [this] { d_->build_lattice(); });
  return *d_->lat;
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  return normalizer_in(g, g.full_subgroup(), h);
}

Subgroup normalizer_in(const Group& g, const Subgroup& ambient, const Subgroup& h) {
  if (!h.members.subset_of(ambient.members))
    throw Error(Err::NotASubgroup, "subgroup not contained in ambient group");
  DenseBitset bits(g.order());
  for (auto x : ambient.members.members()) {
    bool ok = true;
    for (auto s : h.gens)
      if (!h.members.test(g.conj(x, s))) {
        ok = false;
        break;
      }
    if (ok) bits.set(x);
  }
  return g.subgroup_from_members(bits);
}

Subgroup centralizer(const Group& g, const std::vector<std::uint32_t>& elems) {
  return centralizer_in(g, g.full_subgroup(), elems);
}

Subgroup centralizer_in(const Group& g, const Subgroup& ambient,
                        const std::vector<std::uint32_t>& elems) {
  DenseBitset bits(g.order());
  for (auto x : ambient.members.members()) {
    bool ok = true;
    for (auto s : elems)
      if (g.mult(x, s) != g.mult(s, x)) {
        ok = false;
        break;
      }
    if (ok) bits.set(x);
  }
  return g.subgroup_from_members(bits);
}

Quotient quotient(const Group& g, const Subgroup& n, const Subgroup& k) {
  if (!k.members.subset_of(n.members))
    throw Error(Err::NotASubgroup, "K is not contained in N");
  for (auto ng : n.gens)
    for (auto kg : k.gens)
      if (!k.members.test(g.conj(ng, kg)))
        throw Error(Err::NotNormal, "K is not normal in N");

  auto nMembers = n.members.members();
  std::vector<std::int64_t> cosetIdx(g.order(), -1);
  std::vector<std::uint32_t> cosetRep;
  auto kMembers = k.members.members();
  for (auto m : nMembers) {
    if (cosetIdx[m] != -1) continue;
    auto cid = static_cast<std::int64_t>(cosetRep.size());
    for (auto km : kMembers) cosetIdx[g.mult(m, km)] = cid;
    cosetRep.push_back(m);
  }
  std::size_t numCosets = cosetRep.size();

  std::vector<Perm> qgens;
  auto ngens = n.gens;
  if (ngens.empty()) ngens.push_back(0);
  for (auto ng : ngens) {
    std::vector<std::uint32_t> img(numCosets);
    for (std::size_t p = 0; p < numCosets; ++p)
      img[p] = static_cast<std::uint32_t>(cosetIdx[g.mult(ng, cosetRep[p])]);
    qgens.emplace_back(std::move(img));
  }

  Quotient q;
  q.group = Group::closure(numCosets, std::move(qgens));
  q.cosetRep = cosetRep;
  if (q.group.order() != n.order / k.order)
    throw Error(Err::NotNormal, "quotient order mismatch");
  q.repOfElement.resize(q.group.order());
  for (std::uint32_t w = 0; w < q.group.order(); ++w)
    q.repOfElement[w] = cosetRep[q.group.element(w)[0]];
  return q;
}

Subgroup sylow(const Group& g, int p) { return sylow_in(g, g.full_subgroup(), p); }

Subgroup sylow_in(const Group& g, const Subgroup& h, int p) {
  int v = p_valuation(h.order, p);
  if (v == 0) return g.trivial_subgroup();
  std::uint64_t target = 1;
  for (int i = 0; i < v; ++i) target *= static_cast<std::uint64_t>(p);

  auto members = h.members.members();
  Subgroup cur;
  for (auto m : members) {
    int ord = g.element_order(m);
    if (ord % p == 0) {
      // power down to an element of order p
      std::uint64_t e = static_cast<std::uint64_t>(ord) / static_cast<std::uint64_t>(p);
      std::uint32_t acc = 0;
      for (std::uint64_t i = 0; i < e; ++i) acc = g.mult(acc, m);
      cur = g.subgroup_generated({acc});
      break;
    }
  }
  if (cur.order == 0)
    throw Error(Err::NotASubgroup, "no p-element found (internal)");
  while (cur.order < target) {
    Subgroup nrm = normalizer_in(g, h, cur);
    bool grown = false;
    for (auto y : nrm.members.members()) {
      if (cur.members.test(y)) continue;
      int ord = g.element_order(y);
      bool ppower = true;
      while (ord % p == 0) ord /= p;
      ppower = (ord == 1);
      if (!ppower) continue;
      auto gens = cur.gens;
      gens.push_back(y);
      cur = g.subgroup_generated(gens);
      grown = true;
      break;
    }
    if (!grown)
      throw Error(Err::NotASubgroup, "sylow growth failed (internal)");
  }
  return cur;
}

namespace {

std::vector<std::pair<std::uint64_t, int>> class_profile(const Group& g) {
  std::vector<std::pair<std::uint64_t, int>> prof;
  for (const auto& cls : g.element_classes())
    prof.emplace_back(cls.size(), g.element_order(cls[0]));
  std::sort(prof.begin(), prof.end());
  return prof;
}

std::vector<std::uint32_t> iso_generators(const Group& g) {
  std::vector<std::uint32_t> cands(g.order());
  std::iota(cands.begin(), cands.end(), 0u);
  std::sort(cands.begin(), cands.end(), [&](std::uint32_t a, std::uint32_t b) {
    int oa = g.element_order(a), ob = g.element_order(b);
    if (oa != ob) return oa > ob;
    return a < b;
  });
  std::vector<std::uint32_t> gens;
  DenseBitset cur(g.order());
  cur.set(0);
  std::uint64_t size = 1;
  for (auto c : cands) {
    if (cur.test(c)) continue;
    gens.push_back(c);
    auto sub = g.subgroup_generated(gens);
    cur = sub.members;
    size = sub.order;
    if (size == g.order()) break;
  }
  return gens;
}

bool verify_map(const Group& a, const Group& b,
                const std::vector<std::uint32_t>& gensA,
                const std::vector<std::uint32_t>& imgsB) {
  std::vector<std::int64_t> phi(a.order(), -1);
  DenseBitset used(b.order());
  phi[0] = 0;
  used.set(0);
  std::vector<std::uint32_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t x = queue[qi];
    for (std::size_t j = 0; j < gensA.size(); ++j) {
      std::uint32_t t = a.mult(x, gensA[j]);
      std::uint32_t u = b.mult(static_cast<std::uint32_t>(phi[x]), imgsB[j]);
      if (phi[t] == -1) {
        if (used.test(u)) return false;
        phi[t] = u;
        used.set(u);
        queue.push_back(t);
      } else if (phi[t] != u) {
        return false;
      }
    }
  }
  return queue.size() == a.order();
}

bool iso_backtrack(const Group& a, const Group& b,
                   const std::vector<std::uint32_t>& gensA,
                   const std::vector<std::vector<std::uint32_t>>& cands,
                   std::vector<std::uint32_t>& imgs, std::size_t pos) {
  if (pos == gensA.size()) return verify_map(a, b, gensA, imgs);
  for (auto c : cands[pos]) {
    imgs[pos] = c;
    if (iso_backtrack(a, b, gensA, cands, imgs, pos + 1)) return true;
  }
  return false;
}

} // namespace

bool is_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  if (class_profile(a) != class_profile(b)) return false;
  if (a.order() == 1) return true;

  auto gensA = iso_generators(a);
  std::vector<std::vector<std::uint32_t>> cands(gensA.size());
  for (std::size_t j = 0; j < gensA.size(); ++j) {
    int ord = a.element_order(gensA[j]);
    std::uint64_t csize = a.element_classes()[a.class_of_element(gensA[j])].size();
    if (j == 0) {
      // one candidate per conjugacy class (inner automorphisms)
      for (const auto& cls : b.element_classes())
        if (b.element_order(cls[0]) == ord && cls.size() == csize)
          cands[j].push_back(cls[0]);
    } else {
      for (std::uint32_t x = 0; x < b.order(); ++x)
        if (b.element_order(x) == ord &&
            b.element_classes()[b.class_of_element(x)].size() == csize)
          cands[j].push_back(x);
    }
    if (cands[j].empty()) return false;
  }
  std::vector<std::uint32_t> imgs(gensA.size());
  return iso_backtrack(a, b, gensA, cands, imgs, 0);
}

Group as_group(const Group& parent, const Subgroup& h) {
  std::vector<Perm> gens;
  for (auto gi : h.gens) gens.push_back(parent.element(gi));
  Group v = Group::closure(parent.degree(), std::move(gens));
  if (v.order() != h.order)
    throw Error(Err::NotASubgroup, "subgroup view order mismatch");
  return v;
}

std::vector<std::uint32_t> fixed_coset_reps(const Group& g, const Subgroup& h,
                                            const Subgroup& k) {
  std::vector<std::int64_t> cosetIdx(g.order(), -1);
  std::vector<std::uint32_t> reps;
  auto hMembers = h.members.members();
  for (std::uint32_t m = 0; m < g.order(); ++m) {
    if (cosetIdx[m] != -1) continue;
    auto cid = static_cast<std::int64_t>(reps.size());
    for (auto hm : hMembers) cosetIdx[g.mult(m, hm)] = cid;
    reps.push_back(m);
  }
  std::vector<std::uint32_t> fixed;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    bool ok = true;
    for (auto kg : k.gens)
      if (cosetIdx[g.mult(kg, reps[c])] != static_cast<std::int64_t>(c)) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(reps[c]);
  }
  return fixed;
}

std::vector<int> prime_divisors(std::uint64_t n) {
  std::vector<int> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

int p_valuation(std::uint64_t n, int p) {
  int v = 0;
  while (n % static_cast<std::uint64_t>(p) == 0) {
    n /= static_cast<std::uint64_t>(p);
    ++v;
  }
  return v;
}

} // namespace rosi
