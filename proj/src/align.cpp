#include "rosi/align.hpp"

#include <algorithm>
#include <numeric>

#include "rosi/error.hpp"

namespace rosi {

namespace {

// Required divisor of nbar(H)+1 for a nontrivial class H in the family of
// prime p: the q-period multiples of W_G(H) over primes q != p dividing |W|.
long long class_divisor(const Group& g, int classId, int p) {
  const auto& lat = g.lattice();
  Subgroup n = normalizer(g, lat.classes[classId].rep);
  Quotient q = quotient(g, n, lat.classes[classId].rep);
  long long d = 1;
  for (int qp : prime_divisors(q.group.order())) {
    if (qp == p) continue;
    d = std::lcm(d, q_period_multiple(q.group, qp));
  }
  return d;
}

} // namespace

AlignmentResult align(const Group& g, const std::vector<AlignmentInput>& inputs,
                      bool chainObjects, long long maxSteps) {
  const auto& lat = g.lattice();
  int trivialClass = lat.class_of(g.trivial_subgroup().members);

  AlignmentPlan plan;
  plan.mG = rank_one_period_lcm(g);

  Family joint;
  {
    std::vector<int> ids{trivialClass};
    for (const auto& in : inputs)
      for (int c : in.sphereDims.support(g).classIds) ids.push_back(c);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    joint.classIds = std::move(ids);
  }
  plan.gammaLength = longest_chain_length(g, joint, chainObjects);

  // base value of nbar(H)+1 per class, as multiples of the per-prime scale
  struct ClassTerm {
    int classId;
    int p;
    long long base; // (sphere dim + 1) for one copy
  };
  std::vector<ClassTerm> terms;
  std::map<int, long long> tops; // prime -> base at trivial class
  for (const auto& in : inputs) {
    long long top = in.sphereDims.at(trivialClass) + 1;
    if (top <= 0)
      throw Error(Err::Infeasible, "sphere dimension at the trivial subgroup missing");
    tops[in.p] = top;
    for (int c : in.sphereDims.support(g).classIds) {
      if (c == trivialClass) continue;
      terms.push_back(ClassTerm{c, in.p, in.sphereDims.at(c) + 1});
      plan.perClassDivisor[c] = class_divisor(g, c, in.p);
    }
  }

  long long L = plan.mG;
  for (auto& [p, t] : tops) L = std::lcm(L, t);
  if (inputs.empty()) L = std::lcm(L, 4LL); // reach nbar(1) >= 3

  for (long long j = 1; j <= maxSteps; ++j) {
    long long Np1 = L * j;
    bool ok = Np1 >= 4;
    std::map<int, long long> ks;
    for (auto& [p, t] : tops) ks[p] = Np1 / t;
    std::vector<long long> vals{Np1 - 1};
    for (const auto& t : terms) {
      long long v1 = ks[t.p] * t.base; // nbar + 1
      if (v1 < 4 || v1 % plan.perClassDivisor[t.classId] != 0) {
        ok = false;
        break;
      }
      vals.push_back(v1 - 1);
    }
    if (ok) {
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        if (vals[i + 1] - vals[i] < plan.gammaLength) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;

    plan.topDimension = Np1 - 1;
    plan.multipliers = ks;
    AlignmentResult res;
    res.plan = plan;
    res.nbar.values.assign(lat.classes.size(), -1);
    res.nbar.values[trivialClass] = plan.topDimension;
    for (const auto& t : terms)
      res.nbar.values[t.classId] = ks[t.p] * t.base - 1;
    return res;
  }
  throw Error(Err::Infeasible, "no alignment found within the step bound");
}

std::vector<std::string> verify_alignment(const Group& g,
                                          const std::vector<AlignmentInput>& inputs,
                                          const AlignmentResult& result,
                                          bool chainObjects) {
  std::vector<std::string> bad;
  const auto& lat = g.lattice();
  const auto& nbar = result.nbar;
  int trivialClass = lat.class_of(g.trivial_subgroup().members);

  if (!is_monotone(g, nbar)) bad.push_back("nbar is not monotone");
  if (!closure_condition(g, nbar)) bad.push_back("nbar violates the closure condition");

  for (std::size_t c = 0; c < nbar.values.size(); ++c)
    if (nbar.values[c] >= 0 && nbar.values[c] < 3)
      bad.push_back("nbar < 3 at class " + lat.classes[c].label);

  long long mG = rank_one_period_lcm(g);
  if ((nbar.at(trivialClass) + 1) % mG != 0)
    bad.push_back("nbar(1)+1 is not divisible by the rank-one period lcm");

  for (const auto& in : inputs) {
    for (int c : in.sphereDims.support(g).classIds) {
      if (c == trivialClass) continue;
      Subgroup n = normalizer(g, lat.classes[c].rep);
      Quotient q = quotient(g, n, lat.classes[c].rep);
      for (int qp : prime_divisors(q.group.order())) {
        if (qp == in.p) continue;
        long long per = q_period_multiple(q.group, qp);
        if ((nbar.at(c) + 1) % per != 0)
          bad.push_back("nbar+1 at class " + lat.classes[c].label +
                        " not divisible by the " + std::to_string(qp) +
                        "-period multiple");
      }
    }
  }

  Family support = nbar.support(g);
  int l = longest_chain_length(g, support, chainObjects);
  auto vals = distinct_values_desc(nbar);
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    if (vals[i] - vals[i + 1] < l)
      bad.push_back("value gap below the chain length");

  // plan consistency
  for (const auto& in : inputs) {
    auto it = result.plan.multipliers.find(in.p);
    if (it == result.plan.multipliers.end()) {
      bad.push_back("missing multiplier for prime " + std::to_string(in.p));
      continue;
    }
    for (int c : in.sphereDims.support(g).classIds) {
      long long expect = it->second * (in.sphereDims.at(c) + 1) - 1;
      if (nbar.at(c) != expect)
        bad.push_back("nbar at class " + lat.classes[c].label +
                      " does not match the scaled input");
    }
  }
  return bad;
}

} // namespace rosi
