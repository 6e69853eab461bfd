#ifndef ROSI_SUPERCLASS_HPP
#define ROSI_SUPERCLASS_HPP

#include <cstdint>
#include <vector>

#include "rosi/group.hpp"
#include "rosi/isotropy.hpp"

namespace rosi {

// Integer function on subgroup classes, -1 outside its family. Values are
// indexed by the class ids of the parent's subgroup lattice.
struct SuperClassFunction {
  std::vector<long long> values; // one per lattice class; -1 off-family

  static SuperClassFunction constant(const Group& g, const Family& f, long long v);
  long long at(int classId) const { return values[static_cast<std::size_t>(classId)]; }
  Family support(const Group& g) const; // classes with value >= 0
  // join arithmetic: k copies map n to k(n+1)-1 pointwise (and -1 stays -1)
  SuperClassFunction scaled(long long k) const;
};

bool is_monotone(const Group& g, const SuperClassFunction& n);
bool is_strictly_monotone(const Group& g, const SuperClassFunction& n);

// For all subgroups H <= K, L with equal values > -1, the join <K, L> lies in
// the family and takes the same value.
bool closure_condition(const Group& g, const SuperClassFunction& n);

struct LevelComponent {
  std::vector<int> classIds;
  int maximalClass = -1;
};
// Partition of the i-th level set (classes sharing the i-th largest value)
// into subconjugacy components; each carries its unique maximal class.
std::vector<LevelComponent> level_components(const Group& g,
                                             const SuperClassFunction& n, int level);
std::vector<long long> distinct_values_desc(const SuperClassFunction& n);

// A positive even multiple of the q-period of W: 2 when the Sylow q-subgroup
// is trivial, 2 [N:C] when it is cyclic, lcm(4, 2 [N:C]) when it is
// generalized quaternion. Errors when rk_q(W) >= 2.
long long q_period_multiple(const Group& w, int q);

// lcm of q_period_multiple(G, q) over the primes q with rk_q(G) = 1.
long long rank_one_period_lcm(const Group& g);

// Longest chain of strict subconjugacies inside the family, counted in steps.
// countObjects switches to the number of classes in the chain instead.
int longest_chain_length(const Group& g, const Family& f, bool countObjects = false);

} // namespace rosi

#endif
