#ifndef ROSI_ALIGN_HPP
#define ROSI_ALIGN_HPP

#include <map>
#include <string>
#include <vector>

#include "rosi/superclass.hpp"

namespace rosi {

struct AlignmentPlan {
  std::map<int, long long> multipliers; // prime -> k_p
  long long topDimension = -1;          // N = nbar(1)
  long long mG = 1;                     // lcm of rank-one q-period multiples
  int gammaLength = 0;                  // l(Gamma): longest chain, in steps
  std::map<int, long long> perClassDivisor; // classId -> required divisor of nbar+1
};

struct AlignmentInput {
  int p = 0;
  SuperClassFunction sphereDims; // dimension function of one copy of V_p
};

struct AlignmentResult {
  AlignmentPlan plan;
  SuperClassFunction nbar;
};

// Smallest joint scaling of the per-prime sphere dimension functions such
// that the values at the trivial subgroup agree, (N+1) is divisible by m_G,
// every class value+1 is divisible by the relevant q-period multiples, all
// values are >= 3, and distinct values are separated by at least the longest
// chain length. Multipliers grow proportionally, so minimizing N minimizes
// every k_p simultaneously.
AlignmentResult align(const Group& g, const std::vector<AlignmentInput>& inputs,
                      bool chainObjects = false, long long maxSteps = 1'000'000);

// Re-derives every constraint from the group data and checks the emitted
// function against it; returns human-readable violations (empty = pass).
std::vector<std::string> verify_alignment(const Group& g,
                                          const std::vector<AlignmentInput>& inputs,
                                          const AlignmentResult& result,
                                          bool chainObjects = false);

} // namespace rosi

#endif
