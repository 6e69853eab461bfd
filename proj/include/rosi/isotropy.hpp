#ifndef ROSI_ISOTROPY_HPP
#define ROSI_ISOTROPY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rosi/group.hpp"

namespace rosi {

// Conjugation- and subgroup-closed set of subgroup classes.
struct Family {
  std::vector<int> classIds; // sorted
  bool contains(int classId) const;
  static Family from_ids(const Group& g, std::vector<int> ids);
  static Family down_closure(const Group& g, const std::vector<int>& ids);
  bool is_closed(const Group& g) const;
  Family united(const Family& other) const;
};

struct RankProfile {
  std::map<int, int> perPrime;     // prime -> rk_p(G)
  std::vector<int> rankTwoPrimes;  // primes with rk_p(G) == 2
  int max_rank() const;
};

int p_rank(const Group& g, const Subgroup& h, int p);
RankProfile rank_profile(const Group& g);

// All classes of p-subgroups of p-rank <= 1 (including the trivial class).
Family rank_one_family(const Group& g, int p);

struct QdWitness {
  int kClassId = -1;
  std::string kClassLabel;
  std::uint64_t kOrder = 0;
  std::uint64_t wOrder = 0;
  std::string wClassLabel; // class of the embedded copy inside W = N_G(K)/K
};

// Searches for a p'-subgroup K with Qd(p) embedded in N_G(K)/K.
std::optional<QdWitness> involves_qd(const Group& g, int p,
                                     std::uint64_t orderBound = Group::kDefaultOrderBound);

struct NormalizerRankEntry {
  int p = 0;
  int classId = -1;
  std::string classLabel;
  std::uint64_t normalizerOrder = 0;
  std::uint64_t quotientOrder = 0;
  int q = 0;
  int rank = 0;
  bool ok = false;
};

struct QdVerdict {
  int p = 0;
  std::optional<QdWitness> witness;
};

// Hypothesis checks for the existence of a finite complex with the homotopy
// type of a sphere and rank-one isotropy.
struct HypothesisReport {
  RankProfile profile;
  bool rankOk = false;            // rk_p(G) <= 2 for all p
  bool swanRoute = false;         // rank <= 1: free action exists
  bool singleRankTwoPrime = false;
  std::vector<QdVerdict> qd;      // odd primes in the rank-two set
  std::vector<NormalizerRankEntry> normalizerRanks;
  std::vector<int> failingClasses; // class ids with a failing rank entry
  bool qdOk = false;
  bool normalizerOk = false;
  bool pass = false;
};
HypothesisReport check_rank_one_hypotheses(const Group& g);

// Smith-theory necessary conditions for a candidate isotropy family and
// dimension data: (i) maximal p-members H need rk_p(N/H) <= 1, (ii) nontrivial
// p-members H need rk_q(N/H) <= 1 for q != p.
struct NecessaryViolation {
  int which = 0; // 1 or 2
  int classId = -1;
  std::string classLabel;
  int p = 0;
  int q = 0;
  int rank = 0;
};
struct NecessaryReport {
  std::vector<NecessaryViolation> violations;
  bool pass = false;
};
NecessaryReport check_smith_necessary(const Group& g, const Family& iso,
                                      const std::vector<long long>& dims);

} // namespace rosi

#endif
