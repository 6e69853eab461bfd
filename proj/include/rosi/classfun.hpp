#ifndef ROSI_CLASSFUN_HPP
#define ROSI_CLASSFUN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rosi/group.hpp"
#include "rosi/isotropy.hpp"

namespace rosi {

// Integer class function on a group (value constant on conjugacy classes).
struct ClassFunction {
  Group parent;
  std::vector<long long> byClass;

  long long at_element(std::uint32_t idx) const {
    return byClass[static_cast<std::size_t>(parent.class_of_element(idx))];
  }
  long long degree() const { return at_element(0); }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
};

ClassFunction constant_function(const Group& q, long long v);
// Character of the permutation action of q on the cosets q/K.
ClassFunction perm_character(const Group& q, const Subgroup& k);
// Augmented permutation character: perm_character minus the trivial character.
ClassFunction augmented_perm_character(const Group& q, const Subgroup& k);

// <Res_H chi, 1> = (1/|H|) sum_{h in H} chi(h); the complex fixed dimension.
long long fixed_dim(const ClassFunction& chi, const Subgroup& h);

// Self inner product <chi, chi> (for sanity checks).
long long norm_squared(const ClassFunction& chi);

// chi lives on the standalone view of the Sylow subgroup sylowView; the check
// is that chi is constant on G-conjugacy classes intersected with the Sylow.
bool respects_fusion(const Group& g, const Group& sylowView, const ClassFunction& chi);

// Elementary abelian rank-2 subgroups of q.
std::vector<Subgroup> rank_two_elementary_subgroups(const Group& q, int p);

bool p_effective(const Group& g, const Group& sylowView, const ClassFunction& chi,
                 int p);

// Double-coset criterion: |E \ Q / K| = 1 for every rank-2 elementary abelian
// E <= Q. Equivalent to p-effectiveness for the single summand I(Q/K).
bool one_double_coset_per_rank_two(const Group& q, const Subgroup& k, int p);
long long double_coset_count(const Group& q, const Subgroup& e, const Subgroup& k);

struct SylowRepresentation {
  int p = 0;
  Subgroup sylow;       // as a subgroup of G
  Group sylowView;      // the Sylow subgroup as its own permutation group
  ClassFunction character; // on sylowView
  int multiplicity = 1;
  std::vector<std::string> familyLabels; // G-class labels of the K_i, when built
  std::string source;   // "permFamily", "virtualSearch", or "file"
};

// Remark-style construction: a sum of augmented permutation modules over a
// G-conjugation-closed family of rank-one subgroups of an elementary abelian
// Sylow subgroup. Returns the first candidate (by size, then class order)
// that respects fusion, is p-effective, and whose isotropy satisfies the
// normalizer rank conditions needed downstream. Returns nothing when the
// Sylow subgroup is not elementary abelian.
std::optional<SylowRepresentation> build_effective_character(const Group& g, int p);

// Fallback for non-elementary-abelian Sylow subgroups: bounded search over
// integer combinations of permutation characters of the Sylow subgroup that
// pass every verifiable condition (fusion, effectiveness, nonnegative and
// monotone fixed dimensions).
std::optional<SylowRepresentation> search_virtual_effective(const Group& g, int p,
                                                            int maxCoefSum = 6);

// Fixed dimension per subgroup class of G (0 where the class is not a
// p-subgroup); index aligned with g.lattice().classes.
std::vector<long long> fixed_dims_by_class(const Group& g,
                                           const SylowRepresentation& rep);

// Classes with positive fixed dimension; subgroup-closed for genuine input.
Family isotropy_of(const Group& g, const SylowRepresentation& rep);

} // namespace rosi

#endif
