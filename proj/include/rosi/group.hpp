#ifndef ROSI_GROUP_HPP
#define ROSI_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rosi/bitset.hpp"
#include "rosi/perm.hpp"

namespace rosi {

class Group;

// Subgroup of a fixed parent group, stored as a bitset over the parent's
// element indices together with a small generating set. Operations taking a
// Subgroup also take the parent Group it refers to.
struct Subgroup {
  DenseBitset members;
  std::uint64_t order = 0;
  std::vector<std::uint32_t> gens; // element indices in the parent
};

struct SubgroupClassInfo {
  Subgroup rep;                       // canonical representative
  std::uint64_t order = 0;
  std::uint32_t classSize = 0;        // number of conjugates
  std::string label;                  // "<order>.<k>", deterministic
  bool cyclic = false;
  int repGeneratorFixedPoints = -1;   // for cyclic classes: fixed points of a generator
};

struct SubgroupLattice {
  std::vector<SubgroupClassInfo> classes; // sorted by (order, canonical members)
  std::unordered_map<DenseBitset, int, DenseBitsetHash> classOfSubgroup; // every subgroup of G
  std::vector<std::vector<char>> leq;     // leq[a][b]: (H_a) <= (H_b) up to conjugacy
  std::vector<std::vector<int>> below;    // class ids of subgroups of the representative

  int class_of(const DenseBitset& members) const;
  int class_by_label(const std::string& label) const; // -1 if unknown
};

// Immutable finite permutation group with fully enumerated elements.
// Cheap to copy (shared state). Element index 0 is the identity.
class Group {
public:
  Group() = default;

  static Group closure(std::size_t degree, std::vector<Perm> generators,
                       std::uint64_t orderBound = kDefaultOrderBound);

  static constexpr std::uint64_t kDefaultOrderBound = 10'000'000;

  bool valid() const { return d_ != nullptr; }
  std::size_t degree() const;
  std::uint64_t order() const;
  const std::vector<Perm>& generators() const;
  const Perm& element(std::uint32_t i) const;
  std::optional<std::uint32_t> index_of(const Perm& p) const;

  std::uint32_t mult(std::uint32_t a, std::uint32_t b) const; // a then b
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const; // g^-1 x g
  int element_order(std::uint32_t a) const;

  int num_element_classes() const;
  int class_of_element(std::uint32_t a) const;
  const std::vector<std::vector<std::uint32_t>>& element_classes() const;

  Subgroup trivial_subgroup() const;
  Subgroup full_subgroup() const;
  Subgroup subgroup_generated(const std::vector<std::uint32_t>& genIdx) const;
  Subgroup subgroup_from_members(const DenseBitset& members) const;
  Subgroup conjugate_subgroup(const Subgroup& h, std::uint32_t g) const;

  bool is_abelian() const;

  // Conjugacy classes of subgroups, computed on first use.
  const SubgroupLattice& lattice() const;

  bool same_underlying(const Group& o) const { return d_ == o.d_; }

private:
  struct Data;
  std::shared_ptr<Data> d_;
};

// Subgroup-level operations (module: permgroup).
Subgroup normalizer(const Group& g, const Subgroup& h);
Subgroup normalizer_in(const Group& g, const Subgroup& ambient, const Subgroup& h);
Subgroup centralizer(const Group& g, const std::vector<std::uint32_t>& elems);
Subgroup centralizer_in(const Group& g, const Subgroup& ambient,
                        const std::vector<std::uint32_t>& elems);

// Quotient N/K by a normal subgroup, represented on the left cosets of K in N.
struct Quotient {
  Group group;
  std::vector<std::uint32_t> cosetRep; // quotient point -> parent coset representative
  // Parent element representing a quotient element (the coset it corresponds to).
  std::uint32_t rep_of(std::uint32_t wIdx) const { return repOfElement[wIdx]; }
  std::vector<std::uint32_t> repOfElement;
};
Quotient quotient(const Group& g, const Subgroup& n, const Subgroup& k);

Subgroup sylow(const Group& g, int p);
Subgroup sylow_in(const Group& g, const Subgroup& h, int p);

bool is_isomorphic(const Group& a, const Group& b);

// The subgroup as a standalone permutation group on the same points.
Group as_group(const Group& parent, const Subgroup& h);

// Left cosets gH fixed pointwise-as-cosets by every element of k.
std::vector<std::uint32_t> fixed_coset_reps(const Group& g, const Subgroup& h,
                                            const Subgroup& k);

std::vector<int> prime_divisors(std::uint64_t n);
int p_valuation(std::uint64_t n, int p);

} // namespace rosi

#endif
