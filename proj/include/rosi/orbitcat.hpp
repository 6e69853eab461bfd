#ifndef ROSI_ORBITCAT_HPP
#define ROSI_ORBITCAT_HPP

#include <memory>
#include <optional>
#include <vector>

#include "rosi/group.hpp"
#include "rosi/isotropy.hpp"
#include "rosi/matrix.hpp"

namespace rosi {

// Orbit category of G relative to a closed family: objects are the family's
// subgroup classes; morphisms G/H -> G/K are the cosets gK with H^g <= K,
// equivalently the H-fixed cosets of G/K.
class OrbitCategory {
public:
  OrbitCategory(Group g, Family f);

  const Group& group() const { return g_; }
  const Family& family() const { return f_; }
  int num_objects() const { return static_cast<int>(objClass_.size()); }
  int object_class(int obj) const { return objClass_[obj]; }
  int object_of_class(int classId) const; // -1 when not in the family

  // cosets of the class representative of the object's class
  std::size_t num_cosets(int obj) const { return cosetRep_[obj].size(); }
  std::uint32_t coset_rep(int obj, std::size_t c) const { return cosetRep_[obj][c]; }
  std::size_t coset_of_element(int obj, std::uint32_t g) const;

  // morphisms from the object of H to the object of K, as coset indices in K
  const std::vector<std::uint32_t>& morphisms(int objH, int objK) const;

  // composition: coset c1 in Mor(H,K), coset c2 in Mor(K,L) -> coset in Mor(H,L)
  std::size_t compose_cosets(int objK, std::size_t c1, int objL, std::size_t c2) const;

private:
  Group g_;
  Family f_;
  std::vector<int> objClass_;
  std::vector<int> classToObj_;
  std::vector<std::vector<std::uint32_t>> cosetRep_;
  std::vector<std::vector<std::int32_t>> cosetIdx_;
  std::vector<std::vector<std::vector<std::uint32_t>>> mor_;
};

// Formal integer combination of morphisms into a fixed target object,
// referenced by coset index.
struct FormalSum {
  std::vector<std::pair<std::uint32_t, long long>> terms; // (cosetIdx, coeff)
  void add(std::uint32_t coset, long long coeff);
  bool empty() const { return terms.empty(); }
};

struct FreeOCModule {
  std::vector<int> types; // object index per generator
  std::size_t rank() const { return types.size(); }
};

struct OCMatrix {
  // entries[r][c]: formal sum of morphisms from the type of column generator c
  // to the type of row generator r
  std::vector<std::vector<FormalSum>> entries;
  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
};

// Finite free chain complex over the orbit category. diffs[n] maps degree n
// to degree n-1; an augmented complex carries the standard augmentation
// (every coset maps to 1).
struct OCChainComplex {
  std::shared_ptr<const OrbitCategory> cat;
  std::vector<FreeOCModule> modules;
  std::vector<OCMatrix> diffs; // diffs[n]: modules[n] -> modules[n-1]; diffs[0] unused
  bool augmented = true;
  std::optional<int> localPrime; // reporting mode: ignore torsion prime to p

  int top_degree() const { return static_cast<int>(modules.size()) - 1; }
};

// Composition of formal entries: first f (into type K), then g (into type L).
FormalSum compose_formal(const OrbitCategory& cat, int objK, const FormalSum& f,
                         int objL, const FormalSum& g);

// Checks d(n-1) . d(n) = 0 for all n symbolically, and the augmentation rule
// for augmented complexes. Throws BoundaryNotSquareZero on failure.
void validate_complex(const OCChainComplex& c);

// Evaluation at the representative of a subgroup class: integer chain complex
// with basis the fixed cosets of each generator's orbit type.
struct EvalBasisElem {
  std::size_t gen;
  std::size_t fixedIdx; // index into the morphism list (fixed cosets)
};
struct EvalComplex {
  std::vector<std::vector<EvalBasisElem>> basis; // per degree
  std::vector<IMatrix> d;                        // d[n]: degree n -> n-1
  bool augmented = true;
  std::optional<IMatrix> augRow; // custom augmentation (default: all ones)
  std::optional<int> localPrime;
  std::size_t dim(int n) const {
    return (n < 0 || n >= static_cast<int>(basis.size())) ? 0 : basis[n].size();
  }
  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
};
EvalComplex evaluate(const OCChainComplex& c, int classId);

// The map C(K) -> C(H) induced by the morphism with the given coset index,
// one integer matrix per degree.
std::vector<IMatrix> induced_maps(const OCChainComplex& c, int objH, int objK,
                                  std::uint32_t morCoset);

// Image of a restriction map as a subcomplex of evaluate(C, classOfH): the
// actual subgroups are the class representative of H and any K containing it.
std::vector<IMatrix> restriction_image(const OCChainComplex& c, int classH,
                                       const Subgroup& k);

// Direct sum, suspension-free join, cones, elementary twists (test fodder).
OCChainComplex direct_sum(const OCChainComplex& a, const OCChainComplex& b);
OCChainComplex join_complex(const OCChainComplex& a, const OCChainComplex& b);
OCChainComplex mapping_cone_scalar(const OCChainComplex& a, long long scalar);
OCChainComplex elementary_twists(const OCChainComplex& a, unsigned seed, int count);

// Splitting at H: exact sequence 0 -> C^{>H}(H) -> C(H) -> S_H C -> 0.
struct SplitAtH {
  EvalComplex higher;   // C^{>H}(H)
  EvalComplex quotient; // S_H C
};
SplitAtH splitting(const OCChainComplex& c, int classId);

// Free complex of modules over the Weyl group W = N_G(K)/K, with entries in
// the integral group ring of W (differentials act by left matrix
// multiplication on column vectors of the free right module).
struct WRingElem {
  std::vector<std::pair<std::uint32_t, long long>> terms; // (W element, coeff)
};
struct WComplex {
  Quotient w;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::vector<WRingElem>>> diffs; // diffs[n][r][c]
};

// Periodic complex for a cyclic Weyl group: alternating (t - 1) and norm
// differentials, length = topDegree.
WComplex cyclic_periodic_complex(const Quotient& w, std::uint32_t gen, int topDegree);

// Extension of a W_G(K)-complex to the orbit category:
// E_K(P)(H) = P tensor_{RW} R[(G/K)^H].
OCChainComplex extension_functor(const std::shared_ptr<const OrbitCategory>& cat,
                                 int classK, const WComplex& p);

// Degreewise pushout of C <- A -> B where A is the subcomplex of B spanned by
// the listed generators per degree. Throws NotInjective when the data does
// not describe a split subcomplex inclusion or f is not a chain map.
OCChainComplex pushout(const OCChainComplex& c, const OCChainComplex& b,
                       const std::vector<std::vector<std::size_t>>& aGens,
                       const std::vector<OCMatrix>& f);

} // namespace rosi

#endif
