#ifndef ROSI_HOMOLOGY_HPP
#define ROSI_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "rosi/orbitcat.hpp"
#include "rosi/superclass.hpp"

namespace rosi {

struct DegreeHomology {
  long long freeRank = 0;
  std::vector<Int> torsion; // invariant factors > 1, in divisibility order
  bool trivial() const { return freeRank == 0 && torsion.empty(); }
};

// Reduced homology when the complex is augmented (degree -1 stored first).
struct EvalHomology {
  int minDegree = 0; // -1 for reduced
  std::vector<DegreeHomology> byDegree;
  const DegreeHomology& at(int degree) const {
    static const DegreeHomology zero{};
    int idx = degree - minDegree;
    if (idx < 0 || idx >= static_cast<int>(byDegree.size())) return zero;
    return byDegree[static_cast<std::size_t>(idx)];
  }
  int top_nonzero() const; // largest degree >= 0 with nonzero homology, else -1
};

EvalHomology homology_of_eval(const EvalComplex& ev);

// Presentation of one homology group plus the cycle basis used, so that maps
// on homology can be computed and compared.
struct HomologyPresentation {
  IMatrix cycles;       // columns: basis of the cycle lattice
  IMatrix presentation; // H = Z^k / im(presentation)
  long long freeRank = 0;
  std::vector<Int> torsion;
};
HomologyPresentation present_homology(const EvalComplex& ev, int degree);

// Induced map on homology of a degreewise map between evaluation complexes.
struct InducedMap {
  IMatrix onCycles; // matrix Y with F . Z_src = Z_dst . Y
};
InducedMap induced_on_homology(const HomologyPresentation& src,
                               const HomologyPresentation& dst, const IMatrix& f);
bool map_is_identity(const HomologyPresentation& h, const IMatrix& y);
bool map_is_isomorphism(const HomologyPresentation& src,
                        const HomologyPresentation& dst, const IMatrix& y);

struct ClassHomology {
  int classId = -1;
  std::string label;
  EvalHomology homology;
  bool orientedActionTrivial = true;
};
using HomologyTable = std::vector<ClassHomology>;

HomologyTable homology(const OCChainComplex& c);

std::pair<SuperClassFunction, SuperClassFunction> dim_functions(const OCChainComplex& c);

bool is_tight(const OCChainComplex& c);
bool is_homology_sphere(const OCChainComplex& c, const SuperClassFunction& nbar);
bool is_oriented(const OCChainComplex& c);

struct AlgrepReport {
  bool sphere = false;
  bool monotone = false;
  bool restrictionsOk = false; // same-value morphisms induce homology isos
  bool joinsOk = false;        // closure condition on equal-value triples
  std::vector<std::string> witnesses;
  bool pass = false;
};
AlgrepReport check_algrep(const OCChainComplex& c, const SuperClassFunction& nbar);

// Homology of the subcomplex sum of restriction images C^{K_i}_H inside the
// evaluation at the class of H; reduced when the complex is augmented.
EvalHomology image_sum_homology(const OCChainComplex& c, int classH,
                                const std::vector<Subgroup>& ks);

} // namespace rosi

#endif
