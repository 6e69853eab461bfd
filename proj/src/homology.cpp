#include "rosi/homology.hpp"

#include <algorithm>

#include "rosi/error.hpp"

namespace rosi {

namespace {

Int p_part(const Int& d, int p) {
  Int r = 1, v = d;
  while (v % p == 0) {
    v /= p;
    r *= p;
  }
  return r;
}

std::vector<Int> filter_torsion(const std::vector<Int>& t, std::optional<int> local) {
  std::vector<Int> out;
  for (const auto& d : t) {
    Int v = abs(d);
    if (v <= 1) continue;
    if (local) v = p_part(v, *local);
    if (v > 1) out.push_back(v);
  }
  return out;
}

// Matrix of the map leaving degree n (augmentation row in reduced degree 0).
IMatrix down_map(const EvalComplex& ev, int n) {
  if (n >= 1 && n < static_cast<int>(ev.d.size()) && ev.d[n].rows + ev.d[n].cols > 0)
    return ev.d[n];
  if (n >= 1) return IMatrix(ev.dim(n - 1), ev.dim(n));
  if (n == 0) {
    if (!ev.augmented) return IMatrix(0, ev.dim(0));
    if (ev.augRow) return *ev.augRow;
    IMatrix e(1, ev.dim(0));
    for (std::size_t j = 0; j < e.cols; ++j) e.at(0, j) = 1;
    return e;
  }
  return IMatrix(0, 0);
}

IMatrix up_map(const EvalComplex& ev, int n) {
  // map entering degree n
  if (n + 1 <= ev.top_degree()) return down_map(ev, n + 1);
  return IMatrix(ev.dim(n), 0);
}

} // namespace

int EvalHomology::top_nonzero() const {
  int top = -1;
  for (int d = std::max(0, minDegree); d - minDegree < static_cast<int>(byDegree.size());
       ++d)
    if (!byDegree[static_cast<std::size_t>(d - minDegree)].trivial()) top = d;
  return top;
}

EvalHomology homology_of_eval(const EvalComplex& ev) {
  EvalHomology h;
  h.minDegree = ev.augmented ? -1 : 0;
  int top = ev.top_degree();
  for (int n = h.minDegree; n <= top; ++n) {
    DegreeHomology dh;
    if (n == -1) {
      IMatrix e = down_map(ev, 0);
      SmithForm f = smith_normal_form(e, false, false);
      dh.freeRank = 1 - static_cast<long long>(f.rank());
      dh.torsion = filter_torsion(f.diag, ev.localPrime);
    } else {
      IMatrix dn = down_map(ev, n);
      IMatrix up = up_map(ev, n);
      SmithForm fd = smith_normal_form(dn, false, false);
      SmithForm fu = smith_normal_form(up, false, false);
      dh.freeRank = static_cast<long long>(ev.dim(n)) -
                    static_cast<long long>(fd.rank()) -
                    static_cast<long long>(fu.rank());
      dh.torsion = filter_torsion(fu.diag, ev.localPrime);
    }
    h.byDegree.push_back(std::move(dh));
  }
  return h;
}

HomologyPresentation present_homology(const EvalComplex& ev, int degree) {
  HomologyPresentation hp;
  IMatrix dn = down_map(ev, degree);
  IMatrix up = up_map(ev, degree);
  hp.cycles = kernel_basis(dn);
  auto x = solve_matrix(hp.cycles, up);
  if (!x)
    throw Error(Err::BoundaryNotSquareZero, "boundaries are not cycles");
  hp.presentation = *x;
  SmithForm f = smith_normal_form(hp.presentation, false, false);
  hp.freeRank = static_cast<long long>(hp.cycles.cols) -
                static_cast<long long>(f.rank());
  hp.torsion = filter_torsion(f.diag, ev.localPrime);
  return hp;
}

InducedMap induced_on_homology(const HomologyPresentation& src,
                               const HomologyPresentation& dst, const IMatrix& f) {
  InducedMap im;
  IMatrix fz = mat_mul(f, src.cycles);
  auto y = solve_matrix(dst.cycles, fz);
  if (!y)
    throw Error(Err::BoundaryNotSquareZero, "map does not preserve cycles");
  im.onCycles = *y;
  return im;
}

bool map_is_identity(const HomologyPresentation& h, const IMatrix& y) {
  std::size_t k = h.cycles.cols;
  if (k == 0) return true;
  LatticeSolver ls = make_lattice_solver(h.presentation);
  std::vector<Int> col(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < k; ++r)
      col[r] = y.at(r, c) - (r == c ? 1 : 0);
    if (!ls.contains(col)) return false;
  }
  return true;
}

bool map_is_isomorphism(const HomologyPresentation& src,
                        const HomologyPresentation& dst, const IMatrix& y) {
  if (src.freeRank != dst.freeRank || src.torsion != dst.torsion) return false;
  std::size_t k = dst.cycles.cols;
  if (k == 0) return true;
  // surjective onto the cokernel presentation
  IMatrix joint = hstack(y, dst.presentation);
  SmithForm f = smith_normal_form(joint, false, false);
  if (f.rank() != k) return false;
  for (const auto& d : f.diag)
    if (abs(d) != 1) return false;
  return true;
}

namespace {

// Action of an element n in N_G(H) on the evaluation basis at the class of H.
IMatrix action_matrix(const OCChainComplex& c, int classId, std::uint32_t nElem,
                      int degree, const EvalComplex& ev) {
  const auto& cat = *c.cat;
  const Group& g = cat.group();
  int objH = cat.object_of_class(classId);
  std::size_t dim = ev.dim(degree);
  IMatrix m(dim, dim);
  // offsets per generator
  std::vector<std::size_t> off(c.modules[degree].rank(), 0);
  {
    std::size_t acc = 0;
    for (std::size_t a = 0; a < c.modules[degree].rank(); ++a) {
      off[a] = acc;
      acc += cat.morphisms(objH, c.modules[degree].types[a]).size();
    }
  }
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const auto& be = ev.basis[degree][idx];
    int type = c.modules[degree].types[be.gen];
    const auto& fixed = cat.morphisms(objH, type);
    std::uint32_t x = cat.coset_rep(type, fixed[be.fixedIdx]);
    std::size_t img = cat.coset_of_element(type, g.mult(nElem, x));
    auto it = std::lower_bound(fixed.begin(), fixed.end(),
                               static_cast<std::uint32_t>(img));
    if (it == fixed.end() || *it != img)
      throw Error(Err::NotSubconjugate, "action image is not fixed (internal)");
    m.at(off[be.gen] + static_cast<std::size_t>(it - fixed.begin()), idx) = 1;
  }
  return m;
}

bool class_action_trivial(const OCChainComplex& c, int classId, const EvalComplex& ev,
                          const EvalHomology& h) {
  const Group& g = c.cat->group();
  const auto& lat = g.lattice();
  Subgroup n = normalizer(g, lat.classes[classId].rep);
  Quotient q = quotient(g, n, lat.classes[classId].rep);
  std::vector<std::uint32_t> wGens;
  for (const auto& p : q.group.generators()) {
    auto idx = q.group.index_of(p);
    if (idx && *idx != 0) wGens.push_back(q.rep_of(*idx));
  }
  if (wGens.empty()) return true;
  for (int d = 0; d <= ev.top_degree(); ++d) {
    if (h.at(d).trivial()) continue;
    HomologyPresentation hp = present_homology(ev, d);
    for (auto nElem : wGens) {
      IMatrix a = action_matrix(c, classId, nElem, d, ev);
      InducedMap im = induced_on_homology(hp, hp, a);
      if (!map_is_identity(hp, im.onCycles)) return false;
    }
  }
  return true;
}

} // namespace

HomologyTable homology(const OCChainComplex& c) {
  HomologyTable table;
  const Group& g = c.cat->group();
  const auto& lat = g.lattice();
  for (int classId : c.cat->family().classIds) {
    ClassHomology ch;
    ch.classId = classId;
    ch.label = lat.classes[classId].label;
    EvalComplex ev = evaluate(c, classId);
    ch.homology = homology_of_eval(ev);
    ch.orientedActionTrivial = class_action_trivial(c, classId, ev, ch.homology);
    table.push_back(std::move(ch));
  }
  return table;
}

std::pair<SuperClassFunction, SuperClassFunction> dim_functions(
    const OCChainComplex& c) {
  const Group& g = c.cat->group();
  const auto& lat = g.lattice();
  SuperClassFunction dim, homdim;
  dim.values.assign(lat.classes.size(), -1);
  homdim.values.assign(lat.classes.size(), -1);
  for (int classId : c.cat->family().classIds) {
    int best = -1;
    for (int n = 0; n <= c.top_degree(); ++n)
      for (int t : c.modules[n].types) {
        int tClass = c.cat->object_class(t);
        if (lat.leq[classId][tClass]) {
          best = std::max(best, n);
          break;
        }
      }
    dim.values[classId] = best;
    EvalComplex ev = evaluate(c, classId);
    homdim.values[classId] = homology_of_eval(ev).top_nonzero();
  }
  return {dim, homdim};
}

bool is_tight(const OCChainComplex& c) {
  auto [dim, homdim] = dim_functions(c);
  return dim.values == homdim.values;
}

bool is_homology_sphere(const OCChainComplex& c, const SuperClassFunction& nbar) {
  const Group& g = c.cat->group();
  const auto& lat = g.lattice();
  for (std::size_t classId = 0; classId < lat.classes.size(); ++classId) {
    bool inFamily = c.cat->family().contains(static_cast<int>(classId));
    long long n = nbar.values[classId];
    if (!inFamily && n < 0) continue;
    EvalComplex ev = evaluate(c, static_cast<int>(classId));
    EvalHomology h = homology_of_eval(ev);
    for (int d = h.minDegree; d <= std::max(ev.top_degree(), static_cast<int>(n));
         ++d) {
      const DegreeHomology& dh = h.at(d);
      if (d == n) {
        if (dh.freeRank != 1 || !dh.torsion.empty()) return false;
      } else {
        if (!dh.trivial()) return false;
      }
    }
    if (n > ev.top_degree() && n >= 0) return false;
  }
  return true;
}

bool is_oriented(const OCChainComplex& c) {
  for (int classId : c.cat->family().classIds) {
    EvalComplex ev = evaluate(c, classId);
    EvalHomology h = homology_of_eval(ev);
    if (!class_action_trivial(c, classId, ev, h)) return false;
  }
  return true;
}

AlgrepReport check_algrep(const OCChainComplex& c, const SuperClassFunction& nbar) {
  AlgrepReport rep;
  const Group& g = c.cat->group();
  const auto& lat = g.lattice();
  const auto& cat = *c.cat;

  rep.sphere = is_homology_sphere(c, nbar);
  if (!rep.sphere) rep.witnesses.push_back("not a homology sphere for nbar");
  rep.monotone = is_monotone(g, nbar);
  if (!rep.monotone) rep.witnesses.push_back("nbar is not monotone");

  rep.restrictionsOk = true;
  const auto& fam = cat.family().classIds;
  for (int cH : fam)
    for (int cK : fam) {
      if (nbar.values[cH] < 0 || nbar.values[cH] != nbar.values[cK]) continue;
      if (!lat.leq[cH][cK]) continue;
      int objH = cat.object_of_class(cH);
      int objK = cat.object_of_class(cK);
      EvalComplex evH = evaluate(c, cH);
      EvalComplex evK = evaluate(c, cK);
      for (auto mor : cat.morphisms(objH, objK)) {
        auto maps = induced_maps(c, objH, objK, mor);
        for (int d = 0; d <= std::max(evH.top_degree(), evK.top_degree()); ++d) {
          HomologyPresentation hK = present_homology(evK, d);
          HomologyPresentation hH = present_homology(evH, d);
          IMatrix f = d < static_cast<int>(maps.size())
                          ? maps[d]
                          : IMatrix(evH.dim(d), evK.dim(d));
          InducedMap im = induced_on_homology(hK, hH, f);
          if (!map_is_isomorphism(hK, hH, im.onCycles)) {
            rep.restrictionsOk = false;
            rep.witnesses.push_back("restriction " + lat.classes[cH].label + " <= " +
                                    lat.classes[cK].label + " fails at degree " +
                                    std::to_string(d));
          }
        }
      }
    }

  rep.joinsOk = closure_condition(g, nbar);
  if (!rep.joinsOk) rep.witnesses.push_back("equal-value join closure fails");
  rep.pass = rep.sphere && rep.monotone && rep.restrictionsOk && rep.joinsOk;
  return rep;
}

EvalHomology image_sum_homology(const OCChainComplex& c, int classH,
                                const std::vector<Subgroup>& ks) {
  EvalComplex ev = evaluate(c, classH);
  std::vector<std::vector<IMatrix>> images;
  for (const auto& k : ks) images.push_back(restriction_image(c, classH, k));

  int top = ev.top_degree();
  std::vector<IMatrix> basisMat(top + 1);
  for (int n = 0; n <= top; ++n) {
    IMatrix acc(ev.dim(n), 0);
    for (auto& im : images)
      if (n < static_cast<int>(im.size())) acc = hstack(acc, im[n]);
    basisMat[n] = acc.cols ? column_lattice_basis(acc) : IMatrix(ev.dim(n), 0);
  }

  EvalComplex sub;
  sub.augmented = ev.augmented;
  sub.localPrime = ev.localPrime;
  sub.basis.resize(top + 1);
  sub.d.resize(top + 1);
  for (int n = 0; n <= top; ++n)
    sub.basis[n].assign(basisMat[n].cols, EvalBasisElem{0, 0});
  for (int n = 1; n <= top; ++n) {
    IMatrix rhs = mat_mul(ev.d[n], basisMat[n]);
    auto x = solve_matrix(basisMat[n - 1], rhs);
    if (!x)
      throw Error(Err::NotSubconjugate, "image sum is not a subcomplex (internal)");
    sub.d[n] = *x;
  }
  if (ev.augmented) {
    IMatrix eps(1, ev.dim(0));
    for (std::size_t j = 0; j < eps.cols; ++j) eps.at(0, j) = 1;
    sub.augRow = mat_mul(eps, basisMat[0]);
  }
  return homology_of_eval(sub);
}

} // namespace rosi
