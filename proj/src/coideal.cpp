// Copyright 2026 The kacgalois Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "kacgalois/coideal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace kacgalois {

namespace {

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Mat coordinate_pinv(const std::vector<Mat>& ops, int d) {
  Mat st = stack_vecs(ops, d);
  return (st.adjoint() * st).inverse() * st.adjoint();
}

// Second legs (left) or first legs (right) of delta(x) in the natural basis.
std::vector<Mat> legs(const KacView& a, const Mat& x, Side side) {
  Mat c = a.s.coproduct(a.coords(x));
  std::vector<Mat> out;
  for (int i = 0; i < a.n(); ++i) out.push_back(a.op(side == Side::left ? Vec(c.row(i).transpose()) : Vec(c.col(i))));
  return out;
}

double subspace_residual(const Mat& q, const Vec& v) {
  Vec r = q.cols() ? Vec(v - q * (q.adjoint() * v)) : v;
  return r.norm();
}

double space_distance(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) return 1.0;
  if (a.cols() == 0) return 0.0;
  return span_distance(a, b);
}

MMAlgebra span_of(const std::vector<Mat>& mats, int d, const Tolerance& tol) {
  return MMAlgebra::from_span(mats, d, tol);
}

const GroupTable& origin_group(const KacAlgebra& k, const char* family) {
  if (!k.origin()) throw Error("operation requires a group or function algebra");
  if (family && k.origin()->family != family) throw Error(std::string("operation requires a ") + family);
  return k.origin()->group;
}

std::string subgroup_label(const Subgroup& h) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
  os << "}";
  return os.str();
}

}  // namespace

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

Mat KacView::op(const Vec& c) const {
  Mat out = Mat::Zero(ambient(), ambient());
  for (int k = 0; k < n(); ++k)
    if (std::abs(c(k)) > 0) out += c(k) * ops[k];
  return out;
}

KacView view_of(const KacAlgebra& k) {
  KacView v;
  v.s = k.structure();
  v.ops = k.ops();
  v.pinv = coordinate_pinv(v.ops, k.n());
  v.whole = k.algebra();
  return v;
}

KacView view_of(const DualKac& d) {
  KacView v;
  v.s = d.hat().structure();
  v.ops = d.hat_basis();
  v.pinv = coordinate_pinv(v.ops, d.n());
  v.whole = d.hat_algebra();
  return v;
}

double coideal_residual(const KacView& a, const MMAlgebra& b, Side side) {
  if (b.ambient_dim() != a.ambient()) throw DimensionError("coideal: ambient mismatch");
  if (b.closure_residual() > 1e-8 || b.excess_over(a.whole) > 1e-8)
    throw Error("coideal: not a unital *-subalgebra of the Kac algebra");
  double r = 0;
  for (const Mat& x : b.basis())
    for (const Mat& leg : legs(a, x, side)) r = std::max(r, b.residual(leg));
  return r;
}

std::optional<Coideal> is_coideal(const KacView& a, const MMAlgebra& b, Side side, const Tolerance& tol) {
  double r = coideal_residual(a, b, side);
  if (r >= tol.tau) return std::nullopt;
  return Coideal{side, b, r};
}

Coideal coideal_closure(const KacView& a, const std::vector<Mat>& gens, Side side, const Tolerance& tol) {
  int d = a.ambient();
  MMAlgebra b = mm_from_generators(gens, d, tol);
  while (true) {
    std::vector<Mat> pool = b.basis();
    for (const Mat& x : b.basis())
      for (const Mat& leg : legs(a, x, side)) pool.push_back(leg);
    MMAlgebra next = mm_from_generators(pool, d, tol);
    if (next.dim() == b.dim()) break;
    b = next;
  }
  return Coideal{side, b, coideal_residual(a, b, side)};
}

std::string projector_fingerprint(const MMAlgebra& b) {
  Mat p = b.frame() * b.frame().adjoint();
  std::string data;
  data.reserve(static_cast<size_t>(p.size()) * 8);
  for (Eigen::Index j = 0; j < p.cols(); ++j)
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      long long re = std::llround(p(i, j).real() * 1e6);
      long long im = std::llround(p(i, j).imag() * 1e6);
      data += std::to_string(re) + "," + std::to_string(im) + ";";
    }
  return hex64(fnv1a64(data));
}

void sort_coideals(std::vector<Coideal>& list) {
  std::vector<std::pair<std::pair<int, std::string>, size_t>> keys;
  for (size_t i = 0; i < list.size(); ++i) keys.push_back({{list[i].dim(), projector_fingerprint(list[i].b)}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<Coideal> out;
  for (const auto& kv : keys) out.push_back(list[kv.second]);
  list = std::move(out);
}

int find_coideal(const std::vector<Coideal>& list, const MMAlgebra& b, double tol) {
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i].dim() == b.dim() && list[i].b.distance(b) < tol) return static_cast<int>(i);
  return -1;
}

std::vector<int> SubspaceSystem::multiplicities() const {
  std::vector<int> out;
  for (const Mat& s : spaces) out.push_back(static_cast<int>(s.cols()));
  return out;
}

SubspaceSystem subspace_system_from_coideal(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                            const MMAlgebra& b) {
  std::vector<std::vector<Vec>> rows(xi.size());
  for (const Mat& x : b.basis()) {
    FourierCoefficients f = fourier(k, xi, k.coords(x));
    for (size_t p = 0; p < xi.size(); ++p)
      for (int i = 0; i < xi[p].d; ++i) rows[p].push_back(f.blocks[p].row(i).transpose());
  }
  SubspaceSystem sys;
  for (size_t p = 0; p < xi.size(); ++p) sys.spaces.push_back(orth(stack_columns(rows[p], xi[p].d)));
  return sys;
}

double SystemCheck::max() const { return std::max({unit, tensor, conjugation}); }

SystemCheck check_subspace_system(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                  const SubspaceSystem& sys, const Tolerance& tol) {
  SystemCheck c;
  if (sys.spaces.size() != xi.size()) throw DimensionError("subspace system: wrong number of spaces");
  c.unit = sys.spaces[0].cols() == 1 ? 0.0 : 1.0;
  if (c.unit > 0) c.violations.push_back("trivial corepresentation space is not full");
  int m = static_cast<int>(xi.size());
  for (int p = 0; p < m; ++p)
    for (int s = 0; s < m; ++s) {
      if (sys.spaces[p].cols() == 0 || sys.spaces[s].cols() == 0) continue;
      Corepresentation w = tensor_corep(k, xi[p], xi[s]);
      double worst = 0;
      for (int t = 0; t < m; ++t) {
        Mat ts = intertwiners(k, w, xi[t]);
        for (Eigen::Index c2 = 0; c2 < ts.cols(); ++c2) {
          Mat tm = unpack_intertwiner(ts.col(c2), xi[t].d, w.d);
          for (Eigen::Index a = 0; a < sys.spaces[p].cols(); ++a)
            for (Eigen::Index b = 0; b < sys.spaces[s].cols(); ++b) {
              Vec v = tm * kron(Mat(sys.spaces[p].col(a)), Mat(sys.spaces[s].col(b)));
              worst = std::max(worst, subspace_residual(sys.spaces[t], v));
            }
        }
      }
      c.tensor = std::max(c.tensor, worst);
      if (worst >= tol.tau) c.violations.push_back("tensor (" + std::to_string(p) + "," + std::to_string(s) + ")");
    }
  std::vector<int> bar = conjugation_involution(k, xi, tol);
  for (int p = 0; p < m; ++p) {
    Corepresentation cj = conjugate(k, xi[p]);
    Mat ts = intertwiners(k, cj, xi[bar[p]]);
    double worst = sys.spaces[p].cols() == sys.spaces[bar[p]].cols() ? 0.0 : 1.0;
    if (ts.cols() > 0) {
      Mat sm = unpack_intertwiner(ts.col(0), xi[p].d, xi[p].d);
      for (Eigen::Index a = 0; a < sys.spaces[p].cols(); ++a) {
        Vec v = sm * sys.spaces[p].col(a).conjugate();
        worst = std::max(worst, subspace_residual(sys.spaces[bar[p]], v) / std::max(1e-300, v.norm()));
      }
    }
    c.conjugation = std::max(c.conjugation, worst);
    if (worst >= tol.tau) c.violations.push_back("conjugation (" + std::to_string(p) + "," + std::to_string(bar[p]) + ")");
  }
  return c;
}

Coideal coideal_from_subspace_system(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                     const SubspaceSystem& sys, const Tolerance& tol) {
  SystemCheck c = check_subspace_system(k, xi, sys, tol);
  if (!c.violations.empty()) {
    std::string msg = "subspace system violates closure:";
    for (const std::string& v : c.violations) msg += " " + v;
    throw InconsistencyError(msg);
  }
  std::vector<Mat> elems;
  for (size_t p = 0; p < xi.size(); ++p)
    for (Eigen::Index col = 0; col < sys.spaces[p].cols(); ++col)
      for (int i = 0; i < xi[p].d; ++i) {
        Vec x = Vec::Zero(k.n());
        for (int j = 0; j < xi[p].d; ++j) x += sys.spaces[p](j, col) * xi[p].at(i, j);
        elems.push_back(k.op(x));
      }
  MMAlgebra b = span_of(elems, k.n(), tol);
  return Coideal{Side::left, b, coideal_residual(view_of(k), b, Side::left)};
}

double system_distance(const SubspaceSystem& a, const SubspaceSystem& b) {
  if (a.spaces.size() != b.spaces.size()) return 1.0;
  double r = 0;
  for (size_t p = 0; p < a.spaces.size(); ++p) r = std::max(r, space_distance(a.spaces[p], b.spaces[p]));
  return r;
}

std::vector<Coideal> enumerate_coideals_group_case(const KacAlgebra& k, Side side,
                                                   std::vector<Subgroup>* subgroups, const Tolerance& tol) {
  const GroupTable& g = origin_group(k, nullptr);
  bool functions = k.origin()->family == "function_algebra";
  int n = g.order();
  KacView view = view_of(k);
  std::vector<std::pair<Coideal, Subgroup>> found;
  for (const Subgroup& h : enumerate_subgroups(g)) {
    std::vector<Mat> elems;
    if (functions) {
      std::vector<bool> used(n, false);
      for (int x = 0; x < n; ++x) {
        if (used[x]) continue;
        Vec f = Vec::Zero(n);
        for (int y : h) {
          int z = side == Side::left ? g.op(x, y) : g.op(y, x);
          f(z) = 1.0;
          used[z] = true;
        }
        elems.push_back(k.op(f));
      }
    } else {
      for (int y : h) elems.push_back(k.op(Vec::Unit(n, y)));
    }
    MMAlgebra b = span_of(elems, n, tol);
    found.push_back({Coideal{side, b, coideal_residual(view, b, side)}, h});
  }
  std::vector<Coideal> list;
  for (const auto& f : found) list.push_back(f.first);
  sort_coideals(list);
  if (subgroups) {
    subgroups->clear();
    for (const Coideal& c : list)
      for (const auto& f : found)
        if (f.first.dim() == c.dim() && f.first.b.distance(c.b) < 1e-8) {
          subgroups->push_back(f.second);
          break;
        }
  }
  return list;
}

bool closure_certificate(const KacAlgebra& k, const std::vector<Coideal>& list, Side side,
                         std::uint64_t seed, const Tolerance& tol) {
  KacView view = view_of(k);
  int n = k.n();
  for (int i = 0; i < n; ++i)
    if (find_coideal(list, coideal_closure(view, {view.ops[i]}, side, tol).b) < 0) return false;
  if (n < 2) return true;
  Rng rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < 8; ++t) {
    int a = pick(rng), b = pick(rng);
    if (find_coideal(list, coideal_closure(view, {view.ops[a], view.ops[b]}, side, tol).b) < 0) return false;
  }
  return true;
}

std::vector<Coideal> search_coideals(const KacView& a, const std::vector<Mat>& extra_generators, Side side,
                                     std::uint64_t seed, const Tolerance& tol) {
  int d = a.ambient();
  std::vector<Coideal> list;
  auto add = [&](const Coideal& c) {
    if (find_coideal(list, c.b) < 0) list.push_back(c);
  };
  add(coideal_closure(a, {}, side, tol));
  std::vector<Mat> cands = a.ops;
  cands.insert(cands.end(), extra_generators.begin(), extra_generators.end());
  std::vector<Mat> minimal;
  CentralDecomposition cd = central_decomposition(a.whole, tol);
  for (size_t b = 0; b < cd.projections.size(); ++b) {
    int m = cd.blocks[b].size;
    std::vector<Mat> units = matrix_units(a.whole, cd.projections[b], m, tol);
    for (int i = 0; i < m; ++i) minimal.push_back(units[i * m + i]);
  }
  int pm = static_cast<int>(minimal.size());
  if (pm <= 10) {
    for (unsigned mask = 1; mask + 1 < (1u << pm); ++mask) {
      Mat p = Mat::Zero(d, d);
      for (int i = 0; i < pm; ++i)
        if (mask >> i & 1) p += minimal[i];
      cands.push_back(p);
    }
  } else {
    cands.insert(cands.end(), minimal.begin(), minimal.end());
  }
  for (const Mat& c : cands) add(coideal_closure(a, {c}, side, tol));
  Rng rng(seed);
  if (!cands.empty()) {
    std::uniform_int_distribution<size_t> pick(0, cands.size() - 1);
    for (int t = 0; t < 16; ++t) add(coideal_closure(a, {cands[pick(rng)], cands[pick(rng)]}, side, tol));
  }
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<Mat> gens = list[i].b.basis();
      gens.insert(gens.end(), list[j].b.basis().begin(), list[j].b.basis().end());
      add(coideal_closure(a, gens, side, tol));
    }
  sort_coideals(list);
  return list;
}

SubspaceSystem fixed_vector_system(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                                   const Subgroup& h) {
  origin_group(k, "function_algebra");
  SubspaceSystem sys;
  for (const Corepresentation& c : xi) {
    Mat system(c.d * static_cast<int>(h.size()), c.d);
    for (size_t t = 0; t < h.size(); ++t) {
      Mat rep(c.d, c.d);
      for (int i = 0; i < c.d; ++i)
        for (int j = 0; j < c.d; ++j) rep(i, j) = c.at(i, j)(h[t]);
      system.middleRows(static_cast<int>(t) * c.d, c.d) = rep - Mat::Identity(c.d, c.d);
    }
    sys.spaces.push_back(null_space(system));
  }
  return sys;
}

Subgroup subgroup_from_system(const KacAlgebra& k, const std::vector<Corepresentation>& xi,
                              const SubspaceSystem& sys, double tol) {
  const GroupTable& g = origin_group(k, "function_algebra");
  Subgroup h;
  for (int x = 0; x < g.order(); ++x) {
    double worst = 0;
    for (size_t p = 0; p < xi.size(); ++p) {
      const Corepresentation& c = xi[p];
      Mat rep(c.d, c.d);
      for (int i = 0; i < c.d; ++i)
        for (int j = 0; j < c.d; ++j) rep(i, j) = c.at(i, j)(x);
      if (sys.spaces[p].cols() > 0) worst = std::max(worst, max_abs(Mat(rep * sys.spaces[p] - sys.spaces[p])));
    }
    if (worst < tol) h.push_back(x);
  }
  return h;
}

Coideal tilde(const KacAlgebra& k, const DualKac& d, const MMAlgebra& b, const Tolerance& tol) {
  int n = k.n();
  const KacStructure& s = k.structure();
  Mat pm = pairing_matrix(k, d);
  Mat system(n * b.dim(), n);
  int row = 0;
  for (const Mat& x : b.basis()) {
    Vec cb = k.coords(x);
    cplx eps = s.epsilon(cb);
    for (int i = 0; i < n; ++i) {
      Vec z = s.product(Vec::Unit(n, i), cb) - eps * Vec::Unit(n, i);
      system.row(row++) = z.transpose() * pm;
    }
  }
  Mat ns = null_space(system, tol.rank);
  std::vector<Mat> elems;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) elems.push_back(d.op(ns.col(c)));
  MMAlgebra t = span_of(elems, n, tol);
  return Coideal{Side::left, t, coideal_residual(view_of(d), t, Side::left)};
}

Coideal tilde_hat(const KacAlgebra& k, const DualKac& d, const MMAlgebra& c, const Tolerance& tol) {
  int n = k.n();
  const KacStructure& s = d.hat().structure();
  Mat pm = pairing_matrix(k, d);
  Mat system(n * c.dim(), n);
  int row = 0;
  for (const Mat& y : c.basis()) {
    Vec cc = d.coords(y);
    cplx eps = s.epsilon(cc);
    for (int l = 0; l < n; ++l) {
      Vec z = s.product(Vec::Unit(n, l), cc) - eps * Vec::Unit(n, l);
      system.row(row++) = (pm * z).transpose();
    }
  }
  Mat ns = null_space(system, tol.rank);
  std::vector<Mat> elems;
  for (Eigen::Index col = 0; col < ns.cols(); ++col) elems.push_back(k.op(ns.col(col)));
  MMAlgebra t = span_of(elems, n, tol);
  return Coideal{Side::left, t, coideal_residual(view_of(k), t, Side::left)};
}

MMAlgebra relative_commutant_in_dual(const DualKac& d, const MMAlgebra& b, const Tolerance& tol) {
  return intersect(commutant(b, tol), d.hat_algebra());
}

MMAlgebra relative_commutant_in_algebra(const KacAlgebra& k, const MMAlgebra& c, const Tolerance& tol) {
  return intersect(commutant(c, tol), k.algebra());
}

Coideal tilde_via_commutant(const KacAlgebra& k, const DualKac& d, const MMAlgebra& b, const Tolerance& tol) {
  MMAlgebra rc = relative_commutant_in_dual(d, b, tol);
  std::vector<Mat> elems;
  for (const Mat& y : rc.basis()) elems.push_back(d.antipode_op(y));
  MMAlgebra t = span_of(elems, k.n(), tol);
  return Coideal{Side::left, t, coideal_residual(view_of(d), t, Side::left)};
}

double bicommutant_check(const KacAlgebra& k, const DualKac& d, const MMAlgebra& b, const Tolerance& tol) {
  return relative_commutant_in_algebra(k, relative_commutant_in_dual(d, b, tol), tol).distance(b);
}

double bicommutant_check_hat(const KacAlgebra& k, const DualKac& d, const MMAlgebra& c, const Tolerance& tol) {
  return relative_commutant_in_dual(d, relative_commutant_in_algebra(k, c, tol), tol).distance(c);
}

double JonesProjectionReport::max() const {
  return std::max({hhat_trace, counit_value, formula, membership, kappa_fixed, jones_relation});
}

JonesProjectionReport jones_projection_coideal(const KacAlgebra& k, const DualKac& d, const MMAlgebra& b,
                                               const Tolerance& tol) {
  int n = k.n();
  double ratio = static_cast<double>(b.dim()) / n;
  JonesProjectionReport r;
  std::vector<Vec> vecs;
  for (const Mat& x : b.basis()) vecs.push_back(x * k.omega());
  Mat q = orth(stack_columns(vecs, n), tol.rank);
  r.e_b = q * q.adjoint();
  r.hhat_trace = std::abs(d.haar(r.e_b) - ratio);

  StateData h = make_state(k.algebra(), k.omega() * k.omega().adjoint(), tol);
  CondExpectation eb = conditional_expectation(k.algebra(), b, h, tol);
  r.counit_value = std::abs(k.structure().epsilon(k.coords(eb(d.e()))) - ratio);

  MMAlgebra bt = tilde(k, d, b, tol).b;
  CondExpectation ebt = conditional_expectation(d.hat_algebra(), bt, trace_state(d.hat_algebra()), tol);
  r.formula = max_abs(Mat(r.e_b - static_cast<double>(b.dim()) * ebt(d.e_hat())));
  r.membership = d.hat_algebra().residual(r.e_b);
  r.kappa_fixed = max_abs(Mat(d.antipode_op(r.e_b) - r.e_b));
  for (const Mat& x : k.ops())
    r.jones_relation = std::max(r.jones_relation, max_abs(Mat(r.e_b * x * r.e_b - eb(x) * r.e_b)));
  return r;
}

bool GaloisReport::passed() const {
  if (!order_reversing || !bijective) return false;
  if (enumeration == "subgroups" && !complete_certified) return false;
  for (const GaloisRow& r : rows) {
    if (!r.dim_product || r.tilde_index < 0) return false;
    for (double v : {r.certificate, r.tilde_certificate, r.involution, r.commutant_agreement, r.bicommutant,
                     r.bicommutant_hat, r.round_trip, r.system_round_trip, r.system_closure,
                     r.dim_bookkeeping, r.jones.max()})
      if (!(v < tolerance)) return false;
  }
  return true;
}

GaloisReport galois_lattice_report(const KacAlgebra& k, std::uint64_t seed, const Tolerance& tol) {
  int n = k.n();
  DualKac d = dual_kac(k, tol);
  std::vector<Corepresentation> xi = irreducible_coreps(k, d);
  KacView va = view_of(k);
  KacView vh = view_of(d);
  DualKac dd = dual_kac(d.hat(), tol);
  std::vector<Mat> hat_gens;
  for (const Corepresentation& c : irreducible_coreps(d.hat(), dd))
    for (const Vec& u : c.u) hat_gens.push_back(d.op(u));

  GaloisReport rep;
  rep.n = n;
  rep.tolerance = tol.tau;
  std::vector<Coideal> list;
  std::vector<Subgroup> subgroups;
  if (k.origin()) {
    rep.enumeration = "subgroups";
    list = enumerate_coideals_group_case(k, Side::left, &subgroups, tol);
    rep.complete_certified = closure_certificate(k, list, Side::left, seed, tol);
  } else {
    rep.enumeration = "closure-search";
    std::vector<Mat> gens;
    for (const Corepresentation& c : xi)
      for (const Vec& u : c.u) gens.push_back(k.op(u));
    list = search_coideals(va, gens, Side::left, seed, tol);
  }
  std::vector<Coideal> hat_list = search_coideals(vh, hat_gens, Side::left, seed, tol);
  if (!k.origin()) {
    // Close both searches under the two tilde maps.
    while (true) {
      size_t before = list.size() + hat_list.size();
      for (const Coideal& b : std::vector<Coideal>(list)) {
        Coideal t = tilde(k, d, b.b, tol);
        if (find_coideal(hat_list, t.b) < 0) hat_list.push_back(t);
      }
      for (const Coideal& c : std::vector<Coideal>(hat_list)) {
        Coideal t = tilde_hat(k, d, c.b, tol);
        if (find_coideal(list, t.b) < 0) list.push_back(t);
      }
      if (list.size() + hat_list.size() == before) break;
    }
    sort_coideals(list);
    sort_coideals(hat_list);
  }
  for (const Coideal& c : hat_list) {
    rep.hat_fingerprints.push_back(projector_fingerprint(c.b));
    rep.hat_dims.push_back(c.dim());
  }

  std::vector<MMAlgebra> tildes;
  for (size_t i = 0; i < list.size(); ++i) {
    const Coideal& b = list[i];
    GaloisRow row;
    row.dim = b.dim();
    row.fingerprint = projector_fingerprint(b.b);
    if (!subgroups.empty()) row.subgroup = subgroup_label(subgroups[i]);
    row.certificate = b.certificate;
    Coideal t = tilde(k, d, b.b, tol);
    tildes.push_back(t.b);
    row.tilde_index = find_coideal(hat_list, t.b);
    row.tilde_dim = t.dim();
    row.dim_product = b.dim() * t.dim() == n;
    row.tilde_certificate = t.certificate;
    row.involution = tilde_hat(k, d, t.b, tol).b.distance(b.b);
    row.commutant_agreement = tilde_via_commutant(k, d, b.b, tol).b.distance(t.b);
    row.bicommutant = bicommutant_check(k, d, b.b, tol);
    std::vector<Mat> right;
    for (const Mat& y : t.b.basis()) right.push_back(d.antipode_op(y));
    row.bicommutant_hat = bicommutant_check_hat(k, d, MMAlgebra::from_span(right, n, tol), tol);
    SubspaceSystem sys = subspace_system_from_coideal(k, xi, b.b);
    SystemCheck check = check_subspace_system(k, xi, sys, tol);
    row.system_closure = check.max();
    int total = 0;
    for (size_t p = 0; p < xi.size(); ++p) total += xi[p].d * static_cast<int>(sys.spaces[p].cols());
    row.dim_bookkeeping = std::abs(total - b.dim());
    if (check.violations.empty()) {
      Coideal back = coideal_from_subspace_system(k, xi, sys, tol);
      row.round_trip = back.b.distance(b.b);
      row.system_round_trip = system_distance(subspace_system_from_coideal(k, xi, back.b), sys);
    } else {
      row.round_trip = row.system_round_trip = 1.0;
    }
    row.jones = jones_projection_coideal(k, d, b.b, tol);
    rep.rows.push_back(std::move(row));
  }

  size_t m = list.size();
  rep.inclusion.assign(m, std::vector<int>(m, 0));
  rep.hat_inclusion.assign(m, std::vector<int>(m, 0));
  rep.order_reversing = true;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      rep.inclusion[i][j] = list[i].b.excess_over(list[j].b) < 1e-8;
      rep.hat_inclusion[i][j] = tildes[i].excess_over(tildes[j]) < 1e-8;
    }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (rep.inclusion[i][j] != rep.hat_inclusion[j][i]) rep.order_reversing = false;
  std::vector<int> hits(hat_list.size(), 0);
  rep.bijective = hat_list.size() == m;
  for (const GaloisRow& r : rep.rows) {
    if (r.tilde_index < 0) rep.bijective = false;
    else ++hits[r.tilde_index];
  }
  for (int h : hits)
    if (h != 1) rep.bijective = false;
  return rep;
}

}  // namespace kacgalois
