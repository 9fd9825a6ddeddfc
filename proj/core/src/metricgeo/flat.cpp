#include "vaisman/metricgeo/flat.hpp"

#include "vaisman/liealg/structure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace vaisman::metricgeo {

Matrix restrict_to(const Matrix& t, const Subspace& s) {
  const Matrix b = s.as_columns();
  Matrix out(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    auto coords = b.solve(t * s.basis()[j]);
    if (!coords) throw std::invalid_argument("operator does not preserve the subspace");
    out.set_column(j, *coords);
  }
  return out;
}

std::vector<FlatPropertyCheck> flat_properties(const LieAlgebra& g, const Metric& m, const FlatDecomposition& fd) {
  const std::size_t n = g.dim();
  const Matrix& G = m.gram();
  const Connection c = levi_civita(g, m);
  std::vector<FlatPropertyCheck> out;
  auto orth = [&](const Subspace& a, const Subspace& b) {
    for (const auto& x : a.basis())
      for (const auto& y : b.basis())
        if (exact::dot(x, G * y) != 0) return false;
    return true;
  };
  out.push_back({"pairwise orthogonal", orth(fd.z, fd.h) && orth(fd.z, fd.kprime) && orth(fd.h, fd.kprime)});
  out.push_back({"direct sum spans", fd.z.dim() + fd.h.dim() + fd.kprime.dim() == n &&
                                         fd.z.sum(fd.h).sum(fd.kprime).dim() == n});
  out.push_back({"(a) h abelian", liealg::bracket_span(g, fd.h, fd.h).dim() == 0});
  out.push_back({"(a) k' abelian", liealg::bracket_span(g, fd.kprime, fd.kprime).dim() == 0});
  out.push_back({"(b) k' even-dimensional", fd.kprime.dim() % 2 == 0});
  bool skew_inj = true;
  {
    // ad: h -> so(k') injective and skew.
    std::vector<Vector> flat_ads;
    for (const auto& hvec : fd.h.basis()) {
      const Matrix ad = g.ad(hvec);
      Matrix r;
      try {
        r = restrict_to(ad, fd.kprime);
      } catch (const std::invalid_argument&) {
        skew_inj = false;
        break;
      }
      const Matrix gk = fd.kprime.as_columns().transpose() * G * fd.kprime.as_columns();
      if (!(r.transpose() * gk + gk * r).is_zero()) skew_inj = false;
      flat_ads.push_back(r.data());
    }
    if (skew_inj && !flat_ads.empty() && Subspace(flat_ads.front().size(), flat_ads).dim() != flat_ads.size())
      skew_inj = false;
    if (!flat_ads.empty() && flat_ads.front().empty()) skew_inj = false;
  }
  out.push_back({"(b) ad: h -> so(k') injective", skew_inj});
  bool c_ok = true;
  for (const auto& x : fd.z.sum(fd.h).basis())
    if (c.along(x) != g.ad(x)) c_ok = false;
  out.push_back({"(c) ad_x = nabla_x on z + h", c_ok});
  bool d_ok = true;
  const Subspace zk = fd.z.sum(fd.kprime);
  for (const auto& x : zk.basis())
    if (!c.along(x).is_zero()) d_ok = false;
  // nabla_x = 0 exactly on z + k': the kernel of x -> nabla_x must equal it.
  Matrix lin(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = c.nabla[i].data();
    for (std::size_t r = 0; r < n * n; ++r) lin(r, i) = d[r];
  }
  if (Subspace(n, exact::kernel_basis(lin)) != zk) d_ok = false;
  out.push_back({"(d) nabla_x = 0 iff x in z + k'", d_ok});
  out.push_back({"unimodular", liealg::is_unimodular(g)});
  out.push_back({"solvable", liealg::is_solvable(g)});
  return out;
}

FlatDecomposition flat_decomposition(const LieAlgebra& g, const Metric& m) {
  if (!is_flat(g, m).flat) throw std::invalid_argument("metric Lie algebra is not flat");
  FlatDecomposition fd;
  fd.z = liealg::center(g);
  fd.kprime = liealg::derived_algebra(g);
  fd.h = fd.z.sum(fd.kprime).orthogonal_complement(m.gram());
  for (const auto& p : flat_properties(g, m, fd))
    if (!p.pass) throw std::logic_error("flat decomposition property failed: " + p.name);
  return fd;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd to_eigen(const Matrix& m) {
  MatrixXd r(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return r;
}

}  // namespace

AdaptedBlockBasis adapted_block_basis(const Metric& m, const Subspace& space, const std::vector<Matrix>& operators,
                                      double tolerance, unsigned seed) {
  const std::size_t k = space.dim();
  if (k % 2 != 0) throw std::invalid_argument("block basis needs an even-dimensional subspace");
  const Matrix b = space.as_columns();
  const Matrix gk = b.transpose() * m.gram() * b;
  std::vector<Matrix> restricted;
  for (const auto& t : operators) {
    Matrix r = restrict_to(t, space);
    if (!(r.transpose() * gk + gk * r).is_zero()) throw std::invalid_argument("operator is not skew on the subspace");
    restricted.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < restricted.size(); ++i)
    for (std::size_t j = i + 1; j < restricted.size(); ++j)
      if (!exact::commutator(restricted[i], restricted[j]).is_zero())
        throw std::invalid_argument("operators do not commute on the subspace");

  AdaptedBlockBasis out;
  out.params.assign(operators.size(), {});
  if (k == 0) return out;

  // Orthonormal coordinates: with Gk = L L^T, y = L^T x.
  const MatrixXd Gk = to_eigen(gk);
  const Eigen::LLT<MatrixXd> llt(Gk);
  const MatrixXd L = llt.matrixL();
  const MatrixXd Linv = L.inverse();
  std::vector<MatrixXd> ops;
  for (const auto& r : restricted) ops.push_back(L.transpose() * to_eigen(r) * Linv.transpose());

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  MatrixXd S = MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (const auto& o : ops) S += dist(rng) * o;
  S = 0.5 * (S - S.transpose());
  const Eigen::SelfAdjointEigenSolver<MatrixXd> es(-S * S);
  const VectorXd evals = es.eigenvalues();
  const MatrixXd evecs = es.eigenvectors();
  const double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());
  const double cluster_tol = 1e-7 * scale;

  std::vector<VectorXd> chosen;
  Eigen::Index i = 0;
  const auto kk = static_cast<Eigen::Index>(k);
  while (i < kk) {
    Eigen::Index j = i;
    while (j < kk && std::abs(evals(j) - evals(i)) <= cluster_tol) ++j;
    std::vector<VectorXd> cluster;
    for (Eigen::Index c = i; c < j; ++c) cluster.push_back(evecs.col(c));
    const double mu2 = evals.segment(i, j - i).mean();
    std::vector<VectorXd> picked;
    for (const auto& cand : cluster) {
      VectorXd e = cand;
      for (const auto& p : picked) e -= p.dot(e) * p;
      if (e.norm() < 1e-6) continue;
      e.normalize();
      VectorXd f;
      if (mu2 > cluster_tol) {
        f = S * e / std::sqrt(mu2);
      } else {
        // Zero cluster: any orthonormal completion in the cluster.
        f = VectorXd::Zero(kk);
        for (const auto& cand2 : cluster) {
          VectorXd t = cand2;
          for (const auto& p : picked) t -= p.dot(t) * p;
          t -= e.dot(t) * e;
          if (t.norm() > 1e-6) {
            f = t.normalized();
            break;
          }
        }
        if (f.norm() < 0.5) throw std::runtime_error("odd-dimensional kernel cluster in block basis");
      }
      for (const auto& p : picked) f -= p.dot(f) * p;
      f -= e.dot(f) * e;
      f.normalize();
      picked.push_back(e);
      picked.push_back(f);
      if (picked.size() >= cluster.size()) break;
    }
    chosen.insert(chosen.end(), picked.begin(), picked.end());
    i = j;
  }
  if (chosen.size() != k) throw std::runtime_error("block basis construction lost dimensions");
  // Orient each block so that the first operator reads T e = a f with a >= 0.
  if (!ops.empty())
    for (std::size_t blk = 0; blk + 1 < chosen.size(); blk += 2)
      if (chosen[blk + 1].dot(ops[0] * chosen[blk]) < 0) chosen[blk + 1] = -chosen[blk + 1];

  MatrixXd Q(kk, kk);
  for (Eigen::Index c = 0; c < kk; ++c) Q.col(c) = chosen[static_cast<std::size_t>(c)];
  // Back to ambient coordinates: x = L^{-T} y, ambient = B x.
  const MatrixXd B = to_eigen(b);
  const MatrixXd amb = B * Linv.transpose() * Q;
  for (Eigen::Index c = 0; c < kk; ++c) {
    std::vector<double> v(static_cast<std::size_t>(amb.rows()));
    for (Eigen::Index r = 0; r < amb.rows(); ++r) v[static_cast<std::size_t>(r)] = amb(r, c);
    out.vectors.push_back(std::move(v));
  }
  double residual = (Q.transpose() * Q - MatrixXd::Identity(kk, kk)).cwiseAbs().maxCoeff();
  for (std::size_t o = 0; o < ops.size(); ++o) {
    const MatrixXd T = Q.transpose() * ops[o] * Q;
    for (Eigen::Index r = 0; r < kk; ++r)
      for (Eigen::Index c = 0; c < kk; ++c)
        if (r / 2 != c / 2) residual = std::max(residual, std::abs(T(r, c)));
    for (Eigen::Index blk = 0; blk < kk; blk += 2) {
      residual = std::max(residual, std::abs(T(blk, blk)) + std::abs(T(blk + 1, blk + 1)));
      residual = std::max(residual, std::abs(T(blk, blk + 1) + T(blk + 1, blk)));
      out.params[o].push_back(T(blk + 1, blk));
    }
  }
  out.residual = residual;
  if (residual > tolerance) throw std::runtime_error("block basis residual exceeds tolerance");
  return out;
}

AdaptedBlockBasis adapted_block_basis(const LieAlgebra& g, const Metric& m, const FlatDecomposition& fd,
                                      const std::vector<Matrix>& operators, double tolerance, unsigned seed) {
  // Exact: ad(h) has no common kernel on k' and ad: h -> End(k') is injective.
  std::vector<Matrix> ads;
  for (const auto& hv : fd.h.basis()) ads.push_back(restrict_to(g.ad(hv), fd.kprime));
  const std::size_t kd = fd.kprime.dim();
  if (kd > 0) {
    Matrix stacked(ads.size() * kd, kd);
    for (std::size_t a = 0; a < ads.size(); ++a)
      for (std::size_t r = 0; r < kd; ++r)
        for (std::size_t c = 0; c < kd; ++c) stacked(a * kd + r, c) = ads[a](r, c);
    if (ads.empty() || !exact::kernel_basis(stacked).empty())
      throw std::logic_error("some lambda_i vanishes: ad(h) has a common kernel on k'");
  }
  std::vector<Vector> flat_ads;
  for (const auto& a : ads) flat_ads.push_back(a.data());
  if (!flat_ads.empty() && kd > 0 && Subspace(kd * kd, flat_ads).dim() != flat_ads.size())
    throw std::logic_error("ad: h -> End(k') is not injective");
  if (kd == 0 && fd.h.dim() > 0) throw std::logic_error("ad: h -> End(k') is not injective");

  std::vector<Matrix> all = operators;
  for (const auto& hv : fd.h.basis()) all.push_back(g.ad(hv));
  AdaptedBlockBasis out = adapted_block_basis(m, fd.kprime, all, tolerance, seed);
  const std::size_t nops = operators.size();
  const std::size_t blocks = kd / 2;
  out.lambdas.assign(blocks, std::vector<double>(fd.h.dim(), 0.0));
  for (std::size_t hj = 0; hj < fd.h.dim(); ++hj)
    for (std::size_t bi = 0; bi < blocks; ++bi) out.lambdas[bi][hj] = out.params[nops + hj][bi];
  out.params.resize(nops);
  return out;
}

}  // namespace vaisman::metricgeo
