#include "qsep/designs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsep/linalg.hpp"
#include "qsep/tolerances.hpp"

namespace qsep {

namespace {

bool is_odd_prime(int d) {
  if (d < 3 || d % 2 == 0) return false;
  for (int f = 3; f * f <= d; f += 2)
    if (d % f == 0) return false;
  return true;
}

}  // namespace

ProjectiveDesign::ProjectiveDesign(int d, std::vector<Mat> projectors)
    : d_(d), projectors_(std::move(projectors)) {}

ProjectiveDesign ProjectiveDesign::custom(int d, std::vector<Mat> projectors) {
  if (d < 2) throw ConfigError("design dimension must be >= 2");
  if (projectors.empty()) throw ConfigError("design needs at least one projector");
  for (const Mat& p : projectors)
    if (p.rows() != d || p.cols() != d)
      throw ConfigError("design rejected: projector dimension mismatch");

  for (const Mat& p : projectors) {
    if (operator_norm(p - p.adjoint()) > tol::kProjector)
      throw ConfigError("design rejected: element is not Hermitian");
    if (operator_norm(p * p - p) > tol::kProjector)
      throw ConfigError("design rejected: element is not idempotent");
    if (std::abs(p.trace() - cplx(1.0)) > tol::kProjector)
      throw ConfigError("design rejected: element is not rank-1 (trace != 1)");
  }

  double k = static_cast<double>(projectors.size());
  Mat mean = Mat::Zero(d, d);
  for (const Mat& p : projectors) mean += p;
  mean /= k;
  if (operator_norm(mean - Mat::Identity(d, d) / static_cast<double>(d)) > tol::kOneDesign)
    throw ConfigError("design rejected: fails the 1-design identity");

  ProjectiveDesign design(d, std::move(projectors));
  double expected = 2.0 * k * k / (static_cast<double>(d) * (d + 1));
  if (std::abs(design.frame_potential() - expected) > tol::kFramePotential)
    throw ConfigError("design rejected: fails the 2-design frame potential");
  return design;
}

double ProjectiveDesign::frame_potential() const {
  double sum = 0.0;
  for (const Mat& a : projectors_)
    for (const Mat& b : projectors_) {
      cplx overlap = (a * b).trace();
      sum += std::norm(overlap);
    }
  return sum;
}

ProjectiveDesign qubit_six_state() {
  Mat sx(2, 2), sy(2, 2), sz(2, 2), id = Mat::Identity(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  sz << 1, 0, 0, -1;
  std::vector<Mat> projectors;
  for (const Mat& axis : {sx, sy, sz})
    for (double sign : {1.0, -1.0}) projectors.push_back((id + sign * axis) / 2.0);
  return ProjectiveDesign::custom(2, std::move(projectors));
}

ProjectiveDesign mub_design(int d) {
  if (d == 2)
    throw ConfigError("mub_design covers odd primes; use qubit_six_state for d = 2");
  if (!is_odd_prime(d))
    throw ConfigError("no MUB construction for d = " + std::to_string(d) +
                      " (odd primes only): supply a custom design");

  std::vector<Mat> projectors;
  // Computational basis.
  for (int n = 0; n < d; ++n) {
    Vec e = Vec::Zero(d);
    e(n) = 1.0;
    projectors.push_back(e * e.adjoint());
  }
  // d further bases with components omega^{b n^2 + k n} / sqrt(d).
  cplx omega = std::exp(cplx(0.0, 2.0 * std::numbers::pi / static_cast<double>(d)));
  for (int b = 0; b < d; ++b)
    for (int k = 0; k < d; ++k) {
      Vec psi(d);
      for (int n = 0; n < d; ++n) {
        long long phase = (static_cast<long long>(b) * n * n + static_cast<long long>(k) * n) % d;
        psi(n) = std::pow(omega, static_cast<double>(phase)) / std::sqrt(static_cast<double>(d));
      }
      projectors.push_back(psi * psi.adjoint());
    }

  // Unbiasedness across distinct bases: |<psi|phi>|^2 = 1/d.
  int K = static_cast<int>(projectors.size());
  for (int a = 0; a < K; ++a)
    for (int bb = 0; bb < K; ++bb) {
      if (a / d == bb / d) continue;
      double overlap = std::abs((projectors[static_cast<std::size_t>(a)] *
                                 projectors[static_cast<std::size_t>(bb)])
                                    .trace());
      if (std::abs(overlap - 1.0 / d) > tol::kUnbiasedness)
        throw std::logic_error("MUB construction failed the unbiasedness check");
    }
  return ProjectiveDesign::custom(d, std::move(projectors));
}

bool has_design_for_dimension(int d) { return d == 2 || is_odd_prime(d); }

ProjectiveDesign design_for_dimension(int d) {
  if (d == 2) return qubit_six_state();
  return mub_design(d);
}

double verify_two_design_channel(const ProjectiveDesign& design, const DensityMatrix& rho,
                                 int party) {
  const PartitionSpec& spec = rho.spec();
  if (party < 0 || party >= spec.parties()) throw ConfigError("party index out of range");
  int d = spec.dim(party);
  if (design.dim() != d) throw ConfigError("design dimension does not match the party");

  int n = spec.total_dim();
  Mat lhs = Mat::Zero(n, n);
  for (const Mat& p : design.projectors()) {
    Mat embedded = embed_local(p, party, spec);
    lhs += embedded * rho.mat() * embedded;
  }
  lhs *= static_cast<double>(d) / design.cardinality();

  Mat rest;
  if (spec.parties() == 1) {
    rest = Mat::Identity(1, 1) * rho.mat().trace();
  } else {
    std::vector<int> keep = spec.complement(std::span<const int>(&party, 1));
    rest = partial_trace(rho.mat(), spec, keep);
  }
  Mat rhs = (rho.mat() + kron_at(Mat::Identity(d, d), party, rest, spec)) / (d + 1.0);
  return operator_norm(lhs - rhs);
}

}  // namespace qsep
