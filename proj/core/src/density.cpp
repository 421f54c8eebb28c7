#include "qsep/density.hpp"

#include <cmath>

#include "qsep/rng.hpp"
#include "qsep/tolerances.hpp"

namespace qsep {

DensityMatrix::DensityMatrix(Mat m, PartitionSpec spec) : mat_(std::move(m)), spec_(std::move(spec)) {
  if (mat_.rows() != mat_.cols()) throw ConfigError("density matrix must be square");
  if (mat_.rows() != spec_.total_dim())
    throw ConfigError("density matrix dimension does not match the partition");
  if (hermiticity_defect(mat_) > tol::kHermitian)
    throw ConfigError("density matrix is not Hermitian");
  if (std::abs(mat_.trace() - cplx(1.0)) > tol::kUnitTrace)
    throw ConfigError("density matrix does not have unit trace");
  if (min_eigenvalue(mat_) < -tol::kPsd)
    throw ConfigError("density matrix is not positive semi-definite");
}

DensityMatrix DensityMatrix::pure(const Vec& psi, PartitionSpec spec) {
  double n2 = psi.squaredNorm();
  if (n2 <= 0.0) throw ConfigError("zero vector cannot be normalized");
  Vec v = psi / std::sqrt(n2);
  return DensityMatrix(v * v.adjoint(), std::move(spec));
}

DensityMatrix DensityMatrix::maximally_mixed(PartitionSpec spec) {
  int n = spec.total_dim();
  return DensityMatrix(Mat::Identity(n, n) / static_cast<double>(n), std::move(spec));
}

DensityMatrix random_pure_state(const PartitionSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  int n = spec.total_dim();
  Vec psi(n);
  for (int i = 0; i < n; ++i) psi(i) = rng.complex_gaussian();
  return DensityMatrix::pure(psi, spec);
}

DensityMatrix random_pure_state(int d, std::uint64_t seed) {
  return random_pure_state(PartitionSpec::single(d), seed);
}

DensityMatrix random_density(const PartitionSpec& spec, int rank, std::uint64_t seed) {
  int n = spec.total_dim();
  if (rank < 1 || rank > n) throw ConfigError("rank out of range");
  Rng rng(seed);
  Mat g(n, rank);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < rank; ++k) g(i, k) = rng.complex_gaussian();
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix((rho + rho.adjoint()) / 2.0, spec);
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  return random_density(PartitionSpec::single(d), rank, seed);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  std::vector<int> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  Mat reduced = partial_trace(rho.mat(), rho.spec(), keep_sorted);
  return DensityMatrix(std::move(reduced), rho.spec().sub(keep_sorted));
}

Mat partial_transpose(const DensityMatrix& rho, std::span<const int> parties) {
  return partial_transpose(rho.mat(), rho.spec(), parties);
}

}  // namespace qsep
