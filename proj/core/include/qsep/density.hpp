#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsep/linalg.hpp"
#include "qsep/partition.hpp"
#include "qsep/types.hpp"

namespace qsep {

/// Hermitian, unit-trace, positive semi-definite operator attached to a
/// partition. Construction validates all three invariants; instances are
/// immutable afterwards.
class DensityMatrix {
 public:
  DensityMatrix(Mat m, PartitionSpec spec);

  static DensityMatrix pure(const Vec& psi, PartitionSpec spec);
  static DensityMatrix maximally_mixed(PartitionSpec spec);

  const Mat& mat() const { return mat_; }
  const PartitionSpec& spec() const { return spec_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  double purity() const { return (mat_ * mat_).trace().real(); }

 private:
  Mat mat_;
  PartitionSpec spec_;
};

/// Haar-random pure state of dimension d (single party).
DensityMatrix random_pure_state(int d, std::uint64_t seed);
/// Haar-random pure state on an arbitrary partition.
DensityMatrix random_pure_state(const PartitionSpec& spec, std::uint64_t seed);
/// Wishart-type mixed state of the given rank: G G^dag / Tr.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);
DensityMatrix random_density(const PartitionSpec& spec, int rank, std::uint64_t seed);

/// Reduced state on the kept parties (ascending order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
/// Partial transpose over the selected parties (generally not PSD, hence Mat).
Mat partial_transpose(const DensityMatrix& rho, std::span<const int> parties);

}  // namespace qsep
