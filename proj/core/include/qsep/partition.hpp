#pragma once

#include <span>
#include <vector>

#include "qsep/types.hpp"

namespace qsep {

/// Layout of an N-party Hilbert space: the ordered local dimensions and the
/// multi-index <-> flat-index arithmetic. Flat indexing is row-major with
/// party 0 as the slowest index.
class PartitionSpec {
 public:
  explicit PartitionSpec(std::vector<int> dims);

  /// Uniform layout: n parties of local dimension d.
  static PartitionSpec uniform(int parties, int d);
  /// Single party of dimension d.
  static PartitionSpec single(int d) { return PartitionSpec({d}); }

  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return total_dim_; }
  int max_local_dim() const;

  /// Flat index of a multi-index (one entry per party).
  int flat(std::span<const int> idx) const;
  /// Multi-index of a flat index, written into `idx` (size = parties()).
  void unflat(int flat_index, std::span<int> idx) const;

  /// Layout of the listed parties, in the given order.
  PartitionSpec sub(std::span<const int> parties) const;
  /// Complement of `parties` in ascending order.
  std::vector<int> complement(std::span<const int> parties) const;

  /// Row-major stride of each party in the flat index.
  int stride(int party) const { return strides_.at(static_cast<std::size_t>(party)); }

  bool operator==(const PartitionSpec& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<int> strides_;
  int total_dim_;
};

}  // namespace qsep
