#include "qsep/partition.hpp"

#include <algorithm>
#include <limits>

namespace qsep {

namespace {
constexpr int kMaxGlobalDim = 4096;  // desk-scale cap
}

PartitionSpec::PartitionSpec(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ConfigError("partition needs at least one party");
  long long total = 1;
  for (int d : dims_) {
    if (d < 2) throw ConfigError("every local dimension must be >= 2");
    total *= d;
    if (total > kMaxGlobalDim)
      throw ConfigError("global dimension exceeds the supported maximum of 4096");
  }
  total_dim_ = static_cast<int>(total);
  strides_.resize(dims_.size());
  int s = 1;
  for (int j = parties() - 1; j >= 0; --j) {
    strides_[static_cast<std::size_t>(j)] = s;
    s *= dims_[static_cast<std::size_t>(j)];
  }
}

PartitionSpec PartitionSpec::uniform(int parties, int d) {
  if (parties < 1) throw ConfigError("partition needs at least one party");
  return PartitionSpec(std::vector<int>(static_cast<std::size_t>(parties), d));
}

int PartitionSpec::max_local_dim() const {
  return *std::max_element(dims_.begin(), dims_.end());
}

int PartitionSpec::flat(std::span<const int> idx) const {
  int f = 0;
  for (int j = 0; j < parties(); ++j) {
    int i = idx[static_cast<std::size_t>(j)];
    if (i < 0 || i >= dims_[static_cast<std::size_t>(j)])
      throw ConfigError("multi-index out of range");
    f += i * strides_[static_cast<std::size_t>(j)];
  }
  return f;
}

void PartitionSpec::unflat(int flat_index, std::span<int> idx) const {
  if (flat_index < 0 || flat_index >= total_dim_) throw ConfigError("flat index out of range");
  for (int j = 0; j < parties(); ++j) {
    idx[static_cast<std::size_t>(j)] = flat_index / strides_[static_cast<std::size_t>(j)];
    flat_index %= strides_[static_cast<std::size_t>(j)];
  }
}

PartitionSpec PartitionSpec::sub(std::span<const int> parties_list) const {
  std::vector<int> d;
  d.reserve(parties_list.size());
  for (int p : parties_list) d.push_back(dim(p));
  return PartitionSpec(std::move(d));
}

std::vector<int> PartitionSpec::complement(std::span<const int> parties_list) const {
  std::vector<bool> in(static_cast<std::size_t>(parties()), false);
  for (int p : parties_list) {
    if (p < 0 || p >= parties()) throw ConfigError("party index out of range");
    in[static_cast<std::size_t>(p)] = true;
  }
  std::vector<int> out;
  for (int j = 0; j < parties(); ++j)
    if (!in[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

}  // namespace qsep
