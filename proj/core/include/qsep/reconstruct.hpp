#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qsep/density.hpp"
#include "qsep/designs.hpp"
#include "qsep/types.hpp"

namespace qsep {

/// h = (d+1) P - I for a design projector P: Hermitian, Tr h = 1,
/// ||h||_op = d (eigenvalues {d, -1 x (d-1)}).
struct SignedLocalOperator {
  Mat op;
  int party;
  int alpha;
};

std::vector<SignedLocalOperator> signed_ops(const ProjectiveDesign& design, int party);

/// Weight of one multi-index in the product-design expansion.
struct WeightEntry {
  std::vector<int> alpha;  // one design index per party
  double p;
};

/// Number of multi-indices (product of design cardinalities).
std::size_t weight_count(std::span<const ProjectiveDesign> designs);

/// Full tables are only materialized below this many entries.
inline constexpr std::size_t kEnumerationGuard = 1'000'000;

/// Stream the weights P_alpha = (prod_j d_j/K_j) Tr[(x)_j P_j^{(a_j)} rho]
/// in lexicographic multi-index order, without materializing the table.
void for_each_weight(const DensityMatrix& rho, std::span<const ProjectiveDesign> designs,
                     const std::function<void(std::span<const int>, double)>& visit);

/// Materialized weight table (throws above the enumeration guard).
std::vector<WeightEntry> weights(const DensityMatrix& rho,
                                 std::span<const ProjectiveDesign> designs);

/// Resynthesis sum_alpha P_alpha (x)_j h_j^{(alpha_j)}; equals rho exactly
/// for valid 2-designs.
Mat reconstruct_state(const DensityMatrix& rho, std::span<const ProjectiveDesign> designs);

/// ||reconstruct_state(rho) - rho||_op.
double reconstruction_residual(const DensityMatrix& rho,
                               std::span<const ProjectiveDesign> designs);

}  // namespace qsep
