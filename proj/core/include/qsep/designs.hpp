#pragma once

#include <vector>

#include "qsep/density.hpp"
#include "qsep/types.hpp"

namespace qsep {

/// Family of rank-1 projectors on a d-dimensional space whose first and
/// second moments match Haar-random states. Construction validates the
/// projector, 1-design and 2-design (frame potential) invariants.
class ProjectiveDesign {
 public:
  static ProjectiveDesign custom(int d, std::vector<Mat> projectors);

  int dim() const { return d_; }
  int cardinality() const { return static_cast<int>(projectors_.size()); }
  const std::vector<Mat>& projectors() const { return projectors_; }
  const Mat& projector(int alpha) const { return projectors_.at(static_cast<std::size_t>(alpha)); }

  /// sum_{a,b} |Tr[P_a P_b]|^2; equals 2K^2/(d(d+1)) for a 2-design.
  double frame_potential() const;

 private:
  ProjectiveDesign(int d, std::vector<Mat> projectors);

  int d_;
  std::vector<Mat> projectors_;
};

/// The six eigenprojectors (I ± sigma_mu)/2 of the qubit Pauli axes, K = 6.
ProjectiveDesign qubit_six_state();

/// Full set of d+1 mutually unbiased bases for odd prime d, K = d(d+1).
ProjectiveDesign mub_design(int d);

/// Shipped design for a local dimension: six-state for d = 2, MUBs for odd
/// primes. Other dimensions need a custom design.
ProjectiveDesign design_for_dimension(int d);
bool has_design_for_dimension(int d);

/// Residual of the ensemble-measurement identity on party `party`:
/// || (d/K) sum_a P_a rho P_a - (rho + I_j (x) Tr_j[rho])/(d+1) ||_op
/// with the projectors embedded at that party.
double verify_two_design_channel(const ProjectiveDesign& design, const DensityMatrix& rho,
                                 int party);

}  // namespace qsep
