#pragma once

namespace qsep::tol {

// Central numeric tolerance table. Everything that accepts or rejects a
// matrix anywhere in the library reads from here.

inline constexpr double kHermitian = 1e-12;        // ||m - m^dag||_op for states
inline constexpr double kUnitTrace = 1e-12;        // |Tr - 1| for states
inline constexpr double kPsd = 1e-10;              // min eigenvalue slack for states
inline constexpr double kKrausCompleteness = 1e-10;  // ||sum K^dag K - I||_op
inline constexpr double kFixedPointResidual = 1e-9;  // ||E(pi) - pi||_op
inline constexpr double kFullRank = 1e-10;         // lambda_min above this => full rank
inline constexpr double kUnitEigenvalue = 1e-8;    // |xi - 1| clustering for uniqueness
inline constexpr double kEigResidual = 1e-9;       // eigensolver residual scale
inline constexpr double kBiorthogonality = 1e-8;   // |l^dag r - delta| for eigenpairs
inline constexpr double kConjugatePairing = 1e-8;  // partner-matching residual
inline constexpr double kDefectiveCondition = 1e8;  // cond(V) above this => defective
inline constexpr double kHermitianInput = 1e-10;   // hermitian_eig input gate
inline constexpr double kProjector = 1e-10;        // design projector invariants
inline constexpr double kOneDesign = 1e-10;        // ||mean projector - I/d||_op
inline constexpr double kFramePotential = 1e-9;    // 2-design frame potential slack
inline constexpr double kUnbiasedness = 1e-10;     // MUB cross-basis overlap slack
inline constexpr double kWeightNegative = -1e-12;  // most negative admissible weight
inline constexpr double kWeightSum = 1e-9;         // |sum P - 1|
inline constexpr double kPovmCompleteness = 1e-9;  // ||sum E - I||_op
inline constexpr double kSpectralForm = 1e-8;      // disentangler resynthesis residual
inline constexpr double kNegativityDead = 1e-10;   // negativity at/below this is zero
inline constexpr double kEntropyEigenvalue = 1e-14;  // eigenvalues below this: 0 ln 0 = 0
inline constexpr double kContractionSlack = 1e-12;   // additive slack in bound checks
inline constexpr double kCeilingSlack = 1e-9;      // near-integer slack for ceilings

}  // namespace qsep::tol
