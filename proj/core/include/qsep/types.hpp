#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qsep {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Error taxonomy shared by the library and the CLI. The numeric value of
/// each kind doubles as the process exit code of the `qsep` tool.
class Error : public std::runtime_error {
 public:
  enum class Kind { Config = 2, Hypothesis = 3, Horizon = 4 };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  Kind kind_;
};

/// Malformed input: bad dimensions, invalid parameters, unparsable config.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(Kind::Config, what) {}
};

/// A theorem hypothesis does not hold for the given channel (gapless,
/// rank-deficient or degenerate fixed point, non-diagonalizable where the
/// requested method needs eigenvectors).
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what) : Error(Kind::Hypothesis, what) {}
};

/// An iterative search hit its step cap before reaching its goal.
class HorizonError : public Error {
 public:
  explicit HorizonError(const std::string& what) : Error(Kind::Horizon, what) {}
};

}  // namespace qsep
