#ifndef HYPSTAB_TYPES_HPP
#define HYPSTAB_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace hypstab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct NonHyperbolicError : std::runtime_error {
  explicit NonHyperbolicError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfDomainError : std::runtime_error {
  explicit OutOfDomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NewtonDivergenceError : std::runtime_error {
  double residual;
  NewtonDivergenceError(const std::string& msg, double res)
      : std::runtime_error(msg + " (residual " + std::to_string(res) + ")"), residual(res) {}
};

struct IntegrationFailureError : std::runtime_error {
  explicit IntegrationFailureError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadParameterError : std::runtime_error {
  explicit BadParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MeshFailureError : std::runtime_error {
  explicit MeshFailureError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CollisionCascadeError : std::runtime_error {
  explicit CollisionCascadeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalFailureError : std::runtime_error {
  explicit NumericalFailureError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hypstab

#endif
