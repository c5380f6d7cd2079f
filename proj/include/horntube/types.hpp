#ifndef HORNTUBE_TYPES_HPP
#define HORNTUBE_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace horntube {

using Vec3 = Eigen::Vector3d;
using ArrayX = Eigen::ArrayXd;
using MatrixX = Eigen::MatrixXd;

/// Tube coordinates: arc length s in [0,1], radial distance r >= 0,
/// angle theta in the normal plane measured from the frame normal.
struct TubePoint {
  double s = 0.0;
  double r = 0.0;
  double theta = 0.0;
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// Coordinate pole r = 0: the radial/angular derivative operators are singular there.
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// A field was asked for a derivative channel it does not provide.
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace horntube

#endif
