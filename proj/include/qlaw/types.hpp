#ifndef QLAW_TYPES_HPP
#define QLAW_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace qlaw {

using Vec3 = Eigen::Vector3d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat53 = Eigen::Matrix<double, 5, 3>;

/// Slow orbital elements in the row order of the variational matrix.
enum class Element : int {
    SemiMajorAxis = 0,
    Eccentricity = 1,
    Inclination = 2,
    Raan = 3,
    ArgPerigee = 4
};

inline constexpr int kNumSlowElements = 5;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// State too close to a singular element set (e or i below floor, h ~ 0,
/// non-elliptic energy).
class DegenerateOrbitError : public Error {
public:
    using Error::Error;
};

/// Rejected scenario or controller configuration. The message names the
/// offending field.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace qlaw

#endif  // QLAW_TYPES_HPP
