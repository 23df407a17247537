#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

namespace edgelab {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Dyson index of the ensemble: real symmetric (1) or complex Hermitian (2).
enum class Symmetry : int { real = 1, complex = 2 };

constexpr int beta_of(Symmetry s) noexcept { return static_cast<int>(s); }
Symmetry symmetry_from_beta(int beta);

template <typename Scalar>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename Scalar>
constexpr Symmetry symmetry_of() noexcept {
  return is_complex<Scalar>::value ? Symmetry::complex : Symmetry::real;
}

/// Base of every error thrown by the library. `kind()` names the failure
/// class so the harness can count failures without string matching.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    invalid_dimension,
    invalid_spec,
    invalid_order,
    invalid_input,
    invalid_pair,
    domain,
    numeric_input,
    numeric,
    wrong_branch,
    unsupported_dimension,
    parse,
    io,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, Error::Kind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace edgelab
