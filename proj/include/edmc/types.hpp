#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace edmc {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Error categories; the CLI maps these onto stable process exit codes.
enum class errc {
  invalid_argument,
  dimension_mismatch,
  singular_geometry,
  retraction_failure,
  line_search_failure,
  eigensolver_failure,
  certificate_violation,
  escape_failure,
  contract_violation,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

struct InvalidArgumentError : Error {
  explicit InvalidArgumentError(const std::string& what) : Error(errc::invalid_argument, what) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(errc::dimension_mismatch, what) {}
};

/// Geometry degenerated (rank-deficient factor, singular Sylvester operator).
struct SingularGeometryError : Error {
  explicit SingularGeometryError(const std::string& what) : Error(errc::singular_geometry, what) {}
};

/// Y + xi lost column rank; callers respond by shrinking the step.
struct RetractionError : Error {
  explicit RetractionError(const std::string& what) : Error(errc::retraction_failure, what) {}
};

struct LineSearchError : Error {
  explicit LineSearchError(const std::string& what) : Error(errc::line_search_failure, what) {}
};

struct EigenSolverError : Error {
  explicit EigenSolverError(const std::string& what) : Error(errc::eigensolver_failure, what) {}
};

/// Asked to escape a stage whose certificate already holds.
struct CertificateError : Error {
  explicit CertificateError(const std::string& what) : Error(errc::certificate_violation, what) {}
};

struct EscapeError : Error {
  explicit EscapeError(const std::string& what) : Error(errc::escape_failure, what) {}
};

/// A caller-side precondition (e.g. horizontality of a tangent input) failed.
struct ContractError : Error {
  explicit ContractError(const std::string& what) : Error(errc::contract_violation, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(errc::io_error, what) {}
};

}  // namespace edmc
