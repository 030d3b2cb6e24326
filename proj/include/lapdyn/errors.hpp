#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lapdyn {

/// Broad failure category; the CLI maps these onto its exit codes.
enum class ErrorKind { Input, Connectivity, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Edge-list syntax or content error. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Input, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotWeaklyConnected : public Error {
 public:
  explicit NotWeaklyConnected(std::vector<std::vector<std::size_t>> components)
      : Error(ErrorKind::Connectivity, "graph is not weakly connected (" +
                                           std::to_string(components.size()) + " components)"),
        components_(std::move(components)) {}
  /// 0-based vertex indices of each weak component.
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

class ViolatesDominance : public Error {
 public:
  explicit ViolatesDominance(std::size_t vertex)
      : Error(ErrorKind::Input, "eplus < e at vertex index " + std::to_string(vertex)), vertex_(vertex) {}
  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

struct SingularCommonBlock : Error {
  explicit SingularCommonBlock(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

struct PerronIterationDiverged : Error {
  explicit PerronIterationDiverged(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

struct StepUnderflow : Error {
  explicit StepUnderflow(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

struct StochasticityViolation : Error {
  explicit StochasticityViolation(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

struct SingularSystem : Error {
  explicit SingularSystem(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

/// QR iteration hit its sweep cap. Carries whatever eigenvalues were deflated before giving up.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, std::vector<std::complex<double>> partial)
      : Error(ErrorKind::Numerical, what), partial_(std::move(partial)) {}
  const std::vector<std::complex<double>>& partial() const noexcept { return partial_; }

 private:
  std::vector<std::complex<double>> partial_;
};

}  // namespace lapdyn
