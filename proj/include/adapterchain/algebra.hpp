#pragma once

// Discrete and probabilistic adaptation algebras.
//
// Every interface carries a dummy method at index 0. A dependency row that
// contains only false cells means "always implementable"; a row that depends
// on the dummy means "never implementable". Conversion probabilities in
// column 0 and row 0 are zero, so the dummy never contributes availability.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace adapterchain {

/// Raised when operand dimensions do not conform.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Boolean matrix; cell(j, i) is true iff target method j requires source
/// method i.
class DependencyMatrix {
 public:
  DependencyMatrix() = default;
  DependencyMatrix(std::size_t rows, std::size_t cols);
  DependencyMatrix(std::initializer_list<std::initializer_list<bool>> rows);

  /// Square boolean identity.
  static DependencyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool operator()(std::size_t row, std::size_t col) const {
    return cells_[row * cols_ + col] != 0;
  }
  void set(std::size_t row, std::size_t col, bool value) {
    cells_[row * cols_ + col] = value ? 1 : 0;
  }

  bool row_empty(std::size_t row) const;

  /// Row 0 is exactly (true, false, ..., false).
  bool satisfies_dummy_rule() const;

  friend bool operator==(const DependencyMatrix&, const DependencyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Per-dependency conversion success probabilities, same shape as the paired
/// dependency matrix.
class ConversionMatrix {
 public:
  ConversionMatrix() = default;
  ConversionMatrix(std::size_t rows, std::size_t cols);
  ConversionMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t row, std::size_t col) const {
    return cells_[row * cols_ + col];
  }
  double& operator()(std::size_t row, std::size_t col) {
    return cells_[row * cols_ + col];
  }

  friend bool operator==(const ConversionMatrix&, const ConversionMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
};

/// A dependency matrix together with its conversion probabilities.
///
/// Rows index target-interface methods, columns index source-interface
/// methods. Values are not validated on construction; use validate_factor().
/// Conversion cells off the dependency support carry no meaning and
/// operations in this library write them as zero.
struct AdaptationFactor {
  DependencyMatrix dep;
  ConversionMatrix conv;

  std::size_t target_size() const { return dep.rows(); }
  std::size_t source_size() const { return dep.cols(); }

  /// Structural equality on dep, conv compared only where dep is true.
  friend bool operator==(const AdaptationFactor& lhs, const AdaptationFactor& rhs);
};

/// entry[i] is the probability that method i handles its argument.
class MethodAvailability {
 public:
  MethodAvailability() = default;
  explicit MethodAvailability(std::vector<double> entries) : entries_(std::move(entries)) {}
  MethodAvailability(std::initializer_list<double> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }

  friend bool operator==(const MethodAvailability&, const MethodAvailability&) = default;

 private:
  std::vector<double> entries_;
};

/// entry[i] is true iff method i is available.
class DiscreteAvailability {
 public:
  DiscreteAvailability() = default;
  explicit DiscreteAvailability(std::vector<bool> entries) : entries_(std::move(entries)) {}
  DiscreteAvailability(std::initializer_list<bool> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  bool operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<bool>& entries() const { return entries_; }

  friend bool operator==(const DiscreteAvailability&, const DiscreteAvailability&) = default;

 private:
  std::vector<bool> entries_;
};

// Discrete algebra ----------------------------------------------------------

/// result(k, i) = OR_j later(k, j) AND earlier(j, i).
DependencyMatrix compose(const DependencyMatrix& later, const DependencyMatrix& earlier);

/// result[j] = AND over {i : dep(j, i)} of p[i]; the empty conjunction is true.
DiscreteAvailability adapt(const DependencyMatrix& dep, const DiscreteAvailability& p);

// Probabilistic algebra -----------------------------------------------------

/// result[j] = product over {i : dep(j, i)} of conv(j, i) * p[i]; the empty
/// product is one.
MethodAvailability adapt(const AdaptationFactor& factor, const MethodAvailability& p);

/// Fuses two factors into one: applying the result equals applying `earlier`
/// and then `later`.
AdaptationFactor compose(const AdaptationFactor& later, const AdaptationFactor& earlier);

/// Factor that leaves every valid availability vector unchanged.
AdaptationFactor identity_factor(std::size_t method_count);

/// All ones except the dummy slot.
MethodAvailability full_availability(std::size_t method_count);

/// All true except the dummy slot.
DiscreteAvailability full_discrete_availability(std::size_t method_count);

// Validation ----------------------------------------------------------------

struct FactorViolation {
  enum class Kind {
    kShapeMismatch,
    kEmptyShape,
    kDummyRow,
    kProbabilityRange,
    kDummyColumnNonZero,
    kDummyRowNonZero,
  };
  Kind kind;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;
};

/// Lists every broken factor invariant; empty iff the factor is valid.
std::vector<FactorViolation> validate_factor(const AdaptationFactor& factor);

std::vector<FactorViolation> validate_dependency(const DependencyMatrix& dep);

}  // namespace adapterchain
