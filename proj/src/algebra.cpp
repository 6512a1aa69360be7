#include "adapterchain/algebra.hpp"

#include <sstream>

namespace adapterchain {
namespace {

std::string dims(std::size_t rows, std::size_t cols) {
  std::ostringstream os;
  os << rows << "x" << cols;
  return os.str();
}

template <class Row>
std::size_t common_width(std::initializer_list<Row> rows) {
  if (rows.size() == 0) throw ShapeError("matrix needs at least one row");
  const std::size_t width = rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != width) throw ShapeError("ragged matrix literal");
  }
  return width;
}

}  // namespace

DependencyMatrix::DependencyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

DependencyMatrix::DependencyMatrix(std::initializer_list<std::initializer_list<bool>> rows)
    : DependencyMatrix(rows.size(), common_width(rows)) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (bool v : row) set(r, c++, v);
    ++r;
  }
}

DependencyMatrix DependencyMatrix::identity(std::size_t n) {
  DependencyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool DependencyMatrix::row_empty(std::size_t row) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(row, c)) return false;
  }
  return true;
}

bool DependencyMatrix::satisfies_dummy_rule() const {
  if (rows_ == 0 || cols_ == 0 || !(*this)(0, 0)) return false;
  for (std::size_t c = 1; c < cols_; ++c) {
    if ((*this)(0, c)) return false;
  }
  return true;
}

ConversionMatrix::ConversionMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0.0) {}

ConversionMatrix::ConversionMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : ConversionMatrix(rows.size(), common_width(rows)) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (double v : row) (*this)(r, c++) = v;
    ++r;
  }
}

bool operator==(const AdaptationFactor& lhs, const AdaptationFactor& rhs) {
  if (!(lhs.dep == rhs.dep)) return false;
  if (lhs.conv.rows() != rhs.conv.rows() || lhs.conv.cols() != rhs.conv.cols()) return false;
  for (std::size_t r = 0; r < lhs.dep.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.dep.cols(); ++c) {
      if (lhs.dep(r, c) && lhs.conv(r, c) != rhs.conv(r, c)) return false;
    }
  }
  return true;
}

DependencyMatrix compose(const DependencyMatrix& later, const DependencyMatrix& earlier) {
  if (later.cols() != earlier.rows()) {
    throw ShapeError("cannot compose dependency matrices " + dims(later.rows(), later.cols()) +
                     " and " + dims(earlier.rows(), earlier.cols()));
  }
  DependencyMatrix result(later.rows(), earlier.cols());
  for (std::size_t k = 0; k < later.rows(); ++k) {
    for (std::size_t j = 0; j < later.cols(); ++j) {
      if (!later(k, j)) continue;
      for (std::size_t i = 0; i < earlier.cols(); ++i) {
        if (earlier(j, i)) result.set(k, i, true);
      }
    }
  }
  return result;
}

DiscreteAvailability adapt(const DependencyMatrix& dep, const DiscreteAvailability& p) {
  if (dep.cols() != p.size()) {
    throw ShapeError("dependency matrix " + dims(dep.rows(), dep.cols()) +
                     " applied to vector of length " + std::to_string(p.size()));
  }
  std::vector<bool> out(dep.rows(), true);
  for (std::size_t j = 0; j < dep.rows(); ++j) {
    for (std::size_t i = 0; i < dep.cols(); ++i) {
      if (dep(j, i) && !p[i]) {
        out[j] = false;
        break;
      }
    }
  }
  return DiscreteAvailability(std::move(out));
}

MethodAvailability adapt(const AdaptationFactor& factor, const MethodAvailability& p) {
  const auto& dep = factor.dep;
  if (dep.cols() != p.size()) {
    throw ShapeError("factor " + dims(dep.rows(), dep.cols()) +
                     " applied to vector of length " + std::to_string(p.size()));
  }
  std::vector<double> out(dep.rows(), 1.0);
  for (std::size_t j = 0; j < dep.rows(); ++j) {
    double product = 1.0;
    for (std::size_t i = 0; i < dep.cols(); ++i) {
      if (dep(j, i)) product *= factor.conv(j, i) * p[i];
    }
    out[j] = product;
  }
  return MethodAvailability(std::move(out));
}

AdaptationFactor compose(const AdaptationFactor& later, const AdaptationFactor& earlier) {
  if (later.dep.cols() != earlier.dep.rows()) {
    throw ShapeError("cannot compose factors " + dims(later.dep.rows(), later.dep.cols()) +
                     " and " + dims(earlier.dep.rows(), earlier.dep.cols()));
  }
  const std::size_t rows = later.dep.rows();
  const std::size_t inner = later.dep.cols();
  const std::size_t cols = earlier.dep.cols();
  AdaptationFactor result{DependencyMatrix(rows, cols), ConversionMatrix(rows, cols)};
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t i = 0; i < cols; ++i) {
      bool linked = false;
      double product = 1.0;
      for (std::size_t j = 0; j < inner; ++j) {
        if (later.dep(k, j) && earlier.dep(j, i)) {
          linked = true;
          product *= later.conv(k, j) * earlier.conv(j, i);
        }
      }
      if (linked) {
        result.dep.set(k, i, true);
        result.conv(k, i) = product;
      }
    }
  }
  return result;
}

AdaptationFactor identity_factor(std::size_t method_count) {
  AdaptationFactor f{DependencyMatrix::identity(method_count),
                     ConversionMatrix(method_count, method_count)};
  for (std::size_t i = 1; i < method_count; ++i) f.conv(i, i) = 1.0;
  return f;
}

MethodAvailability full_availability(std::size_t method_count) {
  std::vector<double> v(method_count, 1.0);
  if (!v.empty()) v[0] = 0.0;
  return MethodAvailability(std::move(v));
}

DiscreteAvailability full_discrete_availability(std::size_t method_count) {
  std::vector<bool> v(method_count, true);
  if (!v.empty()) v[0] = false;
  return DiscreteAvailability(std::move(v));
}

std::vector<FactorViolation> validate_dependency(const DependencyMatrix& dep) {
  using K = FactorViolation::Kind;
  std::vector<FactorViolation> out;
  if (dep.rows() == 0 || dep.cols() == 0) {
    out.push_back({K::kEmptyShape, 0, 0,
                   "dependency matrix must be at least 1x1, got " + dims(dep.rows(), dep.cols())});
    return out;
  }
  if (!dep(0, 0)) {
    out.push_back({K::kDummyRow, 0, 0, "dep[0][0] must be true (dummy depends on dummy)"});
  }
  for (std::size_t c = 1; c < dep.cols(); ++c) {
    if (dep(0, c)) {
      out.push_back({K::kDummyRow, 0, c,
                     "dep[0][" + std::to_string(c) + "] must be false (dummy row)"});
    }
  }
  return out;
}

std::vector<FactorViolation> validate_factor(const AdaptationFactor& factor) {
  using K = FactorViolation::Kind;
  const auto& dep = factor.dep;
  const auto& conv = factor.conv;
  if (dep.rows() != conv.rows() || dep.cols() != conv.cols()) {
    return {{K::kShapeMismatch, 0, 0,
             "dependency matrix is " + dims(dep.rows(), dep.cols()) +
                 " but conversion matrix is " + dims(conv.rows(), conv.cols())}};
  }
  auto out = validate_dependency(dep);
  if (!out.empty() && out.front().kind == K::kEmptyShape) return out;

  auto cell = [](std::size_t r, std::size_t c) {
    return "conv[" + std::to_string(r) + "][" + std::to_string(c) + "]";
  };
  for (std::size_t r = 0; r < conv.rows(); ++r) {
    for (std::size_t c = 0; c < conv.cols(); ++c) {
      const double v = conv(r, c);
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << cell(r, c) << " = " << v << " is outside [0, 1]";
        out.push_back({K::kProbabilityRange, r, c, os.str()});
      } else if (c == 0 && v != 0.0) {
        out.push_back({K::kDummyColumnNonZero, r, c, cell(r, c) + " must be 0 (dummy column)"});
      } else if (r == 0 && v != 0.0) {
        out.push_back({K::kDummyRowNonZero, r, c, cell(r, c) + " must be 0 (dummy row)"});
      }
    }
  }
  return out;
}

}  // namespace adapterchain
