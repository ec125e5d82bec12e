#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icdistill/rng.hpp"

namespace icdistill {

using Shape = std::vector<int>;

int64_t numel(const Shape& shape);
std::string shape_str(const Shape& shape);

// Dense row-major tensor of 64-bit floats. The gradient buffer, when present,
// always has the same length as `values` and is owned by the tensor itself so
// it survives the tapes that accumulate into it.
struct Tensor {
  Shape shape;
  std::vector<double> values;
  bool requires_grad = false;
  std::optional<std::vector<double>> grad;

  Tensor() = default;
  explicit Tensor(Shape s, double fill = 0.0);
  Tensor(Shape s, std::vector<double> v);

  int64_t size() const { return static_cast<int64_t>(values.size()); }
  int dim(int axis) const { return shape.at(static_cast<size_t>(axis)); }
  int rows() const { return dim(0); }
  int cols() const { return dim(1); }

  double& at(int i, int j) { return values[static_cast<size_t>(i) * cols() + j]; }
  double at(int i, int j) const { return values[static_cast<size_t>(i) * cols() + j]; }

  bool all_finite() const;

  // Allocates a zero grad buffer if absent, zeroes it otherwise.
  void zero_grad();

  static Tensor zeros(Shape s) { return Tensor(std::move(s), 0.0); }
  static Tensor randn(Shape s, Rng& rng, double std = 1.0);
};

}  // namespace icdistill
