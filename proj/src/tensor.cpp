#include "icdistill/tensor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace icdistill {

int64_t numel(const Shape& shape) {
  int64_t n = 1;
  for (int d : shape) {
    if (d < 0) throw std::invalid_argument("negative dimension in shape " + shape_str(shape));
    n *= d;
  }
  return n;
}

std::string shape_str(const Shape& shape) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ", ";
    os << shape[i];
  }
  os << ')';
  return os.str();
}

Tensor::Tensor(Shape s, double fill)
    : shape(std::move(s)), values(static_cast<size_t>(numel(shape)), fill) {}

Tensor::Tensor(Shape s, std::vector<double> v) : shape(std::move(s)), values(std::move(v)) {
  if (numel(shape) != static_cast<int64_t>(values.size())) {
    throw std::invalid_argument("tensor shape " + shape_str(shape) + " does not match " +
                                std::to_string(values.size()) + " values");
  }
}

bool Tensor::all_finite() const {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Tensor::zero_grad() {
  if (!grad) {
    grad.emplace(values.size(), 0.0);
  } else {
    std::fill(grad->begin(), grad->end(), 0.0);
  }
}

Tensor Tensor::randn(Shape s, Rng& rng, double std) {
  Tensor t(std::move(s));
  for (double& v : t.values) v = normal(rng) * std;
  return t;
}

}  // namespace icdistill
