#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "icdistill/tensor.hpp"

namespace icdistill {

// Reverse-mode autodiff over a Wengert list. Each primitive appends one node
// whose parents already sit earlier in the list, so backward is a single
// reverse sweep that visits every node exactly once.
//
// Leaves reference tensors owned by the caller; their gradients accumulate
// into the external tensor's grad buffer (callers zero_grad() between steps).
// A tape is confined to one thread; independent tapes may run in parallel,
// including over shared read-only leaf tensors.
class Tape {
 public:
  using Id = int32_t;

  Tape();

  // External leaf. `t` must outlive the tape. The mutable overload tracks
  // gradients according to `requires_grad` (default: the tensor's own flag);
  // the const overload never tracks gradients.
  Id leaf(Tensor& t);
  Id leaf(Tensor& t, bool requires_grad);
  Id leaf(const Tensor& t);

  // Tape-owned constant, never differentiated.
  Id constant(Tensor t);

  // Primitives. Each validates operand shapes and finiteness of data entering
  // the graph, computes eagerly, and records itself for backward.
  Id matmul(Id a, Id b, bool trans_a = false, bool trans_b = false);
  Id add(Id a, Id b);  // equal shapes, or b a vector broadcast across rows of a
  Id scale(Id a, double c);
  Id gelu(Id a);
  Id layernorm(Id x, Id gain, Id bias);  // last axis, epsilon 1e-5
  Id softmax(Id a);                      // last axis
  // Attention-pattern softmax over an s x s score matrix: rows i < num_context
  // normalize over columns [0, num_context); rows i >= num_context normalize
  // over [0, num_context) plus column i. All other entries are exactly 0.
  Id masked_softmax(Id scores, int num_context);
  Id embed_lookup(Id table, const std::vector<int>& ids);
  Id concat(Id a, Id b, int axis);
  Id slice(Id a, int axis, int start, int len);
  Id mean(Id a);  // scalar
  Id cross_entropy(Id logits, const std::vector<int>& labels);  // mean NLL, scalar

  // Seeds d(loss)/d(loss) = 1 and sweeps the list in reverse, accumulating
  // into every reachable grad-tracking leaf. Errors if loss is not scalar or
  // if called a second time on the same tape.
  void backward(Id loss);

  const Tensor& val(Id id) const;
  double scalar(Id id) const;
  // Gradient buffer of an interior node or tape-side view of a leaf gradient.
  // Valid after backward(); empty for nodes the sweep never reached.
  const std::vector<double>& grad(Id id) const;

  size_t num_nodes() const { return nodes_.size(); }
  bool backward_done() const { return backward_done_; }

 private:
  enum class Op : uint8_t {
    kLeaf,
    kConstant,
    kMatmul,
    kAdd,
    kScale,
    kGelu,
    kLayerNorm,
    kSoftmax,
    kMaskedSoftmax,
    kEmbedLookup,
    kConcat,
    kSlice,
    kMean,
    kCrossEntropy,
  };

  struct Node {
    Op op;
    bool requires_grad = false;
    std::array<Id, 3> parents{-1, -1, -1};
    Tensor out;                          // owned value; empty for leaves
    const Tensor* external = nullptr;    // leaf value source
    Tensor* external_mut = nullptr;      // leaf grad sink (null for const leaves)
    std::vector<double> grad;            // interior grad, sized on first use
    int i0 = 0, i1 = 0, i2 = 0;          // op parameters
    double s0 = 0.0;
    std::vector<int> idx;                // embed ids / labels
  };

  Id push(Node n);
  const Tensor& value_of(const Node& n) const { return n.external ? *n.external : n.out; }
  // Returns the accumulation buffer for `id`, allocating zeros on demand.
  double* grad_buf(Id id);
  bool wants_grad(Id id) const { return nodes_[static_cast<size_t>(id)].requires_grad; }
  void check_finite_entering(const Tensor& t, const char* what) const;
  void backward_node(Id id);

  std::vector<Node> nodes_;
  bool backward_done_ = false;
};

// Max over coordinates of |analytic - central difference| / (|analytic| +
// |central| + 1e-12) for the scalar function built by `f` at the point `x`.
// `f` must deterministically construct the loss on the given tape from the
// given tensor (bound as a leaf internally).
double finite_difference_check(const std::function<Tape::Id(Tape&, Tensor&)>& f,
                               Tensor x, double h);

}  // namespace icdistill
