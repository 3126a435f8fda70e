#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace singfake::ag {

using Shape = std::vector<std::size_t>;

std::string shape_str(const Shape& s);

// When enabled, every op scans its output for NaN/Inf and throws a numeric
// error naming the op. Off by default in release; tests switch it on.
void set_debug_numeric_checks(bool on);
bool debug_numeric_checks();

// Count of exact ties observed inside max-type ops since the last reset.
// grad_check uses this to flag nondifferentiable points instead of failing.
std::uint64_t tie_events();
void reset_tie_events();

struct Node {
    Shape shape;
    std::vector<double> data;
    bool requires_grad = false;
    std::vector<double> grad;   // sized lazily, same numel as data
    std::vector<std::shared_ptr<Node>> inputs;
    std::function<void(Node&)> backward_fn;  // accumulates into inputs' grad
    bool consumed = false;      // set once a backward pass has run through it

    std::size_t numel() const { return data.size(); }
    void ensure_grad();
};

// Value-semantic handle onto a graph node. Copying a Tensor aliases the node.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, double value, bool requires_grad = false);
    static Tensor from_data(Shape shape, std::vector<double> data,
                            bool requires_grad = false);
    static Tensor scalar(double value, bool requires_grad = false);

    bool defined() const { return static_cast<bool>(node_); }
    const Shape& shape() const;
    std::size_t numel() const;
    std::size_t dim(std::size_t axis) const;
    std::size_t ndim() const { return shape().size(); }

    std::span<const double> data() const;
    std::span<double> data_mut();  // leaf mutation (parameter updates)
    double item() const;           // scalar value; throws unless numel == 1

    bool requires_grad() const;
    std::span<const double> grad() const;  // empty until backward has run
    void zero_grad();

    std::shared_ptr<Node> node() const { return node_; }
    explicit Tensor(std::shared_ptr<Node> n) : node_(std::move(n)) {}

private:
    std::shared_ptr<Node> node_;
};

// ---- forward ops -----------------------------------------------------------

// Binary elementwise ops broadcast right-aligned, NumPy style.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor elementwise_max(const Tensor& a, const Tensor& b);  // ties favor a

Tensor neg(const Tensor& a);
Tensor scale(const Tensor& a, double s);
Tensor add_scalar(const Tensor& a, double s);

Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);
Tensor sigmoid(const Tensor& a);
Tensor leaky_relu(const Tensor& a, double negative_slope = 0.01);
Tensor selu(const Tensor& a);

Tensor matmul(const Tensor& a, const Tensor& b);  // 2-D only

// Cross-correlation (no kernel flip). x: [C_in, L] or [B, C_in, L],
// w: [C_out, C_in, K], optional bias [C_out]. Zero padding on both ends.
Tensor conv1d(const Tensor& x, const Tensor& w, const Tensor& bias,
              std::size_t stride = 1, std::size_t padding = 0);
Tensor conv1d(const Tensor& x, const Tensor& w,
              std::size_t stride = 1, std::size_t padding = 0);

Tensor softmax(const Tensor& a, std::size_t axis);

Tensor sum(const Tensor& a, std::size_t axis, bool keepdim = false);
Tensor mean(const Tensor& a, std::size_t axis, bool keepdim = false);
// Max reduction records argmax (first maximal index) for backward.
Tensor max(const Tensor& a, std::size_t axis, bool keepdim = false);
Tensor sum_all(const Tensor& a);  // -> scalar

Tensor concat(const std::vector<Tensor>& parts, std::size_t axis);
Tensor slice(const Tensor& a, std::size_t axis, std::size_t start, std::size_t len);
// Every step-th index along an axis (strided downsampling).
Tensor stride_select(const Tensor& a, std::size_t axis, std::size_t step);
// Rows along axis 0 by index; indices may repeat.
Tensor gather_rows(const Tensor& a, const std::vector<std::size_t>& indices);
Tensor reshape(const Tensor& a, Shape new_shape);
Tensor permute(const Tensor& a, const std::vector<std::size_t>& axes);

// Running statistics live outside the graph; updated only in training mode.
struct BatchNormState {
    std::vector<double> running_mean;
    std::vector<double> running_var;
    void init(std::size_t channels);
};

// Normalizes per channel (given axis) over all remaining positions.
// Training mode uses batch statistics (biased variance) and updates `state`;
// eval mode is a pure affine map using the running statistics.
Tensor batchnorm1d(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                   BatchNormState& state, bool training,
                   std::size_t channel_axis = 0, double momentum = 0.1,
                   double eps = 1e-5);

// ---- backward / training ---------------------------------------------------

// Reverse-topological accumulation from a scalar loss. Grads add across
// fan-out. Running it twice over the same graph throws (tape consumed).
void backward(const Tensor& loss);

struct GradCheckResult {
    double max_rel_error = 0.0;
    bool tie_warning = false;       // a max-type op hit an exact tie
    std::size_t checked_coords = 0;
};

// Central finite differences against the analytic gradients of f(params).
// Above 10^4 total coordinates only a random 1% subsample is checked.
GradCheckResult grad_check(const std::function<Tensor(const std::vector<Tensor>&)>& f,
                           const std::vector<Tensor>& params, double eps = 1e-5,
                           std::uint64_t subsample_seed = 0x5eed);

struct AdamState {
    std::vector<std::vector<double>> m;
    std::vector<std::vector<double>> v;
    std::uint64_t t = 0;
    void init(const std::vector<Tensor>& params);
};

// Standard Adam with bias correction; reads each param's grad buffer.
void adam_step(std::vector<Tensor>& params, AdamState& state, double lr,
               double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

} // namespace singfake::ag
