#pragma once

#include <string>
#include <vector>

#include "ccsolve/tensor.hpp"

namespace ccsolve::nd {

enum class Activation { Silu, Relu, Identity };

std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

struct Layer {
    Tensor2 weight;  // in x out
    Tensor2 bias;    // 1 x out
};

// A plain fully connected stack: linear layers with the hidden activation
// between them and no activation after the last layer.
struct MlpParams {
    std::vector<Layer> layers;
    Activation hidden_act = Activation::Silu;

    int input_width() const { return layers.empty() ? 0 : layers.front().weight.rows; }
    int output_width() const { return layers.empty() ? 0 : layers.back().weight.cols; }
    size_t param_count() const;

    // widths = {in, h1, ..., out}; weights ~ N(0, 2/fan_in), biases zero.
    static MlpParams create(const std::vector<int>& widths, Activation act, RngStream& rng);

    void zero_last_layer();
};

// Gradients share the parameter layout.
MlpParams zero_like(const MlpParams& p);

// Retained forward intermediates for the backward pass.
struct MlpTrace {
    std::vector<Tensor2> inputs;   // input to layer i
    std::vector<Tensor2> preacts;  // linear output of layer i (before activation)
};

Tensor2 mlp_forward(const MlpParams& params, const Tensor2& input, MlpTrace* trace = nullptr);

// Accumulates parameter gradients into `grads` and returns the input gradient.
Tensor2 mlp_backward(const MlpParams& params, const MlpTrace& trace, const Tensor2& upstream,
                     MlpParams& grads);

struct AdamConfig {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    std::vector<Layer> m;  // first moments, mirror parameter shapes
    std::vector<Layer> v;  // second moments
    long step = 0;
    AdamConfig cfg;

    static AdamState create(const MlpParams& params, AdamConfig cfg);
};

// Bias-corrected Adam update in place; increments state.step.
void adam_step(MlpParams& params, const MlpParams& grads, AdamState& state);

}  // namespace ccsolve::nd
