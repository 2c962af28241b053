#include "paracon/probe.hpp"

#include <cmath>

#include "paracon/error.hpp"
#include "paracon/random.hpp"

namespace paracon {

void ProbeConfig::validate() const
{
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw InputError("probe learning rate must be positive");
    }
    if (epochs == 0) {
        throw InputError("probe epochs must be positive");
    }
    if (!(l2 >= 0.0) || !std::isfinite(l2)) {
        throw InputError("probe l2 penalty must be non-negative");
    }
}

FeatureMatrix::FeatureMatrix(std::span<const EmbeddedExample> examples)
{
    if (examples.empty()) {
        return;
    }
    dim_ = examples.front().vector.size();
    if (dim_ == 0) {
        throw InputError("embedding vectors must be non-empty");
    }
    values_.reserve(examples.size() * dim_);
    labels_.reserve(examples.size());
    for (const auto& e : examples) {
        if (e.vector.size() != dim_) {
            throw InputError("example '" + e.example_id + "' has dimension " + std::to_string(e.vector.size()) +
                             ", expected " + std::to_string(dim_));
        }
        if (e.label != 0 && e.label != 1) {
            throw InputError("example '" + e.example_id + "' has a non-binary label");
        }
        for (double v : e.vector) {
            if (!std::isfinite(v)) {
                throw InputError("example '" + e.example_id + "' has a non-finite feature");
            }
            values_.push_back(v);
        }
        labels_.push_back(e.label);
    }
}

double LinearModel::decision(std::span<const double> x) const
{
    double z = bias;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        z += weights[j] * x[j];
    }
    return z;
}

double LinearModel::probability(std::span<const double> x) const { return 1.0 / (1.0 + std::exp(-decision(x))); }

LinearModel fit_logistic(const FeatureMatrix& data, std::span<const std::size_t> rows, const ProbeConfig& config,
                         std::uint64_t seed)
{
    config.validate();
    if (rows.empty()) {
        throw InputError("cannot train a probe on zero examples");
    }
    const std::size_t dim = data.dim();
    LinearModel model;
    model.weights.resize(dim);
    Rng rng(seed);
    for (auto& w : model.weights) {
        w = rng.normal(0.0, 0.01);
    }

    std::vector<double> grad(dim);
    const double scale = 1.0 / static_cast<double>(rows.size());
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        std::fill(grad.begin(), grad.end(), 0.0);
        double grad_bias = 0.0;
        for (std::size_t r : rows) {
            const auto x = data.row(r);
            const double residual = model.probability(x) - static_cast<double>(data.label(r));
            for (std::size_t j = 0; j < dim; ++j) {
                grad[j] += residual * x[j];
            }
            grad_bias += residual;
        }
        for (std::size_t j = 0; j < dim; ++j) {
            model.weights[j] -= config.learning_rate * (grad[j] * scale + config.l2 * model.weights[j]);
        }
        model.bias -= config.learning_rate * grad_bias * scale;
    }
    return model;
}

LinearModel train_probe(std::span<const EmbeddedExample> train, const ProbeConfig& config, std::uint64_t seed)
{
    if (train.empty()) {
        throw InputError("cannot train a probe on zero examples");
    }
    const FeatureMatrix data(train);
    bool seen[2] = {false, false};
    for (std::size_t i = 0; i < data.rows(); ++i) {
        seen[data.label(i)] = true;
    }
    if (!seen[0] || !seen[1]) {
        throw InputError("probe training set contains a single class");
    }
    std::vector<std::size_t> rows(data.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = i;
    }
    return fit_logistic(data, rows, config, seed);
}

} // namespace paracon
