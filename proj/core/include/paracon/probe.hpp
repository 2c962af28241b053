#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace paracon {

struct EmbeddedExample {
    std::string example_id;
    std::vector<double> vector;
    int label = 0; // 0 or 1
};

struct ProbeConfig {
    double learning_rate = 0.5;
    std::size_t epochs = 100;
    double l2 = 1e-4;

    void validate() const;
};

// Row-major copy of a collection of embeddings. All vectors must share one
// dimensionality and be finite; labels must be 0 or 1.
class FeatureMatrix {
public:
    explicit FeatureMatrix(std::span<const EmbeddedExample> examples);

    std::size_t rows() const noexcept { return labels_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    std::span<const double> row(std::size_t i) const { return {values_.data() + i * dim_, dim_}; }
    int label(std::size_t i) const { return labels_[i]; }

private:
    std::size_t dim_ = 0;
    std::vector<double> values_;
    std::vector<int> labels_;
};

struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;

    double decision(std::span<const double> x) const;
    double probability(std::span<const double> x) const;
    int predict(std::span<const double> x) const { return decision(x) >= 0.0 ? 1 : 0; }
};

// L2-regularized logistic regression by full-batch gradient descent for a fixed
// number of epochs. Weights start from small seeded noise, so a fixed seed
// gives a fixed model. Throws InputError on an empty or single-class set.
LinearModel train_probe(std::span<const EmbeddedExample> train, const ProbeConfig& config, std::uint64_t seed);

// Same optimizer on a subset of matrix rows. A single-class subset is allowed
// here and yields a model that favours that class.
LinearModel fit_logistic(const FeatureMatrix& data, std::span<const std::size_t> rows, const ProbeConfig& config,
                         std::uint64_t seed);

} // namespace paracon
