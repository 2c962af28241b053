#include "paracon/aflite.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "jsonl.hpp"
#include "paracon/error.hpp"
#include "paracon/random.hpp"

namespace paracon {

namespace {

void validate(std::span<const EmbeddedExample> data, const AfliteConfig& config)
{
    if (config.n_ensemble == 0) {
        throw InputError("AFLite needs at least one ensemble member");
    }
    if (config.k_remove == 0) {
        throw InputError("AFLite k_remove must be at least 1");
    }
    if (!(config.tau >= 0.0 && config.tau <= 1.0)) {
        throw InputError("AFLite tau must lie in [0,1]");
    }
    if (data.size() <= config.m_train) {
        throw InputError("AFLite needs more examples (" + std::to_string(data.size()) + ") than m_train (" +
                         std::to_string(config.m_train) + ")");
    }
    if (config.k_remove >= data.size()) {
        throw InputError("AFLite k_remove must be smaller than the dataset size");
    }
    if (config.m_train == 0) {
        throw InputError("AFLite m_train must be at least 1");
    }
    config.probe.validate();
    std::set<std::string_view> ids;
    for (const auto& e : data) {
        if (!ids.insert(e.example_id).second) {
            throw InputError("duplicate example_id '" + e.example_id + "'");
        }
    }
}

// Votes of one member over the current pool: 0 = not held out, 1 = wrong, 2 = correct.
std::vector<std::uint8_t> member_votes(const FeatureMatrix& matrix, const std::vector<std::size_t>& pool,
                                       const AfliteConfig& config, std::size_t iteration, std::size_t member)
{
    Rng rng(derive_seed(config.seed, {iteration, member}));
    const auto picked = rng.sample_without_replacement(pool.size(), config.m_train);
    std::vector<std::uint8_t> votes(pool.size(), 1);
    std::vector<std::size_t> rows;
    rows.reserve(picked.size());
    for (std::size_t p : picked) {
        votes[p] = 0;
        rows.push_back(pool[p]);
    }
    std::sort(rows.begin(), rows.end());
    const LinearModel model = fit_logistic(matrix, rows, config.probe, rng.next());
    for (std::size_t p = 0; p < pool.size(); ++p) {
        if (votes[p] == 0) {
            continue;
        }
        const std::size_t r = pool[p];
        votes[p] = model.predict(matrix.row(r)) == matrix.label(r) ? 2 : 1;
    }
    return votes;
}

std::vector<std::vector<std::uint8_t>> ensemble_votes(const FeatureMatrix& matrix, const std::vector<std::size_t>& pool,
                                                      const AfliteConfig& config, std::size_t iteration)
{
    std::vector<std::vector<std::uint8_t>> votes(config.n_ensemble);
    std::size_t threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    threads = std::min(threads, config.n_ensemble);
    if (threads <= 1) {
        for (std::size_t m = 0; m < config.n_ensemble; ++m) {
            votes[m] = member_votes(matrix, pool, config, iteration, m);
        }
        return votes;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t m = next++; m < config.n_ensemble; m = next++) {
                try {
                    votes[m] = member_votes(matrix, pool, config, iteration, m);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return votes;
}

} // namespace

FilterResult aflite_filter(std::span<const EmbeddedExample> data, const AfliteConfig& config)
{
    validate(data, config);
    const FeatureMatrix matrix(data);

    FilterResult result;
    std::vector<std::optional<double>> last_score(data.size());
    std::vector<std::size_t> pool(data.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        pool[i] = i;
    }

    while (pool.size() > config.m_train) {
        ++result.iterations;
        const auto votes = ensemble_votes(matrix, pool, config, result.iterations);

        std::vector<std::size_t> correct(pool.size(), 0);
        std::vector<std::size_t> evaluated(pool.size(), 0);
        for (const auto& member : votes) {
            for (std::size_t p = 0; p < pool.size(); ++p) {
                evaluated[p] += member[p] != 0 ? 1 : 0;
                correct[p] += member[p] == 2 ? 1 : 0;
            }
        }

        struct Candidate {
            std::size_t position;
            double score;
        };
        std::vector<Candidate> above;
        for (std::size_t p = 0; p < pool.size(); ++p) {
            if (evaluated[p] == 0) {
                continue;
            }
            const double score = static_cast<double>(correct[p]) / static_cast<double>(evaluated[p]);
            last_score[pool[p]] = score;
            if (score > config.tau) {
                above.push_back({p, score});
            }
        }
        std::sort(above.begin(), above.end(), [&](const Candidate& a, const Candidate& b) {
            if (a.score != b.score) {
                return a.score > b.score;
            }
            return data[pool[a.position]].example_id < data[pool[b.position]].example_id;
        });
        const std::size_t removed = std::min(above.size(), config.k_remove);
        std::vector<bool> drop(pool.size(), false);
        for (std::size_t i = 0; i < removed; ++i) {
            drop[above[i].position] = true;
            result.easy_ids.push_back(data[pool[above[i].position]].example_id);
        }
        std::vector<std::size_t> kept;
        kept.reserve(pool.size() - removed);
        for (std::size_t p = 0; p < pool.size(); ++p) {
            if (!drop[p]) {
                kept.push_back(pool[p]);
            }
        }
        pool = std::move(kept);
        if (removed < config.k_remove) {
            break;
        }
    }

    for (std::size_t i : pool) {
        result.hard_ids.push_back(data[i].example_id);
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        result.final_scores.emplace(data[i].example_id, last_score[i]);
    }
    return result;
}

std::vector<EmbeddedExample> read_embeddings(std::istream& in, const std::string& source_name)
{
    std::vector<EmbeddedExample> out;
    std::size_t dim = 0;
    detail::for_each_record(in, source_name, [&](const detail::json& j, std::size_t) {
        EmbeddedExample e;
        e.example_id = detail::require_string(j, "example_id");
        const auto& label = detail::require(j, "label");
        if (label.is_boolean()) {
            e.label = label.get<bool>() ? 1 : 0;
        } else if (label.is_number_integer() && (label.get<long long>() == 0 || label.get<long long>() == 1)) {
            e.label = static_cast<int>(label.get<long long>());
        } else {
            detail::fail("field 'label' must be 0, 1, true or false");
        }
        const auto& vec = detail::require(j, "vector");
        if (!vec.is_array() || vec.empty()) {
            detail::fail("field 'vector' must be a non-empty array");
        }
        e.vector.reserve(vec.size());
        for (const auto& v : vec) {
            e.vector.push_back(detail::as_finite(v, "vector"));
        }
        if (out.empty()) {
            dim = e.vector.size();
        } else if (e.vector.size() != dim) {
            detail::fail("vector has dimension " + std::to_string(e.vector.size()) + ", expected " +
                         std::to_string(dim));
        }
        out.push_back(std::move(e));
    });
    return out;
}

std::vector<EmbeddedExample> load_embeddings(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    return read_embeddings(in, path.string());
}

std::string filter_result_to_json(const FilterResult& result)
{
    detail::json scores = detail::json::object();
    for (const auto& [id, score] : result.final_scores) {
        scores[id] = score ? detail::json(*score) : detail::json(nullptr);
    }
    return detail::json{{"easy", result.easy_ids},
                        {"hard", result.hard_ids},
                        {"scores", scores},
                        {"iterations", result.iterations}}
               .dump(2) +
           "\n";
}

} // namespace paracon
