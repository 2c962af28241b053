#include <doctest.h>

#include <random>
#include <sstream>

#include "planted.hpp"
#include "paracon/aflite.hpp"
#include "paracon/error.hpp"
#include "paracon/probe.hpp"

using namespace paracon;

namespace {

std::vector<EmbeddedExample> blobs(std::uint64_t seed, std::size_t n, double separation, std::size_t dim = 4)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<EmbeddedExample> out;
    for (std::size_t i = 0; i < n; ++i) {
        EmbeddedExample e;
        e.example_id = "x" + std::to_string(i);
        e.label = static_cast<int>(i % 2);
        for (std::size_t d = 0; d < dim; ++d) {
            e.vector.push_back(noise(rng) + (e.label == 1 ? separation : -separation));
        }
        out.push_back(std::move(e));
    }
    return out;
}

double accuracy(const LinearModel& m, const std::vector<EmbeddedExample>& data)
{
    std::size_t right = 0;
    for (const auto& e : data) {
        right += m.predict(e.vector) == e.label ? 1 : 0;
    }
    return static_cast<double>(right) / static_cast<double>(data.size());
}

AfliteConfig small_config()
{
    AfliteConfig c;
    c.n_ensemble = 64;
    c.m_train = 300;
    c.k_remove = 50;
    c.tau = 0.75;
    c.seed = 42;
    return c;
}

} // namespace

TEST_CASE("probe separates well-separated blobs")
{
    const auto train = blobs(1, 400, 1.5);
    const auto test = blobs(2, 400, 1.5);
    const auto m = train_probe(train, {}, 7);
    CHECK(accuracy(m, test) >= 0.95);
    CHECK(m.probability(test[1].vector) > 0.5);
}

TEST_CASE("probe is at chance on pure noise")
{
    const auto train = blobs(3, 400, 0.0);
    const auto test = blobs(4, 2000, 0.0);
    CHECK(accuracy(train_probe(train, {}, 7), test) == doctest::Approx(0.5).epsilon(0.2));
}

TEST_CASE("probe on identical vectors predicts the majority class")
{
    std::vector<EmbeddedExample> same;
    for (int i = 0; i < 10; ++i) {
        same.push_back({"s" + std::to_string(i), {1.0, -2.0}, i < 7 ? 1 : 0});
    }
    CHECK(train_probe(same, {}, 1).predict(std::vector<double>{1.0, -2.0}) == 1);
}

TEST_CASE("probe is deterministic per seed and validates input")
{
    const auto train = blobs(5, 100, 1.0);
    const auto a = train_probe(train, {}, 11);
    const auto b = train_probe(train, {}, 11);
    CHECK(a.weights == b.weights);
    CHECK(a.bias == b.bias);
    CHECK_THROWS_AS(train_probe({}, {}, 1), InputError);
    std::vector<EmbeddedExample> one_class{{"a", {1.0}, 1}, {"b", {2.0}, 1}};
    CHECK_THROWS_AS(train_probe(one_class, {}, 1), InputError);
    std::vector<EmbeddedExample> ragged{{"a", {1.0}, 1}, {"b", {2.0, 3.0}, 0}};
    CHECK_THROWS_AS(train_probe(ragged, {}, 1), InputError);
    std::vector<EmbeddedExample> bad_label{{"a", {1.0}, 2}, {"b", {2.0}, 0}};
    CHECK_THROWS_AS(train_probe(bad_label, {}, 1), InputError);
    ProbeConfig bad;
    bad.learning_rate = 0.0;
    CHECK_THROWS_AS(train_probe(train, bad, 1), InputError);
}

TEST_CASE("aflite removes planted shortcut examples")
{
    const auto fx = fixture::planted_fixture(3, 1000, 200);
    const auto result = aflite_filter(fx.examples, small_config());
    std::size_t caught = 0;
    for (const auto& id : result.easy_ids) {
        caught += fx.planted_ids.count(id);
    }
    CHECK(caught >= 180);
    CHECK(result.easy_ids.size() + result.hard_ids.size() == 1000);
    CHECK(result.final_scores.size() == 1000);
    CHECK(result.iterations >= 4);
}

TEST_CASE("aflite keeps pure noise")
{
    const auto fx = fixture::planted_fixture(4, 800, 0);
    const auto config = small_config();
    const auto result = aflite_filter(fx.examples, config);
    CHECK(result.easy_ids.size() <= 2 * config.k_remove);
    CHECK(result.iterations <= 2);
    double sum = 0.0;
    std::size_t scored = 0;
    for (const auto& [id, score] : result.final_scores) {
        if (score) {
            sum += *score;
            ++scored;
        }
    }
    CHECK(sum / static_cast<double>(scored) == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("aflite is reproducible and thread-count independent")
{
    const auto fx = fixture::planted_fixture(5, 700, 150);
    auto c = small_config();
    const auto a = aflite_filter(fx.examples, c);
    const auto b = aflite_filter(fx.examples, c);
    c.threads = 4;
    const auto t = aflite_filter(fx.examples, c);
    CHECK(a == b);
    CHECK(a == t);
    c.seed = 43;
    CHECK_FALSE(aflite_filter(fx.examples, c) == a);
}

TEST_CASE("aflite configuration checks")
{
    const auto fx = fixture::planted_fixture(6, 100, 0);
    auto c = small_config();
    CHECK_THROWS_AS(aflite_filter(fx.examples, c), InputError); // m_train >= size
    c.m_train = 50;
    c.k_remove = 0;
    CHECK_THROWS_AS(aflite_filter(fx.examples, c), InputError);
    c.k_remove = 10;
    c.tau = 1.5;
    CHECK_THROWS_AS(aflite_filter(fx.examples, c), InputError);
    c.tau = 0.75;
    c.n_ensemble = 0;
    CHECK_THROWS_AS(aflite_filter(fx.examples, c), InputError);
    auto dup = fx.examples;
    dup[1].example_id = dup[0].example_id;
    c.n_ensemble = 4;
    CHECK_THROWS_AS(aflite_filter(dup, c), InputError);
}

TEST_CASE("embedding files")
{
    std::istringstream in(R"({"example_id":"a","label":1,"vector":[0.5,1]})"
                          "\n"
                          R"({"example_id":"b","label":false,"vector":[0,-2.5]})"
                          "\n");
    const auto e = read_embeddings(in, "emb.jsonl");
    REQUIRE(e.size() == 2);
    CHECK(e[1].label == 0);
    CHECK(e[0].vector == std::vector<double>{0.5, 1.0});
    std::istringstream bad(R"({"example_id":"a","label":3,"vector":[0.5]})");
    CHECK_THROWS_AS(read_embeddings(bad, "emb.jsonl"), InputError);
    std::istringstream ragged(R"({"example_id":"a","label":1,"vector":[0.5]})"
                              "\n"
                              R"({"example_id":"b","label":1,"vector":[0.5,2]})");
    CHECK_THROWS_AS(read_embeddings(ragged, "emb.jsonl"), InputError);

    FilterResult r;
    r.easy_ids = {"a"};
    r.hard_ids = {"b"};
    r.final_scores = {{"a", 1.0}, {"b", std::nullopt}};
    r.iterations = 1;
    const std::string json = filter_result_to_json(r);
    CHECK(json.find("\"b\": null") != std::string::npos);
}
