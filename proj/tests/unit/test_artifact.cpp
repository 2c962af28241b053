#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "paracon/artifact.hpp"
#include "paracon/error.hpp"

using namespace paracon;

namespace {

struct World {
    Dataset dataset;
    Run partial{"partial"};
    Run full{"full"};
};

// Four buckets of three paraphrases. The partial-input model gets the originals
// of a and b right through an artifact, but the paraphrases break it.
World artifact_world()
{
    World w;
    w.dataset = fixture::dataset_of({fixture::bucket("a", 3, "yes", 0.95), fixture::bucket("b", 3, "no", 0.85),
                                     fixture::bucket("c", 3, "yes", 0.15), fixture::bucket("d", 3, "no", 0.05)});
    const auto& b = w.dataset.buckets();
    fixture::predict(w.partial, b[0], true, 1);
    fixture::predict(w.partial, b[1], true, 0);
    fixture::predict(w.partial, b[2], false, 2);
    fixture::predict(w.partial, b[3], false, 1);
    fixture::predict(w.full, b[0], true, 3);
    fixture::predict(w.full, b[1], true, 2);
    fixture::predict(w.full, b[2], false, 1);
    fixture::predict(w.full, b[3], true, 3);
    return w;
}

} // namespace

TEST_CASE("partition follows the partial run on originals")
{
    const auto w = artifact_world();
    const auto p = partition_by_partial_input(w.dataset, w.partial);
    CHECK(p.likely_ids == std::vector<std::string>{"a", "b"});
    CHECK(p.unlikely_ids == std::vector<std::string>{"c", "d"});
}

TEST_CASE("subset report")
{
    const auto w = artifact_world();
    const auto p = partition_by_partial_input(w.dataset, w.partial);
    const auto r = artifact_report(p, w.dataset, w.partial, w.full);
    REQUIRE(r.rows.size() == 2);
    const auto& likely = r.rows[0];
    const auto& unlikely = r.rows[1];
    CHECK(likely.subset == ArtifactSubset::likely);
    CHECK(*likely.partial.a_original == 1.0);
    CHECK(*unlikely.partial.a_original == 0.0);
    CHECK(*likely.partial.a_bucket == doctest::Approx(1.0 / 6.0));
    CHECK(*likely.full.a_bucket == doctest::Approx(5.0 / 6.0));
    CHECK(*unlikely.full.a_original == 0.5);
    // Full-input P_C on the likely subset: buckets at theta 1 and 2/3.
    CHECK(*likely.p_c == doctest::Approx((1.0 + 5.0 / 9.0) / 2.0));
    CHECK_FALSE(likely.p_c_corrected.has_value());
    // Subset A_O counts recompose the whole-set A_O.
    CHECK(likely.full.n_original_correct + unlikely.full.n_original_correct == 3);
    CHECK(likely.full.n_original_predicted + unlikely.full.n_original_predicted == 4);

    const std::string csv = artifact_report_to_csv(r);
    CHECK(csv.rfind("subset,n_buckets,partial_A_O,", 0) == 0);
    CHECK(csv.find("likely,2,100.0,16.7,,100.0,83.3,,77.8,\n") != std::string::npos);
    CHECK(artifact_report_to_json(r, p).find("\"P_C_corrected\": null") != std::string::npos);
}

TEST_CASE("corrected columns use the whole-set or per-subset reference")
{
    const auto w = artifact_world();
    const auto p = partition_by_partial_input(w.dataset, w.partial);
    ArtifactOptions o;
    std::array<double, kDeciles> uniform{};
    uniform.fill(0.1);
    o.reference = StratumDistribution::from_proportions(uniform);
    Diagnostics diag;
    const auto r = artifact_report(p, w.dataset, w.partial, w.full, o, &diag);
    // Each subset has one bucket per occupied decile, so any reference spread
    // over both deciles evenly reproduces the uncorrected numbers.
    CHECK(*r.rows[0].p_c_corrected == doctest::Approx(*r.rows[0].p_c));
    CHECK(*r.rows[0].full.a_bucket_corrected == doctest::Approx(*r.rows[0].full.a_bucket));
    CHECK_FALSE(diag.empty()); // mass on empty deciles was redistributed

    std::array<double, kDeciles> top{};
    top[9] = 1.0;
    o.reference_likely = StratumDistribution::from_proportions(top);
    const auto r2 = artifact_report(p, w.dataset, w.partial, w.full, o);
    CHECK(*r2.rows[0].p_c_corrected == doctest::Approx(1.0));
    CHECK(*r2.rows[1].p_c_corrected == doctest::Approx(*r.rows[1].p_c_corrected));
}

TEST_CASE("missing partial predictions and empty subsets")
{
    auto w = artifact_world();
    Run gappy("partial");
    const auto& b = w.dataset.buckets();
    fixture::predict(gappy, b[0], true, 1);
    fixture::predict(gappy, b[1], true, 1);
    CHECK_THROWS_AS(partition_by_partial_input(w.dataset, gappy), InputError);

    Diagnostics diag;
    const auto p = partition_by_partial_input(w.dataset, gappy, {false}, &diag);
    CHECK(diag.warnings().size() == 2);
    CHECK(p.unlikely_ids.empty());
    Diagnostics diag2;
    const auto r = artifact_report(p, w.dataset, gappy, w.full, {}, &diag2);
    CHECK(r.rows.size() == 1);
    CHECK(r.rows[0].subset == ArtifactSubset::likely);
    CHECK_FALSE(diag2.empty());
}

TEST_CASE("partial-input original accuracy is 1 and 0 by construction")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ParaphraseBucket> buckets;
        const std::size_t n = 2 + rng() % 20;
        for (std::size_t i = 0; i < n; ++i) {
            buckets.push_back(fixture::bucket("q" + std::to_string(i), 1 + rng() % 5, rng() % 2 ? "yes" : "no"));
        }
        const Dataset d = fixture::dataset_of(buckets);
        Run partial("partial");
        Run full("full");
        for (const auto& b : d.buckets()) {
            fixture::predict(partial, b, rng() % 2 == 0, rng() % (b.paraphrase_items.size() + 1));
            fixture::predict(full, b, rng() % 2 == 0, rng() % (b.paraphrase_items.size() + 1));
        }
        const auto p = partition_by_partial_input(d, partial);
        for (const auto& row : artifact_report(p, d, partial, full).rows) {
            CHECK(*row.partial.a_original == (row.subset == ArtifactSubset::likely ? 1.0 : 0.0));
        }
    }
}
