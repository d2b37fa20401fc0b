#include "fcmqr/synthetic.hpp"

#include <string>

#include "fcmqr/errors.hpp"
#include "fcmqr/rng.hpp"

namespace fcmqr {

ExpressionDataset generate_synthetic(const SyntheticConfig& config) {
    if (config.n_genes < 2) throw DataError("synthetic: need at least 2 genes");
    if (config.n_samples < 4) throw DataError("synthetic: need at least 4 samples");

    rng::Engine engine(rng::derive_seed(config.seed, "synth"));

    const std::size_t n = config.n_samples;
    std::vector<std::string> sample_ids(n), labels(n);
    for (std::size_t s = 0; s < n; ++s) {
        sample_ids[s] = "S" + std::to_string(s);
        labels[s] = (s % 2 == 0) ? "A" : "B";  // alternating keeps classes balanced +/-1
    }

    // class-separating profile: gap 10 with jitter clipped to +/-2 leaves a
    // margin of at least 6x the unit noise sigma
    std::vector<double> profile(n);
    for (std::size_t s = 0; s < n; ++s)
        profile[s] = (s % 2 == 0 ? 0.0 : 10.0) + engine.uniform(-2.0, 2.0);

    std::vector<std::string> feature_ids(config.n_genes);
    std::vector<std::vector<double>> values(config.n_genes, std::vector<double>(n));
    for (std::size_t g = 0; g < config.n_genes; ++g) feature_ids[g] = "#" + std::to_string(g);

    std::size_t first_noise_gene = 0;
    if (config.planted_pair) {
        for (std::size_t g = 0; g < 2; ++g) {
            double scale = engine.uniform(0.5, 2.0);
            double offset = engine.uniform(-1.0, 1.0);
            for (std::size_t s = 0; s < n; ++s) values[g][s] = scale * profile[s] + offset;
        }
        first_noise_gene = 2;
    }
    for (std::size_t g = first_noise_gene; g < config.n_genes; ++g)
        for (std::size_t s = 0; s < n; ++s) values[g][s] = engine.normal();

    return make_dataset(std::move(feature_ids), std::move(sample_ids), std::move(values),
                        std::move(labels));
}

}  // namespace fcmqr
