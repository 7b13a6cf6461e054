#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bias/domain.hpp"

namespace bias {

// One control/treatment product pair: a low-end and a high-end option.
// Which of the two is the target depends on the decoy config's TargetKind.
struct DecoyValuePair {
    double cheap_price = 0.0;
    int cheap_quality = 0;
    double expensive_price = 0.0;
    int expensive_quality = 0;
};

struct DecoyCategoryConfig {
    std::string name;
    double price_min = 0.0;
    double price_max = 0.0;
    std::vector<DecoyValuePair> value_pairs;
};

struct DecoyConfigEntry {
    TargetKind kind = TargetKind::cheaper;
    DecoyVariant variant = DecoyVariant::price_25;
};

// Treatment entry: option A risky (prize_a with prob_a), option B certain
// (prize_b at probability 1, the lower-EV target). Each control_factor c
// derives one control sample pair by scaling both win probabilities by c.
struct CertaintyValueConfig {
    double prize_a = 0.0;
    double prob_a = 0.0;
    double prize_b = 0.0;
    std::vector<double> control_factors;
};

// Equal-EV lottery pair; option A is the larger-prize/smaller-probability
// target. Control and treatment probabilities share the prize pair and the
// probability ratio.
struct NotProbableValueConfig {
    double prize_a = 0.0;
    double control_prob_a = 0.0;
    double treatment_prob_a = 0.0;
    double prize_b = 0.0;
    double control_prob_b = 0.0;
    double treatment_prob_b = 0.0;
};

struct GenerationConfig {
    uint64_t seed = 17;
    std::vector<BiasFamily> enabled_biases;

    std::vector<int> decoy_templates;
    std::vector<DecoyConfigEntry> decoy_configs;
    std::vector<DecoyCategoryConfig> decoy_categories;

    std::vector<int> certainty_templates;
    std::vector<int> certainty_sub_templates;
    double certainty_prize_min = 2400.0;
    double certainty_prize_max = 5000.0;
    std::vector<CertaintyValueConfig> certainty_values;

    std::vector<NotProbableValueConfig> not_probable_values;

    std::vector<int> belief_templates;

    bool bias_enabled(BiasFamily b) const;

    static GenerationConfig defaults();
};

// Throws ConfigError naming the offending key.
void validate_config(const GenerationConfig& cfg);

// Parses the plain-text key/value config format (sections per bias); keys not
// present keep their default values. Throws ConfigError on malformed input.
GenerationConfig parse_config(const std::string& text);
GenerationConfig load_config(const std::filesystem::path& path);

// Serializes a config back to the file format (used to ship default.cfg).
std::string dump_config(const GenerationConfig& cfg);

// Stable fingerprint over everything that affects generated bytes.
std::string config_digest(const GenerationConfig& cfg);

} // namespace bias
