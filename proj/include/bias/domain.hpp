#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace bias {

using json = nlohmann::json;

enum class Condition { control, treatment };
enum class BiasFamily { decoy, certainty, not_probable, belief };

std::string to_string(Condition c);
std::string to_string(BiasFamily b);
Condition condition_from_string(const std::string& s);
BiasFamily bias_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Decoy

struct ProductOption {
    std::string label;
    double price = 0.0; // USD, positive, two decimal places
    int quality = 0;    // rating in [0, 100]

    bool valid() const { return price > 0.0 && quality >= 0 && quality <= 100; }
};

// a is asymmetrically dominated by b: no better in either dimension, strictly
// worse in at least one
bool is_dominated(const ProductOption& a, const ProductOption& b);

enum class TargetKind { cheaper, expensive };
enum class DecoyVariant { price_25, price_50, quality_minus, combo };

std::string to_string(TargetKind k);
std::string to_string(DecoyVariant v);
TargetKind target_kind_from_string(const std::string& s);
DecoyVariant decoy_variant_from_string(const std::string& s);

struct DecoySample {
    std::string id;
    std::string category; // frying_pan | phone | car | real_estate
    Condition condition = Condition::control;
    std::vector<ProductOption> options; // in presentation order
    int target_index = -1;
    int competitor_index = -1;
    int decoy_index = -1; // -1 in control
    TargetKind target_kind = TargetKind::cheaper;
    std::optional<DecoyVariant> decoy_variant; // treatment only
    int template_id = 0;
    int permutation_id = 0;
    int value_config_id = 0;
    std::string pair_key; // links treatment samples to their control counterpart
};

// ---------------------------------------------------------------------------
// Certainty / not-probable

struct LotteryOutcome {
    double prize = 0.0;
    double probability = 0.0;
};

struct Lottery {
    std::vector<LotteryOutcome> outcomes; // probabilities sum to 1

    double expected_value() const;
    bool valid() const;
    // true when a single nonzero-prize outcome carries probability 1
    bool is_certain() const;
    // probability of the (single) nonzero-prize outcome
    double win_probability() const;
    double win_prize() const;
};

// two-outcome lottery; a zero-prize outcome absorbs the residual mass
Lottery make_lottery(double prize, double probability);

struct CertaintySample {
    std::string id;
    BiasFamily variant = BiasFamily::certainty; // certainty | not_probable
    Condition condition = Condition::control;
    Lottery option_a; // presentation order: option_a is listed first
    Lottery option_b;
    int target_index = -1; // 0 = option_a, 1 = option_b
    int template_id = 0;
    int sub_template_id = 0;
    int permutation_id = 0;
    int value_config_id = 0;
    double scale_factor = 1.0; // c used to derive this control; 1.0 in treatment
    std::string pair_key;
};

// ---------------------------------------------------------------------------
// Belief

enum class Validity { valid, invalid };
enum class Believability { believable, unbelievable, neutral };
enum class Consistency { consistent, inconsistent, neutral };

std::string to_string(Validity v);
std::string to_string(Believability b);
std::string to_string(Consistency c);
Validity validity_from_string(const std::string& s);
Believability believability_from_string(const std::string& s);
Consistency consistency_from_string(const std::string& s);

Consistency classify_consistency(Condition condition, Validity v, Believability b);

struct BeliefSample {
    std::string id;
    Condition condition = Condition::control; // control = non-real objects
    std::string premise1; // in presentation order
    std::string premise2;
    std::string conclusion;
    Validity validity = Validity::valid;
    Believability believability = Believability::neutral;
    Consistency consistency = Consistency::neutral;
    int template_id = 0;
    int premise_permutation_id = 0;
    int argument_id = 0;
    std::string pair_key;
};

// ---------------------------------------------------------------------------
// Type-erased probe sample + dataset JSONL schema
// (fields: id, bias, condition, options, target_index, metadata)

using ProbeSample = std::variant<DecoySample, CertaintySample, BeliefSample>;

std::string sample_id(const ProbeSample& s);
Condition sample_condition(const ProbeSample& s);
BiasFamily sample_family(const ProbeSample& s);

json sample_to_json(const ProbeSample& s);
ProbeSample sample_from_json(const json& j);

} // namespace bias
