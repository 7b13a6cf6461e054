#include "bias/domain.hpp"

#include <cmath>

#include "bias/errors.hpp"

namespace bias {

std::string to_string(Condition c) {
    return c == Condition::control ? "control" : "treatment";
}

std::string to_string(BiasFamily b) {
    switch (b) {
        case BiasFamily::decoy: return "decoy";
        case BiasFamily::certainty: return "certainty";
        case BiasFamily::not_probable: return "not_probable";
        case BiasFamily::belief: return "belief";
    }
    return "?";
}

Condition condition_from_string(const std::string& s) {
    if (s == "control") return Condition::control;
    if (s == "treatment") return Condition::treatment;
    throw Error("unknown condition: " + s);
}

BiasFamily bias_from_string(const std::string& s) {
    if (s == "decoy") return BiasFamily::decoy;
    if (s == "certainty") return BiasFamily::certainty;
    if (s == "not_probable") return BiasFamily::not_probable;
    if (s == "belief") return BiasFamily::belief;
    throw Error("unknown bias family: " + s);
}

bool is_dominated(const ProductOption& a, const ProductOption& b) {
    return a.price >= b.price && a.quality <= b.quality &&
           (a.price > b.price || a.quality < b.quality);
}

std::string to_string(TargetKind k) {
    return k == TargetKind::cheaper ? "cheaper" : "expensive";
}

std::string to_string(DecoyVariant v) {
    switch (v) {
        case DecoyVariant::price_25: return "price_25";
        case DecoyVariant::price_50: return "price_50";
        case DecoyVariant::quality_minus: return "quality_minus";
        case DecoyVariant::combo: return "combo";
    }
    return "?";
}

TargetKind target_kind_from_string(const std::string& s) {
    if (s == "cheaper") return TargetKind::cheaper;
    if (s == "expensive") return TargetKind::expensive;
    throw Error("unknown target kind: " + s);
}

DecoyVariant decoy_variant_from_string(const std::string& s) {
    if (s == "price_25") return DecoyVariant::price_25;
    if (s == "price_50") return DecoyVariant::price_50;
    if (s == "quality_minus") return DecoyVariant::quality_minus;
    if (s == "combo") return DecoyVariant::combo;
    throw Error("unknown decoy variant: " + s);
}

double Lottery::expected_value() const {
    double ev = 0.0;
    for (const auto& o : outcomes) ev += o.prize * o.probability;
    return ev;
}

bool Lottery::valid() const {
    double total = 0.0;
    for (const auto& o : outcomes) {
        if (o.probability < 0.0 || o.prize < 0.0) return false;
        total += o.probability;
    }
    return std::abs(total - 1.0) <= 1e-9;
}

bool Lottery::is_certain() const {
    int nonzero = 0;
    for (const auto& o : outcomes) {
        if (o.prize > 0.0) {
            ++nonzero;
            if (std::abs(o.probability - 1.0) > 1e-12) return false;
        }
    }
    return nonzero == 1;
}

double Lottery::win_probability() const {
    for (const auto& o : outcomes)
        if (o.prize > 0.0) return o.probability;
    return 0.0;
}

double Lottery::win_prize() const {
    for (const auto& o : outcomes)
        if (o.prize > 0.0) return o.prize;
    return 0.0;
}

Lottery make_lottery(double prize, double probability) {
    Lottery l;
    l.outcomes.push_back({prize, probability});
    if (probability < 1.0) l.outcomes.push_back({0.0, 1.0 - probability});
    return l;
}

std::string to_string(Validity v) {
    return v == Validity::valid ? "valid" : "invalid";
}

std::string to_string(Believability b) {
    switch (b) {
        case Believability::believable: return "believable";
        case Believability::unbelievable: return "unbelievable";
        case Believability::neutral: return "neutral";
    }
    return "?";
}

std::string to_string(Consistency c) {
    switch (c) {
        case Consistency::consistent: return "consistent";
        case Consistency::inconsistent: return "inconsistent";
        case Consistency::neutral: return "neutral";
    }
    return "?";
}

Validity validity_from_string(const std::string& s) {
    if (s == "valid") return Validity::valid;
    if (s == "invalid") return Validity::invalid;
    throw Error("unknown validity: " + s);
}

Believability believability_from_string(const std::string& s) {
    if (s == "believable") return Believability::believable;
    if (s == "unbelievable") return Believability::unbelievable;
    if (s == "neutral") return Believability::neutral;
    throw Error("unknown believability: " + s);
}

Consistency consistency_from_string(const std::string& s) {
    if (s == "consistent") return Consistency::consistent;
    if (s == "inconsistent") return Consistency::inconsistent;
    if (s == "neutral") return Consistency::neutral;
    throw Error("unknown consistency: " + s);
}

Consistency classify_consistency(Condition condition, Validity v, Believability b) {
    if (condition == Condition::control || b == Believability::neutral)
        return Consistency::neutral;
    bool consistent = (v == Validity::valid && b == Believability::believable) ||
                      (v == Validity::invalid && b == Believability::unbelievable);
    return consistent ? Consistency::consistent : Consistency::inconsistent;
}

std::string sample_id(const ProbeSample& s) {
    return std::visit([](const auto& x) { return x.id; }, s);
}

Condition sample_condition(const ProbeSample& s) {
    return std::visit([](const auto& x) { return x.condition; }, s);
}

BiasFamily sample_family(const ProbeSample& s) {
    if (std::holds_alternative<DecoySample>(s)) return BiasFamily::decoy;
    if (std::holds_alternative<BeliefSample>(s)) return BiasFamily::belief;
    return std::get<CertaintySample>(s).variant;
}

namespace {

json lottery_to_json(const Lottery& l) {
    json arr = json::array();
    for (const auto& o : l.outcomes) arr.push_back({{"prize", o.prize}, {"probability", o.probability}});
    return arr;
}

Lottery lottery_from_json(const json& j) {
    Lottery l;
    for (const auto& o : j) l.outcomes.push_back({o.at("prize").get<double>(), o.at("probability").get<double>()});
    return l;
}

} // namespace

json sample_to_json(const ProbeSample& s) {
    json j;
    j["id"] = sample_id(s);
    j["bias"] = to_string(sample_family(s));
    j["condition"] = to_string(sample_condition(s));

    if (const auto* d = std::get_if<DecoySample>(&s)) {
        json opts = json::array();
        for (const auto& o : d->options)
            opts.push_back({{"label", o.label}, {"price", o.price}, {"quality", o.quality}});
        j["options"] = opts;
        j["target_index"] = d->target_index;
        json meta;
        meta["category"] = d->category;
        meta["competitor_index"] = d->competitor_index;
        meta["decoy_index"] = d->decoy_index;
        meta["target_kind"] = to_string(d->target_kind);
        if (d->decoy_variant) meta["decoy_variant"] = to_string(*d->decoy_variant);
        meta["template_id"] = d->template_id;
        meta["permutation_id"] = d->permutation_id;
        meta["value_config_id"] = d->value_config_id;
        meta["pair_key"] = d->pair_key;
        j["metadata"] = meta;
    } else if (const auto* c = std::get_if<CertaintySample>(&s)) {
        j["options"] = json::array({lottery_to_json(c->option_a), lottery_to_json(c->option_b)});
        j["target_index"] = c->target_index;
        json meta;
        meta["variant"] = to_string(c->variant);
        meta["template_id"] = c->template_id;
        meta["sub_template_id"] = c->sub_template_id;
        meta["permutation_id"] = c->permutation_id;
        meta["value_config_id"] = c->value_config_id;
        meta["scale_factor"] = c->scale_factor;
        meta["pair_key"] = c->pair_key;
        j["metadata"] = meta;
    } else {
        const auto& b = std::get<BeliefSample>(s);
        j["options"] = json::array({"valid", "invalid"});
        j["target_index"] = b.validity == Validity::valid ? 0 : 1;
        json meta;
        meta["premise1"] = b.premise1;
        meta["premise2"] = b.premise2;
        meta["conclusion"] = b.conclusion;
        meta["validity"] = to_string(b.validity);
        meta["believability"] = to_string(b.believability);
        meta["consistency"] = to_string(b.consistency);
        meta["template_id"] = b.template_id;
        meta["premise_permutation_id"] = b.premise_permutation_id;
        meta["argument_id"] = b.argument_id;
        meta["pair_key"] = b.pair_key;
        j["metadata"] = meta;
    }
    return j;
}

ProbeSample sample_from_json(const json& j) {
    const auto family = bias_from_string(j.at("bias").get<std::string>());
    const auto cond = condition_from_string(j.at("condition").get<std::string>());
    const auto& meta = j.at("metadata");

    if (family == BiasFamily::decoy) {
        DecoySample d;
        d.id = j.at("id").get<std::string>();
        d.condition = cond;
        for (const auto& o : j.at("options"))
            d.options.push_back({o.at("label").get<std::string>(), o.at("price").get<double>(),
                                 o.at("quality").get<int>()});
        d.target_index = j.at("target_index").get<int>();
        d.category = meta.at("category").get<std::string>();
        d.competitor_index = meta.at("competitor_index").get<int>();
        d.decoy_index = meta.at("decoy_index").get<int>();
        d.target_kind = target_kind_from_string(meta.at("target_kind").get<std::string>());
        if (meta.contains("decoy_variant"))
            d.decoy_variant = decoy_variant_from_string(meta.at("decoy_variant").get<std::string>());
        d.template_id = meta.at("template_id").get<int>();
        d.permutation_id = meta.at("permutation_id").get<int>();
        d.value_config_id = meta.at("value_config_id").get<int>();
        d.pair_key = meta.at("pair_key").get<std::string>();
        return d;
    }
    if (family == BiasFamily::belief) {
        BeliefSample b;
        b.id = j.at("id").get<std::string>();
        b.condition = cond;
        b.premise1 = meta.at("premise1").get<std::string>();
        b.premise2 = meta.at("premise2").get<std::string>();
        b.conclusion = meta.at("conclusion").get<std::string>();
        b.validity = validity_from_string(meta.at("validity").get<std::string>());
        b.believability = believability_from_string(meta.at("believability").get<std::string>());
        b.consistency = consistency_from_string(meta.at("consistency").get<std::string>());
        b.template_id = meta.at("template_id").get<int>();
        b.premise_permutation_id = meta.at("premise_permutation_id").get<int>();
        b.argument_id = meta.at("argument_id").get<int>();
        b.pair_key = meta.at("pair_key").get<std::string>();
        return b;
    }
    CertaintySample c;
    c.id = j.at("id").get<std::string>();
    c.variant = family;
    c.condition = cond;
    c.option_a = lottery_from_json(j.at("options").at(0));
    c.option_b = lottery_from_json(j.at("options").at(1));
    c.target_index = j.at("target_index").get<int>();
    c.template_id = meta.at("template_id").get<int>();
    c.sub_template_id = meta.at("sub_template_id").get<int>();
    c.permutation_id = meta.at("permutation_id").get<int>();
    c.value_config_id = meta.at("value_config_id").get<int>();
    c.scale_factor = meta.at("scale_factor").get<double>();
    c.pair_key = meta.at("pair_key").get<std::string>();
    return c;
}

} // namespace bias
