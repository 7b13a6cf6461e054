#include "bias/util.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace bias {

uint64_t fnv1a64(std::string_view data, uint64_t seed) {
    uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

uint64_t Rng::next_u64() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t Rng::next_below(uint64_t n) {
    // modulo bias is irrelevant at our n (<= pool sizes); keep it simple
    return n == 0 ? 0 : next_u64() % n;
}

Rng rng_for(uint64_t seed, std::string_view key) {
    uint64_t h = fnv1a64(key);
    return Rng(seed ^ (h * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (start <= s.size()) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            break;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::string format_money(double amount) {
    double rounded_cents = std::round(amount * 100.0) / 100.0;
    double whole = std::round(rounded_cents);
    char buf[64];
    if (std::abs(rounded_cents - whole) < 1e-9) {
        std::snprintf(buf, sizeof(buf), "$%.0f", whole);
    } else {
        std::snprintf(buf, sizeof(buf), "$%.2f", rounded_cents);
    }
    return std::string(buf);
}

namespace {

std::string trim_decimal(std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

} // namespace

std::string format_percent(double probability) {
    double pct = probability * 100.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", pct);
    return trim_decimal(buf) + "%";
}

std::string format_probability(double probability) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", probability);
    return trim_decimal(buf);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return std::string(buf);
}

} // namespace bias
