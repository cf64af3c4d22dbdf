#pragma once

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "equichroma/coloring.hpp"
#include "equichroma/rational.hpp"

namespace equichroma {

// Color class sizes in non-increasing order: the convention is that larger
// classes get smaller color indices, which pins down the mean and variance of
// the color-index random variable.
struct ColorDistribution {
    std::vector<long long> sizes; // non-increasing, all positive
    long long total = 0;          // sum of sizes

    bool is_equitable() const {
        return !sizes.empty() && sizes.front() - sizes.back() <= 1;
    }
};

inline ColorDistribution distribution_from_sizes(std::vector<long long> sizes) {
    if (sizes.empty()) throw std::invalid_argument("distribution: no classes");
    for (long long s : sizes)
        if (s <= 0) throw std::invalid_argument("distribution: class sizes must be positive");
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    ColorDistribution d;
    d.total = 0;
    for (long long s : sizes) d.total += s;
    d.sizes = std::move(sizes);
    return d;
}

inline ColorDistribution distribution_of(const Coloring& c) {
    return distribution_from_sizes(class_sizes(c));
}

// f(i) = size_i / N for i = 1..k; entries sum to exactly 1.
inline std::vector<Rational> pmf(const ColorDistribution& d) {
    if (d.total < 1) throw std::invalid_argument("pmf: empty distribution");
    std::vector<Rational> f;
    f.reserve(d.sizes.size());
    for (long long s : d.sizes) f.emplace_back(BigInt(s), BigInt(d.total));
    return f;
}

// Mean of the color index: sum i * f(i), computed exactly as one fraction.
inline Rational mean(const ColorDistribution& d) {
    if (d.total < 1) throw std::invalid_argument("mean: empty distribution");
    BigInt weighted = 0;
    for (std::size_t i = 0; i < d.sizes.size(); ++i)
        weighted += BigInt(i + 1) * d.sizes[i];
    return Rational(weighted, BigInt(d.total));
}

// Variance of the color index: sum i^2 f(i) - (sum i f(i))^2.
inline Rational variance(const ColorDistribution& d) {
    if (d.total < 1) throw std::invalid_argument("variance: empty distribution");
    BigInt weighted_sq = 0;
    for (std::size_t i = 0; i < d.sizes.size(); ++i)
        weighted_sq += BigInt(i + 1) * BigInt(i + 1) * d.sizes[i];
    const Rational m = mean(d);
    return Rational(weighted_sq, BigInt(d.total)) - m * m;
}

struct ChromaticStats {
    Rational mean;
    Rational variance;

    bool operator==(const ChromaticStats&) const = default;
};

inline ChromaticStats stats_of(const ColorDistribution& d) { return {mean(d), variance(d)}; }

// Statistics of the unique equitable size profile for N vertices in k
// classes: r = N mod k classes of size q+1 ahead of k-r classes of size q.
// Any equitable k-coloring of any N-vertex graph has exactly these values.
inline ChromaticStats stats_from_counts(long long n_vertices, long long k) {
    if (n_vertices < 1) throw std::invalid_argument("stats_from_counts: need at least one vertex");
    if (k < 1 || k > n_vertices)
        throw std::invalid_argument("stats_from_counts: k must be in [1, N]");
    const long long q = n_vertices / k;
    const long long r = n_vertices % k;
    std::vector<long long> sizes;
    sizes.reserve(static_cast<std::size_t>(k));
    for (long long i = 0; i < r; ++i) sizes.push_back(q + 1);
    for (long long i = r; i < k; ++i) sizes.push_back(q);
    return stats_of(distribution_from_sizes(std::move(sizes)));
}

namespace detail {

inline nlohmann::ordered_json rational_to_json(const Rational& r) {
    nlohmann::ordered_json j;
    // Numerator/denominator as JSON integers when they fit, strings beyond.
    auto field = [](const BigInt& v) -> nlohmann::ordered_json {
        if (v >= std::numeric_limits<long long>::min() &&
            v <= std::numeric_limits<long long>::max())
            return static_cast<long long>(v);
        return v.str();
    };
    j["num"] = field(r.num());
    j["den"] = field(r.den());
    return j;
}

} // namespace detail

// Stats file schema: exact fractions plus 6-significant-digit decimals.
inline std::string stats_to_json(const ChromaticStats& s) {
    nlohmann::ordered_json j;
    j["mean"] = detail::rational_to_json(s.mean);
    j["variance"] = detail::rational_to_json(s.variance);
    j["mean_decimal"] = s.mean.to_decimal();
    j["variance_decimal"] = s.variance.to_decimal();
    return j.dump(2) + "\n";
}

} // namespace equichroma
