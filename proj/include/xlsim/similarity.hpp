/*
 * Copyright 2026 xlsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef XLSIM_SIMILARITY_HPP
#define XLSIM_SIMILARITY_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "xlsim/error.hpp"
#include "xlsim/features.hpp"

namespace xlsim {

enum class MetricKind { Cosine, Euclidean, Manhattan, Minkowski };

/// Metric selector; `p` is the Minkowski order (>= 1).
struct Metric {
    MetricKind kind = MetricKind::Cosine;
    double p = 2.0;

    /// "cosine", "euclidean", "manhattan" or "minkowski:<p>".
    static Metric parse(std::string_view name);
    std::string to_string() const;

    /// Distances rank ascending (smaller = more similar); cosine
    /// ranks descending.
    bool is_distance() const { return kind != MetricKind::Cosine; }
};

struct SimilarityScore {
    double value = 0.0;
    Metric metric{};
    bool zero_vector = false; // cosine saw a zero-magnitude operand
};

namespace detail {

template <class A, class B>
void require_same_length(std::span<const A> a, std::span<const B> b) {
    if (a.size() != b.size()) {
        throw Error("vector length mismatch: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
    }
}

} // namespace detail

/// Normalized dot product in one accumulation pass. A zero-magnitude
/// operand yields 0 (no transliteration overlap ranks last instead of
/// poisoning the batch); `zero_flag` reports that case when non-null.
template <class A, class B>
double cosine_value(std::span<const A> a, std::span<const B> b,
                    bool* zero_flag = nullptr) {
    detail::require_same_length(a, b);
    double dot = 0.0, na2 = 0.0, nb2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = static_cast<double>(a[i]);
        const double y = static_cast<double>(b[i]);
        dot += x * y;
        na2 += x * x;
        nb2 += y * y;
    }
    if (zero_flag) *zero_flag = (na2 == 0.0 || nb2 == 0.0);
    if (na2 == 0.0 || nb2 == 0.0) return 0.0;
    const double value = dot / (std::sqrt(na2) * std::sqrt(nb2));
    return value > 1.0 ? 1.0 : (value < -1.0 ? -1.0 : value);
}

template <class A, class B>
double euclidean_value(std::span<const A> a, std::span<const B> b) {
    detail::require_same_length(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        sum += d * d;
    }
    return std::sqrt(sum);
}

template <class A, class B>
double manhattan_value(std::span<const A> a, std::span<const B> b) {
    detail::require_same_length(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::fabs(static_cast<double>(a[i]) - static_cast<double>(b[i]));
    }
    return sum;
}

template <class A, class B>
double minkowski_value(std::span<const A> a, std::span<const B> b, double p) {
    if (!(p >= 1.0)) {
        throw Error("minkowski order must satisfy p >= 1, got " + std::to_string(p));
    }
    detail::require_same_length(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::fabs(static_cast<double>(a[i]) - static_cast<double>(b[i]));
        sum += std::pow(d, p);
    }
    return std::pow(sum, 1.0 / p);
}

SimilarityScore cosine(const FeatureVector& a, const FeatureVector& b);
SimilarityScore euclidean(const FeatureVector& a, const FeatureVector& b);
SimilarityScore manhattan(const FeatureVector& a, const FeatureVector& b);
SimilarityScore minkowski(const FeatureVector& a, const FeatureVector& b, double p);

/// Dispatch on a runtime-selected metric.
SimilarityScore score_pair(const FeatureVector& a, const FeatureVector& b,
                           const Metric& metric);

} // namespace xlsim

#endif
