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

#include "xlsim/similarity.hpp"

#include <charconv>

namespace xlsim {

Metric Metric::parse(std::string_view name) {
    if (name == "cosine") return {MetricKind::Cosine, 2.0};
    if (name == "euclidean") return {MetricKind::Euclidean, 2.0};
    if (name == "manhattan") return {MetricKind::Manhattan, 1.0};
    if (name.substr(0, 10) == "minkowski:") {
        const std::string_view ptext = name.substr(10);
        double p = 0.0;
        const auto [end, ec] =
            std::from_chars(ptext.data(), ptext.data() + ptext.size(), p);
        if (ec != std::errc{} || end != ptext.data() + ptext.size() || !(p >= 1.0)) {
            throw Error("bad minkowski order in metric '" + std::string(name) + "'");
        }
        return {MetricKind::Minkowski, p};
    }
    throw Error("unknown metric '" + std::string(name) +
                "' (expected cosine, euclidean, manhattan or minkowski:<p>)");
}

std::string Metric::to_string() const {
    switch (kind) {
    case MetricKind::Cosine: return "cosine";
    case MetricKind::Euclidean: return "euclidean";
    case MetricKind::Manhattan: return "manhattan";
    case MetricKind::Minkowski: {
        std::string out = "minkowski:";
        char buf[32];
        const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p);
        out.append(buf, end);
        return out;
    }
    }
    return "cosine";
}

namespace {

std::span<const std::uint32_t> counts_of(const FeatureVector& v) {
    return {v.counts.data(), v.counts.size()};
}

} // namespace

SimilarityScore cosine(const FeatureVector& a, const FeatureVector& b) {
    SimilarityScore s;
    s.metric = {MetricKind::Cosine, 2.0};
    s.value = cosine_value(counts_of(a), counts_of(b), &s.zero_vector);
    return s;
}

SimilarityScore euclidean(const FeatureVector& a, const FeatureVector& b) {
    return {euclidean_value(counts_of(a), counts_of(b)), {MetricKind::Euclidean, 2.0}, false};
}

SimilarityScore manhattan(const FeatureVector& a, const FeatureVector& b) {
    return {manhattan_value(counts_of(a), counts_of(b)), {MetricKind::Manhattan, 1.0}, false};
}

SimilarityScore minkowski(const FeatureVector& a, const FeatureVector& b, double p) {
    return {minkowski_value(counts_of(a), counts_of(b), p), {MetricKind::Minkowski, p}, false};
}

SimilarityScore score_pair(const FeatureVector& a, const FeatureVector& b,
                           const Metric& metric) {
    switch (metric.kind) {
    case MetricKind::Cosine: return cosine(a, b);
    case MetricKind::Euclidean: return euclidean(a, b);
    case MetricKind::Manhattan: return manhattan(a, b);
    case MetricKind::Minkowski: return minkowski(a, b, metric.p);
    }
    return cosine(a, b);
}

} // namespace xlsim
