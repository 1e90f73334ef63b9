#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "acd/corpus.hpp"
#include "acd/embedding.hpp"
#include "acd/errors.hpp"
#include "acd/labels.hpp"
#include "acd/rng.hpp"

namespace acd {

enum class RebalanceStrategy { None, Oversample, OverUnder, Smote, ClassWeights };

inline std::string to_string(RebalanceStrategy s) {
    switch (s) {
        case RebalanceStrategy::None: return "none";
        case RebalanceStrategy::Oversample: return "oversample";
        case RebalanceStrategy::OverUnder: return "over_under";
        case RebalanceStrategy::Smote: return "smote";
        case RebalanceStrategy::ClassWeights: return "class_weights";
    }
    return "?";
}

inline RebalanceStrategy parse_strategy(const std::string& s) {
    if (s == "none") return RebalanceStrategy::None;
    if (s == "oversample") return RebalanceStrategy::Oversample;
    if (s == "over_under") return RebalanceStrategy::OverUnder;
    if (s == "smote") return RebalanceStrategy::Smote;
    if (s == "class_weights") return RebalanceStrategy::ClassWeights;
    throw ConfigError("rebalance.strategy", "unknown strategy '" + s + "'");
}

struct RebalancePlan {
    RebalanceStrategy strategy = RebalanceStrategy::None;
    // Empty target means uniform over the classes present in the input.
    std::map<Label, double> target;
    uint64_t seed = 0;
    std::size_t smote_k = 5;
};

struct ClassWeights {
    std::map<Label, double> weights;

    double at(Label label) const {
        auto it = weights.find(label);
        return it == weights.end() ? 1.0 : it->second;
    }
};

namespace detail {

inline std::map<Label, double> resolve_target(const RebalancePlan& plan,
                                              const std::map<Label, std::size_t>& counts) {
    if (!plan.target.empty()) {
        double sum = 0.0;
        for (const auto& [l, f] : plan.target) sum += f;
        if (std::abs(sum - 1.0) > 1e-6) throw BadFractions(sum);
        return plan.target;
    }
    std::map<Label, double> uniform;
    for (const auto& [label, n] : counts) {
        uniform[label] = 1.0 / static_cast<double>(counts.size());
    }
    return uniform;
}

// Expected per-class counts: largest-remainder rounding of N * target, over
// the target's labels in taxonomy order.
inline std::map<Label, std::size_t> expected_counts(
    std::size_t n, const std::map<Label, double>& target) {
    std::vector<Label> order;
    std::vector<double> fracs;
    for (Label l : kAllLabels) {
        auto it = target.find(l);
        if (it != target.end()) {
            order.push_back(l);
            fracs.push_back(it->second);
        }
    }
    auto counts = largest_remainder_counts(n, fracs);
    std::map<Label, std::size_t> out;
    for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = counts[i];
    return out;
}

inline std::map<Label, std::vector<std::size_t>> rows_by_class(
    const std::vector<Label>& labels) {
    std::map<Label, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
    return by_class;
}

}  // namespace detail

// Raises every class to the size of the largest one by duplicating examples
// uniformly at random. Originals come first, duplicates are appended.
inline Corpus oversample(const Corpus& corpus, const RebalancePlan& plan) {
    if (corpus.empty()) throw EmptyCorpus();
    std::map<Label, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        by_class[corpus.examples[i].label].push_back(i);
    }
    std::size_t max_count = 0;
    for (const auto& [label, rows] : by_class) max_count = std::max(max_count, rows.size());
    Corpus out = corpus;
    Rng rng = make_rng(plan.seed);
    for (Label label : kAllLabels) {
        auto it = by_class.find(label);
        if (it == by_class.end()) continue;
        const auto& rows = it->second;
        for (std::size_t need = max_count - rows.size(); need > 0; --need) {
            const auto& src = corpus.examples[rows[uniform_below(rng, rows.size())]];
            out.examples.push_back({src.text, src.label, out.examples.size()});
        }
    }
    return out;
}

// Under-samples classes above their expected count (without replacement) and
// over-samples classes below it (with replacement); |output| == |input|.
inline Corpus over_under_sample(const Corpus& corpus, const RebalancePlan& plan) {
    if (corpus.empty()) throw EmptyCorpus();
    std::map<Label, std::vector<std::size_t>> by_class;
    std::map<Label, std::size_t> counts;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        by_class[corpus.examples[i].label].push_back(i);
        ++counts[corpus.examples[i].label];
    }
    const auto target = detail::resolve_target(plan, counts);
    for (const auto& [label, frac] : target) {
        if (frac > 0.0 && !by_class.count(label)) {
            throw MissingTargetClass(to_string(label));
        }
    }
    const auto expected = detail::expected_counts(corpus.size(), target);
    Rng rng = make_rng(plan.seed);
    std::vector<bool> keep(corpus.size(), false);
    std::vector<Example> extras;
    for (Label label : kAllLabels) {
        auto rows_it = by_class.find(label);
        if (rows_it == by_class.end()) continue;
        const auto& rows = rows_it->second;
        auto exp_it = expected.find(label);
        const std::size_t want = exp_it == expected.end() ? 0 : exp_it->second;
        if (want <= rows.size()) {
            // Seeded sample without replacement, original order preserved.
            std::vector<std::size_t> pool = rows;
            for (std::size_t drop = rows.size() - want; drop > 0; --drop) {
                pool.erase(pool.begin() +
                           static_cast<std::ptrdiff_t>(uniform_below(rng, pool.size())));
            }
            for (std::size_t r : pool) keep[r] = true;
        } else {
            for (std::size_t r : rows) keep[r] = true;
            for (std::size_t need = want - rows.size(); need > 0; --need) {
                const auto& src = corpus.examples[rows[uniform_below(rng, rows.size())]];
                extras.push_back({src.text, src.label, 0});
            }
        }
    }
    Corpus out;
    out.split = corpus.split;
    out.language_tag = corpus.language_tag;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (keep[i]) {
            out.examples.push_back(
                {corpus.examples[i].text, corpus.examples[i].label, out.examples.size()});
        }
    }
    for (auto& ex : extras) {
        ex.id = out.examples.size();
        out.examples.push_back(std::move(ex));
    }
    return out;
}

struct SmoteStep {
    std::size_t synthetic_row;  // row index in the output matrix
    std::size_t source_row;     // original row the interpolation starts from
    std::size_t neighbor_row;   // chosen same-class neighbor
    double lambda;              // interpolation coefficient in [0, 1]
};

struct SmoteResult {
    EmbeddingMatrix embeddings;
    std::vector<Label> labels;
    std::vector<SmoteStep> steps;  // replay record for every synthetic row
};

// Brings deficit classes up to their expected counts by interpolating between
// a class member and one of its k nearest same-class neighbors. Never removes
// rows; synthetic rows are appended after the originals.
inline SmoteResult smote(const EmbeddingMatrix& embeddings,
                         const std::vector<Label>& labels, const RebalancePlan& plan) {
    if (labels.empty()) throw EmptyCorpus();
    if (static_cast<std::size_t>(embeddings.rows()) != labels.size()) {
        throw DimMismatch(labels.size(), static_cast<std::size_t>(embeddings.rows()));
    }
    check_finite(embeddings);
    auto by_class = detail::rows_by_class(labels);
    std::map<Label, std::size_t> counts;
    for (const auto& [label, rows] : by_class) counts[label] = rows.size();
    const auto target = detail::resolve_target(plan, counts);
    const auto expected = detail::expected_counts(labels.size(), target);

    std::vector<std::pair<Label, std::size_t>> deficits;  // label -> rows needed
    for (Label label : kAllLabels) {
        auto exp_it = expected.find(label);
        if (exp_it == expected.end()) continue;
        const std::size_t have = counts.count(label) ? counts[label] : 0;
        if (have < exp_it->second) {
            if (have < 2) throw ClassTooSmall(to_string(label));
            deficits.emplace_back(label, exp_it->second - have);
        }
    }

    std::size_t total_new = 0;
    for (const auto& [label, need] : deficits) total_new += need;

    SmoteResult result;
    result.embeddings.resize(embeddings.rows() + static_cast<Eigen::Index>(total_new),
                             embeddings.cols());
    result.embeddings.topRows(embeddings.rows()) = embeddings;
    result.labels = labels;

    Rng rng = make_rng(plan.seed);
    std::size_t next_row = labels.size();
    for (const auto& [label, need] : deficits) {
        const auto& rows = by_class[label];
        // Pairwise distances once per class; k nearest per member.
        const std::size_t m = rows.size();
        const std::size_t k = std::min(plan.smote_k, m - 1);
        std::vector<std::vector<std::size_t>> neighbors(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::pair<double, std::size_t>> dist;
            dist.reserve(m - 1);
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                const double d2 =
                    (embeddings.row(static_cast<Eigen::Index>(rows[i])) -
                     embeddings.row(static_cast<Eigen::Index>(rows[j])))
                        .squaredNorm();
                dist.emplace_back(d2, rows[j]);
            }
            std::stable_sort(dist.begin(), dist.end());
            for (std::size_t t = 0; t < k; ++t) neighbors[i].push_back(dist[t].second);
        }
        for (std::size_t s = 0; s < need; ++s) {
            const std::size_t pick = uniform_below(rng, m);
            const std::size_t source = rows[pick];
            const std::size_t neighbor =
                neighbors[pick][uniform_below(rng, neighbors[pick].size())];
            const double lambda = uniform01(rng);
            result.embeddings.row(static_cast<Eigen::Index>(next_row)) =
                embeddings.row(static_cast<Eigen::Index>(source)) +
                lambda * (embeddings.row(static_cast<Eigen::Index>(neighbor)) -
                          embeddings.row(static_cast<Eigen::Index>(source)));
            result.labels.push_back(label);
            result.steps.push_back({next_row, source, neighbor, lambda});
            ++next_row;
        }
    }
    return result;
}

// Inverse-frequency weights: w_c = N / (K * n_c) over nonzero classes, so
// sum_c w_c * n_c == N.
inline ClassWeights class_weights(const Corpus& corpus) {
    if (corpus.empty()) throw EmptyCorpus();
    std::map<Label, std::size_t> counts;
    for (const auto& ex : corpus.examples) ++counts[ex.label];
    const double n = static_cast<double>(corpus.size());
    const double k = static_cast<double>(counts.size());
    ClassWeights cw;
    for (const auto& [label, count] : counts) {
        cw.weights[label] = n / (k * static_cast<double>(count));
    }
    return cw;
}

}  // namespace acd
