#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "acd/errors.hpp"
#include "acd/labels.hpp"
#include "acd/rng.hpp"

namespace acd {

enum class Split { Train, Dev, Test };

inline std::string to_string(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Dev: return "dev";
        case Split::Test: return "test";
    }
    return "?";
}

struct Example {
    std::string text;
    Label label;
    std::size_t id = 0;  // ordinal within its corpus
};

struct Corpus {
    std::vector<Example> examples;
    Split split = Split::Train;
    std::string language_tag = "synthetic";  // tamil | codemix | synthetic

    std::size_t size() const { return examples.size(); }
    bool empty() const { return examples.empty(); }
};

struct DistributionStats {
    std::map<Label, std::size_t> counts;
    std::map<Label, double> fractions;
    std::size_t total = 0;
};

struct LoadDiagnostics {
    bool header_skipped = false;
    std::size_t extra_column_rows = 0;
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' ||
                     s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_tabs(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == '\t') {
            out.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

// Rows are UTF-8 `text<TAB>label`. Extra columns are counted and ignored.
// A first row whose label field does not parse is taken as a header and
// flagged in diagnostics rather than rejected.
inline Corpus load_tsv(const std::filesystem::path& path, Split split,
                       const std::string& language_tag,
                       LoadDiagnostics* diag = nullptr) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile(path.string());
    Corpus corpus;
    corpus.split = split;
    corpus.language_tag = language_tag;
    LoadDiagnostics local;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::trim(line).empty()) continue;
        auto fields = detail::split_tabs(line);
        if (fields.size() < 2) throw MalformedRow(line_no, "expected text<TAB>label");
        if (fields.size() > 2) ++local.extra_column_rows;
        const std::string text = detail::trim(fields[0]);
        const std::string label_token = detail::trim(fields[1]);
        auto label = parse_label(label_token);
        if (!label) {
            if (line_no == 1 && corpus.examples.empty()) {
                local.header_skipped = true;
                continue;
            }
            throw UnknownLabel(line_no, label_token);
        }
        if (text.empty()) throw MalformedRow(line_no, "empty text field");
        corpus.examples.push_back({text, *label, corpus.examples.size()});
    }
    if (diag) *diag = local;
    return corpus;
}

inline void save_tsv(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MissingFile(path.string());
    for (const auto& ex : corpus.examples) {
        out << ex.text << '\t' << to_string(ex.label) << '\n';
    }
}

inline DistributionStats label_distribution(const Corpus& corpus) {
    if (corpus.empty()) throw EmptyCorpus();
    DistributionStats stats;
    for (const auto& ex : corpus.examples) ++stats.counts[ex.label];
    stats.total = corpus.size();
    for (const auto& [label, count] : stats.counts) {
        stats.fractions[label] =
            static_cast<double>(count) / static_cast<double>(stats.total);
    }
    return stats;
}

// Drops Not-Tamil rows ahead of training/evaluation; ids are renumbered.
inline Corpus filter_active(const Corpus& corpus) {
    Corpus out;
    out.split = corpus.split;
    out.language_tag = corpus.language_tag;
    for (const auto& ex : corpus.examples) {
        if (is_active(ex.label)) {
            out.examples.push_back({ex.text, ex.label, out.examples.size()});
        }
    }
    return out;
}

// Splits n into integer class counts that sum to n exactly: floor(n*f) per
// class, remaining units to the largest fractional parts, ties broken by
// position in `order`.
inline std::vector<std::size_t> largest_remainder_counts(
    std::size_t n, const std::vector<double>& fractions) {
    std::vector<std::size_t> counts(fractions.size());
    std::vector<double> remainders(fractions.size());
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        const double exact = static_cast<double>(n) * fractions[i];
        counts[i] = static_cast<std::size_t>(std::floor(exact + 1e-12));
        remainders[i] = exact - static_cast<double>(counts[i]);
        assigned += counts[i];
    }
    std::vector<std::size_t> order(fractions.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remainders[a] > remainders[b];
    });
    for (std::size_t k = 0; assigned < n; ++k) {
        ++counts[order[k % order.size()]];
        ++assigned;
    }
    return counts;
}

// Deterministic synthetic stand-in for the shared-task data. Each class draws
// its tokens from a disjoint pool (pool size = vocab_size per class), so any
// injective bag-of-tokens encoding separates the classes linearly.
inline Corpus synthesize_corpus(std::size_t n,
                                const std::map<Label, double>& fractions,
                                std::size_t vocab_size, uint64_t seed) {
    double sum = 0.0;
    for (const auto& [label, f] : fractions) sum += f;
    if (std::abs(sum - 1.0) > 1e-6) throw BadFractions(sum);
    std::vector<Label> labels_in_order;
    std::vector<double> fracs;
    std::size_t nonzero = 0;
    for (Label l : kAllLabels) {
        auto it = fractions.find(l);
        if (it != fractions.end()) {
            labels_in_order.push_back(l);
            fracs.push_back(it->second);
            if (it->second > 0.0) ++nonzero;
        }
    }
    if (n < nonzero) {
        throw TooSmall("n=" + std::to_string(n) + " cannot host " +
                       std::to_string(nonzero) + " nonzero classes");
    }
    auto counts = largest_remainder_counts(n, fracs);
    std::vector<Label> slots;
    slots.reserve(n);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        slots.insert(slots.end(), counts[i], labels_in_order[i]);
    }
    Rng rng = make_rng(seed);
    // Fisher-Yates so classes interleave deterministically.
    for (std::size_t i = slots.size(); i > 1; --i) {
        std::swap(slots[i - 1], slots[uniform_below(rng, i)]);
    }
    Corpus corpus;
    corpus.split = Split::Train;
    corpus.language_tag = "synthetic";
    for (Label label : slots) {
        const int class_idx = static_cast<int>(label);
        const std::size_t len = 3 + uniform_below(rng, 6);
        std::string text;
        for (std::size_t t = 0; t < len; ++t) {
            if (t) text.push_back(' ');
            const uint64_t tok = uniform_below(rng, vocab_size);
            text += "c" + std::to_string(class_idx) + "tok" + std::to_string(tok);
        }
        corpus.examples.push_back({text, label, corpus.examples.size()});
    }
    return corpus;
}

}  // namespace acd
