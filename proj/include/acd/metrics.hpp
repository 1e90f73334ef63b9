#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "acd/errors.hpp"
#include "acd/labels.hpp"

namespace acd {

struct ConfusionMatrix {
    std::vector<Label> labels;                   // row/column order
    std::vector<std::vector<std::size_t>> counts;  // rows = gold, cols = predicted
    std::size_t total = 0;
};

struct ClassScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
};

struct RunMeta {
    std::string model;    // e.g. "Logistic Regression", "Vanilla LSTM"
    std::string family;   // ensemble | rnn | transformer
    std::string dataset;  // tamil | codemix | synthetic
    uint64_t seed = 0;
};

struct EvalReport {
    std::map<Label, ClassScore> per_class;
    double macro_f1 = 0.0;
    double weighted_f1 = 0.0;
    RunMeta run_meta;
};

inline ConfusionMatrix confusion(const std::vector<Label>& gold,
                                 const std::vector<Label>& pred,
                                 const std::vector<Label>& labels) {
    if (gold.size() != pred.size()) throw LengthMismatch(gold.size(), pred.size());
    if (gold.empty()) throw EmptyMatrix();
    std::map<Label, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    ConfusionMatrix cm;
    cm.labels = labels;
    cm.counts.assign(labels.size(), std::vector<std::size_t>(labels.size(), 0));
    for (std::size_t i = 0; i < gold.size(); ++i) {
        auto g = index.find(gold[i]);
        auto p = index.find(pred[i]);
        if (g == index.end()) throw UnknownLabel(i, to_string(gold[i]));
        if (p == index.end()) throw UnknownLabel(i, to_string(pred[i]));
        ++cm.counts[g->second][p->second];
    }
    cm.total = gold.size();
    return cm;
}

// Per-class P/R/F1 with the 0-on-zero-denominator convention. Macro averages
// run over classes with gold support > 0 only.
inline EvalReport report(const ConfusionMatrix& cm) {
    if (cm.total == 0) throw EmptyMatrix();
    EvalReport rep;
    const std::size_t k = cm.labels.size();
    double macro_sum = 0.0;
    std::size_t macro_n = 0;
    double weighted_sum = 0.0;
    std::size_t support_total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t tp = cm.counts[c][c];
        std::size_t fp = 0, fn = 0, support = 0;
        for (std::size_t r = 0; r < k; ++r) {
            if (r != c) {
                fp += cm.counts[r][c];
                fn += cm.counts[c][r];
            }
            support += cm.counts[c][r];
        }
        ClassScore s;
        s.support = support;
        s.precision = (tp + fp) ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
        s.recall = (tp + fn) ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
        s.f1 = (s.precision + s.recall > 0.0)
                   ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
                   : 0.0;
        rep.per_class[cm.labels[c]] = s;
        if (support > 0) {
            macro_sum += s.f1;
            ++macro_n;
            weighted_sum += static_cast<double>(support) * s.f1;
            support_total += support;
        }
    }
    rep.macro_f1 = macro_n ? macro_sum / static_cast<double>(macro_n) : 0.0;
    rep.weighted_f1 =
        support_total ? weighted_sum / static_cast<double>(support_total) : 0.0;
    return rep;
}

inline EvalReport evaluate(const std::vector<Label>& gold,
                           const std::vector<Label>& pred,
                           const std::vector<Label>& labels, RunMeta meta = {}) {
    EvalReport rep = report(confusion(gold, pred, labels));
    rep.run_meta = std::move(meta);
    return rep;
}

namespace detail {

inline std::string round2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string family_heading(const std::string& family) {
    if (family == "ensemble") return "Ensemble Models";
    if (family == "rnn") return "RNN Models";
    if (family == "transformer") return "Transformer Models";
    return family.empty() ? "Other" : family;
}

inline std::string dataset_heading(const std::string& tag) {
    std::string out = tag;
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(out[0]));
    return out;
}

}  // namespace detail

struct ResultsGrid {
    std::string text;                    // aligned, human-readable
    std::vector<std::string> csv_rows;   // family,model,dataset,macro_f1,weighted_f1
};

// Lays reports out like the published results table: one row per model,
// grouped by family, one `macro | weighted` cell per dataset, 2 decimals.
inline ResultsGrid results_grid(const std::vector<EvalReport>& reports) {
    const std::vector<std::string> family_order = {"ensemble", "rnn", "transformer"};
    const std::vector<std::string> dataset_order = {"tamil", "codemix", "synthetic"};

    std::vector<std::string> datasets;
    for (const auto& d : dataset_order) {
        for (const auto& r : reports) {
            if (r.run_meta.dataset == d) {
                datasets.push_back(d);
                break;
            }
        }
    }
    if (datasets.empty()) datasets.push_back("tamil");

    struct Row {
        std::string family;
        std::string model;
        std::map<std::string, std::pair<double, double>> cells;  // dataset -> (macro, weighted)
    };
    std::vector<Row> rows;
    auto find_row = [&](const std::string& family, const std::string& model) -> Row& {
        for (auto& row : rows) {
            if (row.family == family && row.model == model) return row;
        }
        rows.push_back({family, model, {}});
        return rows.back();
    };
    for (const auto& r : reports) {
        auto& row = find_row(r.run_meta.family, r.run_meta.model);
        row.cells[r.run_meta.dataset] = {r.macro_f1, r.weighted_f1};
    }
    std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        auto rank = [&](const std::string& f) {
            for (std::size_t i = 0; i < family_order.size(); ++i) {
                if (family_order[i] == f) return i;
            }
            return family_order.size();
        };
        return rank(a.family) < rank(b.family);
    });

    const std::string value_header = "macro f1 | weighted f1";
    std::size_t family_w = std::string("Model Type").size();
    std::size_t model_w = std::string("Classifier").size();
    for (const auto& row : rows) {
        family_w = std::max(family_w, detail::family_heading(row.family).size());
        model_w = std::max(model_w, row.model.size());
    }
    const std::size_t cell_w = value_header.size();

    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };

    std::ostringstream text;
    text << pad("Model Type", family_w) << "  " << pad("Classifier", model_w);
    for (const auto& d : datasets) {
        text << "  " << pad(detail::dataset_heading(d), cell_w);
    }
    text << '\n';
    text << pad("", family_w) << "  " << pad("", model_w);
    for (std::size_t i = 0; i < datasets.size(); ++i) {
        text << "  " << pad(value_header, cell_w);
    }
    text << '\n';

    ResultsGrid grid;
    std::string last_family;
    for (const auto& row : rows) {
        const std::string heading = detail::family_heading(row.family);
        text << pad(heading == last_family ? "" : heading, family_w) << "  "
             << pad(row.model, model_w);
        last_family = heading;
        for (const auto& d : datasets) {
            auto it = row.cells.find(d);
            std::string cell = "-";
            if (it != row.cells.end()) {
                cell = detail::round2(it->second.first) + " | " +
                       detail::round2(it->second.second);
                grid.csv_rows.push_back(row.family + "," + row.model + "," + d + "," +
                                        detail::round2(it->second.first) + "," +
                                        detail::round2(it->second.second));
            }
            text << "  " << pad(cell, cell_w);
        }
        text << '\n';
    }
    grid.text = text.str();
    return grid;
}

// Line-oriented record for one evaluation run.
inline std::string report_record(const EvalReport& rep) {
    std::ostringstream out;
    out << "model=" << rep.run_meta.model << " family=" << rep.run_meta.family
        << " dataset=" << rep.run_meta.dataset << " seed=" << rep.run_meta.seed
        << '\n';
    for (const auto& [label, s] : rep.per_class) {
        out << to_string(label) << " precision=" << detail::round2(s.precision * 100.0)
            << "% recall=" << detail::round2(s.recall * 100.0)
            << "% f1=" << detail::round2(s.f1 * 100.0) << "% support=" << s.support
            << '\n';
    }
    out << "macro_f1=" << rep.macro_f1 << " weighted_f1=" << rep.weighted_f1 << '\n';
    return out.str();
}

}  // namespace acd
