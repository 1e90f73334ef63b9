#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acd/unicode.hpp"

namespace acd {

// The nine comment categories of the shared-task taxonomy. NotTamil carries
// no dev/test instances and is excluded from training and evaluation by the
// active set below.
enum class Label : int {
    HopeSpeech = 0,
    Homophobia,
    Misandry,
    CounterSpeech,
    Misogyny,
    Xenophobia,
    Transphobic,
    NotTamil,
    NoneOfTheAbove,
};

inline constexpr int kNumLabels = 9;

inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::HopeSpeech,    Label::Homophobia, Label::Misandry,
    Label::CounterSpeech, Label::Misogyny,   Label::Xenophobia,
    Label::Transphobic,   Label::NotTamil,   Label::NoneOfTheAbove,
};

// The eight labels used for training and evaluation.
inline constexpr std::array<Label, 8> kActiveLabels = {
    Label::HopeSpeech,  Label::Homophobia,  Label::Misandry,
    Label::CounterSpeech, Label::Misogyny,  Label::Xenophobia,
    Label::Transphobic, Label::NoneOfTheAbove,
};

inline std::string to_string(Label label) {
    switch (label) {
        case Label::HopeSpeech: return "Hope-Speech";
        case Label::Homophobia: return "Homophobia";
        case Label::Misandry: return "Misandry";
        case Label::CounterSpeech: return "Counter-speech";
        case Label::Misogyny: return "Misogyny";
        case Label::Xenophobia: return "Xenophobia";
        case Label::Transphobic: return "Transphobic";
        case Label::NotTamil: return "Not-Tamil";
        case Label::NoneOfTheAbove: return "None-of-the-above";
    }
    return "?";
}

// Case-insensitive; space, hyphen, and underscore are interchangeable.
// "None-of-these" (the table spelling) aliases to None-of-the-above.
inline std::optional<Label> parse_label(std::string_view token) {
    std::string key;
    key.reserve(token.size());
    for (char c : token) {
        if (c == ' ' || c == '-' || c == '_') continue;
        key.push_back(static_cast<char>(uni::fold_case(static_cast<uint32_t>(
            static_cast<unsigned char>(c)))));
    }
    if (key == "hopespeech") return Label::HopeSpeech;
    if (key == "homophobia") return Label::Homophobia;
    if (key == "misandry") return Label::Misandry;
    if (key == "counterspeech") return Label::CounterSpeech;
    if (key == "misogyny") return Label::Misogyny;
    if (key == "xenophobia") return Label::Xenophobia;
    if (key == "transphobic") return Label::Transphobic;
    if (key == "nottamil") return Label::NotTamil;
    if (key == "noneoftheabove" || key == "noneofthese") return Label::NoneOfTheAbove;
    return std::nullopt;
}

inline bool is_active(Label label) { return label != Label::NotTamil; }

inline std::vector<Label> active_labels() {
    return std::vector<Label>(kActiveLabels.begin(), kActiveLabels.end());
}

}  // namespace acd
