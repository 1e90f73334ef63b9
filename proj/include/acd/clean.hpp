#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "acd/errors.hpp"
#include "acd/unicode.hpp"

namespace acd {

struct CleaningConfig {
    bool strip_urls = false;
    bool strip_punctuation = false;
    bool remove_stopwords = false;
    bool replace_emojis = false;
    std::set<std::string> stopwords;
    // Key: UTF-8 emoji codepoint sequence. Value: replacement token.
    std::map<std::string, std::string> emoji_map;

    void validate() const {
        if (remove_stopwords && stopwords.empty()) {
            throw ConfigError("cleaning.stopwords",
                              "remove_stopwords set but stopword set is empty");
        }
        if (replace_emojis) {
            if (emoji_map.empty()) {
                throw ConfigError("cleaning.emoji_map",
                                  "replace_emojis set but emoji map is empty");
            }
            for (const auto& [seq, token] : emoji_map) {
                for (uint32_t cp : uni::decode_all(token)) {
                    if (uni::is_emoji(cp) || uni::is_emoji_component(cp)) {
                        throw ConfigError("cleaning.emoji_map",
                                          "replacement token '" + token +
                                              "' contains emoji codepoints");
                    }
                }
            }
        }
    }
};

namespace detail {

// Single spaces between tokens, nothing at the ends.
inline std::string normalize_ws(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t start = pos;
        const uint32_t cp = uni::decode(text, pos);
        if (uni::is_space(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.append(text.substr(start, pos - start));
        }
    }
    return out;
}

inline bool starts_url(std::string_view text, std::size_t pos, bool at_token_start,
                       std::size_t* len) {
    const auto rest = text.substr(pos);
    std::size_t body = 0;
    if (rest.starts_with("http://")) {
        body = 7;
    } else if (rest.starts_with("https://")) {
        body = 8;
    } else if (at_token_start && rest.starts_with("www.")) {
        body = 4;
    } else {
        return false;
    }
    std::size_t end = body;
    while (end < rest.size()) {
        std::size_t probe = end;
        const uint32_t cp = uni::decode(rest, probe);
        if (uni::is_space(cp)) break;
        end = probe;
    }
    if (end == body) return false;  // bare scheme, leave it alone
    *len = end;
    return true;
}

}  // namespace detail

// Removes http(s)://… and www.… runs up to the next whitespace. Schemes match
// anywhere; `www.` only counts at a token start so mid-word dots stay put.
inline std::string strip_urls(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool at_token_start = true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t len = 0;
        if (detail::starts_url(text, pos, at_token_start, &len)) {
            pos += len;
            continue;
        }
        const std::size_t start = pos;
        const uint32_t cp = uni::decode(text, pos);
        at_token_start = uni::is_space(cp);
        out.append(text.substr(start, pos - start));
    }
    return detail::normalize_ws(out);
}

// Mapped emoji sequences become their token padded with spaces; unmapped
// emoji clusters (base + joiners/modifiers) are dropped. Longest mapped
// sequence wins at each position.
inline std::string replace_emojis(std::string_view text,
                                  const std::map<std::string, std::string>& emoji_map) {
    std::vector<std::pair<std::string_view, std::string_view>> by_length;
    by_length.reserve(emoji_map.size());
    for (const auto& [seq, token] : emoji_map) by_length.emplace_back(seq, token);
    std::stable_sort(by_length.begin(), by_length.end(),
                     [](const auto& a, const auto& b) {
                         return a.first.size() > b.first.size();
                     });
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        bool mapped = false;
        for (const auto& [seq, token] : by_length) {
            if (text.substr(pos).starts_with(seq)) {
                out.push_back(' ');
                out.append(token);
                out.push_back(' ');
                pos += seq.size();
                mapped = true;
                break;
            }
        }
        if (mapped) continue;
        std::size_t probe = pos;
        const uint32_t cp = uni::decode(text, probe);
        if (uni::is_emoji(cp)) {
            // Swallow the whole cluster: components and chained ZWJ emoji.
            pos = probe;
            while (pos < text.size()) {
                std::size_t next = pos;
                const uint32_t tail = uni::decode(text, next);
                if (uni::is_emoji_component(tail) || uni::is_emoji(tail)) {
                    pos = next;
                } else {
                    break;
                }
            }
            out.push_back(' ');
            continue;
        }
        if (uni::is_emoji_component(cp)) {  // stray joiner/selector
            pos = probe;
            continue;
        }
        out.append(text.substr(pos, probe - pos));
        pos = probe;
    }
    return detail::normalize_ws(out);
}

// Deletes Unicode punctuation (categories Pd/Ps/Pe/Pi/Pf/Po). Connector
// punctuation such as '_' survives so replacement tokens pass through.
inline std::string strip_punctuation(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t start = pos;
        const uint32_t cp = uni::decode(text, pos);
        if (!uni::is_punct(cp)) out.append(text.substr(start, pos - start));
    }
    return detail::normalize_ws(out);
}

inline std::string remove_stopwords(std::string_view text,
                                    const std::set<std::string>& stopwords) {
    std::set<std::string> folded;
    for (const auto& w : stopwords) folded.insert(uni::fold_case(w));
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    std::string token;
    auto flush = [&] {
        if (!token.empty() && !folded.count(uni::fold_case(token))) {
            if (!out.empty()) out.push_back(' ');
            out.append(token);
        }
        token.clear();
    };
    while (pos < text.size()) {
        const std::size_t start = pos;
        const uint32_t cp = uni::decode(text, pos);
        if (uni::is_space(cp)) {
            flush();
        } else {
            token.append(text.substr(start, pos - start));
        }
    }
    flush();
    return out;
}

// Fixed stage order: emoji -> urls -> punctuation -> stopwords. Emoji tokens
// are inserted before punctuation stripping and must survive it.
inline std::string clean(std::string_view text, const CleaningConfig& config) {
    config.validate();
    std::string cur = config.replace_emojis
                          ? replace_emojis(text, config.emoji_map)
                          : detail::normalize_ws(text);
    if (config.strip_urls) cur = strip_urls(cur);
    if (config.strip_punctuation) cur = strip_punctuation(cur);
    if (config.remove_stopwords) cur = remove_stopwords(cur, config.stopwords);
    return detail::normalize_ws(cur);
}

// One entry per line, `#` comments and blank lines skipped.
inline std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile(path.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(line);
    }
    return words;
}

// `emoji<TAB>token` per line, `#` comments allowed.
inline std::map<std::string, std::string> load_emoji_map(
    const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile(path.string());
    std::map<std::string, std::string> map;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw MalformedRow(line_no, "expected emoji<TAB>token");
        }
        map[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return map;
}

}  // namespace acd
