#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "acd/unicode_data.hpp"

namespace acd::uni {

inline constexpr uint32_t kReplacementChar = 0xFFFD;

// Decodes the UTF-8 sequence starting at text[pos]. Advances pos past the
// sequence. Invalid bytes decode to U+FFFD and advance by one.
inline uint32_t decode(std::string_view text, std::size_t& pos) {
    const auto byte = [&](std::size_t i) -> uint32_t {
        return static_cast<unsigned char>(text[i]);
    };
    const uint32_t b0 = byte(pos);
    if (b0 < 0x80) {
        pos += 1;
        return b0;
    }
    auto cont = [&](std::size_t i) {
        return i < text.size() && (byte(i) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(pos + 1)) {
        const uint32_t cp = ((b0 & 0x1F) << 6) | (byte(pos + 1) & 0x3F);
        pos += 2;
        return cp >= 0x80 ? cp : kReplacementChar;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(pos + 1) && cont(pos + 2)) {
        const uint32_t cp = ((b0 & 0x0F) << 12) | ((byte(pos + 1) & 0x3F) << 6) |
                            (byte(pos + 2) & 0x3F);
        pos += 3;
        return cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF) ? cp : kReplacementChar;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
        const uint32_t cp = ((b0 & 0x07) << 18) | ((byte(pos + 1) & 0x3F) << 12) |
                            ((byte(pos + 2) & 0x3F) << 6) | (byte(pos + 3) & 0x3F);
        pos += 4;
        return cp >= 0x10000 && cp <= 0x10FFFF ? cp : kReplacementChar;
    }
    pos += 1;
    return kReplacementChar;
}

inline void encode(uint32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::vector<uint32_t> decode_all(std::string_view text) {
    std::vector<uint32_t> cps;
    cps.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) cps.push_back(decode(text, pos));
    return cps;
}

inline std::string encode_all(const std::vector<uint32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (uint32_t cp : cps) encode(cp, out);
    return out;
}

namespace detail {
template <std::size_t N>
inline bool in_ranges(const CpRange (&ranges)[N], uint32_t cp) {
    std::size_t lo = 0, hi = N;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cp < ranges[mid].lo) {
            hi = mid;
        } else if (cp > ranges[mid].hi) {
            lo = mid + 1;
        } else {
            return true;
        }
    }
    return false;
}
}  // namespace detail

inline bool is_punct(uint32_t cp) { return detail::in_ranges(kPunctRanges, cp); }

inline bool is_emoji(uint32_t cp) { return detail::in_ranges(kEmojiRanges, cp); }

inline bool is_emoji_component(uint32_t cp) {
    return detail::in_ranges(kEmojiComponentRanges, cp);
}

inline bool is_space(uint32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == 0x0B ||
           cp == 0x0C || cp == 0x00A0 || cp == 0x2028 || cp == 0x2029 ||
           (cp >= 0x2000 && cp <= 0x200A) || cp == 0x3000;
}

// ASCII-only fold; Tamil has no case and label/stopword matching only needs
// the Latin range.
inline uint32_t fold_case(uint32_t cp) {
    return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
}

inline std::string fold_case(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c += 32;
    }
    return out;
}

}  // namespace acd::uni
