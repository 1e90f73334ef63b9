#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "acd/errors.hpp"

namespace acd {

// N x d sentence embedding matrix, rows aligned with a label vector.
using EmbeddingMatrix = Eigen::MatrixXd;

inline void check_finite(const EmbeddingMatrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (!std::isfinite(m(r, c))) throw NonFiniteEmbedding(static_cast<std::size_t>(r));
        }
    }
}

inline constexpr char kCacheMagic[4] = {'A', 'C', 'D', 'E'};

// Cache layout: magic "ACDE", u32 N, u32 d, then row-major float32 values.
inline void save_embedding_cache(const EmbeddingMatrix& m,
                                 const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SerializeError("cannot open cache for writing: " + path.string());
    out.write(kCacheMagic, 4);
    const uint32_t n = static_cast<uint32_t>(m.rows());
    const uint32_t d = static_cast<uint32_t>(m.cols());
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(&d), 4);
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < d; ++c) {
            const float v = static_cast<float>(m(r, c));
            out.write(reinterpret_cast<const char*>(&v), 4);
        }
    }
}

inline EmbeddingMatrix load_embedding_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile(path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kCacheMagic, 4) != 0) {
        throw SerializeError("bad embedding cache magic in " + path.string());
    }
    uint32_t n = 0, d = 0;
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(&d), 4);
    if (!in) throw SerializeError("truncated embedding cache header");
    EmbeddingMatrix m(n, d);
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < d; ++c) {
            float v = 0;
            in.read(reinterpret_cast<char*>(&v), 4);
            if (!in) throw SerializeError("truncated embedding cache body");
            m(r, c) = v;
        }
    }
    return m;
}

}  // namespace acd
