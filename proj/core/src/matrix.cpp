#include "etlp/matrix.hpp"

#include <cstring>

namespace etlp {

std::vector<double> post_currents(const Matrix& w, std::span<const std::uint8_t> pre_spikes) {
    if (pre_spikes.size() != w.rows())
        throw ShapeError("post_currents: pre vector length != matrix rows");
    std::vector<double> out(w.cols(), 0.0);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        if (!pre_spikes[i]) continue;
        for (std::size_t j = 0; j < w.cols(); ++j) out[j] += w(i, j);
    }
    return out;
}

std::vector<double> post_currents(const Matrix& w, std::span<const double> pre) {
    if (pre.size() != w.rows())
        throw ShapeError("post_currents: pre vector length != matrix rows");
    std::vector<double> out(w.cols(), 0.0);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        const double x = pre[i];
        if (x == 0.0) continue;
        for (std::size_t j = 0; j < w.cols(); ++j) out[j] += w(i, j) * x;
    }
    return out;
}

std::vector<double> pre_image(const Matrix& w, std::span<const double> post) {
    if (post.size() != w.cols())
        throw ShapeError("pre_image: post vector length != matrix cols");
    std::vector<double> out(w.rows(), 0.0);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < w.cols(); ++j) acc += w(i, j) * post[j];
        out[i] = acc;
    }
    return out;
}

std::uint64_t bit_checksum(std::span<const double> values) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (double v : values) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t stream_tag) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream_tag), static_cast<std::uint32_t>(stream_tag >> 32)};
    return std::mt19937_64(seq);
}

} // namespace etlp
