#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "etlp/errors.hpp"

namespace etlp {

// Dense row-major matrix of doubles. Rows index the pre-synaptic side,
// columns the post-synaptic side, everywhere in this codebase.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

    void fill(double v) { data_.assign(data_.size(), v); }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline void check_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(what) + ": matrix shapes differ");
}

// Currents arriving at the post side: out[j] = sum_i w(i,j) * pre[i].
// The binary overload skips silent channels.
std::vector<double> post_currents(const Matrix& w, std::span<const std::uint8_t> pre_spikes);
std::vector<double> post_currents(const Matrix& w, std::span<const double> pre);

// Image of a post-side vector on the pre side: out[i] = sum_j w(i,j) * post[j].
std::vector<double> pre_image(const Matrix& w, std::span<const double> post);

// FNV-1a over the raw bytes; used for bit-exactness checks on weights.
std::uint64_t bit_checksum(std::span<const double> values);
inline std::uint64_t bit_checksum(const Matrix& m) { return bit_checksum(m.values()); }

// Deterministic per-purpose random stream: mixes the master seed with a
// stream tag so that consumers never share or shift each other's draws.
std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t stream_tag);

} // namespace etlp
