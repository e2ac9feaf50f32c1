#pragma once

#include <cstdint>
#include <vector>

#include "qinv/common.hpp"

namespace qinv {

// 31-bit primes, so elimination can accumulate a*b + c in a uint64 without
// overflow checks.
inline constexpr std::uint32_t kRankPrimes[] = {2147483647u, 2147483629u, 2147483587u, 2147483579u};

// Dense matrix over F_p with word-size entries; used for fast probabilistic
// ranks of large interaction matrices where exact rational elimination is
// out of reach. rank_p <= rank_Q always, so hom estimates derived from it
// stay upper bounds.
class ModMatrix {
public:
    ModMatrix(int rows, int cols, std::uint32_t p)
        : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    std::uint32_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::uint32_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    void set(int i, int j, long long v) {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        (*this)(i, j) = static_cast<std::uint32_t>(r);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    int rank() && {
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int i = rank; i < rows_; ++i) {
                if ((*this)(i, col) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) continue;
            if (pivot != rank) {
                for (int j = col; j < cols_; ++j) std::swap((*this)(pivot, j), (*this)(rank, j));
            }
            const std::uint64_t inv = inv_mod((*this)(rank, col));
            for (int i = rank + 1; i < rows_; ++i) {
                const std::uint64_t head = (*this)(i, col);
                if (head == 0) continue;
                const std::uint64_t factor = p_ - head * inv % p_;
                std::uint32_t* ri = &data_[static_cast<std::size_t>(i) * cols_];
                const std::uint32_t* rp = &data_[static_cast<std::size_t>(rank) * cols_];
                for (int j = col; j < cols_; ++j) {
                    ri[j] = static_cast<std::uint32_t>((ri[j] + factor * rp[j]) % p_);
                }
            }
            ++rank;
        }
        return rank;
    }

private:
    std::uint64_t inv_mod(std::uint64_t a) const {
        // Fermat
        std::uint64_t r = 1, e = p_ - 2, b = a % p_;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    int rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> data_;
};

}  // namespace qinv
