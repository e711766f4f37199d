#pragma once

#include <cstddef>
#include <vector>

#include "infraball/rational.hpp"

namespace infraball {

// Dense matrix over the rationals; just enough exact elimination for the
// rank/nullity arguments (matrices here stay below ~150 x 150).
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::size_t rank() const {
        RationalMatrix m = *this;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < m.cols_ && rank < m.rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < m.rows_ && m.at(pivot, col) == 0) ++pivot;
            if (pivot == m.rows_) continue;
            if (pivot != rank)
                for (std::size_t c = col; c < m.cols_; ++c)
                    std::swap(m.at(pivot, c), m.at(rank, c));
            const Rational inv = Rational(1) / m.at(rank, col);
            for (std::size_t c = col; c < m.cols_; ++c) m.at(rank, c) *= inv;
            for (std::size_t r = 0; r < m.rows_; ++r) {
                if (r == rank || m.at(r, col) == 0) continue;
                const Rational factor = m.at(r, col);
                for (std::size_t c = col; c < m.cols_; ++c)
                    m.at(r, c) -= factor * m.at(rank, c);
            }
            ++rank;
        }
        return rank;
    }

    std::size_t nullity() const { return cols_ - rank(); }

    std::vector<Rational> multiply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<Rational> out(rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (at(r, c) != 0) out[r] += at(r, c) * v[c];
        return out;
    }

    bool annihilates(const std::vector<Rational>& v) const {
        for (const auto& x : multiply(v))
            if (x != 0) return false;
        return true;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace infraball
