#pragma once

#include <boost/rational.hpp>
#include <vector>

namespace sodlab {

using Rat = boost::rational<long long>;

// Dense matrix over Q, row major. All sizes in this project are tiny
// (at most a few dozen rows/columns), so exact Gaussian elimination is cheap.
// Zero-row or zero-column matrices are legal and behave as expected.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Rat& s) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    bool is_zero() const;

    // Horizontal [this | o] and vertical [this; o] concatenation.
    Mat hcat(const Mat& o) const;
    Mat vcat(const Mat& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

int rank_of(Mat m);
Rat det_of(Mat m);

// Basis of the right kernel {x : m x = 0}; each vector has length m.cols().
std::vector<std::vector<Rat>> nullspace_of(const Mat& m);

// Incremental row-space tracker used to pick coset representatives.
class SpanTracker {
public:
    // Returns true and absorbs v when v is independent of the current span.
    bool add(std::vector<Rat> v);
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::vector<Rat>> rows_;  // reduced rows, pivot columns strictly increasing
    std::vector<int> pivots_;
};

}  // namespace sodlab
