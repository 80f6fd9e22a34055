#include "sodlab/linalg.hpp"

#include "sodlab/errors.hpp"

namespace sodlab {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    ensure(cols_ == o.rows_, "matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == Rat(0)) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    ensure(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Mat Mat::scaled(const Rat& s) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != Rat(0)) return false;
    return true;
}

Mat Mat::hcat(const Mat& o) const {
    ensure(rows_ == o.rows_, "hcat row mismatch");
    Mat r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Mat Mat::vcat(const Mat& o) const {
    ensure(cols_ == o.cols_, "vcat column mismatch");
    Mat r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

// ---------------------------------------------------------------- elimination

namespace {

// Forward elimination in place; returns pivot columns (one per pivot row).
std::vector<int> eliminate(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != Rat(0)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            Rat f = m.at(i, col);
            if (f == Rat(0)) continue;
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank_of(Mat m) { return static_cast<int>(eliminate(m).size()); }

Rat det_of(Mat m) {
    ensure(m.rows() == m.cols(), "determinant of non-square matrix");
    int n = m.rows();
    Rat d(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col) != Rat(0)) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = Rat(1) / m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            Rat f = m.at(i, col) * inv;
            if (f == Rat(0)) continue;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::vector<std::vector<Rat>> nullspace_of(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = eliminate(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free] = Rat(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool SpanTracker::add(std::vector<Rat> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& f = v[pivots_[i]];
        if (f == Rat(0)) continue;
        Rat c = f;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[i][j];
    }
    int pivot = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != Rat(0)) {
            pivot = static_cast<int>(j);
            break;
        }
    if (pivot < 0) return false;
    Rat inv = Rat(1) / v[pivot];
    for (auto& x : v) x *= inv;
    // Keep rows mutually reduced so one reduction pass decides membership.
    for (auto& row : rows_) {
        Rat f = row[pivot];
        if (f == Rat(0)) continue;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace sodlab
