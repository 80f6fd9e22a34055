#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sodlab/errors.hpp"

namespace sodlab {

// Ambient category selector: bounded derived category of the equioriented
// type A quiver on n vertices, or of the weighted projective line of
// weight type (2).
struct QuiverSpec {
    enum class Kind { type_a, wpl2 };

    Kind kind = Kind::type_a;
    int n = 1;  // vertex count; only meaningful for type_a

    static QuiverSpec type_a(int n) {
        require(n >= 1, "type A quiver needs n >= 1");
        return QuiverSpec{Kind::type_a, n};
    }
    static QuiverSpec wpl2() { return QuiverSpec{Kind::wpl2, 0}; }

    // Rank of the numerical Grothendieck lattice.
    int rank() const { return kind == Kind::type_a ? n : 3; }

    bool operator==(const QuiverSpec&) const = default;
};

// Integer vector in the fixed basis of K0.
// Type A basis: classes of the simples S_1..S_n.
// Weight type (2) basis: ([O], [S_{1,0}], [S_x]) for an ordinary point x.
struct K0Class {
    std::vector<long long> v;

    K0Class() = default;
    explicit K0Class(int rank) : v(static_cast<std::size_t>(rank), 0) {}
    explicit K0Class(std::vector<long long> coords) : v(std::move(coords)) {}

    int rank() const { return static_cast<int>(v.size()); }
    bool is_zero() const {
        for (long long x : v)
            if (x != 0) return false;
        return true;
    }

    K0Class& operator+=(const K0Class& o) {
        ensure(v.size() == o.v.size(), "K0 rank mismatch");
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
        return *this;
    }
    K0Class& operator-=(const K0Class& o) {
        ensure(v.size() == o.v.size(), "K0 rank mismatch");
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
        return *this;
    }
    friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
    friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
    friend K0Class operator*(long long s, K0Class a) {
        for (auto& x : a.v) x *= s;
        return a;
    }
    K0Class operator-() const { return -1 * (*this); }

    auto operator<=>(const K0Class&) const = default;
};

std::string to_string(const K0Class& c);

// Gram matrix of the Euler pairing <x,y> = sum_k (-1)^k dim Hom(x, y[k])
// in the fixed basis, pairing(x, y) = x^T G y.
class EulerForm {
public:
    explicit EulerForm(const QuiverSpec& q);

    const std::vector<std::vector<long long>>& gram() const { return g_; }
    long long pairing(const K0Class& x, const K0Class& y) const;

private:
    std::vector<std::vector<long long>> g_;
};

long long euler_pairing(const QuiverSpec& q, const K0Class& x, const K0Class& y);

}  // namespace sodlab
