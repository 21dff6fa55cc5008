#pragma once

#include "gkm/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkm {

// Dense rational matrix. As a coordinate map, column j is the image of x_j.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    static RationalMatrix identity(int n);
    static RationalMatrix from_columns(const std::vector<LinearForm>& cols);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }
    bool operator<(const RationalMatrix& o) const;

    LinearForm apply(const LinearForm& l) const;
    Polynomial apply(const Polynomial& f) const;
    LinearForm column(int j) const;
    RationalMatrix transpose() const;

    int rank() const;
    Rational det() const;
    std::optional<RationalMatrix> inverse() const;
    bool is_identity() const;
    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// Row-reduces in place; returns the rank.
int rational_rank(std::vector<std::vector<Rational>> rows);
Rational rational_det(std::vector<std::vector<Rational>> a);

// Solves A x = b; nullopt when singular or inconsistent.
std::optional<std::vector<Rational>> rational_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Fraction-free determinant with exact divisions.
Polynomial bareiss_det(PolyMatrix a);

// Cramer's rule over the polynomial ring; throws if det A = 0, nullopt if
// some coordinate is not a polynomial.
std::optional<std::vector<Polynomial>> cramer_solve(const PolyMatrix& a, const std::vector<Polynomial>& b);

struct UnitInverse {
    bool ok = false;
    int failed_column = -1;
    PolyMatrix inverse;
};

// Gauss-Jordan using only nonzero constant pivots.
UnitInverse unit_pivot_inverse(PolyMatrix a);

}  // namespace gkm
