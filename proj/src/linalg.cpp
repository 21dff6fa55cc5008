#include "gkm/linalg.hpp"

#include <sstream>

namespace gkm {

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<LinearForm>& cols)
{
    int n = static_cast<int>(cols.size());
    int r = n ? cols[0].varcount() : 0;
    RationalMatrix m(r, n);
    for (int j = 0; j < n; ++j) {
        if (cols[static_cast<std::size_t>(j)].varcount() != r)
            throw Error("column length mismatch");
        for (int i = 0; i < r; ++i)
            m(i, j) = cols[static_cast<std::size_t>(j)][i];
    }
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const
{
    if (c_ != o.r_)
        throw Error("matrix shape mismatch");
    RationalMatrix p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < o.c_; ++j)
                p(i, j) += x * o(k, j);
        }
    return p;
}

bool RationalMatrix::operator<(const RationalMatrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        return std::pair(r_, c_) < std::pair(o.r_, o.c_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i])
            return a_[i] < o.a_[i];
    return false;
}

LinearForm RationalMatrix::apply(const LinearForm& l) const
{
    if (l.varcount() != c_)
        throw Error("matrix/form size mismatch");
    LinearForm out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (l[j] != 0)
                out[i] += (*this)(i, j) * l[j];
    return out;
}

LinearForm RationalMatrix::column(int j) const
{
    LinearForm l(r_);
    for (int i = 0; i < r_; ++i)
        l[i] = (*this)(i, j);
    return l;
}

Polynomial RationalMatrix::apply(const Polynomial& f) const
{
    if (r_ != c_ || f.varcount() != c_)
        throw Error("matrix/polynomial size mismatch");
    std::vector<LinearForm> images;
    images.reserve(static_cast<std::size_t>(c_));
    for (int j = 0; j < c_; ++j)
        images.push_back(column(j));
    return f.substitute_linear(images);
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

static std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m)
{
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m.rows()),
                                            std::vector<Rational>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    return rows;
}

int RationalMatrix::rank() const { return rational_rank(to_rows(*this)); }

Rational RationalMatrix::det() const
{
    if (r_ != c_)
        throw Error("det of non-square matrix");
    return rational_det(to_rows(*this));
}

std::optional<RationalMatrix> RationalMatrix::inverse() const
{
    if (r_ != c_)
        throw Error("inverse of non-square matrix");
    int n = r_;
    RationalMatrix a(*this), inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0)
                continue;
            Rational f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool RationalMatrix::is_identity() const
{
    return r_ == c_ && *this == identity(r_);
}

std::string RationalMatrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < r_; ++i) {
        if (i)
            os << "; ";
        for (int j = 0; j < c_; ++j)
            os << (j ? " " : "") << (*this)(i, j).get_str();
    }
    os << ']';
    return os.str();
}

int rational_rank(std::vector<std::vector<Rational>> a)
{
    int rank = 0;
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
        auto& pr = a[static_cast<std::size_t>(rank)];
        for (int i = rank + 1; i < rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            if (row[static_cast<std::size_t>(col)] == 0)
                continue;
            Rational f = row[static_cast<std::size_t>(col)] / pr[static_cast<std::size_t>(col)];
            for (int j = col; j < cols; ++j)
                row[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

Rational rational_det(std::vector<std::vector<Rational>> a)
{
    std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == n)
            return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0)
                continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

std::optional<std::vector<Rational>> rational_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i)
        a[i].push_back(b[i]);
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        Rational d = a[r][col];
        for (auto& x : a[r])
            x /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0)
                continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j <= cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivcol.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0)
            return std::nullopt;
    if (r < cols)
        return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i)
        x[pivcol[i]] = a[i][cols];
    return x;
}

Polynomial bareiss_det(PolyMatrix a)
{
    std::size_t n = a.size();
    if (n == 0)
        throw Error("empty determinant");
    int m = a[0][0].varcount();
    bool negate = false;
    Polynomial prev(m, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == n)
                return Polynomial(m);
            std::swap(a[piv], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num.divide_or_throw(prev);
            }
            a[i][k] = Polynomial(m);
        }
        prev = a[k][k];
    }
    Polynomial d = a[n - 1][n - 1];
    return negate ? -d : d;
}

std::optional<std::vector<Polynomial>> cramer_solve(const PolyMatrix& a, const std::vector<Polynomial>& b)
{
    std::size_t n = a.size();
    Polynomial d = bareiss_det(a);
    if (d.is_zero())
        throw Error("singular system");
    std::vector<Polynomial> x;
    x.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        PolyMatrix ak = a;
        for (std::size_t i = 0; i < n; ++i)
            ak[i][k] = b[i];
        auto q = bareiss_det(std::move(ak)).exact_divide(d);
        if (!q)
            return std::nullopt;
        x.push_back(std::move(*q));
    }
    return x;
}

UnitInverse unit_pivot_inverse(PolyMatrix a)
{
    UnitInverse out;
    std::size_t n = a.size();
    if (n == 0) {
        out.ok = true;
        return out;
    }
    int m = a[0][0].varcount();
    PolyMatrix inv(n, std::vector<Polynomial>(n, Polynomial(m)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = Polynomial(m, 1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!a[i][col].is_zero() && a[i][col].is_constant()) {
                piv = i;
                break;
            }
        if (piv == n) {
            out.failed_column = static_cast<int>(col);
            return out;
        }
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = 1 / a[col][col].constant_term();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero())
                continue;
            Polynomial f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[col][j].is_zero())
                    a[i][j] -= f * a[col][j];
                if (!inv[col][j].is_zero())
                    inv[i][j] -= f * inv[col][j];
            }
        }
    }
    out.ok = true;
    out.inverse = std::move(inv);
    return out;
}

}  // namespace gkm
