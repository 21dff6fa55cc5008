#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gkm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

// Exponent vector; length is the ring's variable count.
struct Monomial {
    std::vector<unsigned> e;

    Monomial() = default;
    explicit Monomial(int varcount) : e(static_cast<std::size_t>(varcount), 0u) {}
    explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

    int varcount() const { return static_cast<int>(e.size()); }
    unsigned degree() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;
};

// Graded-lex, higher first; x1 > x2 > ...
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class LinearForm;

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(int varcount) : m_(varcount) {}
    Polynomial(int varcount, const Rational& c);

    static Polynomial variable(int varcount, int i);  // 0-based
    static Polynomial monomial(const Monomial& mono, const Rational& c = 1);
    static Polynomial parse(std::string_view s, int varcount);

    int varcount() const { return m_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::size_t size() const { return t_.size(); }

    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    std::optional<int> homogeneous_degree() const;  // nullopt for zero or mixed
    int degree_in(int var) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    bool operator==(const Polynomial& o) const { return m_ == o.m_ && t_ == o.t_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned k) const;
    Rational eval(const std::vector<Rational>& point) const;
    Polynomial substitute_linear(const std::vector<LinearForm>& images) const;
    // xk -> sign[k] * x_{perm[k]}, perm 0-based
    Polynomial permute_signed(const std::vector<int>& perm, const std::vector<int>& sign) const;
    Polynomial with_varcount(int m) const;

    std::optional<Polynomial> exact_divide(const Polynomial& g) const;
    Polynomial divide_or_throw(const Polynomial& g) const;

    void add_term(const Monomial& mono, const Rational& c);
    std::string str() const;

private:
    void check_same(const Polynomial& o) const;

    int m_ = 0;
    Terms t_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

// Linear form sum a_i x_i.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(int varcount) : c_(static_cast<std::size_t>(varcount)) {}
    explicit LinearForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static LinearForm basis(int varcount, int i);
    // Parses "x1 - x2", "2*x3", "1/2*x1 + x2".
    static LinearForm parse(std::string_view s, int varcount);
    static std::optional<LinearForm> from_polynomial(const Polynomial& p);

    int varcount() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    // Index of the highest variable with nonzero coefficient, -1 if zero.
    int pivot() const;
    Polynomial to_polynomial() const;
    Rational dot(const LinearForm& o) const;
    // Returns c with *this == c * o, if any.
    std::optional<Rational> ratio_to(const LinearForm& o) const;
    bool proportional(const LinearForm& o) const { return ratio_to(o).has_value(); }
    // Sign-normalised copy: first nonzero coefficient positive.
    LinearForm canonical_orientation() const;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rational& c);
    LinearForm operator-() const;
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
    bool operator==(const LinearForm& o) const { return c_ == o.c_; }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }
    bool operator<(const LinearForm& o) const;

    std::string str() const;

private:
    std::vector<Rational> c_;
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

// f = q*l + r, r free of the pivot variable of l.
DivRem divrem_linear(const Polynomial& f, const LinearForm& l);
bool divisible_by(const Polynomial& f, const LinearForm& l);

}  // namespace gkm
