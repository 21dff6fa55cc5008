#include "gkm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gkm {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view s)
{
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t.push_back(ch);
    if (t.empty())
        throw Error("empty rational");
    Rational q;
    if (q.set_str(t, 10) != 0)
        throw Error("bad rational: " + t);
    if (q.get_den() == 0)
        throw Error("zero denominator: " + t);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

/******** Monomial ********/

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (unsigned x : e)
        d += x;
    return d;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > other.e[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i)
        r.e[i] += o.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i)
        r.e[i] -= o.e[i];
    return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    unsigned da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    return a.e > b.e;
}

/******** Polynomial ********/

Polynomial::Polynomial(int varcount, const Rational& c) : m_(varcount)
{
    if (c != 0)
        t_.emplace(Monomial(varcount), c);
}

Polynomial Polynomial::variable(int varcount, int i)
{
    if (i < 0 || i >= varcount)
        throw Error("variable index out of range");
    Monomial mono(varcount);
    mono.e[static_cast<std::size_t>(i)] = 1;
    return monomial(mono);
}

Polynomial Polynomial::monomial(const Monomial& mono, const Rational& c)
{
    Polynomial p(mono.varcount());
    p.add_term(mono, c);
    return p;
}

void Polynomial::check_same(const Polynomial& o) const
{
    if (m_ != o.m_)
        throw Error("varcount mismatch: " + std::to_string(m_) + " vs " + std::to_string(o.m_));
}

void Polynomial::add_term(const Monomial& mono, const Rational& c)
{
    if (mono.varcount() != m_)
        throw Error("monomial varcount mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = t_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            t_.erase(it);
    }
}

bool Polynomial::is_constant() const
{
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.degree() == 0);
}

Rational Polynomial::constant_term() const
{
    auto it = t_.find(Monomial(m_));
    return it == t_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const
{
    if (t_.empty())
        return -1;
    return static_cast<int>(t_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const
{
    if (t_.empty())
        return true;
    unsigned d = t_.begin()->first.degree();
    for (const auto& [mono, c] : t_)
        if (mono.degree() != d)
            return false;
    return true;
}

std::optional<int> Polynomial::homogeneous_degree() const
{
    if (t_.empty() || !is_homogeneous())
        return std::nullopt;
    return degree();
}

int Polynomial::degree_in(int var) const
{
    int d = -1;
    for (const auto& [mono, c] : t_)
        d = std::max(d, static_cast<int>(mono.e[static_cast<std::size_t>(var)]));
    return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_same(o);
    for (const auto& [mono, c] : o.t_)
        add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check_same(o);
    for (const auto& [mono, c] : o.t_) {
        Rational neg = -c;
        add_term(mono, neg);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [mono, v] : t_)
        v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& [mono, v] : r.t_)
        v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_same(b);
    Polynomial r(a.m_);
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            Rational c = ca * cb;
            r.add_term(ma * mb, c);
        }
    return r;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial r(m_, 1);
    Polynomial base(*this);
    while (k) {
        if (k & 1u)
            r = r * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const
{
    if (static_cast<int>(point.size()) != m_)
        throw Error("evaluation point length mismatch");
    Rational s = 0;
    for (const auto& [mono, c] : t_) {
        Rational v = c;
        for (std::size_t i = 0; i < mono.e.size(); ++i)
            for (unsigned k = 0; k < mono.e[i]; ++k)
                v *= point[i];
        s += v;
    }
    return s;
}

Polynomial Polynomial::substitute_linear(const std::vector<LinearForm>& images) const
{
    if (static_cast<int>(images.size()) != m_)
        throw Error("substitution length mismatch");
    int m = m_;
    for (const auto& l : images)
        if (l.varcount() != m)
            throw Error("substitution image varcount mismatch");
    std::vector<std::vector<Polynomial>> powers(images.size());
    Polynomial r(m);
    for (const auto& [mono, c] : t_) {
        Polynomial term(m, c);
        for (std::size_t i = 0; i < mono.e.size(); ++i) {
            unsigned k = mono.e[i];
            if (!k)
                continue;
            auto& pw = powers[i];
            if (pw.empty())
                pw.push_back(Polynomial(m, 1));
            while (pw.size() <= k)
                pw.push_back(pw.back() * images[i].to_polynomial());
            term = term * pw[k];
        }
        r += term;
    }
    return r;
}

Polynomial Polynomial::permute_signed(const std::vector<int>& perm, const std::vector<int>& sign) const
{
    if (static_cast<int>(perm.size()) != m_ || sign.size() != perm.size())
        throw Error("signed permutation size mismatch");
    Polynomial r(m_);
    for (const auto& [mono, c] : t_) {
        Monomial img(m_);
        int s = 1;
        for (std::size_t k = 0; k < perm.size(); ++k) {
            img.e[static_cast<std::size_t>(perm[k])] = mono.e[k];
            if (sign[k] < 0 && (mono.e[k] & 1u))
                s = -s;
        }
        Rational v = c;
        if (s < 0)
            v = -v;
        r.t_.emplace(std::move(img), v);
    }
    return r;
}

Polynomial Polynomial::with_varcount(int m) const
{
    Polynomial r(m);
    for (const auto& [mono, c] : t_) {
        Monomial img(m);
        for (std::size_t i = 0; i < mono.e.size(); ++i) {
            if (mono.e[i] && static_cast<int>(i) >= m)
                throw Error("cannot drop a variable that occurs");
            if (static_cast<int>(i) < m)
                img.e[i] = mono.e[i];
        }
        r.add_term(img, c);
    }
    return r;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& g) const
{
    check_same(g);
    if (g.is_zero())
        throw Error("division by zero polynomial");
    const auto& [lm, lc] = *g.t_.begin();
    Polynomial rest(*this);
    Polynomial q(m_);
    while (!rest.is_zero()) {
        const auto& [rm, rc] = *rest.t_.begin();
        if (!lm.divides(rm))
            return std::nullopt;
        Rational c = rc / lc;
        Polynomial step = Polynomial::monomial(rm / lm, c);
        q.add_term(rm / lm, c);
        rest -= step * g;
    }
    return q;
}

Polynomial Polynomial::divide_or_throw(const Polynomial& g) const
{
    auto q = exact_divide(g);
    if (!q)
        throw Error("inexact division: (" + str() + ") / (" + g.str() + ")");
    return *q;
}

static std::string monomial_str(const Monomial& mono)
{
    std::string s;
    for (std::size_t i = 0; i < mono.e.size(); ++i) {
        if (!mono.e[i])
            continue;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(i + 1);
        if (mono.e[i] > 1)
            s += '^' + std::to_string(mono.e[i]);
    }
    return s;
}

std::string Polynomial::str() const
{
    if (t_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : t_) {
        Rational a = abs(c);
        std::string ms = monomial_str(mono);
        std::string body;
        if (ms.empty())
            body = to_string(a);
        else if (a == 1)
            body = ms;
        else
            body = to_string(a) + "*" + ms;
        if (first)
            out += (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace {

struct Parser {
    std::string s;
    std::size_t i = 0;
    int m;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("polynomial parse error at " + std::to_string(i) + ": " + what + " in \"" + s + "\"");
    }

    unsigned long number()
    {
        std::size_t start = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (start == i)
            fail("expected digits");
        return std::stoul(s.substr(start, i - start));
    }

    // factor: integer[/integer] | x<k>[^e]
    void factor(Rational& coef, Monomial& mono)
    {
        if (peek() == 'x') {
            ++i;
            unsigned long k = number();
            if (k < 1 || static_cast<int>(k) > m)
                fail("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(m));
            unsigned long ex = 1;
            if (peek() == '^') {
                ++i;
                ex = number();
            }
            mono.e[k - 1] += static_cast<unsigned>(ex);
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = i;
            number();
            if (peek() == '/') {
                ++i;
                number();
            }
            coef *= parse_rational(s.substr(start, i - start));
        } else {
            fail("unexpected character");
        }
    }

    Polynomial parse()
    {
        Polynomial p(m);
        if (done())
            fail("empty input");
        bool first = true;
        while (!done()) {
            Rational coef = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-')
                    coef = -1;
                ++i;
            } else if (!first) {
                fail("expected + or -");
            }
            Monomial mono(m);
            factor(coef, mono);
            while (peek() == '*') {
                ++i;
                factor(coef, mono);
            }
            p.add_term(mono, coef);
            first = false;
        }
        return p;
    }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int varcount)
{
    if (varcount < 1)
        throw Error("varcount must be positive");
    Parser ps{{}, 0, varcount};
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            ps.s.push_back(ch);
    return ps.parse();
}

/******** LinearForm ********/

LinearForm LinearForm::basis(int varcount, int i)
{
    LinearForm l(varcount);
    l[i] = 1;
    return l;
}

std::optional<LinearForm> LinearForm::from_polynomial(const Polynomial& p)
{
    LinearForm l(p.varcount());
    for (const auto& [mono, c] : p.terms()) {
        if (mono.degree() != 1)
            return std::nullopt;
        for (int i = 0; i < mono.varcount(); ++i)
            if (mono.e[static_cast<std::size_t>(i)])
                l[i] = c;
    }
    return l;
}

LinearForm LinearForm::parse(std::string_view s, int varcount)
{
    auto l = from_polynomial(Polynomial::parse(s, varcount));
    if (!l)
        throw Error("not a linear form: " + std::string(s));
    return *l;
}

bool LinearForm::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

int LinearForm::pivot() const
{
    for (int i = varcount() - 1; i >= 0; --i)
        if ((*this)[i] != 0)
            return i;
    return -1;
}

Polynomial LinearForm::to_polynomial() const
{
    Polynomial p(varcount());
    for (int i = 0; i < varcount(); ++i)
        if ((*this)[i] != 0)
            p.add_term(Polynomial::variable(varcount(), i).terms().begin()->first, (*this)[i]);
    return p;
}

Rational LinearForm::dot(const LinearForm& o) const
{
    if (o.varcount() != varcount())
        throw Error("linear form varcount mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        s += c_[i] * o.c_[i];
    return s;
}

std::optional<Rational> LinearForm::ratio_to(const LinearForm& o) const
{
    if (o.varcount() != varcount())
        throw Error("linear form varcount mismatch");
    int p = o.pivot();
    if (p < 0)
        return is_zero() ? std::optional<Rational>(0) : std::nullopt;
    Rational c = (*this)[p] / o[p];
    for (int i = 0; i < varcount(); ++i)
        if ((*this)[i] != c * o[i])
            return std::nullopt;
    return c;
}

LinearForm LinearForm::canonical_orientation() const
{
    for (const auto& q : c_) {
        if (q > 0)
            return *this;
        if (q < 0)
            return -*this;
    }
    return *this;
}

LinearForm& LinearForm::operator+=(const LinearForm& o)
{
    if (o.varcount() != varcount())
        throw Error("linear form varcount mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o)
{
    if (o.varcount() != varcount())
        throw Error("linear form varcount mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

LinearForm& LinearForm::operator*=(const Rational& c)
{
    for (auto& q : c_)
        q *= c;
    return *this;
}

LinearForm LinearForm::operator-() const
{
    LinearForm r(*this);
    for (auto& q : r.c_)
        q = -q;
    return r;
}

bool LinearForm::operator<(const LinearForm& o) const
{
    if (varcount() != o.varcount())
        return varcount() < o.varcount();
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i])
            return c_[i] < o.c_[i];
    return false;
}

std::string LinearForm::str() const
{
    return to_polynomial().str();
}

/******** division by a linear form ********/

DivRem divrem_linear(const Polynomial& f, const LinearForm& l)
{
    if (l.varcount() != f.varcount())
        throw Error("divrem_linear: varcount mismatch");
    int p = l.pivot();
    if (p < 0)
        throw Error("divrem_linear: zero linear form");
    int m = f.varcount();
    const Rational& a = l[p];
    LinearForm rest = l;
    rest[p] = 0;
    Polynomial b = rest.to_polynomial();

    int top = f.degree_in(p);
    if (top <= 0)
        return {Polynomial(m), f};
    // f = sum_k c_k x_p^k
    std::vector<Polynomial> c(static_cast<std::size_t>(top) + 1, Polynomial(m));
    for (const auto& [mono, coef] : f.terms()) {
        Monomial stripped = mono;
        unsigned k = stripped.e[static_cast<std::size_t>(p)];
        stripped.e[static_cast<std::size_t>(p)] = 0;
        c[k].add_term(stripped, coef);
    }
    Polynomial q(m);
    Rational inv_a = 1 / a;
    for (int k = top; k >= 1; --k) {
        Polynomial qk = c[static_cast<std::size_t>(k)] * inv_a;
        if (qk.is_zero())
            continue;
        Monomial xp(m);
        xp.e[static_cast<std::size_t>(p)] = static_cast<unsigned>(k - 1);
        q += qk * Polynomial::monomial(xp);
        c[static_cast<std::size_t>(k - 1)] -= qk * b;
    }
    return {q, c[0]};
}

bool divisible_by(const Polynomial& f, const LinearForm& l)
{
    return divrem_linear(f, l).remainder.is_zero();
}

}  // namespace gkm
