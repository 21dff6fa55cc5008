#include "gkm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace gkm {

char kind_char(RootKind k)
{
    switch (k) {
    case RootKind::A: return 'A';
    case RootKind::B: return 'B';
    case RootKind::C: return 'C';
    case RootKind::D: return 'D';
    }
    return '?';
}

RootKind parse_kind(std::string_view s)
{
    if (s.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
        case 'A': return RootKind::A;
        case 'B': return RootKind::B;
        case 'C': return RootKind::C;
        case 'D': return RootKind::D;
        }
    }
    throw Error("unknown root system type: " + std::string(s));
}

/******** WeylElement ********/

WeylElement::WeylElement(std::vector<int> signed_images) : img_(std::move(signed_images))
{
    int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img_) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)])
            throw Error("not a signed permutation");
        seen[static_cast<std::size_t>(a - 1)] = 1;
    }
}

WeylElement WeylElement::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        v[static_cast<std::size_t>(k)] = k + 1;
    return WeylElement(std::move(v));
}

WeylElement WeylElement::parse(std::string_view s)
{
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']' && ch != '(' && ch != ')')
            t.push_back(ch);
    std::vector<int> v;
    if (t.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= t.size()) {
            std::size_t next = t.find(',', pos);
            if (next == std::string::npos)
                next = t.size();
            std::string tok = t.substr(pos, next - pos);
            if (tok.empty())
                throw Error("bad one-line notation: " + std::string(s));
            try {
                v.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw Error("bad one-line notation: " + std::string(s));
            }
            pos = next + 1;
        }
    } else {
        int sgn = 1;
        for (char ch : t) {
            if (ch == '-')
                sgn = -1;
            else if (std::isdigit(static_cast<unsigned char>(ch))) {
                v.push_back(sgn * (ch - '0'));
                sgn = 1;
            } else
                throw Error("bad one-line notation: " + std::string(s));
        }
    }
    return WeylElement(std::move(v));
}

WeylElement WeylElement::operator*(const WeylElement& o) const
{
    if (o.size() != size())
        throw Error("Weyl element size mismatch");
    std::vector<int> r(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) {
        int v = o.img_[k];
        int w = img_[static_cast<std::size_t>(std::abs(v) - 1)];
        r[k] = v < 0 ? -w : w;
    }
    WeylElement out;
    out.img_ = std::move(r);
    return out;
}

WeylElement WeylElement::inverse() const
{
    std::vector<int> r(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) {
        int v = img_[k];
        int j = std::abs(v) - 1;
        r[static_cast<std::size_t>(j)] = v < 0 ? -static_cast<int>(k + 1) : static_cast<int>(k + 1);
    }
    WeylElement out;
    out.img_ = std::move(r);
    return out;
}

bool WeylElement::is_identity() const
{
    for (std::size_t k = 0; k < img_.size(); ++k)
        if (img_[k] != static_cast<int>(k + 1))
            return false;
    return true;
}

int WeylElement::negative_count() const
{
    return static_cast<int>(std::count_if(img_.begin(), img_.end(), [](int v) { return v < 0; }));
}

LinearForm WeylElement::act(const LinearForm& v) const
{
    if (v.varcount() != size())
        throw Error("act_weight: varcount mismatch");
    LinearForm r(size());
    for (int k = 0; k < size(); ++k) {
        if (v[k] == 0)
            continue;
        if (sign(k) < 0)
            r[perm(k)] -= v[k];
        else
            r[perm(k)] += v[k];
    }
    return r;
}

Polynomial WeylElement::act(const Polynomial& f) const
{
    if (f.varcount() != size())
        throw Error("act_poly: varcount mismatch");
    std::vector<int> p(img_.size()), s(img_.size());
    for (int k = 0; k < size(); ++k) {
        p[static_cast<std::size_t>(k)] = perm(k);
        s[static_cast<std::size_t>(k)] = sign(k);
    }
    return f.permute_signed(p, s);
}

RationalMatrix WeylElement::matrix() const
{
    RationalMatrix m(size(), size());
    for (int k = 0; k < size(); ++k)
        m(perm(k), k) = sign(k);
    return m;
}

std::string WeylElement::str() const
{
    std::string s;
    for (std::size_t k = 0; k < img_.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(img_[k]);
    }
    return s;
}

std::string WeylElement::display() const
{
    bool compact = size() <= 9;
    std::string s;
    for (std::size_t k = 0; k < img_.size(); ++k) {
        if (k && !compact)
            s += ',';
        std::string d = std::to_string(std::abs(img_[k]));
        if (img_[k] < 0) {
            for (char ch : d) {
                s += ch;
                s += "̲";
            }
        } else {
            s += d;
        }
    }
    return s;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (int v : w.images()) {
        h ^= static_cast<std::size_t>(v + 64);
        h *= 1099511628211ULL;
    }
    return h;
}

/******** RootSystem ********/

static LinearForm form(int m, std::initializer_list<std::pair<int, int>> terms)
{
    LinearForm l(m);
    for (auto [i, c] : terms)
        l[i] += c;
    return l;
}

RootSystem RootSystem::build(RootKind kind, int n)
{
    int minrank = kind == RootKind::A ? 1 : (kind == RootKind::D ? 3 : 2);
    if (n < minrank)
        throw Error(std::string("invalid rank ") + std::to_string(n) + " for type " + kind_char(kind));
    if (n > 20)
        throw Error("rank too large");
    RootSystem rs;
    rs.kind_ = kind;
    rs.n_ = n;
    rs.m_ = kind == RootKind::A ? n + 1 : n;
    int m = rs.m_;

    for (int i = 0; i + 1 < m; ++i)
        if (i < n - 1 || kind == RootKind::A)
            rs.simple_.push_back(form(m, {{i, 1}, {i + 1, -1}}));
    if (kind == RootKind::B)
        rs.simple_.push_back(form(m, {{n - 1, 1}}));
    else if (kind == RootKind::C)
        rs.simple_.push_back(form(m, {{n - 1, 2}}));
    else if (kind == RootKind::D)
        rs.simple_.push_back(form(m, {{n - 2, 1}, {n - 1, 1}}));

    if (kind == RootKind::B || kind == RootKind::C)
        for (int i = 0; i < m; ++i)
            rs.positive_.push_back(form(m, {{i, kind == RootKind::B ? 1 : 2}}));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            rs.positive_.push_back(form(m, {{i, 1}, {j, -1}}));
    if (kind != RootKind::A)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                rs.positive_.push_back(form(m, {{i, 1}, {j, 1}}));

    for (std::size_t k = 0; k < rs.positive_.size(); ++k)
        rs.index_.emplace(rs.positive_[k], static_cast<int>(k));

    // Simple-root coordinates of each positive root.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rs.simple_[static_cast<std::size_t>(j)][i];
    for (const auto& beta : rs.positive_) {
        auto c = rational_solve(a, beta.coeffs());
        if (!c)
            throw Error("positive root outside the span of simple roots");
        for (const auto& q : *c)
            if (q < 0 || q.get_den() != 1)
                throw Error("positive root is not a non-negative integer combination");
        rs.coords_.push_back(*c);
    }
    return rs;
}

std::string RootSystem::name() const
{
    return std::string(1, kind_char(kind_)) + std::to_string(n_);
}

int RootSystem::positive_index(const LinearForm& beta) const
{
    auto it = index_.find(beta);
    return it == index_.end() ? -1 : it->second;
}

const std::vector<Rational>& RootSystem::simple_coordinates(int root_index) const
{
    return coords_.at(static_cast<std::size_t>(root_index));
}

bool RootSystem::contains(const WeylElement& w) const
{
    if (w.size() != m_)
        return false;
    if (kind_ == RootKind::A)
        return w.negative_count() == 0;
    if (kind_ == RootKind::D)
        return w.negative_count() % 2 == 0;
    return true;
}

WeylElement RootSystem::reflection(const LinearForm& beta) const
{
    if (beta.varcount() != m_ || !is_root(beta))
        throw Error("reflection: not a root: " + beta.str());
    Rational bb = beta.dot(beta);
    std::vector<int> img(static_cast<std::size_t>(m_));
    for (int k = 0; k < m_; ++k) {
        LinearForm col = LinearForm::basis(m_, k);
        Rational c = 2 * beta[k] / bb;
        col -= c * beta;
        int target = -1;
        for (int j = 0; j < m_; ++j) {
            if (col[j] == 0)
                continue;
            if (target >= 0 || (col[j] != 1 && col[j] != -1))
                throw Error("reflection is not a signed permutation");
            target = col[j] > 0 ? j + 1 : -(j + 1);
        }
        img[static_cast<std::size_t>(k)] = target;
    }
    return WeylElement(std::move(img));
}

WeylElement RootSystem::simple_reflection(int i) const
{
    if (i < 1 || i > n_)
        throw Error("simple index out of range");
    return reflection(simple_root(i));
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const
{
    WeylElement w = WeylElement::identity(m_);
    for (int i : word)
        w = w * simple_reflection(i);
    return w;
}

int RootSystem::length(const WeylElement& w) const
{
    int l = 0;
    for (const auto& beta : positive_)
        if (!is_positive(w.act(beta)))
            ++l;
    return l;
}

bool RootSystem::right_descent(const WeylElement& w, int i) const
{
    return !is_positive(w.act(simple_root(i)));
}

bool RootSystem::left_descent(const WeylElement& w, int i) const
{
    return !is_positive(w.inverse().act(simple_root(i)));
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w0) const
{
    std::vector<int> word;
    WeylElement w = w0;
    while (!w.is_identity()) {
        int i = 1;
        while (!left_descent(w, i))
            ++i;
        word.push_back(i);
        w = simple_reflection(i) * w;
    }
    return word;
}

std::vector<int> RootSystem::reduced_word_alt(const WeylElement& w0) const
{
    std::vector<int> word;
    WeylElement w = w0;
    while (!w.is_identity()) {
        int i = n_;
        while (!left_descent(w, i))
            --i;
        word.push_back(i);
        w = simple_reflection(i) * w;
    }
    return word;
}

std::string RootSystem::word_label(const WeylElement& w) const
{
    auto word = reduced_word(w);
    if (word.empty())
        return "id";
    std::string s;
    for (int i : word)
        s += "s" + std::to_string(i);
    return s;
}

unsigned long long RootSystem::group_order() const
{
    unsigned long long f = 1;
    for (int k = 2; k <= n_; ++k)
        f *= static_cast<unsigned long long>(k);
    switch (kind_) {
    case RootKind::A: return f * static_cast<unsigned long long>(n_ + 1);
    case RootKind::B:
    case RootKind::C: return f << n_;
    case RootKind::D: return f << (n_ - 1);
    }
    return 0;
}

bool RootSystem::canonical_less(const WeylElement& a, const WeylElement& b) const
{
    int la = length(a), lb = length(b);
    if (la != lb)
        return la < lb;
    return reduced_word(a) < reduced_word(b);
}

static std::vector<WeylElement> generate(const RootSystem& rs, const std::vector<int>& gens)
{
    std::set<WeylElement> seen;
    std::deque<WeylElement> queue;
    WeylElement id = WeylElement::identity(rs.varcount());
    seen.insert(id);
    queue.push_back(id);
    std::vector<WeylElement> s;
    for (int i : gens)
        s.push_back(rs.simple_reflection(i));
    while (!queue.empty()) {
        WeylElement w = queue.front();
        queue.pop_front();
        for (const auto& si : s) {
            WeylElement v = w * si;
            if (seen.insert(v).second)
                queue.push_back(v);
        }
    }
    struct Keyed {
        int len;
        std::vector<int> word;
        WeylElement w;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(seen.size());
    for (const auto& w : seen) {
        auto word = rs.reduced_word(w);
        int len = static_cast<int>(word.size());
        keyed.push_back({len, std::move(word), w});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.len != b.len)
            return a.len < b.len;
        return a.word < b.word;
    });
    std::vector<WeylElement> out;
    out.reserve(keyed.size());
    for (auto& k : keyed)
        out.push_back(std::move(k.w));
    return out;
}

std::vector<WeylElement> RootSystem::all_elements(unsigned long long cap) const
{
    if (group_order() > cap)
        throw CapExceeded("group order " + std::to_string(group_order()) + " exceeds cap " + std::to_string(cap));
    std::vector<int> gens;
    for (int i = 1; i <= n_; ++i)
        gens.push_back(i);
    return generate(*this, gens);
}

std::vector<WeylElement> RootSystem::parabolic_elements(const std::vector<int>& sigma, unsigned long long cap) const
{
    for (int i : sigma)
        if (i < 1 || i > n_)
            throw Error("simple index out of range");
    std::set<WeylElement> seen;
    std::deque<WeylElement> queue;
    WeylElement id = WeylElement::identity(m_);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        WeylElement w = queue.front();
        queue.pop_front();
        for (int i : sigma) {
            WeylElement v = w * simple_reflection(i);
            if (seen.insert(v).second) {
                if (seen.size() > cap)
                    throw CapExceeded("parabolic subgroup exceeds cap " + std::to_string(cap));
                queue.push_back(v);
            }
        }
    }
    std::vector<WeylElement> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [this](const WeylElement& a, const WeylElement& b) { return canonical_less(a, b); });
    return out;
}

WeylElement RootSystem::longest() const
{
    WeylElement w = WeylElement::identity(m_);
    for (;;) {
        int i = 1;
        while (i <= n_ && right_descent(w, i))
            ++i;
        if (i > n_)
            return w;
        w = w * simple_reflection(i);
    }
}

bool RootSystem::in_closure(int root_index, const std::vector<int>& sigma) const
{
    const auto& c = simple_coordinates(root_index);
    for (int j = 0; j < n_; ++j)
        if (c[static_cast<std::size_t>(j)] != 0 && std::find(sigma.begin(), sigma.end(), j + 1) == sigma.end())
            return false;
    return true;
}

RootSubset RootSystem::closure(const std::vector<int>& sigma) const
{
    RootSubset r;
    r.simple_indices = sigma;
    std::sort(r.simple_indices.begin(), r.simple_indices.end());
    for (int i : r.simple_indices)
        if (i < 1 || i > n_)
            throw Error("simple index out of range");
    for (int k = 0; k < static_cast<int>(positive_.size()); ++k)
        if (in_closure(k, sigma))
            r.roots.push_back(k);
    return r;
}

bool RootSystem::bruhat_leq(const WeylElement& u0, const WeylElement& v0) const
{
    WeylElement u = u0, v = v0;
    for (;;) {
        if (v.is_identity())
            return u.is_identity();
        if (length(u) > length(v))
            return false;
        int i = 1;
        while (!left_descent(v, i))
            ++i;
        WeylElement s = simple_reflection(i);
        if (left_descent(u, i))
            u = s * u;
        v = s * v;
    }
}

bool RootSystem::weak_left_leq(const WeylElement& v, const WeylElement& u) const
{
    return length(u * v.inverse()) == length(u) - length(v);
}

WeylElement RootSystem::min_coset_rep(WeylElement w, const std::vector<int>& sigma) const
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : sigma)
            if (right_descent(w, i)) {
                w = w * simple_reflection(i);
                changed = true;
            }
    }
    return w;
}

/******** WeylGroup ********/

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> rs, unsigned long long cap) : rs_(std::move(rs))
{
    elems_ = rs_->all_elements(cap);
    std::size_t n = elems_.size();
    idx_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        idx_.emplace(elems_[i], static_cast<int>(i));
    len_.resize(n);
    words_.resize(n);
    inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        words_[i] = rs_->reduced_word(elems_[i]);
        len_[i] = static_cast<int>(words_[i].size());
        inv_[i] = index(elems_[i].inverse());
    }
    for (int i = 1; i <= rs_->rank(); ++i)
        simple_idx_.push_back(index(rs_->simple_reflection(i)));

    if (n <= 2000) {
        below_.assign(n, std::vector<char>(n, 0));
        below_[0][0] = 1;
        for (std::size_t v = 1; v < n; ++v) {
            int s = simple_idx_[static_cast<std::size_t>(words_[v][0] - 1)];
            int vp = mul(s, static_cast<int>(v));
            const auto& prev = below_[static_cast<std::size_t>(vp)];
            auto& cur = below_[v];
            for (std::size_t u = 0; u < n; ++u)
                if (prev[u]) {
                    cur[u] = 1;
                    cur[static_cast<std::size_t>(mul(s, static_cast<int>(u)))] = 1;
                }
        }
    }
}

int WeylGroup::index(const WeylElement& w) const
{
    auto it = idx_.find(w);
    if (it == idx_.end())
        throw Error("element not in group: " + w.str());
    return it->second;
}

int WeylGroup::mul(int a, int b) const
{
    return index(element(a) * element(b));
}

bool WeylGroup::bruhat_leq(int u, int v) const
{
    if (!below_.empty())
        return below_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] != 0;
    return rs_->bruhat_leq(element(u), element(v));
}

bool WeylGroup::weak_left_leq(int v, int u) const
{
    return length(mul(u, inv(v))) == length(u) - length(v);
}

}  // namespace gkm
