#pragma once

#include "gkm/linalg.hpp"
#include "gkm/polynomial.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace gkm {

enum class RootKind { A, B, C, D };

char kind_char(RootKind k);
RootKind parse_kind(std::string_view s);

inline constexpr unsigned long long kDefaultGroupCap = 3628800ULL;

class CapExceeded : public Error {
public:
    using Error::Error;
};

// Signed permutation in one-line form: img[k] = +-(u(k)+1) for 0-based k.
// Acts by x_k -> eps_k x_{u(k)}; products are composition.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::vector<int> signed_images);
    static WeylElement identity(int n);
    static WeylElement parse(std::string_view s);

    int size() const { return static_cast<int>(img_.size()); }
    int operator[](int k) const { return img_[static_cast<std::size_t>(k)]; }
    int perm(int k) const { return std::abs(img_[static_cast<std::size_t>(k)]) - 1; }
    int sign(int k) const { return img_[static_cast<std::size_t>(k)] < 0 ? -1 : 1; }
    const std::vector<int>& images() const { return img_; }

    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    bool is_identity() const;
    int negative_count() const;

    LinearForm act(const LinearForm& v) const;
    Polynomial act(const Polynomial& f) const;
    RationalMatrix matrix() const;

    std::string str() const;      // "2,-1"
    std::string display() const;  // negatives underlined

    auto operator<=>(const WeylElement&) const = default;

private:
    std::vector<int> img_;
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const noexcept;
};

struct RootSubset {
    std::vector<int> simple_indices;  // 1-based
    std::vector<int> roots;           // indices into positive_roots()
};

class RootSystem {
public:
    static RootSystem build(RootKind kind, int n);

    RootKind kind() const { return kind_; }
    int rank() const { return n_; }
    int varcount() const { return m_; }
    std::string name() const;

    const std::vector<LinearForm>& simple_roots() const { return simple_; }
    const LinearForm& simple_root(int i) const { return simple_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<LinearForm>& positive_roots() const { return positive_; }
    int positive_index(const LinearForm& beta) const;  // -1 if not a positive root
    bool is_positive(const LinearForm& beta) const { return positive_index(beta) >= 0; }
    bool is_root(const LinearForm& beta) const { return is_positive(beta) || is_positive(-beta); }
    const std::vector<Rational>& simple_coordinates(int root_index) const;

    bool contains(const WeylElement& w) const;
    WeylElement reflection(const LinearForm& beta) const;
    WeylElement simple_reflection(int i) const;  // 1-based
    WeylElement from_word(const std::vector<int>& word) const;

    int length(const WeylElement& w) const;
    bool right_descent(const WeylElement& w, int i) const;  // l(w s_i) < l(w)
    bool left_descent(const WeylElement& w, int i) const;   // l(s_i w) < l(w)
    std::vector<int> reduced_word(const WeylElement& w) const;
    std::vector<int> reduced_word_alt(const WeylElement& w) const;
    std::string word_label(const WeylElement& w) const;  // "id", "s1s2"

    unsigned long long group_order() const;
    std::vector<WeylElement> all_elements(unsigned long long cap = kDefaultGroupCap) const;
    std::vector<WeylElement> parabolic_elements(const std::vector<int>& sigma,
                                                unsigned long long cap = kDefaultGroupCap) const;
    WeylElement longest() const;

    RootSubset closure(const std::vector<int>& sigma) const;
    bool in_closure(int root_index, const std::vector<int>& sigma) const;

    bool bruhat_leq(const WeylElement& u, const WeylElement& v) const;
    bool weak_left_leq(const WeylElement& v, const WeylElement& u) const;

    // Minimal-length representative of w W(sigma).
    WeylElement min_coset_rep(WeylElement w, const std::vector<int>& sigma) const;

    // Canonical element order: length, then reduced word lexicographically.
    bool canonical_less(const WeylElement& a, const WeylElement& b) const;

private:
    RootKind kind_ = RootKind::A;
    int n_ = 0, m_ = 0;
    std::vector<LinearForm> simple_, positive_;
    std::map<LinearForm, int> index_;
    std::vector<std::vector<Rational>> coords_;
};

// Enumerated group with indexed multiplication and cached orders.
class WeylGroup {
public:
    explicit WeylGroup(std::shared_ptr<const RootSystem> rs, unsigned long long cap = kDefaultGroupCap);

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<WeylElement>& elements() const { return elems_; }
    const WeylElement& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    int index(const WeylElement& w) const;
    int length(int i) const { return len_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& word(int i) const { return words_[static_cast<std::size_t>(i)]; }
    int simple(int i) const { return simple_idx_[static_cast<std::size_t>(i - 1)]; }
    int identity() const { return 0; }
    int longest() const { return size() - 1; }

    int mul(int a, int b) const;
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

    bool bruhat_leq(int u, int v) const;
    bool weak_left_leq(int v, int u) const;

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<WeylElement> elems_;
    std::unordered_map<WeylElement, int, WeylElementHash> idx_;
    std::vector<int> len_, inv_, simple_idx_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<char>> below_;  // below_[v][u] = u <= v (Bruhat)
};

}  // namespace gkm
