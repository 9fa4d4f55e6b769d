#pragma once

// Extended affine Weyl group W x| Lambda-check: pairs (w, t) of a finite
// Weyl element and an integral coweight translation, composed so that
// (w1,t1)(w2,t2) acts as first (w2,t2) then (w1,t1) on the coweight space,
// i.e. x(v) = w(v + t). Lengths, descents, Bruhat order, and the
// length-zero subgroup all come from the usual affine root combinatorics;
// every affine real coroot is tracked as a pair (finite root index, level).
//
// Generators are indexed 0..ss_rank-1 for the finite simple reflections,
// then one affine reflection per non-torus factor in factor order.

#include "weylkit/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wk {

struct AffineElement {
  int w = 0;  // index into the finite Weyl table
  VecI t;     // translation, fundamental-coweight coordinates, full rank
  bool operator==(const AffineElement&) const = default;
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& x) const {
    return VecIHash{}(x.t) * 1000003u + static_cast<std::size_t>(x.w);
  }
};

// A real affine coroot betacheck + n*c, encoded by the index of beta in the
// ambient root list and the level n.
struct AffineCoroot {
  int root = 0;
  Int level = 0;
  bool operator==(const AffineCoroot&) const = default;
};

class AffineWeyl {
 public:
  explicit AffineWeyl(const RootDatum& rd) : rd_(rd) {
    wf_ = &rd_.weyl();
    for (std::size_t f = 0; f < rd_.num_factors(); ++f) {
      if (rd_.factor(f).torus) continue;
      int hr = rd_.highest_root_index(f);
      affine_factor_.push_back(static_cast<int>(f));
      affine_root_.push_back(hr);
      affine_w_.push_back(reflectionIndex(hr));
      affine_t_.push_back(scaled(rd_.root(hr).cowt, Int(-1)));
    }
    buildOmega();
  }

  const RootDatum& datum() const { return rd_; }
  const FiniteWeyl& finite() const { return *wf_; }

  int num_finite_generators() const { return rd_.ss_rank(); }
  int num_generators() const {
    return rd_.ss_rank() + static_cast<int>(affine_factor_.size());
  }
  bool is_affine_generator(int g) const { return g >= rd_.ss_rank(); }
  // factor owning an affine generator
  int generator_factor(int g) const { return affine_factor_.at(g - rd_.ss_rank()); }

  AffineElement identity() const { return {0, VecI(rd_.rank(), 0)}; }
  AffineElement from_finite(int w) const { return {w, VecI(rd_.rank(), 0)}; }
  AffineElement translation(VecI lambda) const {
    checkVec(lambda);
    return {0, std::move(lambda)};
  }

  AffineElement generator(int g) const {
    checkGen(g);
    if (!is_affine_generator(g)) return from_finite(wf_->right_mul(0, g));
    int a = g - rd_.ss_rank();
    return {affine_w_[a], affine_t_[a]};
  }

  // Reflection attached to the affine coroot (betacheck, n):
  // the finite reflection in beta composed with translation by n betacheck.
  AffineElement reflection(const AffineCoroot& a) const {
    return {reflectionIndex(a.root), scaled(rd_.root(a.root).cowt, a.level)};
  }

  AffineElement multiply(const AffineElement& x, const AffineElement& y) const {
    VecI t = wf_->act_coweight(wf_->inverse(y.w), x.t);
    for (int c = 0; c < rd_.rank(); ++c) t[c] += y.t[c];
    return {wf_->multiply(x.w, y.w), std::move(t)};
  }

  AffineElement inverse(const AffineElement& x) const {
    return {wf_->inverse(x.w), scaled(wf_->act_coweight(x.w, x.t), Int(-1))};
  }

  // x acting on the coweight space: v maps to w(v + t).
  VecI act(const AffineElement& x, const VecI& v) const {
    VecI s = v;
    for (int c = 0; c < rd_.rank(); ++c) s[c] += x.t[c];
    return wf_->act_coweight(x.w, s);
  }

  Int length(const AffineElement& x) const {
    Int total = 0;
    for (int i = 0; i < rd_.num_positive(); ++i) {
      Int c = rd_.pair_root_coweight(i, x.t);
      if (wf_->permute_root(x.w, i) >= rd_.num_positive()) c += 1;
      total += std::abs(c);
    }
    return total;
  }

  // -- affine coroot combinatorics -------------------------------------------

  bool is_positive(const AffineCoroot& a) const {
    return rd_.is_positive_index(a.root) ? a.level >= 0 : a.level >= 1;
  }

  AffineCoroot simple_affine_coroot(int g) const {
    checkGen(g);
    if (!is_affine_generator(g)) return {g, 0};
    int hr = affine_root_[g - rd_.ss_rank()];
    return {rd_.negate_root(hr), 1};
  }

  AffineCoroot act(const AffineElement& x, const AffineCoroot& a) const {
    return {wf_->permute_root(x.w, a.root),
            a.level - rd_.pair_root_coweight(a.root, x.t)};
  }

  bool is_right_descent(const AffineElement& x, int g) const {
    return !is_positive(act(x, simple_affine_coroot(g)));
  }

  bool is_left_descent(int g, const AffineElement& x) const {
    return !is_positive(act(inverse(x), simple_affine_coroot(g)));
  }

  AffineElement right_mul(const AffineElement& x, int g) const {
    checkGen(g);
    if (!is_affine_generator(g))
      return {wf_->right_mul(x.w, g), rd_.reflect_coweight(g, x.t)};
    int a = g - rd_.ss_rank();
    VecI t = rd_.reflect_coweight_by_root(affine_root_[a], x.t);
    for (int c = 0; c < rd_.rank(); ++c) t[c] += affine_t_[a][c];
    return {wf_->multiply(x.w, affine_w_[a]), std::move(t)};
  }

  AffineElement left_mul(int g, const AffineElement& x) const {
    checkGen(g);
    if (!is_affine_generator(g)) return {wf_->left_mul(g, x.w), x.t};
    int a = g - rd_.ss_rank();
    VecI t = wf_->act_coweight(wf_->inverse(x.w), affine_t_[a]);
    for (int c = 0; c < rd_.rank(); ++c) t[c] += x.t[c];
    return {wf_->multiply(affine_w_[a], x.w), std::move(t)};
  }

  // -- length-zero subgroup ----------------------------------------------------

  // All length-zero elements with semisimple translation part; one per class
  // of the coweight lattice modulo the coroot lattice, identity first.
  const std::vector<AffineElement>& omega() const { return omega_; }

  int omega_index(const AffineElement& x) const {
    AffineElement y = x;
    while (length(y) > 0) y = right_mul(y, leastRightDescent(y));
    for (std::size_t i = 0; i < omega_.size(); ++i)
      if (omega_[i] == y) return static_cast<int>(i);
    throw std::domain_error(
        "element lies outside the affine group generated here (torus "
        "translation?)");
  }

  // -- words -------------------------------------------------------------------

  // x = omega()[first] * s_{g_1} * ... * s_{g_k}, k = length(x), the word
  // chosen by repeatedly stripping the least right descent.
  std::pair<int, std::vector<int>> word(const AffineElement& x) const {
    std::vector<int> gens;
    AffineElement y = x;
    while (length(y) > 0) {
      int g = leastRightDescent(y);
      gens.push_back(g);
      y = right_mul(y, g);
    }
    std::reverse(gens.begin(), gens.end());
    int oi = -1;
    for (std::size_t i = 0; i < omega_.size(); ++i)
      if (omega_[i] == y) oi = static_cast<int>(i);
    if (oi < 0)
      throw std::domain_error(
          "element lies outside the affine group generated here (torus "
          "translation?)");
    return {oi, std::move(gens)};
  }

  AffineElement from_word(int omega_idx, const std::vector<int>& gens) const {
    AffineElement x = omega_.at(omega_idx);
    for (int g : gens) x = right_mul(x, g);
    return x;
  }

  // -- Bruhat order -------------------------------------------------------------

  bool bruhat_leq(const AffineElement& x, const AffineElement& y) const {
    if (x == y) return true;
    Int lx = length(x), ly = length(y);
    if (lx >= ly) return false;
    VecI k = cacheKey(x, y);
    auto it = bruhat_cache_.find(k);
    if (it != bruhat_cache_.end()) return it->second;
    int g = leastRightDescent(y);
    AffineElement ys = right_mul(y, g);
    bool ans = is_right_descent(x, g) ? bruhat_leq(right_mul(x, g), ys)
                                      : bruhat_leq(x, ys);
    bruhat_cache_.emplace(std::move(k), ans);
    return ans;
  }

  // -- cosets ---------------------------------------------------------------------

  // Least-length representative of x W_finite.
  AffineElement min_coset_rep(AffineElement x) const {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int g = 0; g < rd_.ss_rank(); ++g)
        if (is_right_descent(x, g)) {
          x = right_mul(x, g);
          moved = true;
          break;
        }
    }
    return x;
  }

  // -- enumeration -------------------------------------------------------------

  // Every element of length <= radius whose translation part lies in the
  // span reachable from the length-zero subgroup. Deterministic order:
  // (length, omega component, finite part, translation).
  std::vector<AffineElement> ball(Int radius, std::size_t cap = 1000000) const {
    std::vector<AffineElement> out;
    std::unordered_set<AffineElement, AffineElementHash> seen;
    std::queue<AffineElement> work;
    for (const auto& s : omega_) {
      seen.insert(s);
      work.push(s);
      out.push_back(s);
    }
    while (!work.empty()) {
      AffineElement x = work.front();
      work.pop();
      Int lx = length(x);
      if (lx == radius) continue;
      for (int g = 0; g < num_generators(); ++g) {
        AffineElement y = right_mul(x, g);
        if (length(y) != lx + 1 || seen.count(y)) continue;
        if (seen.size() >= cap)
          throw std::runtime_error("affine ball exceeds the element cap");
        seen.insert(y);
        out.push_back(y);
        work.push(y);
      }
    }
    std::vector<std::pair<VecI, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      VecI k;
      k.reserve(rd_.rank() + 3);
      k.push_back(length(out[i]));
      k.push_back(omega_index(out[i]));
      k.push_back(out[i].w);
      k.insert(k.end(), out[i].t.begin(), out[i].t.end());
      keyed.emplace_back(std::move(k), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<AffineElement> sorted;
    sorted.reserve(out.size());
    for (const auto& [k, i] : keyed) sorted.push_back(std::move(out[i]));
    return sorted;
  }

  // -- text form -------------------------------------------------------------------

  // "w=[1 2 1] t=(0,-1)": reduced word of the finite part over 1-based
  // node numbers, then the translation coweight.
  std::string str(const AffineElement& x) const {
    std::string out = "w=[";
    bool first = true;
    for (int g : wf_->word(x.w)) {
      if (!first) out += ' ';
      out += std::to_string(g + 1);
      first = false;
    }
    out += "] t=(";
    for (int c = 0; c < rd_.rank(); ++c) {
      if (c) out += ',';
      out += std::to_string(x.t[c]);
    }
    out += ")";
    return out;
  }

  AffineElement parse(const std::string& s) const {
    auto fail = [&s]() -> void {
      throw std::invalid_argument("bad element text: " + s);
    };
    auto to_integer = [&fail](const std::string& tok) -> Int {
      std::size_t start = !tok.empty() && tok[0] == '-' ? 1 : 0;
      if (start == tok.size()) fail();
      for (std::size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) fail();
      return std::stoll(tok);
    };
    std::size_t lb = s.find("w=["), rb = s.find(']');
    std::size_t lp = s.find("t=(", lb == std::string::npos ? 0 : lb);
    std::size_t rp = s.find(')');
    if (lb != 0 || rb == std::string::npos || lp == std::string::npos ||
        rp == std::string::npos || rb > lp || rp + 1 != s.size())
      fail();
    std::vector<int> gens;
    for (std::size_t i = lb + 3; i < rb;) {
      if (s[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < rb && s[j] != ' ') ++j;
      Int g = to_integer(s.substr(i, j - i));
      if (g < 1 || g > rd_.ss_rank()) fail();
      gens.push_back(static_cast<int>(g) - 1);
      i = j;
    }
    VecI t;
    for (std::size_t i = lp + 3; i < rp;) {
      std::size_t j = i;
      while (j < rp && s[j] != ',') ++j;
      t.push_back(to_integer(s.substr(i, j - i)));
      i = j + 1;
    }
    if (static_cast<int>(t.size()) != rd_.rank()) fail();
    return {wf_->from_word(gens), std::move(t)};
  }

 private:
  int reflectionIndex(int root_idx) const {
    MatI m(rd_.rank(), rd_.rank());
    for (int j = 0; j < rd_.rank(); ++j) {
      VecI e(rd_.rank(), 0);
      e[j] = 1;
      VecI img = rd_.reflect_weight_by_root(root_idx, e);
      for (int i = 0; i < rd_.rank(); ++i) m(i, j) = img[i];
    }
    int w = wf_->find_weight_matrix(m);
    if (w < 0) throw std::logic_error("reflection missing from the Weyl table");
    return w;
  }

  int leastRightDescent(const AffineElement& x) const {
    for (int g = 0; g < num_generators(); ++g)
      if (is_right_descent(x, g)) return g;
    throw std::logic_error("positive length element with no right descent");
  }

  void buildOmega() {
    // A length-zero element w t^u satisfies <alpha, u> = -[w(alpha) < 0]
    // for every positive root alpha; on the simple roots this pins u.
    for (std::size_t w = 0; w < wf_->size(); ++w) {
      VecI u(rd_.rank(), 0);
      for (int k = 0; k < rd_.ss_rank(); ++k)
        u[rd_.ss_coord(k)] =
            wf_->permute_root(static_cast<int>(w), k) >= rd_.num_positive() ? -1 : 0;
      AffineElement cand{static_cast<int>(w), std::move(u)};
      if (length(cand) == 0) omega_.push_back(std::move(cand));
    }
    std::sort(omega_.begin(), omega_.end(),
              [](const AffineElement& a, const AffineElement& b) {
                if (a.w != b.w) return a.w < b.w;
                return a.t < b.t;
              });
    // identity (w=0, t=0) sorts first; the count is the coweight lattice
    // modulo coroot lattice, whose order is the Cartan determinant
    Rat expect = rd_.ss_rank() > 0 ? determinant(to_rational(rd_.cartan())) : Rat(1);
    if (Rat(static_cast<Int>(omega_.size())) != expect)
      throw std::logic_error("length-zero subgroup has unexpected order");
  }

  void checkGen(int g) const {
    if (g < 0 || g >= num_generators())
      throw std::invalid_argument("generator index out of range");
  }
  void checkVec(const VecI& v) const {
    if (static_cast<int>(v.size()) != rd_.rank())
      throw std::invalid_argument("coweight has wrong rank");
  }

  VecI cacheKey(const AffineElement& x, const AffineElement& y) const {
    VecI k;
    k.reserve(2 * rd_.rank() + 2);
    k.push_back(x.w);
    k.insert(k.end(), x.t.begin(), x.t.end());
    k.push_back(y.w);
    k.insert(k.end(), y.t.begin(), y.t.end());
    return k;
  }

  RootDatum rd_;
  const FiniteWeyl* wf_ = nullptr;
  std::vector<int> affine_factor_;  // factor per affine generator
  std::vector<int> affine_root_;    // highest root index per affine generator
  std::vector<int> affine_w_;       // finite part of the affine reflection
  std::vector<VecI> affine_t_;      // translation part of the affine reflection
  std::vector<AffineElement> omega_;
  mutable std::unordered_map<VecI, bool, VecIHash> bruhat_cache_;
};

}  // namespace wk
