#pragma once

// Root data for products of finite simple factors and split tori, in exact
// arithmetic.
//
// Weights are stored in fundamental-weight coordinates, coweights in
// fundamental-coweight coordinates, both full-rank vectors in user factor
// order (torus coordinates interleave where the factor sits). Roots, forms
// and Weyl groups live on the non-torus coordinates; reflections fix the
// torus coordinates, so no index juggling is needed by callers.
//
// Rather than hard-coding invariants per type, the constructor derives
// lengths, Coxeter data and the basic inner product from the root closure
// and the trace form of the adjoint representation, then cross-checks the
// two derivations against each other. A transcription mistake in a Cartan
// matrix therefore fails loudly at construction.

#include "weylkit/cartan.hpp"
#include "weylkit/matrix.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wk {

struct Root {
  VecI wt;           // root in fundamental-weight coords, full rank
  VecI cowt;         // coroot in fundamental-coweight coords, full rank
  VecI simple;       // root over the simple roots, semisimple index
  VecI cowt_simple;  // coroot over the simple coroots, semisimple index
  Int height = 0;
  Int d = 1;  // half the squared coroot length, basic normalization: 1 for
              // long roots, the lacing number for short ones
  int factor = 0;
};

class FiniteWeyl;

class RootDatum {
 public:
  static RootDatum parse(const std::string& type) {
    return RootDatum(parse_type_string(type));
  }

  explicit RootDatum(std::vector<FactorSpec> factors)
      : RootDatum(std::move(factors), {}, {}) {}

  // Explicit Cartan blocks (one per non-torus factor, factor order) and
  // torus Gram blocks (one per torus factor). Empty vectors mean defaults:
  // table Cartan matrices and identity Grams.
  RootDatum(std::vector<FactorSpec> factors, std::vector<MatI> cartan_blocks,
            std::vector<MatQ> torus_grams)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("empty factor list");
    layOutCoordinates();
    buildCartan(std::move(cartan_blocks), std::move(torus_grams));
    symmetrize();
    closeRoots();
    computeHighestRoots();
    computeForms();
    crossCheck();
  }

  RootDatum(const RootDatum& o)
      : factors_(o.factors_) {
    *this = o;
  }
  RootDatum& operator=(const RootDatum& o) {
    if (this == &o) return *this;
    auto weyl = std::move(weyl_);  // cache is datum-specific, drop it
    copyPlainFields(o);
    weyl_.reset();
    return *this;
  }
  RootDatum(RootDatum&&) = default;
  RootDatum& operator=(RootDatum&&) = default;
  ~RootDatum();

  // -- shape ----------------------------------------------------------------

  int rank() const { return n_; }
  int ss_rank() const { return static_cast<int>(ss_coord_.size()); }
  std::size_t num_factors() const { return factors_.size(); }
  const FactorSpec& factor(std::size_t f) const { return factors_[f]; }
  int factor_offset(std::size_t f) const { return factor_offset_[f]; }
  bool has_torus() const {
    for (const auto& f : factors_) if (f.torus) return true;
    return false;
  }
  bool is_semisimple() const { return !has_torus(); }
  std::string type_string() const { return wk::type_string(factors_); }

  const MatI& cartan() const { return cartan_; }          // ss x ss
  const MatQ& cartan_inverse() const { return cartan_inv_; }
  const MatQ& torus_gram(std::size_t f) const { return torus_gram_[f]; }

  int ss_coord(int k) const { return ss_coord_[k]; }      // ss index -> coord
  int coord_ss(int c) const { return coord_ss_[c]; }      // coord -> ss index or -1
  int ss_factor(int k) const { return ss_factor_[k]; }
  int factor_of_coord(int c) const { return coord_factor_[c]; }

  // -- roots ----------------------------------------------------------------

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int idx) const { return roots_[idx]; }
  int num_positive() const { return npos_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  bool is_positive_index(int idx) const { return idx < npos_; }
  int negate_root(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  // Simple roots are roots 0..ss_rank-1, in semisimple index order.
  int root_index(const VecI& wt) const {
    auto it = root_idx_.find(wt);
    return it == root_idx_.end() ? -1 : it->second;
  }

  const VecI& simple_root_wt(int k) const { return simple_root_wt_[k]; }
  const VecI& simple_coroot_cowt(int k) const { return simple_coroot_cowt_[k]; }
  Int simple_d(int k) const { return d_[k]; }

  VecI rho() const { return ss_indicator_; }        // sum of fundamental weights
  VecI rho_check() const { return ss_indicator_; }  // sum of fundamental coweights

  // -- per-factor invariants --------------------------------------------------

  Int lacing(std::size_t f) const { return lacing_[f]; }
  Int coxeter_number(std::size_t f) const { return h_[f]; }
  Int dual_coxeter_number(std::size_t f) const { return hdual_[f]; }
  const Root& highest_root(std::size_t f) const { return roots_[requireSs(theta_long_[f])]; }
  const Root& highest_short_root(std::size_t f) const { return roots_[requireSs(theta_short_[f])]; }
  int highest_root_index(std::size_t f) const { return requireSs(theta_long_[f]); }
  int highest_short_root_index(std::size_t f) const { return requireSs(theta_short_[f]); }

  // Local (factor-index) expansions of the highest roots.
  VecI marks(std::size_t f) const { return factorSlice(highest_root(f).simple, f); }
  VecI comarks(std::size_t f) const { return factorSlice(highest_root(f).cowt_simple, f); }
  VecI long_comarks(std::size_t f) const {
    return factorSlice(highest_short_root(f).cowt_simple, f);
  }

  BigInt finite_weyl_order() const { return weyl_order_; }

  // -- pairing and reflections -------------------------------------------------

  // <weight, coweight>; rational in general.
  Rat pairing(const VecQ& wt, const VecQ& cowt) const {
    VecQ a = ssSolve(wt);
    Rat out = 0;
    for (int k = 0; k < ss_rank(); ++k) out += a[k] * cowt[ss_coord_[k]];
    for (int c = 0; c < n_; ++c)
      if (coord_ss_[c] < 0) out += wt[c] * cowt[c];
    return out;
  }
  Rat pairing(const VecI& wt, const VecI& cowt) const {
    return pairing(to_rational(wt), to_rational(cowt));
  }

  // <root, coweight> and <weight, coroot> are always integers.
  Int pair_root_coweight(int root_idx, const VecI& cowt) const {
    const Root& r = roots_[root_idx];
    Int out = 0;
    for (int k = 0; k < ss_rank(); ++k) out += r.simple[k] * cowt[ss_coord_[k]];
    return out;
  }
  Rat pair_root_coweight(int root_idx, const VecQ& cowt) const {
    const Root& r = roots_[root_idx];
    Rat out = 0;
    for (int k = 0; k < ss_rank(); ++k) out += r.simple[k] * cowt[ss_coord_[k]];
    return out;
  }
  Int pair_weight_coroot(const VecI& wt, int root_idx) const {
    const Root& r = roots_[root_idx];
    Int out = 0;
    for (int k = 0; k < ss_rank(); ++k) out += r.cowt_simple[k] * wt[ss_coord_[k]];
    return out;
  }
  Rat pair_weight_coroot(const VecQ& wt, int root_idx) const {
    const Root& r = roots_[root_idx];
    Rat out = 0;
    for (int k = 0; k < ss_rank(); ++k) out += r.cowt_simple[k] * wt[ss_coord_[k]];
    return out;
  }

  template <class T>
  std::vector<T> reflect_weight(int k, std::vector<T> wt) const {
    T c = wt[ss_coord_[k]];
    for (int j = 0; j < n_; ++j) wt[j] -= c * T(simple_root_wt_[k][j]);
    return wt;
  }
  template <class T>
  std::vector<T> reflect_coweight(int k, std::vector<T> cowt) const {
    T c = cowt[ss_coord_[k]];
    for (int j = 0; j < n_; ++j) cowt[j] -= c * T(simple_coroot_cowt_[k][j]);
    return cowt;
  }

  // Reflection in an arbitrary root (weight side) or its coroot (coweight side).
  template <class T>
  std::vector<T> reflect_weight_by_root(int root_idx, std::vector<T> wt) const {
    const Root& r = roots_[root_idx];
    T c(0);
    for (int k = 0; k < ss_rank(); ++k) c += T(r.cowt_simple[k]) * wt[ss_coord_[k]];
    for (int j = 0; j < n_; ++j) wt[j] -= c * T(r.wt[j]);
    return wt;
  }
  template <class T>
  std::vector<T> reflect_coweight_by_root(int root_idx, std::vector<T> cowt) const {
    const Root& r = roots_[root_idx];
    T c(0);
    for (int k = 0; k < ss_rank(); ++k) c += T(r.simple[k]) * cowt[ss_coord_[k]];
    for (int j = 0; j < n_; ++j) cowt[j] -= c * T(r.cowt[j]);
    return cowt;
  }

  // A weight is root-positive if its simple-root expansion is nonnegative.
  bool is_positive_root_vec(const VecI& wt) const {
    int idx = root_index(wt);
    if (idx < 0) throw std::invalid_argument("not a root");
    return is_positive_index(idx);
  }

  // -- forms ------------------------------------------------------------------

  // Gram matrices of bilinear forms on coweights, fundamental-coweight
  // coordinates. The basic form gives every long root's coroot squared
  // length 2; torus blocks carry the factor's chosen Gram. The trace form
  // is the sum over all roots of the squared root-coweight pairing; its
  // torus blocks vanish.
  const MatQ& basic_gram() const { return basic_gram_; }
  const MatQ& trace_gram() const { return killing_gram_; }

  Rat basic_form(const VecQ& a, const VecQ& b) const { return formApply(basic_gram_, a, b); }

  // The basic form as a map from coweights to weights: coweight coordinates
  // in, fundamental-weight coordinates out. In the fundamental bases this
  // map is diagonal: coordinate c of the output is d_c times the input on
  // semisimple coordinates (since kappa_b(alphacheck_c) = d_c alpha_c pins
  // the pairing against every simple coroot), and the torus Gram applies
  // blockwise on torus coordinates.
  VecQ basic_pairing_map(const VecQ& cowt) const {
    VecQ out(n_, Rat(0));
    for (int c = 0; c < n_; ++c)
      if (coord_ss_[c] >= 0) out[c] = Rat(d_[coord_ss_[c]]) * cowt[c];
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (!factors_[f].torus) continue;
      int base = factor_offset_[f];
      int tr = factors_[f].torus_rank;
      for (int i = 0; i < tr; ++i)
        for (int j = 0; j < tr; ++j) out[base + i] += torus_gram_[f](i, j) * cowt[base + j];
    }
    return out;
  }

  Int dual_coxeter_of_root(int root_idx) const { return hdual_[roots_[root_idx].factor]; }

  // -- derived data -----------------------------------------------------------

  RootDatum langlands_dual() const {
    std::vector<FactorSpec> specs = factors_;
    std::vector<MatI> blocks;
    std::vector<MatQ> grams;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (factors_[f].torus) {
        grams.push_back(inverse(torus_gram_[f]));
        continue;
      }
      if (factors_[f].type.series == Series::B) specs[f].type.series = Series::C;
      else if (factors_[f].type.series == Series::C) specs[f].type.series = Series::B;
      blocks.push_back(factorCartanBlock(f).transposed());
    }
    return RootDatum(std::move(specs), std::move(blocks), std::move(grams));
  }

  const FiniteWeyl& weyl() const;  // builds on first use; throws if too large

  static constexpr Int kMaxWeylOrder = 200000;

 private:
  void layOutCoordinates() {
    n_ = 0;
    for (const auto& f : factors_) {
      factor_offset_.push_back(n_);
      n_ += f.rank();
    }
    coord_ss_.assign(n_, -1);
    coord_factor_.assign(n_, 0);
    for (std::size_t f = 0; f < factors_.size(); ++f)
      for (int j = 0; j < factors_[f].rank(); ++j) {
        int c = factor_offset_[f] + j;
        coord_factor_[c] = static_cast<int>(f);
        if (!factors_[f].torus) {
          coord_ss_[c] = static_cast<int>(ss_coord_.size());
          ss_coord_.push_back(c);
          ss_factor_.push_back(static_cast<int>(f));
        }
      }
    ss_indicator_.assign(n_, 0);
    for (int c : ss_coord_) ss_indicator_[c] = 1;
  }

  void buildCartan(std::vector<MatI> blocks, std::vector<MatQ> grams) {
    const int m = ss_rank();
    cartan_ = MatI(m, m);
    std::size_t bi = 0, gi = 0;
    torus_gram_.resize(factors_.size());
    weyl_order_ = 1;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (factors_[f].torus) {
        MatQ g = gi < grams.size() ? grams[gi] : MatQ::identity(factors_[f].torus_rank);
        ++gi;
        if (static_cast<int>(g.rows()) != factors_[f].torus_rank || g.rows() != g.cols())
          throw std::invalid_argument("torus Gram block has wrong shape");
        if (g != g.transposed()) throw std::invalid_argument("torus Gram must be symmetric");
        if (determinant(g) == 0) throw std::invalid_argument("torus Gram must be nondegenerate");
        torus_gram_[f] = std::move(g);
        continue;
      }
      MatI block = bi < blocks.size() ? blocks[bi] : cartan_matrix(factors_[f].type);
      ++bi;
      const int r = factors_[f].type.rank;
      if (static_cast<int>(block.rows()) != r || static_cast<int>(block.cols()) != r)
        throw std::invalid_argument("Cartan block has wrong shape");
      int base = coord_ss_[factor_offset_[f]];
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cartan_(base + i, base + j) = block(i, j);
      weyl_order_ *= weyl_order(factors_[f].type);
    }
    if (m > 0) cartan_inv_ = inverse(to_rational(cartan_));

    simple_root_wt_.resize(m);
    simple_coroot_cowt_.resize(m);
    for (int k = 0; k < m; ++k) {
      VecI rootv(n_, 0), corootv(n_, 0);
      for (int l = 0; l < m; ++l) {
        rootv[ss_coord_[l]] = cartan_(l, k);    // column k: root alpha_k
        corootv[ss_coord_[l]] = cartan_(k, l);  // row k: coroot alphacheck_k
      }
      simple_root_wt_[k] = std::move(rootv);
      simple_coroot_cowt_[k] = std::move(corootv);
    }
  }

  // Determine relative squared root lengths from the Cartan matrix:
  // cartan(i,j) * len_i = cartan(j,i) * len_j across every edge. Valid
  // finite blocks admit exactly one or two length classes.
  void symmetrize() {
    const int m = ss_rank();
    std::vector<Rat> len(m, 0);
    lacing_.assign(factors_.size(), 1);
    d_.assign(m, 1);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (factors_[f].torus) continue;
      std::vector<int> ks;
      for (int k = 0; k < m; ++k)
        if (ss_factor_[k] == static_cast<int>(f)) ks.push_back(k);
      // propagate lengths over the Dynkin graph of the factor
      std::deque<int> queue;
      len[ks[0]] = 1;
      queue.push_back(ks[0]);
      while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j : ks) {
          if (cartan_(i, j) == 0 || i == j) continue;
          Rat lj = len[i] * cartan_(i, j) / cartan_(j, i);
          if (len[j] == 0) {
            len[j] = lj;
            queue.push_back(j);
          } else if (len[j] != lj) {
            throw std::logic_error("Cartan block is not symmetrizable");
          }
        }
      }
      Rat lo = len[ks[0]], hi = lo;
      for (int k : ks) {
        if (len[k] == 0) throw std::logic_error("Dynkin diagram of a factor is disconnected");
        lo = std::min(lo, len[k]);
        hi = std::max(hi, len[k]);
      }
      Rat ratio = hi / lo;
      if (!is_integer(ratio)) throw std::logic_error("root length ratio must be integral");
      Int r = to_int_checked(ratio);
      if (r != 1 && r != 2 && r != 3)
        throw std::logic_error("lacing number outside {1,2,3}");
      lacing_[f] = r;
      for (int k : ks) {
        Rat dk = Rat(r) * lo / len[k];  // 1 for long roots, r for short
        if (!is_integer(dk)) throw std::logic_error("non-integral d value");
        d_[k] = to_int_checked(dk);
      }
    }
  }

  void closeRoots() {
    const int m = ss_rank();
    roots_.clear();
    root_idx_.clear();
    for (int k = 0; k < m; ++k) {
      Root r;
      r.wt = simple_root_wt_[k];
      r.cowt = simple_coroot_cowt_[k];
      r.simple = VecI(m, 0);
      r.simple[k] = 1;
      r.cowt_simple = VecI(m, 0);
      r.cowt_simple[k] = 1;
      r.height = 1;
      r.d = d_[k];
      r.factor = ss_factor_[k];
      root_idx_.emplace(r.wt, static_cast<int>(roots_.size()));
      roots_.push_back(std::move(r));
    }
    const std::size_t cap = 10000 * std::max<std::size_t>(factors_.size(), 1);
    for (std::size_t head = 0; head < roots_.size(); ++head) {
      for (int k = 0; k < m; ++k) {
        Root cur = roots_[head];  // copy: reflecting may reallocate roots_
        Int c = cur.wt[ss_coord_[k]];
        Int ht = cur.height - c;
        if (ht <= 0) continue;  // stays positive or reflects to a negative
        Root img;
        img.wt = cur.wt;
        img.cowt = cur.cowt;
        for (int j = 0; j < n_; ++j) img.wt[j] -= c * simple_root_wt_[k][j];
        if (root_idx_.count(img.wt)) continue;
        Int cc = cur.cowt[ss_coord_[k]];
        for (int j = 0; j < n_; ++j) img.cowt[j] -= cc * simple_coroot_cowt_[k][j];
        img.simple = cur.simple;
        img.simple[k] -= c;
        img.cowt_simple = cur.cowt_simple;
        img.cowt_simple[k] -= cc;
        img.height = ht;
        img.d = cur.d;
        img.factor = cur.factor;
        root_idx_.emplace(img.wt, static_cast<int>(roots_.size()));
        roots_.push_back(std::move(img));
        if (roots_.size() > cap) throw std::logic_error("root closure does not terminate");
      }
    }
    npos_ = static_cast<int>(roots_.size());
    for (int i = 0; i < npos_; ++i) {
      Root neg;
      neg.wt = -roots_[i].wt;
      neg.cowt = -roots_[i].cowt;
      neg.simple = -roots_[i].simple;
      neg.cowt_simple = -roots_[i].cowt_simple;
      neg.height = -roots_[i].height;
      neg.d = roots_[i].d;
      neg.factor = roots_[i].factor;
      root_idx_.emplace(neg.wt, static_cast<int>(roots_.size()));
      roots_.push_back(std::move(neg));
    }
  }

  void computeHighestRoots() {
    theta_long_.assign(factors_.size(), -1);
    theta_short_.assign(factors_.size(), -1);
    h_.assign(factors_.size(), 0);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (factors_[f].torus) continue;
      int best = -1, best_short = -1, ties = 0, ties_short = 0;
      for (int i = 0; i < npos_; ++i) {
        if (roots_[i].factor != static_cast<int>(f)) continue;
        if (best < 0 || roots_[i].height > roots_[best].height) {
          best = i;
          ties = 1;
        } else if (roots_[i].height == roots_[best].height) {
          ++ties;
        }
        if (roots_[i].d == lacing_[f]) {
          if (best_short < 0 || roots_[i].height > roots_[best_short].height) {
            best_short = i;
            ties_short = 1;
          } else if (roots_[i].height == roots_[best_short].height) {
            ++ties_short;
          }
        }
      }
      if (ties != 1 || ties_short != 1)
        throw std::logic_error("highest root is not unique");
      theta_long_[f] = best;
      theta_short_[f] = best_short;
      h_[f] = roots_[best].height + 1;
    }
  }

  void computeForms() {
    const int m = ss_rank();
    // Trace form over the semisimple indices: sum over all roots of the
    // outer square of the simple-root expansion.
    MatQ k_ss(m, m);
    for (const Root& r : roots_)
      for (int i = 0; i < m; ++i) {
        if (r.simple[i] == 0) continue;
        for (int j = 0; j < m; ++j) k_ss(i, j) += Rat(r.simple[i]) * r.simple[j];
      }
    // Dual Coxeter numbers: the trace form of alphacheck_k against itself is
    // 4 * hdual * d_k; minimizing over the factor's nodes hits a long root.
    hdual_.assign(factors_.size(), 0);
    for (int k = 0; k < m; ++k) {
      VecQ rowk(m);
      for (int l = 0; l < m; ++l) rowk[l] = cartan_(k, l);
      Rat kk = dot(VecQ(k_ss * rowk), rowk);
      if (kk == 0 || !is_integer(kk / 4))
        throw std::logic_error("trace form norm of a simple coroot must be in 4Z");
      std::size_t f = ss_factor_[k];
      Rat cand = kk / 4;
      if (hdual_[f] == 0 || cand < hdual_[f]) hdual_[f] = to_int_checked(cand);
    }
    for (int k = 0; k < m; ++k) {
      VecQ rowk(m);
      for (int l = 0; l < m; ++l) rowk[l] = cartan_(k, l);
      Rat kk = dot(VecQ(k_ss * rowk), rowk);
      if (kk != Rat(4) * hdual_[ss_factor_[k]] * d_[k])
        throw std::logic_error("trace form disagrees with Cartan symmetrization");
    }

    // Assemble full-rank Grams.
    killing_gram_ = MatQ(n_, n_);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) killing_gram_(ss_coord_[i], ss_coord_[j]) = k_ss(i, j);

    basic_gram_ = MatQ(n_, n_);
    if (m > 0) {
      MatQ d(m, m);
      for (int k = 0; k < m; ++k) d(k, k) = d_[k];
      MatQ g = cartan_inv_ * d;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) basic_gram_(ss_coord_[i], ss_coord_[j]) = g(i, j);
    }
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (!factors_[f].torus) continue;
      int base = factor_offset_[f];
      for (int i = 0; i < factors_[f].torus_rank; ++i)
        for (int j = 0; j < factors_[f].torus_rank; ++j)
          basic_gram_(base + i, base + j) = torus_gram_[f](i, j);
    }
  }

  void crossCheck() const {
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (factors_[f].torus) continue;
      // trace form == 2 * hdual * basic form, per factor block
      int base = factor_offset_[f];
      for (int i = 0; i < factors_[f].rank(); ++i)
        for (int j = 0; j < factors_[f].rank(); ++j)
          if (killing_gram_(base + i, base + j) !=
              Rat(2) * hdual_[f] * basic_gram_(base + i, base + j))
            throw std::logic_error("trace form is not 2*hdual times the basic form");
      // |positive roots| = h * rank / 2
      int count = 0;
      for (int i = 0; i < npos_; ++i)
        if (roots_[i].factor == static_cast<int>(f)) ++count;
      if (2 * count != h_[f] * factors_[f].rank())
        throw std::logic_error("positive root count must be h*rank/2");
      // marks and comarks land in the lattice with the right totals
      VecI mk = marks(f), cmk = comarks(f), lcmk = long_comarks(f);
      Int msum = 0, csum = 0, lsum = 0;
      for (int i = 0; i < factors_[f].rank(); ++i) {
        msum += mk[i];
        csum += cmk[i];
        lsum += lcmk[i];
      }
      if (msum != h_[f] - 1 || csum != hdual_[f] - 1 || lsum != h_[f] - 1)
        throw std::logic_error("mark totals disagree with Coxeter numbers");
    }
  }

  VecQ ssSolve(const VecQ& wt) const {  // simple-root coordinates of a weight
    const int m = ss_rank();
    VecQ rhs(m);
    for (int k = 0; k < m; ++k) rhs[k] = wt[ss_coord_[k]];
    return cartan_inv_ * rhs;
  }

  Rat formApply(const MatQ& g, const VecQ& a, const VecQ& b) const {
    return dot(VecQ(g * a), b);
  }

  VecI factorSlice(const VecI& ss_vec, std::size_t f) const {
    VecI out(factors_[f].rank());
    for (int j = 0; j < factors_[f].rank(); ++j)
      out[j] = ss_vec[coord_ss_[factor_offset_[f] + j]];
    return out;
  }

  MatI factorCartanBlock(std::size_t f) const {
    int r = factors_[f].rank();
    MatI out(r, r);
    int base = coord_ss_[factor_offset_[f]];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out(i, j) = cartan_(base + i, base + j);
    return out;
  }

  int requireSs(int idx) const {
    if (idx < 0) throw std::domain_error("operation needs a non-torus factor");
    return idx;
  }

  void copyPlainFields(const RootDatum& o);

  std::vector<FactorSpec> factors_;
  std::vector<int> factor_offset_;
  int n_ = 0;
  std::vector<int> ss_coord_, coord_ss_, ss_factor_, coord_factor_;
  VecI ss_indicator_;
  MatI cartan_;
  MatQ cartan_inv_;
  std::vector<VecI> simple_root_wt_, simple_coroot_cowt_;
  std::vector<Int> d_;
  std::vector<Int> lacing_;
  std::vector<Root> roots_;
  int npos_ = 0;
  std::unordered_map<VecI, int, VecIHash> root_idx_;
  std::vector<int> theta_long_, theta_short_;
  std::vector<Int> h_, hdual_;
  std::vector<MatQ> torus_gram_;
  MatQ basic_gram_, killing_gram_;
  BigInt weyl_order_ = 1;
  mutable std::unique_ptr<FiniteWeyl> weyl_;
};

// Explicit element table of a finite Weyl group. Self-contained after
// construction: it keeps copies of whatever it needs, so the parent datum
// may move freely afterwards.
class FiniteWeyl {
 public:
  explicit FiniteWeyl(const RootDatum& rd) {
    if (rd.finite_weyl_order() > RootDatum::kMaxWeylOrder)
      throw std::domain_error(
          "finite Weyl group of " + rd.type_string() + " has order " +
          rd.finite_weyl_order().str() + ", above the enumeration limit " +
          std::to_string(RootDatum::kMaxWeylOrder));
    ngen_ = rd.ss_rank();
    n_ = rd.rank();
    npos_ = rd.num_positive();
    nroots_ = rd.num_roots();

    std::vector<MatI> gen_wt(ngen_), gen_cowt(ngen_);
    std::vector<std::vector<int32_t>> gen_perm(ngen_);
    for (int k = 0; k < ngen_; ++k) {
      MatI mw = MatI::identity(n_), mc = MatI::identity(n_);
      int c = rd.ss_coord(k);
      for (int j = 0; j < n_; ++j) {
        mw(j, c) -= rd.simple_root_wt(k)[j];
        mc(j, c) -= rd.simple_coroot_cowt(k)[j];
      }
      gen_wt[k] = std::move(mw);
      gen_cowt[k] = std::move(mc);
      gen_perm[k].resize(nroots_);
      for (int r = 0; r < nroots_; ++r) {
        VecI img = gen_wt[k] * rd.root(r).wt;
        int idx = rd.root_index(img);
        if (idx < 0) throw std::logic_error("simple reflection does not permute roots");
        gen_perm[k][r] = idx;
      }
    }

    auto key = [this](const MatI& m) {
      VecI flat(static_cast<std::size_t>(n_) * n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) flat[i * n_ + j] = m(i, j);
      return flat;
    };

    wt_.push_back(MatI::identity(n_));
    cowt_.push_back(MatI::identity(n_));
    perm_.emplace_back(nroots_);
    for (int r = 0; r < nroots_; ++r) perm_[0][r] = r;
    len_.push_back(0);
    index_.emplace(key(wt_[0]), 0);
    right_tab_.assign(ngen_, {});
    std::vector<std::pair<int, int>> parent{{-1, -1}};  // (parent, generator)

    for (std::size_t w = 0; w < wt_.size(); ++w) {
      for (int g = 0; g < ngen_; ++g) right_tab_[g].resize(wt_.size(), -1);
      for (int g = 0; g < ngen_; ++g) {
        MatI m = wt_[w] * gen_wt[g];
        VecI k = key(m);
        auto it = index_.find(k);
        int idx;
        if (it != index_.end()) {
          idx = it->second;
        } else {
          idx = static_cast<int>(wt_.size());
          index_.emplace(std::move(k), idx);
          cowt_.push_back(cowt_[w] * gen_cowt[g]);
          std::vector<int32_t> p(nroots_);
          for (int r = 0; r < nroots_; ++r) p[r] = perm_[w][gen_perm[g][r]];
          perm_.push_back(std::move(p));
          len_.push_back(len_[w] + 1);
          parent.emplace_back(static_cast<int>(w), g);
          wt_.push_back(std::move(m));
        }
        right_tab_[g][w] = idx;
      }
    }
    if (BigInt(wt_.size()) != rd.finite_weyl_order())
      throw std::logic_error("Weyl group closure has wrong order");

    // Second pass: (w s_g)^-1 = s_g w^-1, and parents precede children in
    // discovery order, so the needed inverse always exists already.
    inv_.assign(wt_.size(), -1);
    inv_[0] = 0;
    for (std::size_t x = 1; x < wt_.size(); ++x) {
      auto [p, g] = parent[x];
      auto it = index_.find(key(gen_wt[g] * wt_[inv_[p]]));
      if (it == index_.end()) throw std::logic_error("inverse missing from closure");
      inv_[x] = it->second;
    }

    left_tab_.assign(ngen_, std::vector<int>(wt_.size()));
    for (int g = 0; g < ngen_; ++g)
      for (std::size_t w = 0; w < wt_.size(); ++w)
        left_tab_[g][w] = inv_[right_tab_[g][inv_[w]]];

    longest_ = 0;
    for (std::size_t w = 0; w < wt_.size(); ++w)
      if (len_[w] > len_[longest_]) longest_ = static_cast<int>(w);
    if (len_[longest_] != npos_)
      throw std::logic_error("longest element length must equal the positive root count");
  }

  std::size_t size() const { return wt_.size(); }
  int rank() const { return ngen_; }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  Int length(int w) const { return len_[w]; }
  int inverse(int w) const { return inv_[w]; }
  int right_mul(int w, int g) const { return right_tab_[g][w]; }
  int left_mul(int g, int w) const { return left_tab_[g][w]; }
  const MatI& weight_matrix(int w) const { return wt_[w]; }
  const MatI& coweight_matrix(int w) const { return cowt_[w]; }
  int permute_root(int w, int root_idx) const { return perm_[w][root_idx]; }

  int multiply(int a, int b) const {
    // walk b's reduced word on the right of a
    for (int g : word(b)) a = right_tab_[g][a];
    return a;
  }

  int find_weight_matrix(const MatI& m) const {
    VecI flat(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) flat[i * n_ + j] = m(i, j);
    auto it = index_.find(flat);
    return it == index_.end() ? -1 : it->second;
  }

  bool is_left_descent(int g, int w) const { return len_[left_tab_[g][w]] < len_[w]; }
  bool is_right_descent(int w, int g) const { return perm_[w][g] >= npos_; }

  // Canonical reduced word: repeatedly strip the smallest left descent.
  std::vector<int> word(int w) const {
    std::vector<int> out;
    while (w != 0) {
      int g = 0;
      while (!is_left_descent(g, w)) ++g;
      out.push_back(g);
      w = left_tab_[g][w];
    }
    return out;
  }

  int from_word(const std::vector<int>& gens) const {
    int w = 0;
    for (int g : gens) {
      if (g < 0 || g >= ngen_) throw std::invalid_argument("generator index out of range");
      w = right_tab_[g][w];
    }
    return w;
  }

  template <class T>
  std::vector<T> act_weight(int w, const std::vector<T>& v) const {
    return applyMat(wt_[w], v);
  }
  template <class T>
  std::vector<T> act_coweight(int w, const std::vector<T>& v) const {
    return applyMat(cowt_[w], v);
  }

 private:
  template <class T>
  std::vector<T> applyMat(const MatI& m, const std::vector<T>& v) const {
    std::vector<T> out(v.size(), T(0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (m(i, j) != 0) out[i] += T(m(i, j)) * v[j];
    return out;
  }

  int ngen_ = 0, n_ = 0, npos_ = 0, nroots_ = 0, longest_ = 0;
  std::vector<MatI> wt_, cowt_;
  std::vector<std::vector<int32_t>> perm_;
  std::vector<Int> len_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> right_tab_, left_tab_;
  std::unordered_map<VecI, int, VecIHash> index_;
};

inline const FiniteWeyl& RootDatum::weyl() const {
  if (!weyl_) weyl_ = std::make_unique<FiniteWeyl>(*this);
  return *weyl_;
}

inline RootDatum::~RootDatum() = default;

inline void RootDatum::copyPlainFields(const RootDatum& o) {
  factors_ = o.factors_;
  factor_offset_ = o.factor_offset_;
  n_ = o.n_;
  ss_coord_ = o.ss_coord_;
  coord_ss_ = o.coord_ss_;
  ss_factor_ = o.ss_factor_;
  coord_factor_ = o.coord_factor_;
  ss_indicator_ = o.ss_indicator_;
  cartan_ = o.cartan_;
  cartan_inv_ = o.cartan_inv_;
  simple_root_wt_ = o.simple_root_wt_;
  simple_coroot_cowt_ = o.simple_coroot_cowt_;
  d_ = o.d_;
  lacing_ = o.lacing_;
  roots_ = o.roots_;
  npos_ = o.npos_;
  root_idx_ = o.root_idx_;
  theta_long_ = o.theta_long_;
  theta_short_ = o.theta_short_;
  h_ = o.h_;
  hdual_ = o.hdual_;
  torus_gram_ = o.torus_gram_;
  basic_gram_ = o.basic_gram_;
  killing_gram_ = o.killing_gram_;
  weyl_order_ = o.weyl_order_;
}

}  // namespace wk
