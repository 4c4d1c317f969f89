#include "zguess/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "zguess/exact_linalg.hpp"

namespace zguess {

void ReductionParams::validate() const {
  if (!(delta > Rat(1, 4) && delta <= 1)) {
    throw std::invalid_argument("ReductionParams: delta must lie in (1/4, 1]");
  }
  // eta in [1/2, sqrt(delta))  <=>  eta >= 1/2 and eta^2 < delta
  if (!(eta >= Rat(1, 2) && eta * eta < delta)) {
    throw std::invalid_argument("ReductionParams: eta must lie in [1/2, sqrt(delta))");
  }
}

LatticeBasis::LatticeBasis(std::vector<IntVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) return;
  const std::size_t len = vectors_.front().size();
  for (const auto& v : vectors_) {
    if (v.size() != len) throw std::invalid_argument("LatticeBasis: vectors of unequal length");
  }
  if (rank(IntMatrix::from_rows(std::span<const IntVector>(vectors_), len)) != vectors_.size()) {
    throw DependentVectors("LatticeBasis: vectors are linearly dependent");
  }
}

LatticeBasis LatticeBasis::trusted(std::vector<IntVector> vectors) {
  LatticeBasis b;
  b.vectors_ = std::move(vectors);
  return b;
}

namespace {

// Integral LLL after Cohen (A Course in Computational Algebraic Number
// Theory, Alg. 2.6.7). Indices are 1-based to follow the d_i / lambda_{k,j}
// bookkeeping: d[0] = 1, d[i] = Gram determinant of b_1..b_i.
class IntegralLll {
 public:
  IntegralLll(std::vector<IntVector> vectors, const ReductionParams& p)
      : n_(vectors.size()),
        b_(n_ + 1),
        d_(n_ + 1),
        lam_(n_ + 1, IntVector(n_ + 1)),
        delta_num_(p.delta.get_num()),
        delta_den_(p.delta.get_den()),
        eta_num_(p.eta.get_num()),
        eta_den_(p.eta.get_den()) {
    for (std::size_t i = 0; i < n_; ++i) b_[i + 1] = std::move(vectors[i]);
    d_[0] = 1;
  }

  std::vector<IntVector> run(std::size_t reduced_prefix) {
    if (n_ == 0) return {};
    d_[1] = dot(b_[1], b_[1]);
    if (d_[1] == 0) throw DependentVectors("lll_reduce: zero vector in basis");
    std::size_t kmax = 1;
    for (std::size_t k = 2; k <= std::min(reduced_prefix, n_); ++k) {
      gram_schmidt_row(k);
      kmax = k;
    }
    std::size_t k = std::max<std::size_t>(2, reduced_prefix + 1);
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        gram_schmidt_row(k);
      }
      size_reduce(k, k - 1);
      if (lovasz_fails(k)) {
        swap_step(k, kmax);
        k = std::max<std::size_t>(2, k - 1);
      } else {
        for (std::size_t l = k - 1; l-- > 1;) size_reduce(k, l);
        ++k;
      }
    }
    std::vector<IntVector> out(b_.begin() + 1, b_.end());
    for (auto& v : out) normalize_sign(v);
    return out;
  }

 private:
  void gram_schmidt_row(std::size_t k) {
    Int u;
    for (std::size_t j = 1; j <= k; ++j) {
      u = dot(b_[k], b_[j]);
      for (std::size_t i = 1; i < j; ++i) {
        u = d_[i] * u - lam_[k][i] * lam_[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
      }
      if (j < k) {
        lam_[k][j] = u;
      } else {
        if (u == 0) throw DependentVectors("lll_reduce: input vectors are linearly dependent");
        d_[k] = u;
      }
    }
  }

  void size_reduce(std::size_t k, std::size_t l) {
    // reduce when |lambda_{k,l}| / d_l > eta
    if (eta_den_ * abs(lam_[k][l]) <= eta_num_ * d_[l]) return;
    Int q = round_div(lam_[k][l], d_[l]);
    for (std::size_t j = 0; j < b_[k].size(); ++j)
      mpz_submul(b_[k][j].get_mpz_t(), q.get_mpz_t(), b_[l][j].get_mpz_t());
    mpz_submul(lam_[k][l].get_mpz_t(), q.get_mpz_t(), d_[l].get_mpz_t());
    for (std::size_t i = 1; i < l; ++i)
      mpz_submul(lam_[k][i].get_mpz_t(), q.get_mpz_t(), lam_[l][i].get_mpz_t());
  }

  bool lovasz_fails(std::size_t k) const {
    // delta * d_{k-1}^2 > d_k d_{k-2} + lambda_{k,k-1}^2
    Int lhs = delta_num_ * d_[k - 1] * d_[k - 1];
    Int rhs = delta_den_ * (d_[k] * d_[k - 2] + lam_[k][k - 1] * lam_[k][k - 1]);
    return lhs > rhs;
  }

  void swap_step(std::size_t k, std::size_t kmax) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const Int lam = lam_[k][k - 1];
    Int big_b = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(big_b.get_mpz_t(), big_b.get_mpz_t(), d_[k - 1].get_mpz_t());
    Int t;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      t = lam_[i][k];
      lam_[i][k] = d_[k] * lam_[i][k - 1] - lam * t;
      mpz_divexact(lam_[i][k].get_mpz_t(), lam_[i][k].get_mpz_t(), d_[k - 1].get_mpz_t());
      lam_[i][k - 1] = big_b * t + lam * lam_[i][k];
      mpz_divexact(lam_[i][k - 1].get_mpz_t(), lam_[i][k - 1].get_mpz_t(), d_[k].get_mpz_t());
    }
    d_[k - 1] = big_b;
  }

  std::size_t n_;
  std::vector<IntVector> b_;
  IntVector d_;
  std::vector<IntVector> lam_;
  Int delta_num_, delta_den_, eta_num_, eta_den_;
};

void check_lengths(const std::vector<IntVector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != vectors.front().size())
      throw std::invalid_argument("lll_reduce: vectors of unequal length");
  }
}

template <typename T, typename Norm>
IntVector enumerate_box(const std::vector<std::vector<T>>& basis, long box, Norm norm_of) {
  const std::size_t n = basis.size();
  const std::size_t len = basis.front().size();
  std::vector<long> x(n, -box);
  std::vector<T> sum(len, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < len; ++j) sum[j] -= T(box) * basis[i][j];

  bool found = false;
  decltype(norm_of(sum)) best_norm{};
  std::vector<long> best_x;
  for (;;) {
    // only sign-normalized coefficient vectors (first nonzero positive)
    std::size_t first = 0;
    while (first < n && x[first] == 0) ++first;
    if (first < n && x[first] > 0) {
      auto nv = norm_of(sum);
      if (nv != 0 && (!found || nv < best_norm)) {
        found = true;
        best_norm = nv;
        best_x = x;
      }
    }
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (x[i] < box) {
        ++x[i];
        for (std::size_t j = 0; j < len; ++j) sum[j] += basis[i][j];
        advanced = true;
        break;
      }
      x[i] = -box;
      for (std::size_t j = 0; j < len; ++j) sum[j] -= T(2 * box) * basis[i][j];
    }
    if (!advanced) break;
  }
  if (!found) throw std::invalid_argument("shortest_vector_bruteforce: no nonzero vector in box");
  return IntVector(best_x.begin(), best_x.end());
}

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& b, const ReductionParams& p) {
  return lll_reduce_with_prefix(LatticeBasis{}, b.vectors(), p);
}

LatticeBasis lll_reduce_with_prefix(const LatticeBasis& reduced_prefix,
                                    const std::vector<IntVector>& new_vectors,
                                    const ReductionParams& p) {
  p.validate();
  std::vector<IntVector> all = reduced_prefix.vectors();
  all.insert(all.end(), new_vectors.begin(), new_vectors.end());
  if (all.empty()) throw std::invalid_argument("lll_reduce: empty basis");
  check_lengths(all);
  IntegralLll lll(std::move(all), p);
  return LatticeBasis::trusted(lll.run(reduced_prefix.size()));
}

GramSchmidtData gram_schmidt(const std::vector<IntVector>& vectors) {
  const std::size_t n = vectors.size();
  GramSchmidtData gs;
  gs.mu.assign(n, RatVector(n));
  gs.norms.assign(n, Rat(0));
  std::vector<RatVector> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    star[i].assign(vectors[i].begin(), vectors[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Rat num = 0;
      for (std::size_t t = 0; t < vectors[i].size(); ++t) num += Rat(vectors[i][t]) * star[j][t];
      gs.mu[i][j] = num / gs.norms[j];
      for (std::size_t t = 0; t < star[i].size(); ++t) star[i][t] -= gs.mu[i][j] * star[j][t];
    }
    Rat nn = 0;
    for (const auto& x : star[i]) nn += x * x;
    if (nn == 0) throw DependentVectors("gram_schmidt: dependent vectors");
    gs.norms[i] = nn;
  }
  return gs;
}

bool is_lll_reduced(const std::vector<IntVector>& vectors, const ReductionParams& p) {
  if (vectors.empty()) return true;
  GramSchmidtData gs = gram_schmidt(vectors);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(gs.mu[i][j]) > p.eta) return false;
    }
    if (i > 0) {
      const Rat& mu = gs.mu[i][i - 1];
      if (p.delta * gs.norms[i - 1] > gs.norms[i] + mu * mu * gs.norms[i - 1]) return false;
    }
  }
  return true;
}

IntVector shortest_vector_bruteforce(const LatticeBasis& b, long box) {
  const std::size_t n = b.size();
  if (n == 0) throw std::invalid_argument("shortest_vector_bruteforce: empty basis");
  if (n > 6) throw std::invalid_argument("shortest_vector_bruteforce: more than 6 basis vectors");
  if (box < 1) throw std::invalid_argument("shortest_vector_bruteforce: box must be positive");
  double points = 1;
  for (std::size_t i = 0; i < n; ++i) points *= static_cast<double>(2 * box + 1);
  if (points > 1e8) throw std::invalid_argument("shortest_vector_bruteforce: box too large");

  Int max_entry = 0;
  for (const auto& v : b.vectors())
    for (const auto& x : v) max_entry = std::max<Int>(max_entry, abs(x));
  Int reach = max_entry * Int(box) * Int(static_cast<unsigned long>(2 * n + 2));

  IntVector coeffs;
  if (reach < (Int(1) << 28) && b.length() < 1024) {
    std::vector<std::vector<std::int64_t>> small(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& x : b[i]) small[i].push_back(x.get_si());
    coeffs = enumerate_box(small, box, [](const std::vector<std::int64_t>& s) {
      std::int64_t acc = 0;
      for (auto v : s) acc += v * v;
      return acc;
    });
  } else {
    coeffs = enumerate_box(b.vectors(), box, [](const IntVector& s) { return norm2(s); });
  }
  IntVector result(b.length());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < result.size(); ++j) result[j] += coeffs[i] * b[i][j];
  return result;
}

}  // namespace zguess
