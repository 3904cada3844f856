#pragma once

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "polyjordan/error.hpp"
#include "polyjordan/flat_points.hpp"
#include "polyjordan/poly.hpp"
#include "polyjordan/rational.hpp"
#include "polyjordan/real_roots.hpp"

namespace polyjordan {

/// Weakly decreasing positive parts; the block sizes of one eigenvalue.
struct Partition {
  std::vector<std::size_t> parts;

  std::size_t sum() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

  friend bool operator==(const Partition&, const Partition&) = default;
};

namespace detail {

// Grow-only memo of p(0), p(1), ... shared by all callers.
class PartitionTable {
 public:
  BigInt get(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() <= n) extend();
    return values_[n];
  }

 private:
  // Euler: p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
  void extend() {
    const std::size_t n = values_.size();
    BigInt acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      BigInt term = values_[n - g1];
      if (g2 <= n) term += values_[n - g2];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    values_.push_back(acc);
  }

  std::mutex mutex_;
  std::vector<BigInt> values_{BigInt(1)};
};

inline PartitionTable& partition_table() {
  static PartitionTable table;
  return table;
}

inline void partitions_into(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{current});
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// p(n), with p(0) = 1.
inline BigInt partition_number(std::size_t n) { return detail::partition_table().get(n); }

/// All partitions of n, largest first part first: 4 -> [4], [3,1], [2,2],
/// [2,1,1], [1,1,1,1].
inline std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  detail::partitions_into(n, n, current, out);
  return out;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Sum over ordered compositions (a_1..a_K) of m with a_i >= 1 of
/// p(a_1) * ... * p(a_K), via K-fold convolution of p(1), p(2), ...
inline BigInt composition_weight(std::size_t m, std::size_t k) {
  if (k < 1 || k > m) {
    throw Error(ErrorKind::InvalidArgument,
                "composition_weight needs 1 <= K <= m (K=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  }
  std::vector<BigInt> base(m + 1);
  for (std::size_t j = 1; j <= m; ++j) base[j] = partition_number(j);
  std::vector<BigInt> acc = base;
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<BigInt> next(m + 1);
    for (std::size_t i = 1; i <= m; ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 1; i + j <= m; ++j) next[i + j] += acc[i] * base[j];
    }
    acc = std::move(next);
  }
  return acc[m];
}

/// Number of Jordan structures on m dimensions using exactly K of n_d
/// distinct eigenvalues, up to block permutation:
/// C(n_d, K) * composition_weight(m, K).
inline BigInt jordan_count(std::size_t n_d, std::size_t k, std::size_t m) {
  if (k < 1 || k > std::min(n_d, m)) {
    throw Error(ErrorKind::InvalidArgument, "jordan_count needs 1 <= K <= min(n_d, m) (n_d=" + std::to_string(n_d) +
                                                ", K=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  }
  return binomial(n_d, k) * composition_weight(m, k);
}

struct EigenvalueBlocks {
  std::size_t label = 0;  // 1..n_d
  Partition partition;

  friend bool operator==(const EigenvalueBlocks&, const EigenvalueBlocks&) = default;
};

/// One similarity class: each used eigenvalue label with its block sizes,
/// labels ascending.
struct JordanStructure {
  std::vector<EigenvalueBlocks> assignments;

  std::size_t dimension() const {
    std::size_t total = 0;
    for (const auto& a : assignments) total += a.partition.sum();
    return total;
  }

  friend bool operator==(const JordanStructure&, const JordanStructure&) = default;
};

struct StructureEnumeration {
  std::vector<JordanStructure> structures;
  bool truncated = false;
};

namespace detail {

class StructureEnumerator {
 public:
  StructureEnumerator(std::size_t n_d, std::size_t m, std::size_t limit) : n_d_(n_d), m_(m), limit_(limit) {
    partition_lists_.resize(m + 1);
    for (std::size_t j = 1; j <= m; ++j) partition_lists_[j] = partitions(j);
  }

  // Returns false once the limit stops the walk.
  bool run(std::size_t k) {
    std::vector<std::size_t> labels(k);
    std::iota(labels.begin(), labels.end(), std::size_t{1});
    for (;;) {
      std::vector<std::size_t> sizes;
      if (!compositions(labels, sizes)) return false;
      // next K-subset in lexicographic order
      std::size_t i = k;
      while (i > 0 && labels[i - 1] == n_d_ - k + i) --i;
      if (i == 0) return true;
      ++labels[i - 1];
      for (std::size_t j = i; j < k; ++j) labels[j] = labels[j - 1] + 1;
    }
  }

  StructureEnumeration result;

 private:
  bool compositions(const std::vector<std::size_t>& labels, std::vector<std::size_t>& sizes) {
    const std::size_t used = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    const std::size_t left = labels.size() - sizes.size();
    if (left == 1) {
      sizes.push_back(m_ - used);
      const bool ok = blocks(labels, sizes);
      sizes.pop_back();
      return ok;
    }
    for (std::size_t a = 1; used + a + (left - 1) <= m_; ++a) {
      sizes.push_back(a);
      const bool ok = compositions(labels, sizes);
      sizes.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool blocks(const std::vector<std::size_t>& labels, const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> index(labels.size(), 0);
    for (;;) {
      if (result.structures.size() == limit_) {
        result.truncated = true;
        return false;
      }
      JordanStructure s;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        s.assignments.push_back({labels[i], partition_lists_[sizes[i]][index[i]]});
      }
      result.structures.push_back(std::move(s));
      std::size_t i = labels.size();
      while (i > 0) {
        --i;
        if (++index[i] < partition_lists_[sizes[i]].size()) break;
        index[i] = 0;
        if (i == 0) return true;
      }
    }
  }

  std::size_t n_d_;
  std::size_t m_;
  std::size_t limit_;
  std::vector<std::vector<Partition>> partition_lists_;
};

}  // namespace detail

/// Explicit Jordan structures in a fixed order: K ascending, then label
/// subsets lexicographically, then compositions lexicographically, then
/// partitions in canonical order (last eigenvalue varying fastest).
/// Without K, every K in 1..min(n_d, m) is visited.
inline StructureEnumeration enumerate_structures(std::size_t n_d, std::size_t m, std::optional<std::size_t> k,
                                                 std::size_t limit) {
  if (limit < 1) throw Error(ErrorKind::InvalidArgument, "enumeration limit must be at least 1");
  detail::StructureEnumerator walker(n_d, m, limit);
  const std::size_t top = std::min(n_d, m);
  std::size_t first = 1;
  std::size_t last = top;
  if (k) {
    if (*k < 1 || *k > top) return {};
    first = last = *k;
  }
  for (std::size_t kk = first; kk <= last; ++kk) {
    if (!walker.run(kk)) break;
  }
  return std::move(walker.result);
}

/// f applied to a single Jordan block J_n(lambda): upper triangular Toeplitz
/// with first row f(lambda), f'(lambda)/1!, ..., f^(n-1)(lambda)/(n-1)!.
struct UpperTriangularToeplitz {
  std::vector<Rational> first_row;

  std::size_t size() const noexcept { return first_row.size(); }

  Rational at(std::size_t i, std::size_t j) const { return j >= i ? first_row[j - i] : Rational(0); }

  std::vector<std::vector<Rational>> dense() const {
    std::vector<std::vector<Rational>> out(size(), std::vector<Rational>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i; j < size(); ++j) out[i][j] = first_row[j - i];
    }
    return out;
  }
};

inline UpperTriangularToeplitz f_of_jordan_block(const Poly& f, const Rational& lambda, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Jordan block size must be at least 1");
  std::vector<Rational> row = taylor_coefficients(f, lambda);
  row.resize(n);
  return {std::move(row)};
}

enum class Problem { Nilpotency, Diagonalizability };

inline const char* to_string(Problem p) {
  return p == Problem::Nilpotency ? "nilpotency" : "diagonalizability";
}

struct PerKCount {
  std::size_t k = 0;
  BigInt count;
};

struct CountReport {
  Problem problem = Problem::Nilpotency;
  std::size_t n_d = 0;
  std::size_t m = 0;
  std::vector<PerKCount> per_k;
  BigInt total;
  bool exists = false;
};

namespace detail {

inline CountReport tally(Problem problem, std::size_t n_d, std::size_t m) {
  CountReport r;
  r.problem = problem;
  r.n_d = n_d;
  r.m = m;
  r.total = 0;
  for (std::size_t k = 1; k <= std::min(n_d, m); ++k) {
    r.per_k.push_back({k, jordan_count(n_d, k, m)});
    r.total += r.per_k.back().count;
  }
  return r;
}

}  // namespace detail

/// Similarity classes of m x m matrices X with f(X) nilpotent: the
/// eigenvalues of X must be roots of f, so n_d is the number of distinct
/// complex roots.
inline CountReport nilpotency_report(const Poly& f, std::size_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be at least 1");
  CountReport r = detail::tally(Problem::Nilpotency, distinct_root_count(f), m);
  r.exists = r.n_d >= 1;
  return r;
}

/// Similarity classes of m x m matrices X with f(X) diagonalizable and not
/// nilpotent, with one uniform derivative bound m_hat: eligible eigenvalues
/// are the flat points of f. Eigenvalues that only carry 1x1 blocks would
/// need no derivative condition; they are not added to n_d.
inline CountReport diagonalizability_report(const Poly& f, std::size_t m, std::size_t m_hat) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be at least 1");
  const FlatPointReport flat = locus(f, m_hat);
  CountReport r = detail::tally(Problem::Diagonalizability, flat.count, m);
  r.exists = flat_point_exists(f, m_hat);
  return r;
}

}  // namespace polyjordan
