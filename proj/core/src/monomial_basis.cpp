#include "bosonic/monomial_basis.hpp"

#include <array>
#include <cmath>
#include <string>

#include "bosonic/errors.hpp"

namespace bosonic {

namespace {

// binom(n, k) for the small arguments the basis needs; exact in 64 bits.
std::uint64_t choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

const std::array<double, 171>& factorial_table() {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (int n = 1; n <= 170; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

}  // namespace

int degree(std::span<const int> alpha) {
  int n = 0;
  for (int a : alpha) n += a;
  return n;
}

double factorial(int n) {
  if (n < 0 || n > 170) throw std::out_of_range("factorial: argument out of range");
  return factorial_table()[n];
}

double factorial(std::span<const int> alpha) {
  double f = 1.0;
  for (int a : alpha) f *= factorial(a);
  return f;
}

double binomial(std::span<const int> alpha, std::span<const int> beta) {
  double b = 1.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    b *= static_cast<double>(choose(alpha[j], beta[j]));
  }
  return b;
}

std::size_t MonomialBasis::count_upto(int vars, int n) {
  if (n < 0) return 0;
  return static_cast<std::size_t>(choose(n + vars, vars));
}

MonomialBasis::MonomialBasis(int vars, int truncation) : vars_(vars), truncation_(truncation) {
  if (vars < 1) throw DimensionError("MonomialBasis: need at least one variable");
  if (truncation < 0 || truncation > kMaxTableDegree) {
    throw TruncationError("MonomialBasis: truncation " + std::to_string(truncation) +
                          " outside [0, " + std::to_string(kMaxTableDegree) + "]");
  }
  const std::size_t n = count_upto(vars, truncation);
  exps_.reserve(n * vars);
  degree_.reserve(n);

  // Descending lexicographic order inside each degree.
  std::vector<int> alpha(vars, 0);
  for (int deg = 0; deg <= truncation; ++deg) {
    std::fill(alpha.begin(), alpha.end(), 0);
    alpha[0] = deg;
    while (true) {
      exps_.insert(exps_.end(), alpha.begin(), alpha.end());
      degree_.push_back(deg);
      // Next composition: move one unit from the last nonzero slot before the
      // tail to the right, gathering the tail into the following slot.
      int j = vars - 2;
      while (j >= 0 && alpha[j] == 0) --j;
      if (j < 0) break;
      const int tail = alpha[vars - 1];
      alpha[vars - 1] = 0;
      --alpha[j];
      alpha[j + 1] = tail + 1;
    }
  }

  fact_.resize(n);
  up_.assign(n * vars, npos);
  down_.assign(n * vars, npos);
  std::vector<int> work(vars);
  for (std::size_t i = 0; i < n; ++i) {
    auto e = exponents(i);
    fact_[i] = bosonic::factorial(e);
    std::copy(e.begin(), e.end(), work.begin());
    for (int j = 0; j < vars; ++j) {
      ++work[j];
      up_[i * vars + j] = index(work);
      --work[j];
      if (work[j] > 0) {
        --work[j];
        down_[i * vars + j] = index(work);
        ++work[j];
      }
    }
  }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::make(int vars, int truncation) {
  return std::make_shared<const MonomialBasis>(vars, truncation);
}

MultiIndex MonomialBasis::multi_index(std::size_t i) const {
  auto e = exponents(i);
  return MultiIndex(e.begin(), e.end());
}

std::size_t MonomialBasis::degree_begin(int n) const {
  if (n <= 0) return 0;
  if (n > truncation_) return size();
  return count_upto(vars_, n - 1);
}

std::size_t MonomialBasis::rank(std::span<const int> alpha, int deg) const {
  // Monomials of degree deg preceding alpha: for each slot j, those with a
  // larger exponent in slot j and equal earlier slots. Summing over the
  // larger values is a hockey-stick identity.
  std::size_t r = 0;
  int rem = deg;
  for (int j = 0; j + 1 < vars_; ++j) {
    const int k = vars_ - j - 1;
    const int gap = rem - alpha[j];
    if (gap > 0) r += static_cast<std::size_t>(choose(gap - 1 + k, k));
    rem -= alpha[j];
  }
  return r;
}

std::size_t MonomialBasis::index(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != vars_) return npos;
  int deg = 0;
  for (int a : alpha) {
    if (a < 0) return npos;
    deg += a;
  }
  if (deg > truncation_) return npos;
  return degree_begin(deg) + rank(alpha, deg);
}

}  // namespace bosonic
