#ifndef BOSONIC_TESTS_HELPERS_HPP
#define BOSONIC_TESTS_HELPERS_HPP

#include <initializer_list>

#include "bosonic/linspace.hpp"

namespace testing {

inline bosonic::HVector vec(std::initializer_list<bosonic::cplx> xs) {
  bosonic::HVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

inline bosonic::HVector unit(Eigen::Index d, Eigen::Index j) {
  bosonic::HVector v = bosonic::HVector::Zero(d);
  v(j) = 1.0;
  return v;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

constexpr bosonic::cplx I{0.0, 1.0};

}  // namespace testing

#endif  // BOSONIC_TESTS_HELPERS_HPP
