#ifndef BOSONIC_ERRORS_HPP
#define BOSONIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bosonic {

// Operand shapes disagree (vector dimension, number of variables, truncation).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical precondition failed: singular map, asymmetric operator,
// operator norm not below one, broken symplectic condition.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result would need monomials above the truncation degree.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace bosonic

#endif  // BOSONIC_ERRORS_HPP
