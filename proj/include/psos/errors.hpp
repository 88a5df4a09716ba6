#pragma once

#include <stdexcept>
#include <string>

namespace psos {

// Invalid model parameters or an operation evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A kernel row failed the stochasticity cross-check: the (x,y) fed in is not
// a solution of the fixed-point system.
class StochasticityViolation : public std::runtime_error {
 public:
  explicit StochasticityViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Bisection bracket endpoints have the same sign.
class NoSignChange : public std::runtime_error {
 public:
  explicit NoSignChange(const std::string& what) : std::runtime_error(what) {}
};

// The requested branch ceased to exist somewhere inside the bracket.
class BranchVanished : public std::runtime_error {
 public:
  BranchVanished(const std::string& what, double lo, double hi)
      : std::runtime_error(what), last_lo(lo), last_hi(hi) {}
  double last_lo;  // last sub-bracket on which the branch still existed
  double last_hi;
};

// The requested branch does not exist at the given parameters.
class BranchAbsent : public std::runtime_error {
 public:
  explicit BranchAbsent(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psos
