/* errors.hpp - exception types thrown across the library. */

#ifndef STFTPR_ERRORS_HPP
#define STFTPR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stftpr {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// The autocorrelation spectrum of the window vanishes (relative to its
// maximum) at some DFT bin, so the corresponding circulant system cannot
// be inverted.
class WindowInadmissible : public Error {
 public:
  WindowInadmissible(std::size_t ell, std::size_t bin, double rel_magnitude)
      : Error("window inadmissible at shift " + std::to_string(ell) +
              ": spectrum bin " + std::to_string(bin) +
              " has relative magnitude " + std::to_string(rel_magnitude)),
        ell_(ell),
        bin_(bin) {}

  std::size_t ell() const { return ell_; }
  std::size_t bin() const { return bin_; }

 private:
  std::size_t ell_;
  std::size_t bin_;
};

// The algebraic recursion hit a (near-)zero estimate entry and cannot
// propagate the phase past it.
class VanishingSignal : public Error {
 public:
  explicit VanishingSignal(std::size_t index)
      : Error("vanishing signal: estimate entry " + std::to_string(index) +
              " is below the recursion threshold"),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace stftpr

#endif
