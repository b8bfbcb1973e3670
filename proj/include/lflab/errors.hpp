#pragma once

#include <stdexcept>
#include <string>

namespace lflab {

// exit code classes used by the CLI: 2 = bad config, 3 = computation failed
struct Error : std::runtime_error {
  int exit_code;
  explicit Error(const std::string& msg, int code = 3) : std::runtime_error(msg), exit_code(code) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(m, 2) {}
};
struct PoleError : Error {
  explicit PoleError(const std::string& m) : Error(m) {}
};
struct PrecisionUnreachable : Error {
  explicit PrecisionUnreachable(const std::string& m) : Error(m) {}
};
struct ZeroOnPathError : Error {
  double where_t;
  explicit ZeroOnPathError(const std::string& m, double t = 0) : Error(m), where_t(t) {}
};
struct PrimeTableTooSmall : Error {
  explicit PrimeTableTooSmall(const std::string& m) : Error(m) {}
};
struct ZeroNearBoundary : Error {
  double at_re, at_im;
  ZeroNearBoundary(const std::string& m, double re, double im) : Error(m), at_re(re), at_im(im) {}
};
struct MaxDepthExceeded : Error {
  explicit MaxDepthExceeded(const std::string& m) : Error(m) {}
};
struct QuadratureNonconvergence : Error {
  explicit QuadratureNonconvergence(const std::string& m) : Error(m) {}
};
struct TooManyRejections : Error {
  explicit TooManyRejections(const std::string& m) : Error(m) {}
};
struct InsufficientDecay : Error {
  explicit InsufficientDecay(const std::string& m) : Error(m) {}
};
struct BudgetExhausted : Error {
  explicit BudgetExhausted(const std::string& m) : Error(m) {}
};

}  // namespace lflab
