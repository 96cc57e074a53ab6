#pragma once

#include <stdexcept>
#include <string>

namespace ulab {

enum class Errc {
  EmptyInput,
  GcdNotOne,
  SemigroupMismatch,
  NotMPrimary,
  NotContained,
  NotSubideal,
  OutOfWindow,
  WindowUnstable,
  SupportTouchesBoundary,
  NotMCM,
  HypothesisFailed,
  ZeroModule,
  NotArtinian,
  SyntaxError,
  TypeError,
  Computation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace ulab
