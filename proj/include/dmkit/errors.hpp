#ifndef DMKIT_ERRORS_HPP
#define DMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dmkit {

enum class Errc {
  RingMismatch,
  FieldMismatch,
  NotMember,
  ZeroIdeal,
  NotSubideal,
  ZeroSeries,
  InsufficientUnitPrecision,
  PrecisionExceeded,
  RecurrenceMismatch,
  NotStabilized,
  ContentNotUnit,
  PreconditionFailed,
  CheckFailed,
  SyntaxError,
  SchemaError,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dmkit

#endif
