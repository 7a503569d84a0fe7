#pragma once

#include <stdexcept>
#include <string>

namespace cornu {

enum class ErrorCode {
  DegenerateInput,
  NegativeDistance,
  SameLine,
  NotUltraparallel,
  PointOutsideQuarter,
  InvalidPath,
  NotEmbedded,
  NotStepwise,
  NoAlternation,
  AlternationPresent,
  BudgetExhausted,
  IndexOutOfRoster,
  MalformedMachine,
  MalformedInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cornu
