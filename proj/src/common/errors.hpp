#pragma once

#include <stdexcept>
#include <string>

namespace cyclemix {

// Process/exit status taxonomy shared by the C API and the CLI:
//   0 ok, 1 validation (bad config/input), 2 runtime (I/O, training, lookup),
//   3 incomplete result grid.
enum class Status : int {
  ok = 0,
  validation = 1,
  runtime = 2,
  incomplete = 3,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, std::string message)
      : std::runtime_error(std::move(message)), status_(status) {}

  Status status() const { return status_; }

 private:
  Status status_;
};

// Validation family.
struct ValueError : Error {
  explicit ValueError(const std::string& m) : Error(Status::validation, "value error: " + m) {}
};
struct SchemaError : Error {
  explicit SchemaError(const std::string& m) : Error(Status::validation, "schema error: " + m) {}
};
struct PathError : Error {
  explicit PathError(const std::string& m) : Error(Status::validation, "path error: " + m) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(Status::validation, "config error: " + m) {}
};

// Runtime family.
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(Status::runtime, "io error: " + m) {}
};
struct ItemError : Error {
  explicit ItemError(const std::string& m) : Error(Status::runtime, "item error: " + m) {}
};
struct LookupError : Error {
  explicit LookupError(const std::string& m) : Error(Status::runtime, "lookup error: " + m) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& m) : Error(Status::runtime, "numeric error: " + m) {}
};
struct LeakageError : Error {
  explicit LeakageError(const std::string& m) : Error(Status::runtime, "leakage error: " + m) {}
};

// Carries the last finite losses observed before divergence.
struct TrainingError : Error {
  TrainingError(const std::string& m, int last_step = -1, double last_loss = 0.0)
      : Error(Status::runtime, "training error: " + m),
        last_finite_step(last_step),
        last_finite_loss(last_loss) {}

  int last_finite_step;
  double last_finite_loss;
};

struct IncompleteError : Error {
  explicit IncompleteError(const std::string& m) : Error(Status::incomplete, "incomplete: " + m) {}
};

}  // namespace cyclemix
