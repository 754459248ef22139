#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace forcing {

// Contract violation raised by any operation in the library. `name()` is the
// stable machine-readable identifier (e.g. "bad-extender") that the CLI
// reports verbatim; `detail()` carries the offending index, triple, etc.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message,
        nlohmann::json detail = nullptr)
      : std::runtime_error(name + ": " + message),
        name_(std::move(name)),
        detail_(std::move(detail)) {}

  const std::string& name() const noexcept { return name_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

 private:
  std::string name_;
  nlohmann::json detail_;
};

}  // namespace forcing
