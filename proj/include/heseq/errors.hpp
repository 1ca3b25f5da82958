#pragma once

#include <stdexcept>
#include <string>

namespace heseq {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   input/validation -> 2, domain -> 3, internal invariant -> 4.
enum class errc {
  invalid_input,
  schema,
  validation,
  domain,
  no_solution,
  internal,
  integrity,
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

  static int exit_code(errc kind) noexcept {
    switch (kind) {
      case errc::invalid_input:
      case errc::schema:
      case errc::validation:
        return 2;
      case errc::domain:
      case errc::no_solution:
        return 3;
      case errc::internal:
      case errc::integrity:
        return 4;
    }
    return 4;
  }

  static const char* kind_name(errc kind) noexcept {
    switch (kind) {
      case errc::invalid_input: return "invalid-input";
      case errc::schema: return "schema";
      case errc::validation: return "validation";
      case errc::domain: return "domain";
      case errc::no_solution: return "no-solution";
      case errc::internal: return "internal";
      case errc::integrity: return "integrity";
    }
    return "unknown";
  }

private:
  errc kind_;
};

struct invalid_input_error : error {
  explicit invalid_input_error(const std::string& msg) : error(errc::invalid_input, msg) {}
};

struct schema_error : error {
  explicit schema_error(const std::string& msg) : error(errc::schema, msg) {}
};

struct validation_error : error {
  explicit validation_error(const std::string& msg) : error(errc::validation, msg) {}
};

struct domain_error : error {
  explicit domain_error(const std::string& msg) : error(errc::domain, msg) {}
};

struct no_solution_error : error {
  explicit no_solution_error(const std::string& msg) : error(errc::no_solution, msg) {}
};

struct internal_error : error {
  explicit internal_error(const std::string& msg) : error(errc::internal, msg) {}
};

struct integrity_error : error {
  explicit integrity_error(const std::string& msg) : error(errc::integrity, msg) {}
};

}  // namespace heseq
