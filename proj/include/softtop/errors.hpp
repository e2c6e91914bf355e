#ifndef SOFTTOP_ERRORS_HPP
#define SOFTTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace softtop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidContext : Error {
  using Error::Error;
};
struct ContextMismatch : Error {
  ContextMismatch() : Error("operands belong to different contexts") {}
};
struct UnknownPoint : Error {
  explicit UnknownPoint(const std::string& label) : Error("unknown point: " + label) {}
};
struct UnknownParameter : Error {
  explicit UnknownParameter(const std::string& label) : Error("unknown parameter: " + label) {}
};
struct MissingParameter : Error {
  explicit MissingParameter(const std::string& label) : Error("missing parameter: " + label) {}
};
struct DuplicateParameter : Error {
  explicit DuplicateParameter(const std::string& label) : Error("duplicate parameter: " + label) {}
};
struct SizeGuardExceeded : Error {
  explicit SizeGuardExceeded(const std::string& what) : Error("size guard exceeded: " + what) {}
};
struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what) : Error("enumeration bound exceeded: " + what) {}
};
struct UnknownTheorem : Error {
  explicit UnknownTheorem(const std::string& id) : Error("unknown theorem id: " + id) {}
};
struct NotASubfamily : Error {
  NotASubfamily() : Error("candidate base is not a subfamily of the topology") {}
};
struct NotABase : Error {
  explicit NotABase(const std::string& what) : Error("not a base: " + what) {}
};
struct NotFound : Error {
  explicit NotFound(const std::string& what) : Error("not found: " + what) {}
};

struct ParseError : Error {
  int line = 0, column = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
};
struct SchemaError : Error {
  std::string field;
  explicit SchemaError(const std::string& field_, const std::string& msg)
      : Error("schema error at '" + field_ + "': " + msg), field(field_) {}
};
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace softtop

#endif
