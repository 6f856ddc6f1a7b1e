#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mcres {

enum class ErrorKind {
  Parse,          // malformed input text
  Input,          // structurally valid input violating a precondition
  Domain,         // value outside an operation's mathematical domain
  Resource,       // configured cap exceeded
  Certification,  // no certified mapping-cone decomposition found
  Internal,       // broken invariant; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace mcres
