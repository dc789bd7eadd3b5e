#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace grr {

// Error taxonomy mirrors the C API / CLI status codes.
enum class Status : int {
  ok = 0,
  argument = 1,
  hypothesis = 2,
  search = 3,
  io = 4,
  unsupported = 5,
  internal = 6,
};

class Error : public std::runtime_error {
public:
  Error(Status s, const std::string& what) : std::runtime_error(what), status_(s) {}
  Status status() const { return status_; }

private:
  Status status_;
};

class ArgumentError : public Error {
public:
  explicit ArgumentError(const std::string& what) : Error(Status::argument, what) {}
};

// The requested operation is sound but the input violates a structural
// hypothesis (e.g. running the construction pipeline on an abelian group).
class HypothesisError : public Error {
public:
  explicit HypothesisError(const std::string& what) : Error(Status::hypothesis, what) {}
};

class SearchError : public Error {
public:
  explicit SearchError(const std::string& what) : Error(Status::search, what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(Status::io, what) {}
};

class UnsupportedError : public Error {
public:
  explicit UnsupportedError(const std::string& what) : Error(Status::unsupported, what) {}
};

// Three-valued metadata flag for properties that may be undecidable for a
// given oracle (mostly the infinite families, where they are declared).
enum class Tri : int8_t { no = 0, yes = 1, unknown = 2 };

inline bool tri_is(Tri t, bool v) { return t == (v ? Tri::yes : Tri::no); }

// Enumeration bound for operations that would otherwise require listing an
// infinite group: either the whole (finite) group or a ball of given radius
// with respect to the declared generators.
struct Scope {
  std::optional<int> radius;  // nullopt = whole group (finite oracles only)

  static Scope whole() { return Scope{std::nullopt}; }
  static Scope ball(int r) { return Scope{r}; }
};

}  // namespace grr
