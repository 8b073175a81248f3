#pragma once

#include <stdexcept>
#include <string>

namespace prstar {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadCycleNotation : Error {
  explicit BadCycleNotation(const std::string& msg) : Error(msg) {}
};

struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

struct EnumerationCapExceeded : Error {
  explicit EnumerationCapExceeded(const std::string& msg) : Error(msg) {}
};

struct NotAMember : Error {
  explicit NotAMember(const std::string& msg) : Error(msg) {}
};

struct NotNormal : Error {
  explicit NotNormal(const std::string& msg) : Error(msg) {}
};

struct NotSoluble : Error {
  explicit NotSoluble(const std::string& msg) : Error(msg) {}
};

// Search exhausted even though the requested subgroup must exist; indicates
// a bug in the search itself, never a property of the input group.
struct HallSearchFailed : Error {
  explicit HallSearchFailed(const std::string& msg) : Error(msg) {}
};

struct UnknownSelector : Error {
  explicit UnknownSelector(const std::string& msg) : Error(msg) {}
};

struct DuplicateLabel : Error {
  explicit DuplicateLabel(const std::string& msg) : Error(msg) {}
};

struct IoFailure : Error {
  explicit IoFailure(const std::string& msg) : Error(msg) {}
};

struct PreconditionNotMet : Error {
  explicit PreconditionNotMet(const std::string& msg) : Error(msg) {}
};

}  // namespace prstar
