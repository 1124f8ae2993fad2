#pragma once

#include <stdexcept>
#include <string>

namespace arrtool {

/// Base of every error the library raises. `name()` is the stable error
/// identifier printed by the CLI on its diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define ARRTOOL_DEFINE_ERROR(Type)                                         \
  class Type : public Error {                                              \
   public:                                                                 \
    explicit Type(const std::string& what) : Error(#Type, what) {}         \
  };

ARRTOOL_DEFINE_ERROR(ParseError)
ARRTOOL_DEFINE_ERROR(DuplicateLine)
ARRTOOL_DEFINE_ERROR(VerticalLineUnsupported)
ARRTOOL_DEFINE_ERROR(AmbiguousOrder)
ARRTOOL_DEFINE_ERROR(InconsistentDescriptor)
ARRTOOL_DEFINE_ERROR(DisconnectedGraph)
ARRTOOL_DEFINE_ERROR(IncidenceMismatch)
ARRTOOL_DEFINE_ERROR(ForeignGenerator)
ARRTOOL_DEFINE_ERROR(MalformedWord)

#undef ARRTOOL_DEFINE_ERROR

}  // namespace arrtool
