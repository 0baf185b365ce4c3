#include "astau/tau_result.hpp"

#include "astau/errors.hpp"

namespace astau {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::airy: return "airy";
    case Method::widom: return "widom";
    case Method::minor: return "minor";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "airy") return Method::airy;
  if (name == "widom") return Method::widom;
  if (name == "minor") return Method::minor;
  throw ArgumentError("unknown method '" + name + "' (expected airy, widom or minor)");
}

}  // namespace astau
