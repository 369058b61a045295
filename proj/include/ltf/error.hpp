#pragma once

#include <stdexcept>
#include <string>

namespace ltf {

// Malformed input or violated precondition. CLI exit status 1.
class InvalidInput : public std::runtime_error {
  public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (triangle enumeration, census work) was exceeded. CLI exit status 2.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ltf
