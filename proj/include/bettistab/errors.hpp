#pragma once

#include <stdexcept>
#include <string>

namespace bettistab {

/// Error category, used by the CLI to pick exit codes.
enum class errc {
  argument,   // bad value passed to a library operation
  context,    // ring contexts of operands do not match
  parse,      // expression syntax error
  capacity,   // input exceeds a configured computational cap
  domain,     // value outside an operation's mathematical domain
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t position)
      : error(errc::parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  /// 1-based character position in the input text.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace bettistab
