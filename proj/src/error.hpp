#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freefall {

// One error taxonomy for the whole library. The CLI and the C API map these
// codes onto exit statuses / ff_status values, so keep the set stable.
enum class errc {
    lex,           // illegal character in an expression
    parse,         // malformed expression or metric spec
    eval,          // unbound identifier during evaluation
    domain,        // log/sqrt/division/pow outside the real domain
    signature,     // metric not Lorentzian (+,-,-,-) at the point
    singular,      // |det g| below the degeneracy floor
    range,         // overflow (e.g. chirp phase exponent too large)
    pole,          // Gamma evaluated at a non-positive integer
    precondition,  // caller violated an argument contract
    convergence,   // quadrature budget exhausted before tolerance
    property,      // randomized identity check failed
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, std::string msg, std::size_t offset = npos)
        : std::runtime_error(std::move(msg)), code_(code), offset_(offset) {}

    errc code() const { return code_; }

    // Byte offset into the source text for lex/parse errors, npos otherwise.
    std::size_t offset() const { return offset_; }
    bool has_offset() const { return offset_ != npos; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    errc code_;
    std::size_t offset_;
};

} // namespace freefall
