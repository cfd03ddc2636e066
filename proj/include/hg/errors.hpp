#ifndef HG_ERRORS_HPP
#define HG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (cycle strings, Cayley-table fixtures, ...).
struct ParseError : Error {
  using Error::Error;
};

// A documented size cap was exceeded (generation cap, scan degree, ...).
struct SizeLimitError : Error {
  using Error::Error;
};

// An operation was called outside its contract (degree mismatch,
// non-subgroup input, non-regular group, ...).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace hg

#endif
