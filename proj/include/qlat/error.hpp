#ifndef QLAT_ERROR_HPP
#define QLAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qlat {

/* Violated mathematical precondition: division by zero, non-unit vector where
   a unit vector is required, r outside [0,1), operator not self-adjoint where
   spectral claims are made, and the like.  The CLI maps this to exit code 2. */
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/* Malformed textual input: bad rational literals, bad JSON shapes, bad set
   syntax.  The CLI maps this to exit code 3. */
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/* A computation whose certified bound cannot be met within the configured
   resource caps (e.g. a polynomial degree that would be needed exceeds the
   configured maximum).  Distinct from DomainError: the input is fine, the
   budget is not. */
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlat

#endif
