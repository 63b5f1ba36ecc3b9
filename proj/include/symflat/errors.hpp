#pragma once

#include <stdexcept>
#include <string>

namespace symflat {

enum class Errc {
    CapExceeded,
    InfiniteType,
    UnknownTag,
    SizeOverflow,
    InvalidRepr,
    ValueOutOfType,
    NotInImage,
    UnsupportedRepr,
    UnsupportedConstraint,
    NotTwoDimensional,
    SyntaxError,
    DuplicateName,
    ResourceLimit,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace symflat
