#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eldef {

struct SourceLocation {
    std::size_t line = 1;    // 1-based
    std::size_t column = 1;  // 1-based
};

class ParseError : public std::runtime_error {
public:
    enum class Code { Syntax, ReservedCharacter, UnknownConstructor };

    ParseError(Code code, SourceLocation loc, const std::string& message);

    Code code() const noexcept { return code_; }
    const SourceLocation& location() const noexcept { return loc_; }
    // Message without the location prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Code code_;
    SourceLocation loc_;
    std::string detail_;
};

// A configured cap on derived inclusions, inferences or label sizes was hit.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed definition failed post-hoc verification. Signals a bug in the
// label procedure, never a property of the input.
class SoundnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// interpolant_from_proof could not apply a case to this particular proof.
class NotExtractableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eldef
