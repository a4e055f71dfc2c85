#pragma once

#include <stdexcept>
#include <string>

namespace nakloc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidKupisch : Error { using Error::Error; };
struct InvalidModule : Error { using Error::Error; };
struct ProjectiveHasNoTau : Error { using Error::Error; };
struct NotWide : Error { using Error::Error; };
struct NotTorsion : Error { using Error::Error; };
struct InvalidMap : Error { using Error::Error; };
struct PropertyViolation : Error { using Error::Error; };
struct StructureViolation : Error { using Error::Error; };
struct NotSelfInjective : Error { using Error::Error; };
struct NotAnnihilating : Error { using Error::Error; };
struct NotUniformFamily : Error { using Error::Error; };

// Parse failures carry the byte offset into the input text.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p)
        : Error(what + " at position " + std::to_string(p)), pos(p) {}
};

}  // namespace nakloc
