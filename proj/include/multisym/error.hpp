#pragma once

#include <stdexcept>
#include <string>

namespace multisym {

enum class ErrorKind {
    MissingVariable,
    NotGraded,
    TableMiss,
    HeightExceedsPower,
    NotInvariant,
    WrongSize,
    NotAWord,
    SizeMismatch,
    UnsupportedKind,
    NotCommuting,
    Syntax,
    UnknownVariable,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; `kind()` distinguishes failure modes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::TableMiss: return "TableMiss";
    case ErrorKind::HeightExceedsPower: return "HeightExceedsPower";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::WrongSize: return "WrongSize";
    case ErrorKind::NotAWord: return "NotAWord";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace multisym
