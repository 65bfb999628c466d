#pragma once

#include <stdexcept>
#include <string>

namespace canonform {

enum class ErrorKind {
    ZeroForm,
    NotGeneric,
    DegenerateInput,
    RepeatedRoot,
    LeadingZero,
    NormalizationFailed,
    DegenerateLambda,
    PivotZero,
    DegeneratePencil,
    DegenerateStage,
    UnknownName,
    BadShape,
    UnsupportedShape,
    ShapeMismatch,
    Parse,
    AllZero,
};

const char* kind_name(ErrorKind k);

// Every failure raised by the library. `stage` is -1 when not applicable.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what, int stage = -1)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind), stage_(stage), message_(what) {}

    ErrorKind kind() const { return kind_; }
    /// what() without the kind prefix
    const std::string& message() const { return message_; }
    int stage() const { return stage_; }

  private:
    ErrorKind kind_;
    int stage_;
    std::string message_;
};

inline const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ZeroForm: return "ZeroForm";
        case ErrorKind::NotGeneric: return "NotGeneric";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::RepeatedRoot: return "RepeatedRoot";
        case ErrorKind::LeadingZero: return "LeadingZero";
        case ErrorKind::NormalizationFailed: return "NormalizationFailed";
        case ErrorKind::DegenerateLambda: return "DegenerateLambda";
        case ErrorKind::PivotZero: return "PivotZero";
        case ErrorKind::DegeneratePencil: return "DegeneratePencil";
        case ErrorKind::DegenerateStage: return "DegenerateStage";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::BadShape: return "BadShape";
        case ErrorKind::UnsupportedShape: return "UnsupportedShape";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::AllZero: return "AllZero";
    }
    return "Unknown";
}

}  // namespace canonform
