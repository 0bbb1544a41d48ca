#pragma once

#include <stdexcept>
#include <string>

namespace slideocam
{

enum class ErrorKind
{
    DegenerateEta,
    NoRootFound,
    SingularOrientation,
    DegenerateCurve,
    Undercut,
    InvalidArgument,
};

inline const char* to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
        case ErrorKind::DegenerateEta: return "DegenerateEta";
        case ErrorKind::NoRootFound: return "NoRootFound";
        case ErrorKind::SingularOrientation: return "SingularOrientation";
        case ErrorKind::DegenerateCurve: return "DegenerateCurve";
        case ErrorKind::Undercut: return "Undercut";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Raised by the geometry and analysis routines. The kind tells callers
/// which degeneracy was hit so sweeps can skip or report it.
class CamError : public std::runtime_error
{
  public:
    CamError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace slideocam
