#ifndef COXREP_ERRORS_HPP
#define COXREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxrep {

enum class ErrorCode {
    // graph parsing / validation
    SyntaxError,
    LoopEdge,
    DuplicateEdge,
    BadLabel,
    Disconnected,
    UnknownVertex,
    NotSpanningTree,
    NotAnEdge,
    // scalar field
    IncompatibleModulus,
    DivisionByZero,
    ContextMismatch,
    // dihedral
    BadK,
    NotARepresentation,
    UnrecognizedBlock,
    // cover / representation windows
    TooShallow,
    CaseMismatch,
    WindowExceeded,
    NotInMinusEigenspace,
    BlockStraddlesBoundary,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace coxrep

#endif
