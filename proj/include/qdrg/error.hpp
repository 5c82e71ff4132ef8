#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdrg {

enum class Errc {
    InvalidArray,
    NonIntegralValency,
    NumericalFailure,
    NotAnEigenvalue,
    OutOfRange,
    DisconnectedInput,
    WrongDiameter,
    TrivialEigenvalue,
    NotBipartite,
    NotAntipodal,
    InvalidQRegion,
    InfeasibleB,
    WrongCoverIndex,
    HypothesisFailed,
    ParseError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string & what);

    Errc code() const noexcept { return _code; }

private:
    Errc _code;
};

} // namespace qdrg
