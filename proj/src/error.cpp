#include <qdrg/error.hpp>

namespace qdrg {

std::string_view to_string(Errc code)
{
    switch (code) {
        case Errc::InvalidArray: return "InvalidArray";
        case Errc::NonIntegralValency: return "NonIntegralValency";
        case Errc::NumericalFailure: return "NumericalFailure";
        case Errc::NotAnEigenvalue: return "NotAnEigenvalue";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::DisconnectedInput: return "DisconnectedInput";
        case Errc::WrongDiameter: return "WrongDiameter";
        case Errc::TrivialEigenvalue: return "TrivialEigenvalue";
        case Errc::NotBipartite: return "NotBipartite";
        case Errc::NotAntipodal: return "NotAntipodal";
        case Errc::InvalidQRegion: return "InvalidQRegion";
        case Errc::InfeasibleB: return "InfeasibleB";
        case Errc::WrongCoverIndex: return "WrongCoverIndex";
        case Errc::HypothesisFailed: return "HypothesisFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string & what) :
    std::runtime_error(std::string(to_string(code)) + ": " + what),
    _code(code)
{
}

} // namespace qdrg
