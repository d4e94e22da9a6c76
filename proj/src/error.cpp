#include "farey/error.hpp"

namespace farey {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::DegeneratePolygon: return "DegeneratePolygon";
    case Errc::ParallelDirections: return "ParallelDirections";
    case Errc::NotConsecutive: return "NotConsecutive";
    case Errc::EndOfSequence: return "EndOfSequence";
    case Errc::NotNeighborPair: return "NotNeighborPair";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::ChainLeavesRange: return "ChainLeavesRange";
    case Errc::EmptyResult: return "EmptyResult";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ZeroArea: return "ZeroArea";
    case Errc::InvalidK: return "InvalidK";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::DegenerateCell: return "DegenerateCell";
    case Errc::EmptyCell: return "EmptyCell";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::TruncationUnsound: return "TruncationUnsound";
    case Errc::InvalidParity: return "InvalidParity";
    case Errc::Overflow: return "Overflow";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace farey
