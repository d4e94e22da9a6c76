#pragma once

#include <stdexcept>
#include <string>

namespace farey {

enum class Errc {
  InvalidArgument,
  NotInvertible,
  InvalidModulus,
  DegeneratePolygon,
  ParallelDirections,
  NotConsecutive,
  EndOfSequence,
  NotNeighborPair,
  NotCoprime,
  ChainLeavesRange,
  EmptyResult,
  EmptyInput,
  ZeroArea,
  InvalidK,
  OutsideDomain,
  DegenerateCell,
  EmptyCell,
  OutOfDomain,
  TruncationUnsound,
  InvalidParity,
  Overflow,
  Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace farey
