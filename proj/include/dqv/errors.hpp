#pragma once

#include <stdexcept>
#include <string>

namespace dqv {

// Every library error carries a stable kind string used in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DQV_ERROR(Name)                                                   \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what = "") : Error(#Name, what) {}   \
  };

DQV_ERROR(NonMonicRelation)
DQV_ERROR(DegreeTooLarge)
DQV_ERROR(ZeroElement)
DQV_ERROR(TowerMismatch)
DQV_ERROR(ParseError)
DQV_ERROR(SingularSubstitution)
DQV_ERROR(NonSquare)
DQV_ERROR(ArityMismatch)
DQV_ERROR(MissingPowerMap)
DQV_ERROR(DimensionMismatch)
DQV_ERROR(NotOnSurface)
DQV_ERROR(SigmaOneVanishes)
DQV_ERROR(QuadricSingularAtPoint)
DQV_ERROR(DuplicatePoints)
DQV_ERROR(DegenerateAlpha)
DQV_ERROR(DataFileMissing)
DQV_ERROR(ChecksumMismatch)
DQV_ERROR(DataFormatError)
DQV_ERROR(ConfigError)
DQV_ERROR(OracleDisagreement)
DQV_ERROR(SplitLimitExceeded)
DQV_ERROR(NotSingularPoint)
DQV_ERROR(RowMismatch)
DQV_ERROR(LedgerMismatch)
DQV_ERROR(IdentityFailure)
DQV_ERROR(TransversalityFailure)
DQV_ERROR(RankStratumMismatch)

#undef DQV_ERROR

}  // namespace dqv
