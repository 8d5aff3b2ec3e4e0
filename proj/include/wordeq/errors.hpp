#pragma once

#include <stdexcept>
#include <string>

namespace wordeq {

// Base of every error raised by the library. Each subclass corresponds to
// one failure mode of a public operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WORDEQ_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  }

WORDEQ_DEFINE_ERROR(ParseError);
WORDEQ_DEFINE_ERROR(MissingVariable);
WORDEQ_DEFINE_ERROR(ResourceExceeded);
WORDEQ_DEFINE_ERROR(GenerationFailed);
WORDEQ_DEFINE_ERROR(PartitionNotDisjoint);
WORDEQ_DEFINE_ERROR(InconsistentGuess);
WORDEQ_DEFINE_ERROR(IllegalPop);
WORDEQ_DEFINE_ERROR(SpaceCapExceeded);
WORDEQ_DEFINE_ERROR(PhaseCapExceeded);
WORDEQ_DEFINE_ERROR(Desync);
WORDEQ_DEFINE_ERROR(NotASolution);
WORDEQ_DEFINE_ERROR(DanglingRule);
WORDEQ_DEFINE_ERROR(EmptyInput);
WORDEQ_DEFINE_ERROR(MissingCode);
WORDEQ_DEFINE_ERROR(IncomparableDepfactors);
WORDEQ_DEFINE_ERROR(NoHalvingPartitionFound);
WORDEQ_DEFINE_ERROR(IoError);

#undef WORDEQ_DEFINE_ERROR

}  // namespace wordeq
