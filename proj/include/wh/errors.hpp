#pragma once

#include <stdexcept>
#include <string>

namespace wh {

enum class ErrorKind {
  Parse,                  // malformed word text / JSON
  Rank,                   // generator index outside the ambient rank
  RankMismatch,           // operands built over different alphabets
  RankGuard,              // exhaustive enumeration refused without override
  InvalidMove,            // multiplier inside its own set, non-bijective relabeling, ...
  NotMinimal,             // operation requires a word of minimum orbit length
  EmptyWord,              // operation undefined on the empty word
  NoLowLetters,           // factorization cut produces zero pieces
  DegreeMismatch,         // move degree does not match the requested cut
  MultiplierIndex,        // lift multiplier index at or below the cut
  Restriction,            // move violates the marker-set restrictions
  Precondition,           // caller-side contract violation
  InternalContradiction,  // reached a configuration the preconditions exclude
  Io,                     // cache / file errors
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace wh
