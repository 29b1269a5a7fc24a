#ifndef GRPD_ERROR_HPP
#define GRPD_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grpd {

enum class Errc {
  // groupoid-core
  MissingIdentity,
  NotAssociative,
  BadInverse,
  BadCompositionDomain,
  DanglingReference,
  TooLarge,
  NotComposable,
  UnknownObject,
  EmptyBase,
  BadParams,
  // homs-congruence
  NotAdditive,
  MissingArrow,
  BadTarget,
  EmptyList,
  MixedGroupoids,
  NotACongruence,
  // semi-inner-product
  NotSeparating,
  NotBihom,
  // groupoid-norm
  NotSip,
  NotConsistent,
  ParallelogramFails,
  NoWitness,
  WitnessDisagreement,
  ResultNotSip,
  // documents
  SyntaxError,
  SchemaError,
};

std::string_view errc_name(Errc code);

/// One element of a counterexample: an arrow or an object, by dense index.
struct WitnessItem {
  enum class Kind : std::uint8_t { Arrow, Object };
  Kind kind;
  std::uint32_t index;

  friend bool operator==(const WitnessItem&, const WitnessItem&) = default;
};

using Witness = std::vector<WitnessItem>;

/// Every failure raised by the library. `code` names the violated rule and
/// `witness` carries the offending arrows/objects in the order the rule
/// mentions them.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, Witness witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  Witness witness_;
};

}  // namespace grpd

#endif  // GRPD_ERROR_HPP
