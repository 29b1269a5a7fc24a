#include "grpd/error.hpp"

namespace grpd {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::MissingIdentity: return "MissingIdentity";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::BadInverse: return "BadInverse";
    case Errc::BadCompositionDomain: return "BadCompositionDomain";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotComposable: return "NotComposable";
    case Errc::UnknownObject: return "UnknownObject";
    case Errc::EmptyBase: return "EmptyBase";
    case Errc::BadParams: return "BadParams";
    case Errc::NotAdditive: return "NotAdditive";
    case Errc::MissingArrow: return "MissingArrow";
    case Errc::BadTarget: return "BadTarget";
    case Errc::EmptyList: return "EmptyList";
    case Errc::MixedGroupoids: return "MixedGroupoids";
    case Errc::NotACongruence: return "NotACongruence";
    case Errc::NotSeparating: return "NotSeparating";
    case Errc::NotBihom: return "NotBihom";
    case Errc::NotSip: return "NotSip";
    case Errc::NotConsistent: return "NotConsistent";
    case Errc::ParallelogramFails: return "ParallelogramFails";
    case Errc::NoWitness: return "NoWitness";
    case Errc::WitnessDisagreement: return "WitnessDisagreement";
    case Errc::ResultNotSip: return "ResultNotSip";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace grpd
