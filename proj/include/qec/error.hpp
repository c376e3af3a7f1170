// Copyright 2026 The qecenter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qec {

enum class Errc {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  EmptySet,
  NotASubgraphMap,
  BadRotation,
  NonPlanarGenus,
  NotMaximalPlanar,
  NotACycle,
  NotTriangle,
  InternalInvariantViolation,
  UnclassifiableConfiguration,
  AlphaTooSmall,
  TooLarge,
  InvalidSpec,
  FaceMismatch,
  CaseDispatchFailure,
  CriterionFails,
  HypothesisViolated,
  PreconditionFailed,
  TooSmall,
  NoSuchEdge,
  BudgetExceeded,
  UnknownFixture,
  FixtureFactFailed,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotASubgraphMap: return "NotASubgraphMap";
    case Errc::BadRotation: return "BadRotation";
    case Errc::NonPlanarGenus: return "NonPlanarGenus";
    case Errc::NotMaximalPlanar: return "NotMaximalPlanar";
    case Errc::NotACycle: return "NotACycle";
    case Errc::NotTriangle: return "NotTriangle";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::UnclassifiableConfiguration: return "UnclassifiableConfiguration";
    case Errc::AlphaTooSmall: return "AlphaTooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::FaceMismatch: return "FaceMismatch";
    case Errc::CaseDispatchFailure: return "CaseDispatchFailure";
    case Errc::CriterionFails: return "CriterionFails";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::FixtureFactFailed: return "FixtureFactFailed";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qec
