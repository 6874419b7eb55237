// Copyright 2026 The edgering Authors.
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

#include "edgering/error.hpp"

namespace edgering {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kTooManyVertices: return "TooManyVertices";
    case ErrorCode::kEmptySpec: return "EmptySpec";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kBipartite: return "Bipartite";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kMethodMismatch: return "MethodMismatch";
    case ErrorCode::kNotTriangularCactusDiam4: return "NotTriangularCactusDiam4";
    case ErrorCode::kNotAnEdge: return "NotAnEdge";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kAmbiguousCenter: return "AmbiguousCenter";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kDecompositionMismatch: return "DecompositionMismatch";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace edgering
