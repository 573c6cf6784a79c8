/*
 * Copyright 2026 the claimkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "claimkit/error.hpp"

namespace claimkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EncodingError: return "EncodingError";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InvalidFlag: return "InvalidFlag";
    case ErrorCode::MissingList: return "MissingList";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::UntaggedInput: return "UntaggedInput";
    case ErrorCode::NotAVerb: return "NotAVerb";
    case ErrorCode::NotANoun: return "NotANoun";
    case ErrorCode::NoAbstract: return "NoAbstract";
    case ErrorCode::EmptyAbstract: return "EmptyAbstract";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MissingGold: return "MissingGold";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace claimkit
