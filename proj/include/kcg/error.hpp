// Copyright 2026 The kcgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef KCG_ERROR_HPP_
#define KCG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kcg {

enum class Errc {
  kInvalidArgument,
  kParse,
  kDegenerate,     // zero vectors, coincident points
  kInfinity,       // a finite-only quantity was asked of the point at infinity
  kDomain,         // input outside the set an operation is defined on
  kUnsatisfiable,  // sampler constraints could not be met
};

// All library failures are reported by throwing kcg::Error.  The C API maps
// the code onto kcg_status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kcg

#endif  // KCG_ERROR_HPP_
