// Copyright 2026 The L4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The Rock-Paper-Scissors programs under programs/ and facts about them.

#ifndef L4_TESTS_SUPPORT_FIXTURES_H_
#define L4_TESTS_SUPPORT_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <string>

#include "l4/pipeline.h"
#include "l4/reasoner.h"

namespace l4::testing {

inline std::string ProgramPath(const std::string& name) {
  return std::string(L4_PROGRAMS_DIR) + "/" + name;
}

inline std::string ReadProgram(const std::string& name) {
  std::ifstream in(ProgramPath(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LoadedProgram LoadFixture(const std::string& name) {
  return LoadProgram(ReadProgram(name));
}

enum class Encoding { kFields, kStandalone };

inline const char* FixtureName(Encoding e) {
  return e == Encoding::kFields ? "rps.l4" : "rps_standalone.l4";
}

// One game, two participating players and, when given, their throws. The
// field encoding puts the game first in participate; the standalone one
// puts the player first.
inline FactBase RpsFacts(Encoding e, const std::string& alice_throw = "",
                         const std::string& bob_throw = "") {
  FactBase f;
  f.Add({"game", {"rps"}});
  for (const char* p : {"alice", "bob"}) {
    f.Add({"player", {p}});
    if (e == Encoding::kFields) {
      f.Add({"participate", {"rps", p}});
    } else {
      f.Add({"participate", {p, "rps"}});
    }
  }
  if (!alice_throw.empty()) f.Add({"throw", {"alice", alice_throw}});
  if (!bob_throw.empty()) f.Add({"throw", {"bob", bob_throw}});
  f.names = {{"rps", "RPS"}, {"alice", "Alice"}, {"bob", "Bob"}};
  return f;
}

}  // namespace l4::testing

#endif  // L4_TESTS_SUPPORT_FIXTURES_H_
