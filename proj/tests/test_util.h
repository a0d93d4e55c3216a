// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "cnncost/architecture.h"
#include "cnncost/notation.h"
#include "cnncost/zoo.h"

namespace cnncost::testing {

inline Architecture Net(const std::string& notation, int input = 224,
                        int channels = 3) {
  return parse_architecture(notation, input, channels);
}

inline const Zoo& TestZoo() {
  static const Zoo zoo = Zoo::open(CNNCOST_TEST_ZOO_DIR);
  return zoo;
}

inline Architecture Model(const std::string& name) {
  return TestZoo().load(name);
}

inline std::string ScriptPath(const std::string& file) {
  return std::string(CNNCOST_TEST_ZOO_DIR) + "/scripts/" + file;
}

}  // namespace cnncost::testing
