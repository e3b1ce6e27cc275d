/*
 * Copyright 2026 The asemin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include "asemin/io.hpp"

#ifndef ASEMIN_DATA_DIR
#error "ASEMIN_DATA_DIR must point at the fixture directory"
#endif

inline std::string fixture_path(const std::string& name) { return std::string(ASEMIN_DATA_DIR) + "/" + name; }

inline asemin::Lts load_fixture(const std::string& name) {
  return asemin::parse_lts(asemin::read_text_file(fixture_path(name)));
}
