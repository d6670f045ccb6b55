/*
 * Copyright 2026 The wsfd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace wsfd {

/// Bad or inconsistent run configuration (CLI exit code 2).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite values appeared in a wavefield (CLI exit code 3).
class instability_error : public std::runtime_error {
 public:
  explicit instability_error(const std::string& what) : std::runtime_error(what) {}
};

/// Fabric protocol violation: misrouted color, queue overflow, deadlock,
/// double shift (CLI exit code 4).
class fabric_error : public std::runtime_error {
 public:
  explicit fabric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wsfd
