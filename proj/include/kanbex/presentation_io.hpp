/* Copyright 2026 The kanbex Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef KANBEX_PRESENTATION_IO_HPP_
#define KANBEX_PRESENTATION_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "kanbex/presentation.hpp"

namespace kanbex {

/// Reads the nine-field record (`ObA`, `ArrA`, `ObB`, `ArrB`, `RelB`, `FObA`,
/// `FArrA`, `XObA`, `XArrA`). Words are label arrays or GAP-style strings;
/// an identity in `RelB` is `{"id": <object>}`.
///
/// Only problems that make the record unrepresentable throw ParseError
/// (wrong JSON shape, unknown labels). Everything else, such as a path that
/// does not compose or an endpoint that is not a listed object, is kept so
/// that validate_presentation can report it.
[[nodiscard]] KanPresentation presentation_from_json(const nlohmann::json& doc);

[[nodiscard]] nlohmann::json presentation_to_json(const KanPresentation& kan);

/// Throws std::ios_base::failure when the file cannot be read and
/// ParseError when it is not valid JSON.
[[nodiscard]] nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace kanbex

#endif  // KANBEX_PRESENTATION_IO_HPP_
