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

#ifndef KANBEX_TYPES_HPP_
#define KANBEX_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanbex {

/// Index of an object in the Γ or Δ object list (declaration order).
enum class ObjectId : std::uint32_t {};
/// Index of an arrow of Δ in the ArrB list.
enum class ArrowId : std::uint32_t {};
/// Index of an X-element in the flattened XObA lists.
enum class ElementId : std::uint32_t {};

template <typename Id>
constexpr std::size_t index_of(Id id) noexcept {
  return static_cast<std::size_t>(id);
}

template <typename Id>
constexpr Id make_id(std::size_t i) noexcept {
  return static_cast<Id>(static_cast<std::uint32_t>(i));
}

class KanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown labels, non-composable sequences, bad JSON shape.
class ParseError : public KanError {
 public:
  using KanError::KanError;
};

class CompositionError : public KanError {
 public:
  using KanError::KanError;
};

/// An arrow of the free category on Δ. The identity at an object is the empty
/// sequence with `source` recorded.
struct Path {
  ObjectId source{};
  std::vector<ArrowId> arrows;

  [[nodiscard]] bool is_identity() const noexcept { return arrows.empty(); }
  [[nodiscard]] std::size_t length() const noexcept { return arrows.size(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Juxtaposition without endpoint checks; callers guarantee composability.
[[nodiscard]] Path concat(const Path& p, const Path& q);

/// A tagged element x|p of the P-set T.
struct Term {
  ElementId tag{};
  Path path;

  /// Number of entries in the list form [x, b1, ..., bn].
  [[nodiscard]] std::size_t length() const noexcept { return 1 + path.length(); }

  friend bool operator==(const Term&, const Term&) = default;
};

/// Right action t·q by juxtaposition of paths.
[[nodiscard]] Term act_unchecked(const Term& t, const Path& q);

}  // namespace kanbex

#endif  // KANBEX_TYPES_HPP_
