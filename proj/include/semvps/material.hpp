/*
 * Copyright 2026 The SemVPS Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMVPS_MATERIAL_HPP_
#define SEMVPS_MATERIAL_HPP_

#include <array>
#include <cstdint>
#include <string>

namespace semvps {

// Material classes of the segmented scene. Sky is the absence of geometry:
// it is never assigned to model faces. Foliage only ever appears in query
// images (the city model contains buildings and infrastructure only).
enum class MaterialClass : std::uint8_t {
  kSky = 0,
  kStone = 1,
  kGlass = 2,
  kMetal = 3,
  kFoliage = 4,
  kOthers = 5,
};

inline constexpr int kNumMaterialClasses = 6;

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

inline constexpr std::array<Rgb, kNumMaterialClasses> kMaterialPalette = {{
    {0, 0, 0},        // sky: black
    {0, 0, 255},      // stone: blue
    {0, 255, 0},      // glass: green
    {255, 165, 0},    // metal: orange
    {255, 255, 0},    // foliage: yellow
    {173, 216, 230},  // others: light blue
}};

inline const char* material_name(MaterialClass c) {
  switch (c) {
    case MaterialClass::kSky: return "sky";
    case MaterialClass::kStone: return "stone";
    case MaterialClass::kGlass: return "glass";
    case MaterialClass::kMetal: return "metal";
    case MaterialClass::kFoliage: return "foliage";
    case MaterialClass::kOthers: return "others";
  }
  return "invalid";
}

inline bool is_valid_class_index(int index) {
  return index >= 0 && index < kNumMaterialClasses;
}

// Classes that may be assigned to model geometry (walls/roofs).
inline bool is_structure_class(int index) {
  return index == 1 || index == 2 || index == 3 || index == 5;
}

}  // namespace semvps

#endif  // SEMVPS_MATERIAL_HPP_
