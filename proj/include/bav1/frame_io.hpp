// Copyright 2026 The bav1 Authors
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

#ifndef BAV1_FRAME_IO_HPP_
#define BAV1_FRAME_IO_HPP_

#include <string>

#include "bav1/plane.hpp"

namespace bav1 {

// Reads the first frame of a YUV4MPEG2 stream. Requires 8-bit 4:2:0 chroma
// (any C420 siting variant). Throws std::runtime_error on malformed headers
// or short files.
Frame LoadY4m(const std::string& path);

// Reads the first frame of a headerless planar YUV420 file with the given
// luma dimensions. The file size must be a positive multiple of the frame
// size w*h + 2*ceil(w/2)*ceil(h/2).
Frame LoadRawYuv420(const std::string& path, int width, int height);

// Picks the loader from the file extension (.y4m vs anything else raw).
Frame LoadFrame(const std::string& path, int raw_width = 0,
                int raw_height = 0);

void SaveY4m(const Frame& frame, const std::string& path);
void SaveRawYuv420(const Frame& frame, const std::string& path);

// Binary PGM (P5) export of a single plane, for visual inspection.
void SavePgm(const PlaneU8& plane, const std::string& path);

}  // namespace bav1

#endif  // BAV1_FRAME_IO_HPP_
