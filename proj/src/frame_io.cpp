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

#include "bav1/frame_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bav1 {

namespace {

void ReadPlane(std::istream& in, PlaneU8& plane, const std::string& path) {
  in.read(reinterpret_cast<char*>(plane.data()),
          static_cast<std::streamsize>(plane.size()));
  if (in.gcount() != static_cast<std::streamsize>(plane.size())) {
    throw std::runtime_error(path + ": file ends inside a sample plane");
  }
}

void WritePlane(std::ostream& out, const PlaneU8& plane) {
  out.write(reinterpret_cast<const char*>(plane.data()),
            static_cast<std::streamsize>(plane.size()));
}

}  // namespace

Frame LoadY4m(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");

  std::string header;
  if (!std::getline(in, header)) {
    throw std::runtime_error(path + ": missing Y4M stream header");
  }
  std::istringstream tokens(header);
  std::string magic;
  tokens >> magic;
  if (magic != "YUV4MPEG2") {
    throw std::runtime_error(path + ": not a YUV4MPEG2 stream");
  }

  int width = 0;
  int height = 0;
  std::string colorspace = "420";  // default when no C tag is present
  std::string token;
  while (tokens >> token) {
    switch (token[0]) {
      case 'W': width = std::stoi(token.substr(1)); break;
      case 'H': height = std::stoi(token.substr(1)); break;
      case 'C': colorspace = token.substr(1); break;
      default: break;  // frame rate, interlacing, aspect: ignored
    }
  }
  if (width <= 0 || height <= 0) {
    throw std::runtime_error(path + ": Y4M header lacks W/H");
  }
  if (colorspace.rfind("420", 0) != 0) {
    throw std::runtime_error(path + ": unsupported Y4M colorspace C" +
                             colorspace + " (need C420)");
  }

  std::string frame_marker;
  if (!std::getline(in, frame_marker) ||
      frame_marker.rfind("FRAME", 0) != 0) {
    throw std::runtime_error(path + ": missing FRAME marker");
  }

  Frame frame = Frame::Allocate(width, height);
  ReadPlane(in, frame.y, path);
  ReadPlane(in, frame.cb, path);
  ReadPlane(in, frame.cr, path);
  return frame;
}

Frame LoadRawYuv420(const std::string& path, int width, int height) {
  if (width <= 0 || height <= 0) {
    throw std::runtime_error(path + ": raw YUV requires explicit dimensions");
  }
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw std::runtime_error(path + ": cannot open");
  const auto file_size = static_cast<uint64_t>(in.tellg());
  in.seekg(0);

  const uint64_t frame_size =
      static_cast<uint64_t>(width) * height +
      2ull * Frame::ChromaWidth(width) * Frame::ChromaHeight(height);
  if (file_size == 0 || file_size % frame_size != 0) {
    throw std::runtime_error(
        path + ": size " + std::to_string(file_size) +
        " is not a multiple of the frame size " + std::to_string(frame_size));
  }

  Frame frame = Frame::Allocate(width, height);
  ReadPlane(in, frame.y, path);
  ReadPlane(in, frame.cb, path);
  ReadPlane(in, frame.cr, path);
  return frame;
}

Frame LoadFrame(const std::string& path, int raw_width, int raw_height) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".y4m" || ext == ".Y4M") return LoadY4m(path);
  return LoadRawYuv420(path, raw_width, raw_height);
}

void SaveY4m(const Frame& frame, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "YUV4MPEG2 W" << frame.width << " H" << frame.height
      << " F25:1 Ip A1:1 C420\n";
  out << "FRAME\n";
  WritePlane(out, frame.y);
  WritePlane(out, frame.cb);
  WritePlane(out, frame.cr);
  if (!out) throw std::runtime_error(path + ": write failed");
}

void SaveRawYuv420(const Frame& frame, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  WritePlane(out, frame.y);
  WritePlane(out, frame.cb);
  WritePlane(out, frame.cr);
  if (!out) throw std::runtime_error(path + ": write failed");
}

void SavePgm(const PlaneU8& plane, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "P5\n" << plane.cols() << " " << plane.rows() << "\n255\n";
  WritePlane(out, plane);
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace bav1
