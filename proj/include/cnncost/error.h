// Copyright 2026 The cnncost Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnncost {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Notation or file syntax error. `position` is a byte offset into the parsed
// text; `line` is 1-based when the error came from a file, else 0.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, int line = 0)
      : Error(what), position_(position), line_(line) {}

  std::size_t position() const { return position_; }
  int line() const { return line_; }

 private:
  std::size_t position_;
  int line_;
};

// A layer produced a feature map with a non-positive side length.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& what, std::size_t layer_index)
      : Error(what), layer_index_(layer_index) {}

  std::size_t layer_index() const { return layer_index_; }

 private:
  std::size_t layer_index_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// A rewrite rule could not be applied at the requested site.
class RewriteError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnncost
