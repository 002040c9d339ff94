#include "mirrorclone/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace mirrorclone {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;
  std::array<char, 40> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{})
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), res.ptr);
}

}  // namespace mirrorclone
