#pragma once

#include <doctest.h>

#include "springer/partition.hpp"

namespace doctest {
template <>
struct StringMaker<springer::Rat> {
  static String convert(const springer::Rat& r) { return springer::to_string(r).c_str(); }
};
}  // namespace doctest
