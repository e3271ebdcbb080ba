#pragma once

#include <functional>

#include "hecke/error.hpp"

// True when f throws hecke::Error carrying `code`.
inline bool throws_code(const std::function<void()>& f, hecke::ErrorCode code) {
  try {
    f();
  } catch (const hecke::Error& err) {
    return err.code() == code;
  }
  return false;
}
