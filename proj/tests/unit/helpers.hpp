#pragma once

#include <doctest.h>

#include "springer/error.hpp"

// Asserts that `expr` throws springer::Error with the given code.
#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const springer::Error& e_) {                        \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), springer::to_string(e_.code())); \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected " #errc);                   \
  } while (false)
