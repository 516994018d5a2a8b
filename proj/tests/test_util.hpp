#pragma once

#include "doctest.h"
#include "mubkit/error.hpp"

namespace testutil {

/// Runs f and returns the code of the mubkit::Error it throws.
template <typename F>
mubkit::Errc code_of(F&& f) {
  try {
    f();
  } catch (const mubkit::Error& e) {
    return e.code();
  }
  FAIL("expected an mubkit::Error");
  return mubkit::Errc::Parse;
}

}  // namespace testutil
