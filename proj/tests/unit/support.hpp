#pragma once

#include <gtest/gtest.h>

#include <string>

#include "forcing/error.hpp"
#include "oracles.hpp"

namespace forcing::test {

template <class F>
void expect_error(const std::string& name, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected error '" << name << "'";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), name) << e.what();
  }
}

}  // namespace forcing::test
