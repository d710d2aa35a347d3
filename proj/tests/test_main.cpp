// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#ifdef HYPERSEED_QUIET_LOGS
#include <spdlog/spdlog.h>
#endif

int main(int argc, char** argv) {
#ifdef HYPERSEED_QUIET_LOGS
  spdlog::set_level(spdlog::level::warn);
#endif
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
